/*
   Copyright 2026 The lampfield Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "lampfield/factor.hpp"

#include <algorithm>
#include <functional>
#include <memory>

#include "lampfield/modulus.hpp"
#include "lampfield/splitmix.hpp"

namespace lampfield {

Factorization::Factorization(std::vector<PolyFactor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const PolyFactor& a, const PolyFactor& b) { return a.poly < b.poly; });
    for (auto& f : factors) {
        if (f.multiplicity == 0) continue;
        if (!factors_.empty() && factors_.back().poly == f.poly)
            factors_.back().multiplicity += f.multiplicity;
        else
            factors_.push_back(std::move(f));
    }
}

std::size_t Factorization::count_with_multiplicity() const noexcept {
    std::size_t c = 0;
    for (const auto& f : factors_) c += f.multiplicity;
    return c;
}

Poly2 Factorization::product() const {
    Poly2 p = Poly2::one();
    for (const auto& f : factors_)
        for (unsigned i = 0; i < f.multiplicity; ++i) p = p * f.poly;
    return p;
}

std::map<std::size_t, std::size_t> Factorization::degree_profile() const {
    std::map<std::size_t, std::size_t> out;
    for (const auto& f : factors_) out[static_cast<std::size_t>(f.poly.degree())] += f.multiplicity;
    return out;
}

std::string Factorization::to_string() const {
    if (factors_.size() == 1 && factors_[0].multiplicity == 1) return format(factors_[0].poly);
    std::string out;
    for (const auto& f : factors_) {
        out += '(' + format(f.poly) + ')';
        if (f.multiplicity > 1) out += '^' + std::to_string(f.multiplicity);
    }
    return out.empty() ? "1" : out;
}

namespace {

void squarefree_rec(const Poly2& f, unsigned mult, std::vector<PolyFactor>& out) {
    if (f.degree() < 1) return;
    const Poly2 df = derivative(f);
    if (df.is_zero()) {
        squarefree_rec(*square_root(f), 2 * mult, out);
        return;
    }
    Poly2 c = gcd(f, df);
    Poly2 w = f / c;
    for (unsigned i = 1; !w.is_one(); ++i) {
        Poly2 y = gcd(w, c);
        Poly2 z = w / y;
        if (!z.is_one()) out.push_back({std::move(z), i * mult});
        c = c / y;
        w = std::move(y);
    }
    // What is left has only exponents divisible by 2.
    if (!c.is_one()) squarefree_rec(*square_root(c), 2 * mult, out);
}

Poly2 random_below(SplitMix64& rng, std::size_t degree_bound) {
    std::vector<Word> w((degree_bound + kWordBits - 1) / kWordBits);
    for (auto& x : w) x = rng.next();
    if (degree_bound % kWordBits) w.back() &= (Word{1} << (degree_bound % kWordBits)) - 1;
    return Poly2(std::move(w));
}

constexpr int kEdfAttempts = 256;

void edf_split(const Poly2& f, std::size_t d, SplitMix64& rng, std::vector<Poly2>& out) {
    const auto n = static_cast<std::size_t>(f.degree());
    if (n == d) {
        out.push_back(f);
        return;
    }
    const Modulus M(f);
    for (int attempt = 0; attempt < kEdfAttempts; ++attempt) {
        const Poly2 h = random_below(rng, n);
        if (h.degree() < 1) continue;
        Poly2 s = h;
        Poly2 trace = h;
        for (std::size_t i = 1; i < d; ++i) {
            s = M.square(s);
            trace = trace + s;
        }
        Poly2 g = gcd(f, trace);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            Poly2 other = f / g;
            edf_split(g, d, rng, out);
            edf_split(other, d, rng, out);
            return;
        }
    }
    throw PolyDomainError("edf: input is not a product of distinct irreducibles of degree " + std::to_string(d));
}

std::vector<std::size_t> prime_divisors(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

std::vector<PolyFactor> squarefree_decomposition(const Poly2& f) {
    if (f.is_zero()) throw PolyDomainError("squarefree_decomposition: zero polynomial");
    std::vector<PolyFactor> out;
    squarefree_rec(f, 1, out);
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        return a.multiplicity != b.multiplicity ? a.multiplicity < b.multiplicity : a.poly < b.poly;
    });
    return out;
}

std::vector<DegreePart> ddf(const Poly2& f) {
    if (f.is_zero()) throw PolyDomainError("ddf: zero polynomial");
    if (f.degree() < 1) return {};
    const Poly2 df = derivative(f);
    if (df.is_zero() || !gcd(f, df).is_one()) throw PolyDomainError("ddf: input is not squarefree");

    std::vector<DegreePart> out;
    Poly2 rest = f;
    auto M = std::make_unique<Modulus>(rest);
    const Poly2 x = M->reduce(Poly2::x());
    Poly2 h = x;
    for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(rest.degree()); ++d) {
        h = M->square(h);  // X^(2^d) mod rest
        Poly2 g = gcd(rest, h + Poly2::x());
        if (g.is_one()) continue;
        rest = rest / g;
        out.push_back({std::move(g), d});
        if (rest.degree() < 1) break;
        M = std::make_unique<Modulus>(rest);
        h = M->reduce(h);
    }
    if (rest.degree() >= 1) {
        const auto d = static_cast<std::size_t>(rest.degree());
        out.push_back({std::move(rest), d});
    }
    return out;
}

std::map<std::size_t, std::size_t> ddf_degree_profile(const std::vector<DegreePart>& parts) {
    std::map<std::size_t, std::size_t> out;
    for (const auto& p : parts) out[p.degree] += static_cast<std::size_t>(p.product.degree()) / p.degree;
    return out;
}

std::vector<Poly2> edf(const Poly2& f, std::size_t d, FactorOptions opts) {
    if (d == 0 || f.degree() < 1 || static_cast<std::size_t>(f.degree()) % d != 0)
        throw PolyDomainError("edf: degree " + std::to_string(d) + " does not divide deg f");
    SplitMix64 rng(opts.seed);
    std::vector<Poly2> out;
    edf_split(f, d, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

Factorization factor(const Poly2& f, FactorOptions opts) {
    if (f.degree() < 1) throw PolyDomainError("factor: input must have degree at least 1");
    std::vector<PolyFactor> all;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        for (const auto& [prod, d] : ddf(part)) {
            for (auto& g : edf(prod, d, opts)) all.push_back({std::move(g), mult});
        }
    }
    return Factorization(std::move(all));
}

bool is_irreducible(const Poly2& f) {
    if (f.degree() < 1) throw PolyDomainError("is_irreducible: constant polynomial");
    const auto n = static_cast<std::size_t>(f.degree());
    if (n == 1) return true;
    const Modulus M(f);
    const Poly2 x = M.reduce(Poly2::x());
    if (M.frobenius(x, n) != x) return false;
    for (const std::size_t p : prime_divisors(n)) {
        if (!gcd(M.frobenius(x, n / p) + x, f).is_one()) return false;
    }
    return true;
}

Primitivity is_primitive(const Poly2& f, FactorBudget budget) {
    if (f.degree() < 1) throw PolyDomainError("is_primitive: constant polynomial");
    if (f == Poly2::x() || f == Poly2::from_u64(3))
        throw PolyDomainError("is_primitive: X and X + 1 are excluded");
    if (!is_irreducible(f)) throw PolyDomainError("is_primitive: polynomial is reducible");
    const auto d = static_cast<unsigned>(f.degree());
    const auto res = factor_nat(Natural::mersenne(d), budget);
    if (!std::holds_alternative<FactoredNat>(res)) return Primitivity::budget_exceeded;
    const auto& group = std::get<FactoredNat>(res);
    const Modulus M(f);
    for (const auto& p : group.primes()) {
        if (M.pow(Poly2::x(), group.value() / p).is_one()) return Primitivity::not_primitive;
    }
    return Primitivity::primitive;
}

}  // namespace lampfield
