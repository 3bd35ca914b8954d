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

#include <algorithm>

#include "lampfield/lampring.hpp"
#include "lampfield/modulus.hpp"

namespace lampfield {

RingElem::RingElem(std::size_t n, const Poly2& rep) : n_(n), rep_(rem(rep, phi(n))) {}

RingElem RingElem::all_lit(std::size_t n) {
    std::vector<Word> w(n / kWordBits + 1, 0);
    for (std::size_t i = 0; i < n; ++i) w[i / kWordBits] |= Word{1} << (i % kWordBits);
    return {n, Poly2(std::move(w))};
}

RingElem mul_by_x(const RingElem& e) {
    Poly2 r = shift_left(e.rep(), 1);
    if (r.coeff(e.n())) r = r + phi(e.n());
    return {e.n(), r};
}

FactoringBudgetExceeded::FactoringBudgetExceeded(std::size_t degree, Natural blocking)
    : std::runtime_error("factoring budget exceeded on 2^" + std::to_string(degree) + " - 1 = " +
                         blocking.to_string()),
      degree_(degree),
      blocking_(std::move(blocking)) {}

Natural order_of_x(const Poly2& irreducible, const FactorBudget& budget) {
    if (irreducible.degree() < 1 || irreducible == Poly2::x())
        throw PolyDomainError("order_of_x: X is not invertible modulo this polynomial");
    const auto d = static_cast<std::size_t>(irreducible.degree());
    const Natural group = Natural::mersenne(static_cast<unsigned>(d));
    auto res = factor_nat(group, budget);
    if (!std::holds_alternative<FactoredNat>(res)) throw FactoringBudgetExceeded(d, group);
    const Modulus M(irreducible);
    const Poly2 x = M.reduce(Poly2::x());
    return order_from_bound(std::get<FactoredNat>(res),
                            [&](const Natural& e) { return M.pow(x, e).is_one(); });
}

RingSummary summarize_ring(std::size_t n, const OrderOptions& opts) {
    RingSummary s;
    s.n = n;
    s.factors = factor(phi(n), opts.factor);
    std::vector<Natural> orders, groups;
    for (const auto& f : s.factors.factors()) {
        orders.push_back(order_of_x(f.poly, opts.budget));
        groups.push_back(Natural::mersenne(static_cast<unsigned>(f.poly.degree())));
    }
    s.t = lcm_nat(orders);
    s.u = lcm_nat(groups);
    return s;
}

Natural t_of_n(std::size_t n, const OrderOptions& opts) { return summarize_ring(n, opts).t; }

Natural u_of_n(std::size_t n, const FactorOptions& opts) {
    std::vector<Natural> groups;
    const Factorization fz = factor(phi(n), opts);
    for (const auto& f : fz.factors())
        groups.push_back(Natural::mersenne(static_cast<unsigned>(f.poly.degree())));
    return lcm_nat(groups);
}

Natural units_order(std::size_t n, const FactorOptions& opts) {
    Natural prod(1);
    const Factorization fz = factor(phi(n), opts);
    for (const auto& f : fz.factors())
        prod *= Natural::mersenne(static_cast<unsigned>(f.poly.degree()));
    return prod;
}

std::optional<Natural> closed_form_t(std::size_t n) {
    if (n < 2) throw PolyDomainError("closed_form_t: n must be at least 2");
    const Natural N(n);
    if ((n & (n - 1)) == 0) return N * N - Natural(1);
    const std::size_t m = n - 1;
    if ((m & (m - 1)) == 0) return N * N - N + Natural(1);
    return std::nullopt;
}

RingSummary RingCatalog::summary(std::size_t n) {
    {
        std::lock_guard lock(mu_);
        if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    }
    RingSummary s = summarize_ring(n, opts_);
    std::lock_guard lock(mu_);
    return memo_.emplace(n, std::move(s)).first->second;
}

std::uint64_t OrbitProfile::nonzero_orbit_count() const {
    std::uint64_t c = 0;
    for (const auto& [len, count] : sizes) c += count;
    return c;
}

std::map<std::uint64_t, std::uint64_t> OrbitProfile::with_zero_orbit() const {
    auto out = sizes;
    out[1] += 1;
    return out;
}

std::string OrbitProfile::to_string() const {
    std::string out;
    for (const auto& [len, count] : with_zero_orbit()) {
        if (!out.empty()) out += ", ";
        out += std::to_string(len) + "×" + std::to_string(count);
    }
    return out;
}

std::optional<OrbitProfile> orbit_profile(std::size_t n, std::uint64_t cap_bits) {
    if (n < 2) throw PolyDomainError("orbit_profile: n must be at least 2");
    if (n > 40 || (std::uint64_t{1} << n) > cap_bits) return std::nullopt;
    const std::uint64_t count = std::uint64_t{1} << n;
    const std::uint64_t top = count;  // bit n
    std::vector<std::uint64_t> seen((count + 63) / 64, 0);
    auto visited = [&](std::uint64_t v) { return (seen[v >> 6] >> (v & 63)) & 1; };
    auto mark = [&](std::uint64_t v) { seen[v >> 6] |= std::uint64_t{1} << (v & 63); };

    OrbitProfile prof;
    prof.n = n;
    for (std::uint64_t start = 1; start < count; ++start) {
        if (visited(start)) continue;
        std::uint64_t v = start, len = 0;
        do {
            mark(v);
            ++len;
            v <<= 1;
            if (v & top) v ^= top | 3;  // X^n = X + 1
        } while (v != start);
        ++prof.sizes[len];
    }
    return prof;
}

}  // namespace lampfield
