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

// Slow, independent reference implementations used only by the tests.
// Nothing here calls into the library except to convert inputs.

#ifndef LAMPFIELD_TESTS_ORACLES_HPP
#define LAMPFIELD_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "lampfield/poly2.hpp"
#include "lampfield/splitmix.hpp"

namespace oracle {

/// One byte per coefficient, no trailing zeros.
struct Ref {
    std::vector<std::uint8_t> c;

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    long deg() const { return static_cast<long>(c.size()) - 1; }
    bool operator==(const Ref&) const = default;
};

inline Ref from(const lampfield::Poly2& p) {
    Ref r;
    r.c.resize(static_cast<std::size_t>(p.degree() + 1));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = p.coeff(i);
    return r;
}

inline lampfield::Poly2 to(const Ref& r) {
    std::vector<std::size_t> e;
    for (std::size_t i = 0; i < r.c.size(); ++i)
        if (r.c[i]) e.push_back(i);
    return lampfield::Poly2::from_exponents(e);
}

inline Ref ref_u64(std::uint64_t bits) {
    Ref r;
    for (int i = 0; i < 64; ++i) r.c.push_back((bits >> i) & 1);
    r.trim();
    return r;
}

inline Ref add(const Ref& a, const Ref& b) {
    Ref r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] ^= a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] ^= b.c[i];
    r.trim();
    return r;
}

inline Ref mul(const Ref& a, const Ref& b) {
    Ref r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i])
            for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] ^= b.c[j];
    r.trim();
    return r;
}

inline std::pair<Ref, Ref> divmod(Ref a, const Ref& b) {
    Ref q;
    if (a.deg() < b.deg()) return {q, a};
    q.c.assign(static_cast<std::size_t>(a.deg() - b.deg() + 1), 0);
    for (long i = a.deg(); i >= b.deg(); --i) {
        if (!a.c[static_cast<std::size_t>(i)]) continue;
        const auto s = static_cast<std::size_t>(i - b.deg());
        q.c[s] = 1;
        for (std::size_t j = 0; j < b.c.size(); ++j) a.c[s + j] ^= b.c[j];
    }
    a.trim();
    q.trim();
    return {q, a};
}

inline Ref mod(const Ref& a, const Ref& b) { return divmod(a, b).second; }

/// Substitution f(g(X)) by Horner's rule; fine for small f.
inline Ref compose(const Ref& f, const Ref& g) {
    Ref r;
    for (long i = f.deg(); i >= 0; --i) {
        r = mul(r, g);
        if (f.c[static_cast<std::size_t>(i)]) r = add(r, Ref{{1}});
    }
    return r;
}

/// Linearized f (exponents powers of two) applied to g: sum f_(2^i) g^(2^i).
/// Squaring spreads coefficients, so this stays linear in deg g.
inline Ref compose_linearized(const Ref& f, const Ref& g) {
    Ref r, power = g;
    for (std::size_t e = 1; e < f.c.size(); e <<= 1) {
        if (f.c[e]) r = add(r, power);
        Ref sq;
        sq.c.assign(power.c.empty() ? 0 : 2 * power.c.size() - 1, 0);
        for (std::size_t i = 0; i < power.c.size(); ++i) sq.c[2 * i] = power.c[i];
        power = std::move(sq);
    }
    return r;
}

/// Monic divisors of degree 1..deg/2 tried in turn.
inline bool irreducible_by_trial(std::uint64_t f) {
    const int d = 63 - __builtin_clzll(f);
    if (d < 1) return false;
    const Ref rf = ref_u64(f);
    for (int k = 1; 2 * k <= d; ++k)
        for (std::uint64_t g = std::uint64_t{1} << k; g < (std::uint64_t{2} << k); ++g)
            if (mod(rf, ref_u64(g)).c.empty()) return false;
    return true;
}

/// Number of monic irreducibles of degree d over GF(2), via Moebius inversion.
inline std::int64_t necklace_count(unsigned d) {
    auto mobius = [](unsigned n) {
        int m = 1;
        for (unsigned p = 2; p * p <= n; ++p) {
            if (n % p) continue;
            n /= p;
            if (n % p == 0) return 0;
            m = -m;
        }
        return n > 1 ? -m : m;
    };
    std::int64_t sum = 0;
    for (unsigned e = 1; e <= d; ++e)
        if (d % e == 0) sum += mobius(d / e) * (std::int64_t{1} << e);
    return sum / d;
}

inline std::map<std::uint64_t, unsigned> trial_factor(std::uint64_t m) {
    std::map<std::uint64_t, unsigned> out;
    for (std::uint64_t p = 2; p * p <= m; ++p)
        while (m % p == 0) {
            ++out[p];
            m /= p;
        }
    if (m > 1) ++out[m];
    return out;
}

/// Multiplication by X in GF(2)[X]/(X^n + X + 1) on an n-bit word.
inline std::uint64_t ring_mulx(std::uint64_t v, unsigned n) {
    const bool top = (v >> (n - 1)) & 1;
    v = (v << 1) & ((std::uint64_t{1} << n) - 1);
    if (top) v ^= 3;
    return v;
}

/// Cycle lengths of v -> X v over the nonzero elements, brute force.
inline std::map<std::uint64_t, std::uint64_t> orbit_sizes(unsigned n) {
    std::vector<bool> seen(std::size_t{1} << n, false);
    std::map<std::uint64_t, std::uint64_t> sizes;
    for (std::uint64_t s = 1; s < seen.size(); ++s) {
        if (seen[s]) continue;
        std::uint64_t len = 0, v = s;
        do {
            seen[v] = true;
            v = ring_mulx(v, n);
            ++len;
        } while (v != s);
        ++sizes[len];
    }
    return sizes;
}

/// Smallest k >= 1 with X^k = 1 in the same ring, or 0 if X is not a unit.
inline std::uint64_t order_of_x_brute(unsigned n, std::uint64_t limit) {
    std::uint64_t v = 2 & ((std::uint64_t{1} << n) - 1);
    for (std::uint64_t k = 1; k <= limit; ++k) {
        if (v == 1) return k;
        v = ring_mulx(v, n);
    }
    return 0;
}

/// Direct lamp simulation on a bool array.
inline std::uint64_t lamp_period_brute(unsigned n, std::uint64_t cap) {
    std::vector<bool> lamps(n, true);
    std::size_t cursor = 0;
    for (std::uint64_t t = 1; t <= cap; ++t) {
        if (lamps[(cursor + n - 1) % n]) lamps[cursor] = !lamps[cursor];
        cursor = (cursor + 1) % n;
        bool all = true;
        for (bool b : lamps) all = all && b;
        if (all) return t;
    }
    return 0;
}

/// Uniform polynomial of degree exactly d (d = -1 gives zero).
inline lampfield::Poly2 random_poly(lampfield::SplitMix64& rng, long d) {
    if (d < 0) return {};
    std::vector<std::uint64_t> w(static_cast<std::size_t>(d / 64 + 1));
    for (auto& x : w) x = rng.next();
    const unsigned top = static_cast<unsigned>(d % 64);
    if (top < 63) w.back() &= (std::uint64_t{1} << (top + 1)) - 1;
    w.back() |= std::uint64_t{1} << top;
    return lampfield::Poly2(std::move(w));
}

inline lampfield::Poly2 random_poly_upto(lampfield::SplitMix64& rng, long max_deg) {
    return random_poly(rng, static_cast<long>(rng.below(static_cast<std::uint64_t>(max_deg + 2))) - 1);
}

}  // namespace oracle

#endif
