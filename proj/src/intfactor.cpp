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

#include "lampfield/intfactor.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lampfield/splitmix.hpp"

namespace lampfield {

namespace {

using Big = Natural::Storage;
using u128 = unsigned __int128;

constexpr std::uint32_t kTrialLimit = 100'000;
constexpr unsigned kRhoBatch = 64;

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kTrialLimit, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i < kTrialLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t{i} * i; j < kTrialLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, b, m);
        b = mulmod64(b, b, m);
        e >>= 1;
    }
    return r;
}

constexpr std::array<std::uint64_t, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

template <class T>
bool strong_probable_prime(const T& n, const T& a, const T& d, unsigned s,
                           auto&& powm, auto&& mulm) {
    const T one = 1;
    const T n1 = n - 1;
    T x = powm(a, d, n);
    if (x == one || x == n1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = mulm(x, x, n);
        if (x == n1) return true;
        if (x == one) return false;
    }
    return false;
}

// Two representations share the rho driver: native words and cpp_int.
struct U64Ring {
    using value = std::uint64_t;
    value n;
    value f(value x, value c) const {
        value y = mulmod64(x, x, n) + c;
        return y >= n || y < c ? y - n : y;
    }
    value mul(value a, value b) const { return mulmod64(a, b, n); }
    static value absdiff(value a, value b) { return a > b ? a - b : b - a; }
    value gcd(value a) const { return std::gcd(a, n); }
};

struct BigRing {
    using value = Big;
    value n;
    value f(const value& x, const value& c) const {
        value y = x * x + c;
        return y % n;
    }
    value mul(const value& a, const value& b) const { return a * b % n; }
    static value absdiff(const value& a, const value& b) { return a > b ? value(a - b) : value(b - a); }
    value gcd(const value& a) const { return boost::multiprecision::gcd(a, n); }
};

enum class RhoStatus { found, cycle_failed, exhausted };

// Brent's variant of Pollard rho; gcd taken once every kRhoBatch steps.
template <class Ring>
RhoStatus brent_rho(const Ring& R, const typename Ring::value& c, typename Ring::value& factor,
                    std::uint64_t& budget) {
    using V = typename Ring::value;
    V y = 2 % R.n, x = y, ys = y, q = 1, g = 1;
    std::uint64_t r = 1;
    auto charge = [&budget]() {
        if (budget == 0) return false;
        --budget;
        return true;
    };
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) {
            if (!charge()) return RhoStatus::exhausted;
            y = R.f(y, c);
        }
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            const std::uint64_t lim = std::min<std::uint64_t>(kRhoBatch, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                if (!charge()) return RhoStatus::exhausted;
                y = R.f(y, c);
                q = R.mul(q, Ring::absdiff(x, y));
            }
            g = R.gcd(q);
            k += kRhoBatch;
        }
        r *= 2;
    }
    if (g == R.n) {
        do {
            if (!charge()) return RhoStatus::exhausted;
            ys = R.f(ys, c);
            g = R.gcd(Ring::absdiff(x, ys));
        } while (g == 1);
    }
    if (g == R.n) return RhoStatus::cycle_failed;
    factor = g;
    return RhoStatus::found;
}

// Splits a composite n; returns false when the budget ran out.
bool split_composite(const Natural& n, Natural& factor, std::uint64_t& budget) {
    for (std::uint64_t c = 1;; ++c) {
        RhoStatus st;
        if (n.fits_u64()) {
            U64Ring R{n.to_u64()};
            std::uint64_t f = 0;
            st = brent_rho(R, c, f, budget);
            if (st == RhoStatus::found) factor = Natural(f);
        } else {
            BigRing R{n.raw()};
            Big f;
            st = brent_rho(R, Big(c), f, budget);
            if (st == RhoStatus::found) factor = Natural(std::move(f));
        }
        if (st == RhoStatus::found) return true;
        if (st == RhoStatus::exhausted) return false;
    }
}

std::vector<PrimePower> merge_parts(std::vector<PrimePower> parts) {
    std::sort(parts.begin(), parts.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    std::vector<PrimePower> out;
    for (auto& p : parts) {
        if (!out.empty() && out.back().prime == p.prime)
            out.back().exponent += p.exponent;
        else
            out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (const std::uint64_t p : kWitnesses) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    auto powm = [](std::uint64_t b, std::uint64_t e, std::uint64_t m) { return powmod64(b, e, m); };
    auto mulm = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) { return mulmod64(a, b, m); };
    for (const std::uint64_t a : kWitnesses)
        if (!strong_probable_prime<std::uint64_t>(n, a, d, s, powm, mulm)) return false;
    return true;
}

bool is_probable_prime(const Natural& n) {
    if (n.fits_u64()) return is_prime_u64(n.to_u64());
    const Big& v = n.raw();
    for (const std::uint64_t p : kWitnesses)
        if (v % p == 0) return false;
    Big d = v - 1;
    unsigned s = 0;
    while (!boost::multiprecision::bit_test(d, 0)) {
        d >>= 1;
        ++s;
    }
    auto powm = [](const Big& b, const Big& e, const Big& m) { return Big(boost::multiprecision::powm(b, e, m)); };
    auto mulm = [](const Big& a, const Big& b, const Big& m) { return Big(a * b % m); };
    for (const std::uint64_t a : kWitnesses)
        if (!strong_probable_prime<Big>(v, Big(a), d, s, powm, mulm)) return false;
    SplitMix64 rng(0x5eed);
    const Big span = v - 4;
    for (int i = 0; i < 24; ++i) {
        Big a = 0;
        for (int w = 0; w < static_cast<int>(n.bit_length() / 64) + 2; ++w) a = (a << 64) | rng.next();
        a = a % span + 2;
        if (!strong_probable_prime<Big>(v, a, d, s, powm, mulm)) return false;
    }
    return true;
}

FactoredNat::FactoredNat(Natural value, std::vector<PrimePower> parts)
    : value_(std::move(value)), parts_(merge_parts(std::move(parts))) {
    Natural prod(1);
    for (const auto& p : parts_) {
        if (p.exponent == 0) throw std::invalid_argument("FactoredNat: zero exponent");
        if (!is_probable_prime(p.prime))
            throw std::invalid_argument("FactoredNat: " + p.prime.to_string() + " is not prime");
        for (unsigned i = 0; i < p.exponent; ++i) prod *= p.prime;
    }
    if (prod != value_) throw std::invalid_argument("FactoredNat: parts do not multiply to value");
}

std::vector<Natural> FactoredNat::primes() const {
    std::vector<Natural> out;
    out.reserve(parts_.size());
    for (const auto& p : parts_) out.push_back(p.prime);
    return out;
}

std::string FactoredNat::to_string() const {
    if (parts_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << " * ";
        os << parts_[i].prime;
        if (parts_[i].exponent > 1) os << '^' << parts_[i].exponent;
    }
    return os.str();
}

FactorResult factor_nat(const Natural& m, FactorBudget budget) {
    if (m.is_zero()) throw std::domain_error("factor_nat: zero has no factorization");
    std::vector<PrimePower> found;
    Natural rest = m;
    for (const std::uint32_t p : small_primes()) {
        const Natural P(p);
        if (P * P > rest) break;
        unsigned e = 0;
        while ((rest % P).is_zero()) {
            rest /= P;
            ++e;
        }
        if (e) found.push_back({P, e});
    }

    std::uint64_t left = budget.rho_iterations;
    std::vector<Natural> stack;
    if (!rest.is_one()) stack.push_back(rest);
    while (!stack.empty()) {
        Natural x = std::move(stack.back());
        stack.pop_back();
        if (x < Natural(kTrialLimit) * Natural(kTrialLimit) || is_probable_prime(x)) {
            // Trial division already removed every prime below the limit.
            found.push_back({std::move(x), 1});
            continue;
        }
        Natural d;
        if (!split_composite(x, d, left)) {
            stack.push_back(std::move(x));
            return PartialFactorization{m, merge_parts(std::move(found)), std::move(stack),
                                        budget.rho_iterations - left};
        }
        Natural other = x / d;
        stack.push_back(std::move(d));
        stack.push_back(std::move(other));
    }
    return FactoredNat(m, std::move(found));
}

bool lucas_lehmer(unsigned p) {
    if (p < 3 || !is_prime_u64(p)) throw std::domain_error("lucas_lehmer: exponent must be an odd prime");
    const Big M = Natural::mersenne(p).raw();
    auto reduce = [&](Big x) {
        // x mod 2^p - 1 by folding the high part onto the low part.
        while (x > M) x = (x & M) + (x >> p);
        return x == M ? Big(0) : x;
    };
    Big s = 4;
    for (unsigned i = 0; i + 2 < p; ++i) {
        s = reduce(s * s);
        s = s >= 2 ? Big(s - 2) : Big(s + M - 2);
    }
    return s.is_zero();
}

Natural order_from_bound(const FactoredNat& bound,
                         const std::function<bool(const Natural&)>& is_identity_at) {
    Natural t = bound.value();
    if (!is_identity_at(t)) throw std::domain_error("order_from_bound: element order does not divide the bound");
    for (const auto& [p, e] : bound.parts()) {
        for (unsigned i = 0; i < e; ++i) {
            Natural cand = t / p;
            if (!is_identity_at(cand)) break;
            t = std::move(cand);
        }
    }
    return t;
}

}  // namespace lampfield
