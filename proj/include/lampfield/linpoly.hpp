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

#ifndef LAMPFIELD_LINPOLY_HPP
#define LAMPFIELD_LINPOLY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lampfield/lampring.hpp"
#include "lampfield/poly2.hpp"

namespace lampfield {

/// Largest source degree hat() will expand (the result has 2^deg + 1 bits).
inline constexpr std::size_t kMaxHatSourceDegree = 28;

/// The linearized polynomial sum a_i X^(2^i) of f = sum a_i X^i.
struct HatPoly {
    Poly2 source;
    Poly2 expanded;
};

/// Throws std::length_error above kMaxHatSourceDegree.
HatPoly hat(const Poly2& f);
/// Inverse of hat; nullopt unless every exponent of g is a power of two.
std::optional<Poly2> unhat(const Poly2& g);
/// hat(f) composed with hat(g), computed as hat(f * g).
Poly2 hat_compose(const Poly2& f, const Poly2& g);

/// With ext_gcd(f, g) = (1, a, b), checks hat(a)(hat(f)) + hat(b)(hat(g)) = X.
/// Throws PolyDomainError when f and g are not coprime.
bool bezout_hat_check(const Poly2& f, const Poly2& g);

struct FieldShape {
    std::size_t count;
    std::size_t degree;
    friend bool operator==(const FieldShape&, const FieldShape&) = default;
};
/// GF(2^da) (x) GF(2^db) is gcd(da, db) copies of GF(2^lcm(da, db)).
FieldShape tensor_field_shape(std::size_t da, std::size_t db);

enum class CheckStatus { pass, fail, budget_exceeded, not_attempted };
std::string to_string(CheckStatus s);

struct CheckReport {
    CheckStatus status = CheckStatus::not_attempted;
    std::string detail;
};

/// Resource limits for the verifiers. Exceeding one is reported, not thrown.
struct VerifyLimits {
    /// Largest polynomial degree handed to ddf().
    std::size_t max_ddf_degree = 8191;
    /// Equality t(2^n - 1) = 2^t(n) - 1 is attempted only for t(n) up to this.
    std::uint64_t max_equality_t = 128;
    /// Visited-array size for orbit enumeration.
    std::uint64_t orbit_cap_bits = std::uint64_t{1} << 30;
};

/// Every factor f of Phi_n has hat(f)/X dividing Phi_(2^n - 1), and when
/// Phi_n has r > 1 factors, Phi_(2^n - 1) has at least 2^r - 1.
CheckReport cor_tensor_check(std::size_t n, RingCatalog& catalog, const VerifyLimits& limits = {});

struct ConjVerdict {
    enum class Kind { verified, divisibility_only, budget_exceeded, refuted };
    Kind kind = Kind::budget_exceeded;
    bool divides = false;            // X^(2^t(n) - 1) = 1 in R_(2^n - 1)
    std::optional<Natural> t_n;      // t(n)
    std::optional<Natural> t_big;    // t(2^n - 1), when computed
    std::string detail;
};
std::string to_string(ConjVerdict::Kind k);

/// t(2^n - 1) against 2^t(n) - 1: divisibility always, equality when
/// t(n) <= limits.max_equality_t.
ConjVerdict conj_equal_check(std::size_t n, RingCatalog& catalog, const VerifyLimits& limits = {});

/// {1} plus the multiply-by-X orbit lengths of R_n against the factor
/// degrees of X * Phi_(2^n - 1).
CheckReport orbit_split_check(std::size_t n, const VerifyLimits& limits = {});

/// n = 2^k: every factor degree of Phi_n divides 2k; n = 2^k + 1 (k >= 1):
/// divides 3k. Other n throw PolyDomainError.
bool splitting_degree_check(std::size_t n, const FactorOptions& opts = {});

struct ChainEntry {
    Natural n;
    CheckStatus status = CheckStatus::not_attempted;
    bool irreducible = false;
    bool primitive = false;
    std::string certificate;
};
/// n_0 = 2, n_(i+1) = 2^(n_i) - 1, for n_i <= max_degree; the first term
/// past the limit is listed as not attempted.
std::vector<ChainEntry> primitivity_chain_check(std::size_t max_degree, const FactorBudget& budget = {});

}  // namespace lampfield

#endif
