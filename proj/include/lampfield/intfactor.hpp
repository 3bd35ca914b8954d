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

#ifndef LAMPFIELD_INTFACTOR_HPP
#define LAMPFIELD_INTFACTOR_HPP

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "lampfield/natural.hpp"

namespace lampfield {

struct PrimePower {
    Natural prime;
    unsigned exponent = 1;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A natural together with its complete prime factorization.
class FactoredNat {
   public:
    /// Validates that the parts multiply to `value`; sorts and merges them.
    FactoredNat(Natural value, std::vector<PrimePower> parts);

    const Natural& value() const noexcept { return value_; }
    const std::vector<PrimePower>& parts() const noexcept { return parts_; }
    std::vector<Natural> primes() const;
    std::string to_string() const;  // "3^2 * 7"

   private:
    Natural value_;
    std::vector<PrimePower> parts_;
};

/// Unit of work is one Pollard-rho iteration (one modular squaring).
struct FactorBudget {
    std::uint64_t rho_iterations = 100'000'000;
};

/// Returned when the rho budget runs out. `found` and `unfactored`
/// multiply back to the input.
struct PartialFactorization {
    Natural value;
    std::vector<PrimePower> found;
    std::vector<Natural> unfactored;
    std::uint64_t iterations_used = 0;
};

using FactorResult = std::variant<FactoredNat, PartialFactorization>;

/// Trial division by primes below 10^5, then Brent's rho with batched gcds.
/// m >= 1.
FactorResult factor_nat(const Natural& m, FactorBudget budget = {});

/// Miller-Rabin. Deterministic below 2^64; above, the fixed bases plus
/// 24 pseudo-random bases from a fixed seed.
bool is_probable_prime(const Natural& n);
bool is_prime_u64(std::uint64_t n);

/// Lucas-Lehmer: true iff 2^p - 1 is prime. p must be an odd prime.
bool lucas_lehmer(unsigned p);

/// Exact order of an element whose order divides bound.value().
/// Throws std::domain_error if is_identity_at(bound.value()) is false.
Natural order_from_bound(const FactoredNat& bound,
                         const std::function<bool(const Natural&)>& is_identity_at);

}  // namespace lampfield

#endif
