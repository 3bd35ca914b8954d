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

#ifndef LAMPFIELD_FACTOR_HPP
#define LAMPFIELD_FACTOR_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lampfield/intfactor.hpp"
#include "lampfield/poly2.hpp"

namespace lampfield {

struct PolyFactor {
    Poly2 poly;
    unsigned multiplicity = 1;

    friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

/// Irreducible factors with multiplicities, in canonical order
/// (degree, then coefficient pattern ascending).
class Factorization {
   public:
    Factorization() = default;
    explicit Factorization(std::vector<PolyFactor> factors);

    const std::vector<PolyFactor>& factors() const noexcept { return factors_; }
    std::size_t size() const noexcept { return factors_.size(); }
    /// Number of irreducible factors counted with multiplicity.
    std::size_t count_with_multiplicity() const noexcept;
    Poly2 product() const;
    /// degree -> number of irreducible factors of that degree (with multiplicity).
    std::map<std::size_t, std::size_t> degree_profile() const;
    /// "(X^2 + X + 1)(X^3 + X^2 + 1)"; a lone simple factor is printed bare.
    std::string to_string() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;

   private:
    std::vector<PolyFactor> factors_;
};

struct FactorOptions {
    std::uint64_t seed = 0;
};

/// f = prod g_i^m_i with each g_i squarefree and pairwise coprime; ordered
/// by multiplicity, then canonically.
std::vector<PolyFactor> squarefree_decomposition(const Poly2& f);

struct DegreePart {
    Poly2 product;  // product of all irreducible factors of this degree
    std::size_t degree = 0;
};
/// Distinct-degree factorization of a squarefree f.
std::vector<DegreePart> ddf(const Poly2& f);
/// Multiset of irreducible-factor degrees read off ddf(f).
std::map<std::size_t, std::size_t> ddf_degree_profile(const std::vector<DegreePart>& parts);

/// Splits a product of distinct irreducibles of degree d using the trace
/// map h + h^2 + ... + h^(2^(d-1)). Output sorted canonically.
std::vector<Poly2> edf(const Poly2& f, std::size_t d, FactorOptions opts = {});

Factorization factor(const Poly2& f, FactorOptions opts = {});

/// Rabin's test: X^(2^n) = X mod f and gcd(X^(2^(n/p)) - X, f) = 1 for
/// every prime p | n.
bool is_irreducible(const Poly2& f);

enum class Primitivity { primitive, not_primitive, budget_exceeded };
/// f irreducible, f not X or X + 1. Factors 2^deg(f) - 1 under `budget`.
Primitivity is_primitive(const Poly2& f, FactorBudget budget = {});

}  // namespace lampfield

#endif
