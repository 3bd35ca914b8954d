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

#ifndef LAMPFIELD_LAMPRING_HPP
#define LAMPFIELD_LAMPRING_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lampfield/factor.hpp"
#include "lampfield/intfactor.hpp"
#include "lampfield/natural.hpp"
#include "lampfield/poly2.hpp"

namespace lampfield {

// ---------------------------------------------------------------------------
// The ring R_n = GF(2)[X]/(X^n + X + 1)

/// Residue class in R_n; rep is always fully reduced.
class RingElem {
   public:
    RingElem(std::size_t n, const Poly2& rep);
    static RingElem one(std::size_t n) { return {n, Poly2::one()}; }
    /// 1 + X + ... + X^(n-1): every lamp lit.
    static RingElem all_lit(std::size_t n);

    std::size_t n() const noexcept { return n_; }
    const Poly2& rep() const noexcept { return rep_; }

    friend bool operator==(const RingElem&, const RingElem&) = default;

   private:
    std::size_t n_;
    Poly2 rep_;
};

/// X * e, one shift and a conditional XOR with X + 1.
RingElem mul_by_x(const RingElem& e);

struct OrderOptions {
    FactorOptions factor;
    FactorBudget budget;
};

/// Thrown when 2^d - 1 could not be factored within the rho budget.
class FactoringBudgetExceeded : public std::runtime_error {
   public:
    FactoringBudgetExceeded(std::size_t degree, Natural blocking);
    std::size_t degree() const noexcept { return degree_; }
    const Natural& blocking() const noexcept { return blocking_; }

   private:
    std::size_t degree_;
    Natural blocking_;
};

/// Multiplicative order of X modulo an irreducible f other than X.
Natural order_of_x(const Poly2& irreducible, const FactorBudget& budget = {});

struct RingSummary {
    std::size_t n = 0;
    Factorization factors;
    Natural t;  // order of X in R_n
    Natural u;  // lcm of 2^d - 1 over factor degrees d
};

/// Factors Phi_n and computes t(n) as the lcm of per-factor orders.
RingSummary summarize_ring(std::size_t n, const OrderOptions& opts = {});
Natural t_of_n(std::size_t n, const OrderOptions& opts = {});
/// Needs only the polynomial factorization.
Natural u_of_n(std::size_t n, const FactorOptions& opts = {});
/// |R_n^x| = prod (2^d - 1); Phi_n is squarefree.
Natural units_order(std::size_t n, const FactorOptions& opts = {});
/// n^2 - 1 for n = 2^k, n^2 - n + 1 for n = 2^k + 1, nullopt otherwise.
std::optional<Natural> closed_form_t(std::size_t n);

/// Thread-safe memo of ring summaries keyed by n.
class RingCatalog {
   public:
    explicit RingCatalog(OrderOptions opts = {}) : opts_(opts) {}

    /// Throws FactoringBudgetExceeded; failures are not cached.
    RingSummary summary(std::size_t n);
    Natural t(std::size_t n) { return summary(n).t; }
    const OrderOptions& options() const noexcept { return opts_; }

   private:
    OrderOptions opts_;
    std::mutex mu_;
    std::map<std::size_t, RingSummary> memo_;
};

// ---------------------------------------------------------------------------
// Multiply-by-X orbits

struct OrbitProfile {
    std::size_t n = 0;
    /// orbit length -> number of nonzero orbits with that length.
    std::map<std::uint64_t, std::uint64_t> sizes;

    std::uint64_t nonzero_orbit_count() const;
    /// Orbit lengths including the zero orbit {0}, as a multiset.
    std::map<std::uint64_t, std::uint64_t> with_zero_orbit() const;
    /// "1×1, 3×1, 7×1, 21×1" (zero orbit included).
    std::string to_string() const;
};

/// Walks every nonzero element of R_n under multiplication by X, using a
/// flat 2^n-bit visited array. nullopt when 2^n exceeds cap_bits or n > 40.
std::optional<OrbitProfile> orbit_profile(std::size_t n, std::uint64_t cap_bits = std::uint64_t{1} << 30);

// ---------------------------------------------------------------------------
// The lamp automaton

/// n lamps in a circle and the index of the next step.
class LampState {
   public:
    LampState(std::vector<bool> lamps, std::size_t cursor);
    static LampState all_on(std::size_t n);

    std::size_t n() const noexcept { return lamps_.size(); }
    std::size_t cursor() const noexcept { return cursor_; }
    bool lamp(std::size_t j) const { return lamps_.at(j); }
    const std::vector<bool>& lamps() const noexcept { return lamps_; }
    std::size_t lit_count() const noexcept { return lit_; }
    bool all_lit() const noexcept { return lit_ == lamps_.size(); }

    /// Step S_cursor: toggle L_cursor if L_(cursor-1) is on; advance cursor.
    void advance() noexcept;

    friend bool operator==(const LampState& a, const LampState& b) {
        return a.cursor_ == b.cursor_ && a.lamps_ == b.lamps_;
    }

   private:
    std::vector<bool> lamps_;
    std::size_t cursor_;
    std::size_t lit_;
};

LampState lamp_step(LampState s);

/// Steps until all lamps are on again, starting all on with cursor 0.
/// nullopt if that takes more than cap steps.
std::optional<Natural> lamp_period(std::size_t n, std::uint64_t cap);

}  // namespace lampfield

#endif
