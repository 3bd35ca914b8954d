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

#include "lampfield/linpoly.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace lampfield {

HatPoly hat(const Poly2& f) {
    if (f.degree() > static_cast<std::int64_t>(kMaxHatSourceDegree))
        throw std::length_error("hat: source degree " + std::to_string(f.degree()) + " exceeds " +
                                std::to_string(kMaxHatSourceDegree));
    std::vector<std::size_t> exps;
    for (const std::size_t i : f.exponents()) exps.push_back(std::size_t{1} << i);
    return {f, Poly2::from_exponents(exps)};
}

std::optional<Poly2> unhat(const Poly2& g) {
    std::vector<std::size_t> exps;
    for (const std::size_t e : g.exponents()) {
        if (e == 0 || (e & (e - 1)) != 0) return std::nullopt;
        exps.push_back(static_cast<std::size_t>(std::countr_zero(e)));
    }
    return Poly2::from_exponents(exps);
}

Poly2 hat_compose(const Poly2& f, const Poly2& g) { return hat(f * g).expanded; }

bool bezout_hat_check(const Poly2& f, const Poly2& g) {
    const auto [d, alpha, beta] = ext_gcd(f, g);
    if (!d.is_one()) throw PolyDomainError("bezout_hat_check: arguments are not coprime");
    return hat_compose(alpha, f) + hat_compose(beta, g) == Poly2::x();
}

FieldShape tensor_field_shape(std::size_t da, std::size_t db) {
    if (da == 0 || db == 0) throw PolyDomainError("tensor_field_shape: degrees must be positive");
    return {std::gcd(da, db), std::lcm(da, db)};
}

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::budget_exceeded: return "budget-exceeded";
        case CheckStatus::not_attempted: return "not-attempted";
    }
    return "?";
}

std::string to_string(ConjVerdict::Kind k) {
    switch (k) {
        case ConjVerdict::Kind::verified: return "verified";
        case ConjVerdict::Kind::divisibility_only: return "divisibility-only";
        case ConjVerdict::Kind::budget_exceeded: return "budget-exceeded";
        case ConjVerdict::Kind::refuted: return "refuted";
    }
    return "?";
}

}  // namespace lampfield
