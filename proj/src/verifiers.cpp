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

#include <sstream>

#include "lampfield/linpoly.hpp"
#include "lampfield/modulus.hpp"

namespace lampfield {

namespace {

std::size_t mersenne_index(std::size_t n) {
    if (n >= 63) throw std::length_error("2^n - 1 does not fit in a machine word");
    return (std::size_t{1} << n) - 1;
}

std::string profile_string(const std::map<std::uint64_t, std::uint64_t>& m) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : m) {
        os << (first ? "" : ", ") << k << "×" << v;
        first = false;
    }
    return os.str();
}

}  // namespace

CheckReport cor_tensor_check(std::size_t n, RingCatalog& catalog, const VerifyLimits& limits) {
    if (n < 2) throw PolyDomainError("cor_tensor_check: n must be at least 2");
    if (n > kMaxHatSourceDegree)
        return {CheckStatus::budget_exceeded, "hat polynomials of degree 2^" + std::to_string(n) + " not expanded"};
    const std::size_t big = mersenne_index(n);
    const Factorization fac = factor(phi(n), catalog.options().factor);
    for (const auto& f : fac.factors()) {
        const Poly2 cofactor = shift_right(hat(f.poly).expanded, 1);
        // Phi_big mod cofactor, without materializing X^big densely.
        const Modulus M(cofactor);
        const Poly2 r = M.reduce(M.pow(Poly2::x(), Natural(big)) + Poly2::from_u64(3));
        if (!r.is_zero())
            return {CheckStatus::fail, "hat(" + format(f.poly) + ")/X does not divide Phi_" + std::to_string(big)};
    }
    const std::size_t r = fac.size();
    if (r == 1) return {CheckStatus::pass, "Phi_" + std::to_string(n) + " irreducible; hat factor divides"};
    if (big > limits.max_ddf_degree)
        return {CheckStatus::budget_exceeded,
                "divisibility holds; factor count of Phi_" + std::to_string(big) + " needs ddf beyond limit"};
    std::size_t count = 0;
    for (const auto& [d, c] : ddf_degree_profile(ddf(phi(big)))) count += c;
    const std::size_t bound = (std::size_t{1} << r) - 1;
    std::ostringstream os;
    os << "r=" << r << ", Phi_" << big << " has " << count << " factors (bound " << bound << ")";
    return {count >= bound ? CheckStatus::pass : CheckStatus::fail, os.str()};
}

ConjVerdict conj_equal_check(std::size_t n, RingCatalog& catalog, const VerifyLimits& limits) {
    if (n < 2) throw PolyDomainError("conj_equal_check: n must be at least 2");
    ConjVerdict v;
    try {
        v.t_n = catalog.t(n);
    } catch (const FactoringBudgetExceeded& e) {
        v.kind = ConjVerdict::Kind::budget_exceeded;
        v.detail = std::string("t(n): ") + e.what();
        return v;
    }
    const std::size_t big = mersenne_index(n);
    if (!v.t_n->fits_u64() || v.t_n->to_u64() > (std::uint64_t{1} << 32)) {
        v.kind = ConjVerdict::Kind::budget_exceeded;
        v.detail = "exponent 2^t(n) - 1 too large for square-and-multiply";
        return v;
    }
    const auto tn = static_cast<unsigned>(v.t_n->to_u64());
    const Natural target = Natural::mersenne(tn);
    const Modulus M(phi(big));
    v.divides = M.pow(Poly2::x(), target).is_one();
    if (!v.divides) {
        v.kind = ConjVerdict::Kind::refuted;
        v.detail = "X^(2^" + std::to_string(tn) + " - 1) != 1 in R_" + std::to_string(big);
        return v;
    }
    if (tn > limits.max_equality_t) {
        v.kind = ConjVerdict::Kind::divisibility_only;
        v.detail = "t(" + std::to_string(big) + ") divides 2^" + std::to_string(tn) +
                   " - 1; equality needs factoring 2^d - 1 for d up to " + std::to_string(tn);
        return v;
    }
    try {
        v.t_big = catalog.t(big);
    } catch (const FactoringBudgetExceeded& e) {
        v.kind = ConjVerdict::Kind::budget_exceeded;
        v.detail = std::string("t(2^n - 1): ") + e.what();
        return v;
    }
    if (*v.t_big == target) {
        v.kind = ConjVerdict::Kind::verified;
        v.detail = "t(" + std::to_string(big) + ") = 2^" + std::to_string(tn) + " - 1 = " + target.to_string();
    } else {
        v.kind = ConjVerdict::Kind::refuted;
        v.detail = "t(" + std::to_string(big) + ") = " + v.t_big->to_string() + " != 2^" + std::to_string(tn) + " - 1";
    }
    return v;
}

CheckReport orbit_split_check(std::size_t n, const VerifyLimits& limits) {
    if (n < 2) throw PolyDomainError("orbit_split_check: n must be at least 2");
    const auto prof = orbit_profile(n, limits.orbit_cap_bits);
    if (!prof) return {CheckStatus::budget_exceeded, "orbit enumeration of R_" + std::to_string(n) + " over cap"};
    const std::size_t big = mersenne_index(n);
    if (big + 1 > limits.max_ddf_degree)
        return {CheckStatus::budget_exceeded, "ddf of X*Phi_" + std::to_string(big) + " beyond limit"};
    const Poly2 s = shift_left(phi(big), 1);
    std::map<std::uint64_t, std::uint64_t> degrees;
    for (const auto& [d, c] : ddf_degree_profile(ddf(s))) degrees[d] += c;
    const auto orbits = prof->with_zero_orbit();
    std::string detail = "orbits {" + profile_string(orbits) + "}, degrees {" + profile_string(degrees) + "}";
    bool ok = orbits == degrees;
    // In a field the nonzero orbits are the cosets of <X>, so they all have one size.
    if (is_irreducible(phi(n)) && prof->sizes.size() != 1) {
        ok = false;
        detail += "; R_n is a field but orbit sizes differ";
    }
    return {ok ? CheckStatus::pass : CheckStatus::fail, detail};
}

bool splitting_degree_check(std::size_t n, const FactorOptions& opts) {
    if (n < 2) throw PolyDomainError("splitting_degree_check: n must be at least 2");
    std::size_t bound = 0;
    if ((n & (n - 1)) == 0) {
        bound = 2 * static_cast<std::size_t>(std::countr_zero(n));
    } else if (((n - 1) & (n - 2)) == 0) {
        bound = 3 * static_cast<std::size_t>(std::countr_zero(n - 1));
    } else {
        throw PolyDomainError("splitting_degree_check: n is neither 2^k nor 2^k + 1");
    }
    const Factorization fz = factor(phi(n), opts);
    for (const auto& f : fz.factors()) {
        if (bound % static_cast<std::size_t>(f.poly.degree()) != 0) return false;
    }
    return true;
}

std::vector<ChainEntry> primitivity_chain_check(std::size_t max_degree, const FactorBudget& budget) {
    std::vector<ChainEntry> out;
    Natural n(2);
    for (;;) {
        ChainEntry e;
        e.n = n;
        if (n > Natural(max_degree)) {
            e.certificate = "degree beyond limit";
            out.push_back(std::move(e));
            break;
        }
        const auto d = static_cast<std::size_t>(n.to_u64());
        const Poly2 f = phi(d);
        e.irreducible = is_irreducible(f);
        if (!e.irreducible) {
            e.status = CheckStatus::fail;
            e.certificate = "reducible";
        } else if (d >= 3 && is_prime_u64(d) && lucas_lehmer(static_cast<unsigned>(d))) {
            // |GF(2^d)^x| = 2^d - 1 is prime, so any element other than 1 generates.
            e.primitive = true;
            e.status = CheckStatus::pass;
            e.certificate = "Lucas-Lehmer(" + std::to_string(d) + ")";
        } else {
            switch (is_primitive(f, budget)) {
                case Primitivity::primitive:
                    e.primitive = true;
                    e.status = CheckStatus::pass;
                    break;
                case Primitivity::not_primitive:
                    e.status = CheckStatus::fail;
                    break;
                case Primitivity::budget_exceeded:
                    e.status = CheckStatus::budget_exceeded;
                    break;
            }
            e.certificate = "order of X against factored 2^" + std::to_string(d) + " - 1";
        }
        out.push_back(std::move(e));
        n = Natural::mersenne(static_cast<unsigned>(d));
    }
    return out;
}

}  // namespace lampfield
