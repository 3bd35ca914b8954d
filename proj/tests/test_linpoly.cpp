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

#include <doctest.h>

#include "lampfield/factor.hpp"
#include "lampfield/linpoly.hpp"
#include "oracles.hpp"

using namespace lampfield;

namespace {

Poly2 P(const char* s) { return parse_poly(s); }

bool only_power_of_two_exponents(const Poly2& g) {
    for (std::size_t e : g.exponents())
        if (e == 0 || (e & (e - 1))) return false;
    return true;
}

}  // namespace

TEST_CASE("hat") {
    CHECK(hat(P("X^2 + X + 1")).expanded == P("X^4 + X^2 + X"));
    CHECK(hat(phi(2)).expanded == Poly2::x() * P("X^3 + X + 1"));
    CHECK(hat(Poly2::one()).expanded == Poly2::x());
    CHECK(hat(Poly2()).expanded.is_zero());
    for (std::size_t n = 2; n <= 16; ++n) CHECK(hat(phi(n)).expanded == Poly2::x() * phi((std::size_t{1} << n) - 1));
    CHECK_THROWS_AS(hat(Poly2::monomial(kMaxHatSourceDegree + 1)), std::length_error);

    SplitMix64 rng(13);
    for (int i = 0; i < 100; ++i) {
        const Poly2 f = oracle::random_poly_upto(rng, 16);
        const Poly2 h = hat(f).expanded;
        CHECK(only_power_of_two_exponents(h));
        for (std::size_t j = 0; j <= 16; ++j) CHECK(h.coeff(std::size_t{1} << j) == f.coeff(j));
        if (!f.is_zero()) CHECK(h.degree() == (std::int64_t{1} << f.degree()));
    }
}

TEST_CASE("unhat") {
    CHECK(unhat(P("X^4 + X^2 + X")) == P("X^2 + X + 1"));
    CHECK_FALSE(unhat(P("X^3")).has_value());
    CHECK_FALSE(unhat(P("X^2 + 1")).has_value());
    SplitMix64 rng(14);
    for (int i = 0; i < 100; ++i) {
        const Poly2 f = oracle::random_poly_upto(rng, 20);
        CHECK(unhat(hat(f).expanded) == f);
    }
}

TEST_CASE("hat_compose") {
    CHECK(hat_compose(Poly2::x(), Poly2::x()) == P("X^4"));
    CHECK(hat_compose(P("X^2 + X + 1"), P("X^3 + X^2 + 1")) == Poly2::x() * phi(31));
    CHECK(hat_compose(phi(7), Poly2::one()) == hat(phi(7)).expanded);
}

TEST_CASE("hat is a homomorphism: composition against direct substitution") {
    // Degrees stay <= 16 each with a combined cap so the dense oracle fits in memory.
    SplitMix64 rng(15);
    for (int i = 0; i < 100; ++i) {
        const long df = static_cast<long>(rng.below(17));
        const long dg = static_cast<long>(rng.below(static_cast<std::uint64_t>(std::min<long>(16, 24 - df) + 1)));
        const Poly2 f = oracle::random_poly(rng, df), g = oracle::random_poly(rng, dg);
        const auto want =
            oracle::compose_linearized(oracle::from(hat(f).expanded), oracle::from(hat(g).expanded));
        CHECK(oracle::from(hat_compose(f, g)) == want);
        CHECK(hat(f + g).expanded == hat(f).expanded + hat(g).expanded);
    }
    // Small cases through full Horner substitution, independent of the linear shortcut.
    for (int i = 0; i < 30; ++i) {
        const Poly2 f = oracle::random_poly_upto(rng, 4), g = oracle::random_poly_upto(rng, 4);
        CHECK(oracle::from(hat_compose(f, g)) ==
              oracle::compose(oracle::from(hat(f).expanded), oracle::from(hat(g).expanded)));
    }
}

TEST_CASE("bezout_hat_check") {
    CHECK(bezout_hat_check(P("X^2 + X + 1"), P("X^3 + X^2 + 1")));
    CHECK(bezout_hat_check(Poly2::x(), P("X + 1")));
    CHECK_THROWS_AS(bezout_hat_check(phi(2), phi(5)), PolyDomainError);

    SplitMix64 rng(16);
    int pairs = 0;
    while (pairs < 100) {
        const long df = 1 + static_cast<long>(rng.below(16));
        const long dg = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(std::min<long>(16, 24 - df))));
        const Poly2 f = oracle::random_poly(rng, df), g = oracle::random_poly(rng, dg);
        if (!gcd(f, g).is_one()) continue;
        ++pairs;
        CHECK(bezout_hat_check(f, g));
        // Same identity evaluated by substitution.
        const auto e = ext_gcd(f, g);
        const auto lhs = oracle::add(
            oracle::compose_linearized(oracle::from(hat(e.alpha).expanded), oracle::from(hat(f).expanded)),
            oracle::compose_linearized(oracle::from(hat(e.beta).expanded), oracle::from(hat(g).expanded)));
        CHECK(lhs == oracle::from(Poly2::x()));
    }
}

TEST_CASE("tensor_field_shape") {
    CHECK(tensor_field_shape(3, 7) == FieldShape{1, 21});
    CHECK(tensor_field_shape(5, 5) == FieldShape{5, 5});
    CHECK(tensor_field_shape(2, 4) == FieldShape{2, 4});
    CHECK_THROWS_AS(tensor_field_shape(0, 4), PolyDomainError);
    for (std::size_t a = 1; a <= 6; ++a)
        for (std::size_t b = 1; b <= 6; ++b) {
            const auto s = tensor_field_shape(a, b);
            CHECK(s.count * s.degree == a * b);
            CHECK(s.degree % a == 0);
            CHECK(s.degree % b == 0);
        }
}

TEST_CASE("cor_tensor_check") {
    RingCatalog cat;
    for (std::size_t n = 2; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(cor_tensor_check(n, cat).status == CheckStatus::pass);
    }
    // n = 5: the two hat factors divide Phi_31.
    CHECK(rem(phi(31), P("X^3 + X + 1")).is_zero());
    CHECK(rem(phi(31), P("X^7 + X^3 + 1")).is_zero());
    CHECK(quo(hat(P("X^3 + X^2 + 1")).expanded, Poly2::x()) == P("X^7 + X^3 + 1"));
    // n = 8 has r = 2, so Phi_255 needs at least 3 factors.
    CHECK(factor(phi(255)).count_with_multiplicity() >= 3);
    VerifyLimits tight;
    tight.max_ddf_degree = 100;
    CHECK(cor_tensor_check(8, cat, tight).status == CheckStatus::budget_exceeded);
}

TEST_CASE("conj_equal_check") {
    RingCatalog cat;
    const auto v2 = conj_equal_check(2, cat);
    CHECK(v2.kind == ConjVerdict::Kind::verified);
    CHECK(v2.t_big == Natural(7));
    const auto v4 = conj_equal_check(4, cat);
    CHECK(v4.kind == ConjVerdict::Kind::verified);
    CHECK(v4.t_big == Natural(32767));
    const auto v9 = conj_equal_check(9, cat);
    CHECK(v9.kind == ConjVerdict::Kind::verified);
    CHECK(v9.t_big == Natural::mersenne(73));

    const auto v10 = conj_equal_check(10, cat);
    CHECK(v10.kind == ConjVerdict::Kind::divisibility_only);
    CHECK(v10.divides);

    VerifyLimits lim;
    lim.max_equality_t = 10;
    CHECK(conj_equal_check(4, cat, lim).kind == ConjVerdict::Kind::divisibility_only);
}

TEST_CASE("orbit_split_check") {
    for (std::size_t n = 2; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(orbit_split_check(n).status == CheckStatus::pass);
    }
    VerifyLimits lim;
    lim.orbit_cap_bits = 64;
    CHECK(orbit_split_check(9, lim).status == CheckStatus::budget_exceeded);
}

TEST_CASE("splitting_degree_check") {
    CHECK(splitting_degree_check(16));
    CHECK(splitting_degree_check(17));
    CHECK(splitting_degree_check(32));
    for (std::size_t k = 1; k <= 7; ++k) {
        CHECK(splitting_degree_check(std::size_t{1} << k));
        CHECK(splitting_degree_check((std::size_t{1} << k) + 1));
    }
    CHECK_THROWS_AS(splitting_degree_check(10), PolyDomainError);
}

TEST_CASE("primitivity_chain_check") {
    const auto chain = primitivity_chain_check(127);
    REQUIRE(chain.size() == 5);
    const unsigned expect[] = {2, 3, 7, 127};
    for (int i = 0; i < 4; ++i) {
        CAPTURE(i);
        CHECK(chain[i].n == expect[i]);
        CHECK(chain[i].status == CheckStatus::pass);
        CHECK(chain[i].irreducible);
        CHECK(chain[i].primitive);
    }
    CHECK(chain[3].certificate.find("Lucas-Lehmer") != std::string::npos);
    CHECK(chain[4].n == Natural::mersenne(127));
    CHECK(chain[4].status == CheckStatus::not_attempted);
}
