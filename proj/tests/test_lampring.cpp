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

#include "lampfield/lampring.hpp"
#include "oracles.hpp"

using namespace lampfield;

TEST_CASE("RingElem reduces and multiplies by X") {
    CHECK(mul_by_x(RingElem(2, Poly2::x())).rep() == parse_poly("X + 1"));
    CHECK(mul_by_x(RingElem(7, Poly2())).rep().is_zero());
    RingElem e = RingElem::one(4);
    for (int i = 0; i < 15; ++i) e = mul_by_x(e);
    CHECK(e == RingElem::one(4));
    CHECK(RingElem(3, parse_poly("X^3")).rep() == parse_poly("X + 1"));
    CHECK(RingElem::all_lit(4).rep() == parse_poly("X^3 + X^2 + X + 1"));

    SplitMix64 rng(12);
    for (int i = 0; i < 500; ++i) {
        const unsigned n = 2 + static_cast<unsigned>(rng.below(60));
        const std::uint64_t v = rng.next() & ((std::uint64_t{1} << n) - 1);
        CHECK(mul_by_x(RingElem(n, Poly2::from_u64(v))).rep() == Poly2::from_u64(oracle::ring_mulx(v, n)));
    }
}

TEST_CASE("order_of_x") {
    CHECK(order_of_x(phi(3)) == 7);
    CHECK(order_of_x(phi(9)) == 73);
    CHECK(order_of_x(parse_poly("X + 1")) == 1);
    CHECK(order_of_x(parse_poly("X^2 + X + 1")) == 3);
    CHECK(order_of_x(phi(127)) == Natural::mersenne(127));
    CHECK_THROWS_AS(order_of_x(Poly2::x()), PolyDomainError);
}

TEST_CASE("t_of_n against brute-force order of X for n <= 24") {
    for (unsigned n = 2; n <= 24; ++n) {
        CAPTURE(n);
        CHECK(t_of_n(n) == oracle::order_of_x_brute(n, std::uint64_t{1} << n));
    }
}

TEST_CASE("t_of_n and u_of_n examples") {
    CHECK(t_of_n(9) == 73);
    CHECK(t_of_n(30) == 10845877);
    CHECK(t_of_n(50) == Natural::parse("272662240182303"));
    CHECK(u_of_n(9) / t_of_n(9) == 7);
    CHECK(u_of_n(5) == 21);
    CHECK(u_of_n(5) / t_of_n(5) == 1);
    CHECK(u_of_n(30) / t_of_n(30) == 99);
}

TEST_CASE("t divides u divides units_order") {
    for (unsigned n = 2; n <= 60; ++n) {
        CAPTURE(n);
        const auto s = summarize_ring(n);
        CHECK((s.u % s.t).is_zero());
        CHECK((units_order(n) % s.u).is_zero());
        CHECK(s.factors.product() == phi(n));
    }
}

TEST_CASE("units_order") {
    CHECK(units_order(5) == 21);
    CHECK(units_order(2) == 3);
    CHECK(units_order(9) == 511);
}

TEST_CASE("closed_form_t") {
    CHECK(closed_form_t(8) == Natural(63));
    CHECK(closed_form_t(17) == Natural(273));
    CHECK_FALSE(closed_form_t(10).has_value());
    for (unsigned k = 1; k <= 6; ++k) {
        const std::size_t a = std::size_t{1} << k, b = a + 1;
        CHECK(closed_form_t(a) == t_of_n(a));
        CHECK(closed_form_t(b) == t_of_n(b));
    }
}

TEST_CASE("orbit_profile against brute force") {
    for (unsigned n = 2; n <= 16; ++n) {
        CAPTURE(n);
        const auto p = orbit_profile(n);
        REQUIRE(p.has_value());
        CHECK(p->sizes == oracle::orbit_sizes(n));
    }
    CHECK(orbit_profile(5)->to_string() == "1×1, 3×1, 7×1, 21×1");
    CHECK(orbit_profile(2)->to_string() == "1×1, 3×1");
    CHECK(orbit_profile(9)->sizes == std::map<std::uint64_t, std::uint64_t>{{73, 7}});
    CHECK(orbit_profile(9)->nonzero_orbit_count() == 7);
    CHECK_FALSE(orbit_profile(20, 1 << 10).has_value());
    CHECK_FALSE(orbit_profile(41).has_value());
}

TEST_CASE("lamp automaton") {
    LampState s({true, true}, 0);
    s.advance();
    CHECK(s.lamps() == std::vector<bool>{false, true});
    CHECK(s.cursor() == 1);

    LampState off({true, false, true}, 2);
    const auto before = off.lamps();
    off.advance();
    CHECK(off.lamps() == before);
    CHECK(off.cursor() == 0);

    LampState two = LampState::all_on(2);
    for (int i = 0; i < 3; ++i) two = lamp_step(two);
    CHECK(two.all_lit());

    CHECK(lamp_period(4, 1000) == Natural(15));
    CHECK(lamp_period(3, 1000) == Natural(7));
    CHECK(lamp_period(10, 10000) == Natural(889));
    CHECK_FALSE(lamp_period(10, 888).has_value());
    CHECK_THROWS(LampState({true}, 0));
    CHECK_THROWS(LampState({true, true}, 2));
}

TEST_CASE("lamp_period against direct simulation and t(n)") {
    for (unsigned n = 2; n <= 16; ++n) {
        CAPTURE(n);
        const auto p = lamp_period(n, 1'000'000);
        REQUIRE(p.has_value());
        CHECK(*p == oracle::lamp_period_brute(n, 1'000'000));
        CHECK(*p == t_of_n(n));
    }
}

TEST_CASE("RingCatalog memoizes and reports budget exhaustion") {
    RingCatalog cat;
    CHECK(cat.t(28) == 17895697);
    CHECK(cat.summary(28).u / cat.t(28) == 15);

    OrderOptions starved;
    starved.budget.rho_iterations = 0;
    RingCatalog tight(starved);
    // Phi_9 is irreducible of degree 9 and 2^9 - 1 = 7 * 73 falls to trial division.
    CHECK(tight.t(9) == 73);
    // The degree-73 factors of Phi_511 need 2^73 - 1 = 439 * 2298041 * 9361973132609,
    // whose last two primes are beyond trial division.
    try {
        (void)tight.summary(511);
        FAIL("expected FactoringBudgetExceeded");
    } catch (const FactoringBudgetExceeded& e) {
        CHECK(e.degree() == 73);
        CHECK(e.blocking() == Natural::mersenne(73));
    }
    CHECK(RingCatalog().t(511) == Natural::mersenne(73));
}
