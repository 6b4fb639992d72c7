#include <doctest.h>

#include <random>

#include <amz/errors.hpp>
#include <amz/rational_map.hpp>
#include <amz/zeta.hpp>

#include "test_util.hpp"

using namespace amz;
using testutil::map;
using testutil::poly;

TEST_CASE("normalization cancels common factors and pins the scaling") {
    const RationalMap f(poly("z^3 - z"), poly("z - 1"));
    CHECK(f.numer() == poly("z^2 + z"));
    CHECK(f.denom() == Poly(Rat(1)));
    CHECK(f.degree() == 2);

    CHECK(map("z^2").degree() == 2);
    CHECK_THROWS_AS(map("z"), std::domain_error);
    CHECK_THROWS_AS(map("5/7"), std::domain_error);
    CHECK_THROWS_AS(RationalMap(poly("z^2"), Poly()), std::domain_error);

    // deg denom >= deg numer: denominator monic.
    const RationalMap g(poly("2*z"), poly("3*z^2 + 3"));
    CHECK(g.denom().is_monic());
}

TEST_CASE("iteration") {
    CHECK(iterate(map("z^2"), 3) == map("z^8"));
    CHECK(iterate(map("-z + z^2"), 2) == map("z - 2*z^3 + z^4"));

    const RationalMap f2 = iterate(map("(z^2+1)/z"), 2);
    CHECK(f2.degree() == 4);
    CHECK(f2 == map("(z^4 + 3*z^2 + 1)/(z^3 + z)"));

    CHECK_THROWS_WITH_AS(iterate(map("z^2"), 15, 20000),
                         "period bound too large: iterate degree exceeds the configured cap",
                         std::domain_error);
}

TEST_CASE("fixed-point polynomials of iterates") {
    const PerPoly p1 = per_poly(map("z^2"), 1);
    CHECK(p1.finite == poly("z^2 - z"));
    CHECK(p1.infinity_fixed);
    CHECK(p1.infinity_multiplicity == 1);

    const PerPoly p2 = per_poly(map("-z + z^2"), 2);
    CHECK(p2.finite == poly("z^4 - 2*z^3"));
    CHECK(p2.infinity_fixed);
    CHECK(p2.infinity_multiplicity == 1);

    const PerPoly p3 = per_poly(map("1/z^2"), 1);
    CHECK(p3.finite == poly("1 - z^3"));
    CHECK(!p3.infinity_fixed);
    CHECK(p3.infinity_multiplicity == 0);
}

TEST_CASE("minimal period polynomials") {
    CHECK(minimal_period_poly(map("z^2"), 1) == poly("z^2 - z"));
    // The period-2 candidates of -z + z^2 collapse onto the parabolic fixed
    // point; nothing has true minimal period 2.
    CHECK(minimal_period_poly(map("-z + z^2"), 2) == Poly(Rat(1)));
    CHECK(minimal_period_poly(map("z^2"), 2) == poly("z^2 + z + 1"));
}

TEST_CASE("degree accounting for iterates (finite plus infinity)") {
    for (const char* expr : {"z^2", "-z+z^2", "1/z^2", "(z^2+1)/z", "z^3-2*z"}) {
        const RationalMap f = map(expr);
        for (long k = 1; k <= 4; ++k) {
            const PerPoly pp = per_poly(f, k);
            long dk = 1;
            for (long i = 0; i < k; ++i) dk *= f.degree();
            CHECK(pp.finite.degree() + pp.infinity_multiplicity == dk + 1);
            CHECK((pp.infinity_multiplicity > 0) == pp.infinity_fixed);
        }
    }
}

TEST_CASE("minimal-period factors rebuild the squarefree fixed-point locus") {
    // Valid whenever infinity is not periodic; 2z/(1+z^2) sends infinity to
    // the fixed point 0 without being periodic itself.
    const RationalMap f = map("2*z/(1+z^2)");
    for (long m = 1; m <= 4; ++m) {
        Poly prod(Rat(1));
        for (long n : divisors(m)) prod = prod * minimal_period_poly(f, n);
        CHECK(prod == squarefree_part(per_poly(f, m).finite));
    }
}

TEST_CASE("Mobius conjugation") {
    // phi = z + 1: phi^{-1} o f o phi for f = z^2 is (z+1)^2 - 1.
    const Mobius shift(Rat(1), Rat(1), Rat(0), Rat(1));
    CHECK(conjugate(map("z^2"), shift) == map("z^2 + 2*z"));
    CHECK(conjugate(map("(z^2+1)/z"), Mobius::identity()) == map("(z^2+1)/z"));
    CHECK_THROWS_AS(Mobius(Rat(1), Rat(2), Rat(2), Rat(4)), std::domain_error);

    std::mt19937_64 rng(31337);
    for (int i = 0; i < 5; ++i) {
        const Mobius phi = random_mobius(rng);
        for (const char* expr : {"z^2 - 1", "(z^3+2*z+1)/(z^2-z+2)"}) {
            CHECK(conjugate(map(expr), phi).degree() == map(expr).degree());
        }
    }
}

TEST_CASE("multipliers along cycles") {
    const QuotientAlgebra origin(poly("z"));
    const CycleMultiplier m1 = multiplier_along_cycle(map("-z + z^2"), origin, 1);
    REQUIRE(m1.multipliers.size() == 1);
    CHECK(m1.multipliers[0].value.rep() == Poly(Rat(-1)));

    const CycleMultiplier m2 = multiplier_along_cycle(map("z^2"), QuotientAlgebra(poly("z - 1")), 1);
    CHECK(m2.multipliers[0].value.rep() == Poly(Rat(2)));

    // Both period-2 points of z^2 (primitive cube roots of 1) have multiplier
    // 4z^3 = 4.
    const CycleMultiplier m3 =
        multiplier_along_cycle(map("z^2"), QuotientAlgebra(poly("z^2 + z + 1")), 2);
    REQUIRE(m3.multipliers.size() == 1);
    CHECK(m3.multipliers[0].value.rep() == Poly(Rat(4)));
    CHECK(m3.needs_conjugation.empty());
}

TEST_CASE("orbit through infinity is reported, not computed") {
    // 0 <-> infinity is a 2-cycle of 1/z^2; the finite half of the cycle
    // cannot be tracked without a pole.
    const CycleMultiplier m = multiplier_along_cycle(map("1/z^2"), QuotientAlgebra(poly("z")), 2);
    CHECK(m.multipliers.empty());
    REQUIRE(m.needs_conjugation.size() == 1);
    CHECK(m.needs_conjugation[0].modulus() == poly("z"));
}

TEST_CASE("multiplier is constant along the cycle") {
    // {1, -1} is a 2-cycle of z^3 - 2z. The multiplier computed from either
    // point generates the same values: equal characteristic polynomials.
    const RationalMap f = map("z^3 - 2*z");
    const AlgebraElement from_one =
        multiplier_along_cycle(f, QuotientAlgebra(poly("z - 1")), 2).multipliers[0].value;
    const AlgebraElement from_minus_one =
        multiplier_along_cycle(f, QuotientAlgebra(poly("z + 1")), 2).multipliers[0].value;
    CHECK(char_poly(from_one) == char_poly(from_minus_one));

    // Same statement on a cycle with irrational points: the 2-cycle of z^2 - 1
    // through the image polynomial of its defining modulus.
    const RationalMap g = map("z^2");
    const Poly h = minimal_period_poly(g, 2); // z^2 + z + 1
    const AlgebraElement lam = multiplier_along_cycle(g, QuotientAlgebra(h), 2).multipliers[0].value;
    // Image points g(roots of h) satisfy the characteristic polynomial of the
    // evaluated map; the multiplier computed there matches.
    const AlgebraElement image = eval_poly(g.numer(), AlgebraElement::generator(QuotientAlgebra(h)));
    const Poly h_image = squarefree_part(char_poly(image));
    const AlgebraElement lam_image =
        multiplier_along_cycle(g, QuotientAlgebra(h_image), 2).multipliers[0].value;
    CHECK(char_poly(lam) == char_poly(lam_image));
}
