#include <doctest.h>

#include <random>

#include <amz/poly.hpp>

#include "test_util.hpp"

using namespace amz;
using testutil::poly;

TEST_CASE("gcd on pinned inputs") {
    CHECK(poly_gcd(poly("z^2 - 1"), poly("z^2 - 2*z + 1")) == poly("z - 1"));
    CHECK(poly_gcd(poly("z^3"), poly("z")) == poly("z"));
    // Per_2 and Per_1 fixed-point polynomials of -z + z^2 share the whole
    // period-1 locus: gcd(z^4 - 2z^3, z^2 - 2z) = z^2 - 2z (both factor
    // through z(z - 2)).
    CHECK(poly_gcd(poly("z^4 - 2*z^3"), poly("z^2 - 2*z")) == poly("z^2 - 2*z"));

    CHECK(poly_gcd(Poly(), poly("3*z + 3")) == poly("z + 1"));
    CHECK_THROWS_WITH_AS(poly_gcd(Poly(), Poly()), "gcd of zero pair", std::domain_error);

    // Non-monic and rational-coefficient inputs still come back monic.
    CHECK(poly_gcd(poly("(2*z + 2)*(z - 5)"), poly("(z + 1)*(z - 5)/3")) == poly("(z+1)*(z-5)"));
}

TEST_CASE("squarefree part") {
    CHECK(squarefree_part(poly("z^3")) == poly("z"));
    CHECK(squarefree_part(poly("z^2 - 2*z + 1")) == poly("z - 1"));
    CHECK(squarefree_part(poly("z^4 - 2*z^3")) == poly("z^2 - 2*z"));
    CHECK(squarefree_part(poly("7")) == Poly(Rat(1)));
    CHECK_THROWS_AS(squarefree_part(Poly()), std::domain_error);
}

TEST_CASE("the two gcd engines agree and divide exactly") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 150; ++i) {
        const Poly g = testutil::random_nonzero_poly(rng, 4);
        const Poly a = g * testutil::random_nonzero_poly(rng, 5);
        const Poly b = g * testutil::random_nonzero_poly(rng, 5);
        const Poly via_modular = poly_gcd_modular(a, b);
        const Poly via_prs = poly_gcd_subresultant(a, b);
        CHECK(via_modular == via_prs);

        // The planted factor divides the gcd, and the gcd divides both inputs.
        CHECK(Poly::divmod(via_modular, g.monic()).second.is_zero());
        CHECK(Poly::divmod(a, via_modular).second.is_zero());
        CHECK(Poly::divmod(b, via_modular).second.is_zero());
        CHECK(via_modular.is_monic());
    }
}

TEST_CASE("squarefree part is coprime with its derivative") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        const Poly a = testutil::random_nonzero_poly(rng, 6);
        if (a.is_constant()) continue;
        const Poly sf = squarefree_part(a);
        if (sf.is_constant()) continue;
        CHECK(poly_gcd(sf, sf.derivative()).is_one());
        CHECK(Poly::divmod(a, sf).second.is_zero());
    }
}
