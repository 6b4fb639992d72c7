#include <doctest.h>

#include <amz/cyclotomic.hpp>
#include <amz/numbers.hpp>
#include <amz/poly.hpp>

#include "test_util.hpp"

using namespace amz;
using testutil::poly;

TEST_CASE("small cyclotomic polynomials") {
    CHECK(cyclotomic(1) == poly("z - 1"));
    CHECK(cyclotomic(2) == poly("z + 1"));
    CHECK(cyclotomic(4) == poly("z^2 + 1"));
    CHECK(cyclotomic(6) == poly("z^2 - z + 1"));
    CHECK(cyclotomic(105).degree() == euler_phi(105));
    CHECK_THROWS_AS(cyclotomic(0), std::domain_error);
}

TEST_CASE("product over divisors gives z^m - 1") {
    for (long m = 1; m <= 30; ++m) {
        Poly prod(Rat(1));
        for (long q : divisors(m)) prod = prod * cyclotomic(q);
        CHECK(prod == Poly::monomial(static_cast<int>(m)) - Poly(Rat(1)));
    }
}

TEST_CASE("totient and divisors") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(97) == 96);
    CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
    CHECK(proper_divisors(9) == std::vector<long>{1, 3});
}
