#include <doctest.h>

#include <random>

#include <amz/algebra.hpp>
#include <amz/errors.hpp>

#include "test_util.hpp"

using namespace amz;
using testutil::poly;

TEST_CASE("zero tests split exactly along the gcd") {
    const QuotientAlgebra a(poly("z^2 - 2*z"));

    CHECK(elem_is_zero(AlgebraElement(a, Poly())).kind == ZeroKind::ZeroEverywhere);
    CHECK(elem_is_zero(AlgebraElement::constant(a, Rat(1))).kind == ZeroKind::NonzeroEverywhere);

    const ZeroTest zt = elem_is_zero(AlgebraElement::generator(a));
    REQUIRE(zt.kind == ZeroKind::Split);
    CHECK(zt.zero_part->modulus() == poly("z"));
    CHECK(zt.nonzero_part->modulus() == poly("z - 2"));
    // Branch moduli multiply back to the original modulus.
    CHECK(zt.zero_part->modulus() * zt.nonzero_part->modulus() == a.modulus());
}

TEST_CASE("inversion with and without splitting") {
    const QuotientAlgebra line(poly("z - 3"));
    const InvertOutcome two = elem_invert(AlgebraElement::constant(line, Rat(2)));
    REQUIRE(two.inverses.size() == 1);
    CHECK(two.inverses[0].value.rep() == Poly(rat(1, 2)));
    CHECK(!two.zero_part);

    const QuotientAlgebra sqrt2(poly("z^2 - 2"));
    const InvertOutcome root = elem_invert(AlgebraElement::generator(sqrt2));
    REQUIRE(root.inverses.size() == 1);
    CHECK(root.inverses[0].value.rep() == poly("z/2"));

    const QuotientAlgebra mixed(poly("z^2 - 2*z"));
    const InvertOutcome split = elem_invert(AlgebraElement::generator(mixed));
    REQUIRE(split.inverses.size() == 1);
    CHECK(split.inverses[0].algebra.modulus() == poly("z - 2"));
    CHECK(split.inverses[0].value.rep() == Poly(rat(1, 2)));
    REQUIRE(split.zero_part);
    CHECK(split.zero_part->modulus() == poly("z"));

    CHECK_THROWS_WITH_AS(elem_invert(AlgebraElement::constant(mixed, Rat(0))),
                         "division by zero in algebra", std::domain_error);
}

TEST_CASE("algebra construction rejects bad moduli") {
    CHECK_THROWS_AS(QuotientAlgebra(poly("z^2 - 2*z + 1")), std::domain_error); // not squarefree
    CHECK_THROWS_AS(QuotientAlgebra(Poly(Rat(3))), std::domain_error);
    CHECK(QuotientAlgebra(poly("3*z - 6")).modulus() == poly("z - 2")); // stored monic
}

TEST_CASE("dynamic evaluation properties on random data") {
    std::mt19937_64 rng(5150);
    int splits_seen = 0;
    for (int i = 0; i < 400; ++i) {
        const Poly h = testutil::random_squarefree(rng, 6);
        const QuotientAlgebra a(h);
        const AlgebraElement x(a, testutil::random_poly(rng, 5));
        const AlgebraElement y(a, testutil::random_poly(rng, 5));

        //

        const ZeroTest zt = elem_is_zero(x);
        if (zt.kind == ZeroKind::Split) {
            ++splits_seen;
            CHECK(zt.zero_part->modulus() * zt.nonzero_part->modulus() == a.modulus());
            CHECK(poly_gcd(zt.zero_part->modulus(), zt.nonzero_part->modulus()).is_one());
            // Splitting preserves squarefreeness: construction re-checks it.
            CHECK_NOTHROW(QuotientAlgebra(zt.zero_part->modulus()));
            CHECK_NOTHROW(QuotientAlgebra(zt.nonzero_part->modulus()));
            // Homomorphism consistency: x + y and x * y computed upstairs
            // agree with the images computed downstairs.
            for (const QuotientAlgebra& branch : {*zt.zero_part, *zt.nonzero_part}) {
                CHECK((x + y).reduced_to(branch) == x.reduced_to(branch) + y.reduced_to(branch));
                CHECK((x * y).reduced_to(branch) == x.reduced_to(branch) * y.reduced_to(branch));
            }
        }
        if (!x.rep_is_zero() && zt.kind != ZeroKind::ZeroEverywhere) {
            const InvertOutcome inv = elem_invert(x);
            for (const auto& br : inv.inverses) {
                const AlgebraElement back = x.reduced_to(br.algebra) * br.value;
                CHECK(back == AlgebraElement::constant(br.algebra, Rat(1)));
            }
        }
    }
    CHECK(splits_seen > 5); // the generator must actually exercise splits
}

TEST_CASE("characteristic polynomial of multiplication") {
    // The generator's characteristic polynomial is the modulus itself.
    const Poly h = poly("z^3 - 2*z + 5");
    CHECK(char_poly(AlgebraElement::generator(QuotientAlgebra(h))) == h);

    // Constants have characteristic polynomial (x - c)^deg.
    const QuotientAlgebra a(poly("z^2 - 2"));
    CHECK(char_poly(AlgebraElement::constant(a, Rat(3))) == poly("(z - 3)^2"));

    // z^2 on Q[z]/(z^2 - 2) multiplies by 2 at both roots.
    CHECK(char_poly(AlgebraElement(a, poly("z^2"))) == poly("(z - 2)^2"));
}
