#include <doctest.h>

#include <random>

#include <amz/errors.hpp>
#include <amz/oracle.hpp>
#include <amz/zeta.hpp>

#include "test_util.hpp"

using namespace amz;
using testutil::map;
using testutil::poly;

namespace {

ZetaFunction zeta_of(const RationalMap& f, long bound = 4) {
    const Classification c = classify_parabolic(f, bound);
    std::vector<ParabolicClass> raw;
    for (const ClassRecord& rec : c.records) raw.push_back(rec.cls);
    return assemble_zeta(f.degree(), raw, c.cert);
}

} // namespace

TEST_CASE("classification of the three reference maps") {
    CHECK(classify_parabolic(map("z^2"), 4).records.empty());

    const Classification a = classify_parabolic(map("z + z^2"), 4);
    CHECK(a.classes() == std::vector<ParabolicClass>{{1, 1, 1, 1}});

    const Classification b = classify_parabolic(map("-z + z^2"), 4);
    CHECK(b.classes() == std::vector<ParabolicClass>{{1, 2, 1, 1}});
    CHECK(b.records[0].mu == 3);
    CHECK(!b.conjugated);
}

TEST_CASE("classification across the harder corpus") {
    // Multiplier of exact order 3 at a conjugate pair of fixed points, plus a
    // parabolic fixed point at infinity.
    const Classification a = classify_parabolic(map("(z^3+z^2+z+1)/z^2"), 4);
    CHECK(a.classes() == std::vector<ParabolicClass>{{1, 1, 1, 1}, {1, 3, 1, 2}});

    const Classification b = classify_parabolic(map("(z^3+2*z+1)/(z^2-z+2)"), 4);
    CHECK(b.classes() == std::vector<ParabolicClass>{{1, 1, 1, 1}, {1, 4, 1, 2}});

    // Quadratic-irrational parabolic pair with multiplier -1.
    const Classification c = classify_parabolic(map("(z^3-2*z-2)/(z^2-z-2)"), 4);
    CHECK(c.classes() == std::vector<ParabolicClass>{{1, 1, 1, 1}, {1, 2, 1, 2}});

    // Period-2 parabolic cycle through {1, -1}.
    const Classification d = classify_parabolic(map("z^3 - 2*z"), 4);
    CHECK(d.classes() == std::vector<ParabolicClass>{{2, 1, 2, 2}});

    // Infinity inside a 2-cycle forces the conjugated scan and yields nothing
    // parabolic.
    const Classification e = classify_parabolic(map("1/z^2"), 4);
    CHECK(e.records.empty());
    CHECK(e.conjugated);
}

TEST_CASE("early exit fires when the cycle budget fills") {
    // Two parabolic fixed points (one at infinity) exhaust 2d - 2 = 2.
    const Classification c = classify_parabolic(map("(z^2+z)/(1-z)"), 4);
    CHECK(c.cert.early_exit);
    CHECK(c.cert.period_bound == 1);
    CHECK(c.classes() == std::vector<ParabolicClass>{{1, 1, 1, 1}, {1, 2, 1, 1}});

    const Classification plain = classify_parabolic(map("z^2"), 4);
    CHECK(!plain.cert.early_exit);
    CHECK(plain.cert.period_bound == 4);
}

TEST_CASE("zeta assembly on pinned class lists") {
    const Certification cert{4, false};

    const ZetaFunction empty = assemble_zeta(2, {}, cert);
    CHECK(empty.reduced() == std::pair(Poly(Rat(1)), poly("1 - 3*z + 2*z^2")));

    const ZetaFunction tangent = assemble_zeta(2, {{1, 1, 1, 1}}, cert);
    CHECK(tangent.reduced() == std::pair(Poly(Rat(1)), poly("1 - 2*z")));

    const ZetaFunction flip = assemble_zeta(2, {{1, 2, 1, 1}}, cert);
    CHECK(flip.reduced() == std::pair(poly("1 + z"), poly("1 - 2*z")));

    // Factored form keeps the base factors and one factor per class group.
    const auto factors = flip.factors();
    REQUIRE(factors.size() == 3);
    CHECK(factors[0] == std::pair(poly("1 - 2*z"), -1L));
    CHECK(factors[1] == std::pair(poly("1 - z"), -1L));
    CHECK(factors[2] == std::pair(poly("1 - z^2"), 1L));

    CHECK_THROWS_WITH_AS(assemble_zeta(2, {{2, 1, 1, 1}}, cert),
                         "Galois/cycle accounting violated: point count not divisible by the period",
                         invariant_violation);
}

TEST_CASE("closed-form fixed point counts") {
    CHECK(nk_closed(2, {}, 3) == 9);
    CHECK(nk_closed(2, {{1, 2, 1, 1}}, 1) == 3);
    CHECK(nk_closed(2, {{1, 2, 1, 1}}, 2) == 3);
    CHECK_THROWS_AS(nk_closed(2, {}, 0), std::domain_error);
}

TEST_CASE("log coefficients of the zeta function") {
    const Certification cert{4, false};
    const auto as_rats = [](std::initializer_list<Rat> xs) { return std::vector<Rat>(xs); };

    CHECK(zeta_log_coefficients(assemble_zeta(2, {}, cert), 2) == as_rats({Rat(3), rat(5, 2)}));
    CHECK(zeta_log_coefficients(assemble_zeta(2, {{1, 1, 1, 1}}, cert), 3) ==
          as_rats({Rat(2), Rat(2), rat(8, 3)}));
    CHECK(zeta_log_coefficients(assemble_zeta(2, {{1, 2, 1, 1}}, cert), 2) ==
          as_rats({Rat(3), rat(3, 2)}));
}

TEST_CASE("log coefficients tie the reduced form to the class list") {
    for (const char* expr : {"z^2", "-z+z^2", "(z^2+1)/z", "z^3-2*z", "(z^3+z^2+z+1)/z^2"}) {
        const ZetaFunction zf = zeta_of(map(expr));
        long max_nq = 1;
        for (const ParabolicClass& c : zf.classes) max_nq = std::max(max_nq, c.n * c.q);
        const long kmax = 2 * max_nq * 3;
        const std::vector<Rat> logs = zeta_log_coefficients(zf, kmax);
        for (long k = 1; k <= kmax; ++k) {
            CHECK(Rat(k) * logs[static_cast<size_t>(k - 1)] ==
                  Rat(nk_closed(zf.degree, zf.classes, k)));
        }
    }
}

TEST_CASE("numerator zeros sit on the unit circle") {
    for (const char* expr :
         {"z^2", "z+z^2", "-z+z^2", "(z^2+z)/(1-z)", "z^3-2*z", "(z^3+2*z+1)/(z^2-z+2)"}) {
        CHECK(zeta_zeros_on_unit_circle(zeta_of(map(expr))));
    }
}

TEST_CASE("zeta is a conjugation invariant") {
    std::mt19937_64 rng(8);
    for (const char* expr : {"z+z^2", "-z+z^2", "(z^2+1)/z"}) {
        const ZetaFunction reference = zeta_of(map(expr));
        for (int i = 0; i < 3; ++i) {
            const RationalMap g = conjugate(map(expr), random_mobius(rng));
            CHECK(zeta_equal(reference, zeta_of(g)));
        }
    }
}

TEST_CASE("pipeline report") {
    RunOptions opt;
    opt.verify_k = 4;
    opt.seed = 5;
    const RunReport rep = run_pipeline(map("-z+z^2"), opt);
    CHECK(rep.degree == 2);
    CHECK(rep.zeta.reduced() == std::pair(poly("1 + z"), poly("1 - 2*z")));
    REQUIRE(rep.nk.size() == 4);
    for (const NkRow& row : rep.nk) {
        REQUIRE(row.oracle.has_value());
        CHECK(row.closed == *row.oracle);
    }
    CHECK(rep.selftest_run);
    CHECK(rep.selftest_ok);
    CHECK(rep.verified());

    RunOptions quiet;
    quiet.verify = false;
    quiet.verify_k = 2;
    const RunReport fast = run_pipeline(map("z^2"), quiet);
    CHECK(!fast.nk[0].oracle.has_value());
    CHECK(!fast.selftest_run);
}

TEST_CASE("adaptive jet order finds large multiplicities") {
    // mu = 17 at the origin: far past the starting truncation order, so the
    // doubling path has to engage (and stay under the d^(nq)+1 cap).
    const Classification c = classify_parabolic(map("z + z^17"), 1);
    REQUIRE(c.records.size() == 1);
    CHECK(c.records[0].cls == ParabolicClass{1, 1, 16, 1});
    CHECK(c.records[0].mu == 17);
}
