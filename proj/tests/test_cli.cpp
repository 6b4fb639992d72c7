#include <doctest.h>

#include <amz/zeta.hpp>

#include <expr_parser.hpp>
#include <report_json.hpp>

#include "test_util.hpp"

using namespace amz;
using cli::parse_error;
using cli::parse_map;
using testutil::poly;

TEST_CASE("expression parsing") {
    CHECK(parse_map("z^2").numer() == poly("z^2"));

    const RationalMap f = parse_map("(z^2+1)/(2*z)");
    CHECK(f.numer() == poly("z^2 + 1")); // numerator monic under the canonical scaling
    CHECK(f.denom() == poly("2*z"));

    const RationalMap g = parse_map("-z + z^2");
    CHECK(g.numer() == poly("z^2 - z"));
    CHECK(g.degree() == 2);

    // Exact fraction arithmetic inside expressions: z^2/2 + 1/3 = (3z^2+2)/6,
    // renormalized to a monic numerator.
    const RationalMap h = parse_map("z^2/2 + 1/3");
    CHECK(h.numer() == poly("z^2 + 2/3"));
    CHECK(h.denom() == Poly(Rat(2)));
}

TEST_CASE("parse errors carry a position") {
    auto position_of = [](const char* text) {
        try {
            parse_map(text);
        } catch (const parse_error& e) {
            return static_cast<long>(e.position());
        }
        return -1L;
    };
    CHECK(position_of("z^2 + %") == 6);
    CHECK(position_of("(z^2") == 4);
    CHECK(position_of("z^z") == 2);
    CHECK(position_of("z^2 + ") == 6);
    CHECK(position_of("z^2 z") == 4); // trailing input
    CHECK_THROWS_AS(parse_map("1/(z-z)"), parse_error);   // zero denominator
    CHECK_THROWS_AS(parse_map("z"), std::domain_error);   // degree below 2
}

TEST_CASE("json reports round-trip byte for byte") {
    RunOptions opt;
    opt.verify_k = 3;
    for (const char* expr : {"-z+z^2", "(z^2+z)/(1-z)", "z^3-2*z"}) {
        const RunReport rep = run_pipeline(parse_map(expr), opt);
        const std::string text = cli::report_to_json(rep);
        const RunReport back = cli::report_from_json(text);
        CHECK(cli::report_to_json(back) == text);
    }

    RunOptions quiet;
    quiet.verify = false;
    quiet.verify_k = 2;
    const std::string text = cli::report_to_json(run_pipeline(parse_map("z^2"), quiet));
    CHECK(text.find("\"oracle\": null") != std::string::npos);
    CHECK(cli::report_to_json(cli::report_from_json(text)) == text);
}

TEST_CASE("text and json reports carry the same numbers") {
    RunOptions opt;
    opt.verify_k = 4;
    const RunReport rep = run_pipeline(parse_map("-z+z^2"), opt);
    const std::string text = cli::report_to_text(rep);
    const RunReport back = cli::report_from_json(cli::report_to_json(rep));

    CHECK(back.degree == rep.degree);
    CHECK(back.zeta.classes == rep.zeta.classes);
    CHECK(back.zeta.reduced() == rep.zeta.reduced());
    REQUIRE(back.nk.size() == rep.nk.size());
    for (size_t i = 0; i < rep.nk.size(); ++i) {
        CHECK(back.nk[i].closed == rep.nk[i].closed);
        CHECK(back.nk[i].oracle == rep.nk[i].oracle);
    }
    // The text form mentions every closed N_k value.
    for (const NkRow& row : rep.nk)
        CHECK(text.find("k=" + std::to_string(row.k) + ": " + row.closed.get_str()) != std::string::npos);
}
