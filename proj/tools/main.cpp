#include <algorithm>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <amz/errors.hpp>
#include <amz/zeta.hpp>

#include "expr_parser.hpp"
#include "report_json.hpp"

// Exit codes: 0 success with a certified-complete class list (early exit),
// 3 success but classes certified only up to the period bound, 1 usage or
// input error, 2 internal invariant violation.

namespace {

int fail(const std::string& tag, const std::string& message, int code) {
    std::cerr << "amz: error [" << tag << "] " << message << "\n";
    return code;
}

// Map expressions legitimately start with '-' ("-z + z^2"). Insert the "--"
// separator in front of the first argument that is not one of our flags so
// the option parser leaves it alone.
std::vector<std::string> with_positional_guard(int argc, char** argv) {
    const std::vector<std::string> value_flags = {"--period-bound", "--verify-k", "--seed"};
    const std::vector<std::string> plain_flags = {"--json", "--no-verify", "--help", "-h"};
    std::vector<std::string> out;
    bool guarded = false;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (guarded) {
            out.push_back(arg);
            continue;
        }
        if (arg == "--") {
            guarded = true;
            out.push_back(arg);
            continue;
        }
        if (arg.empty() || arg[0] != '-') {
            out.push_back(arg);
            continue;
        }
        bool handled = false;
        for (const auto& f : plain_flags) {
            if (arg == f) {
                out.push_back(arg);
                handled = true;
                break;
            }
        }
        for (const auto& f : value_flags) {
            if (handled) break;
            if (arg == f) {
                out.push_back(arg);
                if (i + 1 < argc) out.push_back(argv[++i]);
                handled = true;
            } else if (arg.rfind(f + "=", 0) == 0) {
                out.push_back(arg);
                handled = true;
            }
        }
        if (!handled) {
            out.push_back("--");
            out.push_back(arg);
            guarded = true;
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Artin-Mazur zeta functions of rational self-maps of P^1 over Q"};
    app.footer("Example: amz \"-z + z^2\" --period-bound 4 --json");

    std::string expr;
    amz::RunOptions opt;
    bool json = false;
    bool no_verify = false;
    app.add_option("expr", expr, "rational map in z, e.g. \"(z^2+1)/(2*z)\"")->required();
    app.add_option("--period-bound", opt.period_bound, "largest minimal period scanned")
        ->default_val(4)
        ->check(CLI::PositiveNumber);
    app.add_option("--verify-k", opt.verify_k, "compare N_k against brute force for k = 1..K")
        ->default_val(6)
        ->check(CLI::PositiveNumber);
    app.add_flag("--json", json, "machine-readable output");
    app.add_flag("--no-verify", no_verify, "skip the brute-force N_k column and the conjugation self-test");
    app.add_option("--seed", opt.seed, "seed for the conjugation self-test")->default_val(0);

    try {
        std::vector<std::string> args = with_positional_guard(argc, argv);
        std::reverse(args.begin(), args.end()); // CLI11's vector API wants reverse order
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        return fail("usage", e.what(), 1);
    }
    opt.verify = !no_verify;

    try {
        const amz::RationalMap f = amz::cli::parse_map(expr);
        const amz::RunReport report = amz::run_pipeline(f, opt);
        std::cout << (json ? amz::cli::report_to_json(report) : amz::cli::report_to_text(report));
        if (opt.verify && !report.verified())
            return fail("internal-invariant", "closed-form N_k disagrees with brute force", 2);
        return report.zeta.certification.early_exit ? 0 : 3;
    } catch (const amz::cli::parse_error& e) {
        return fail("parse", "position " + std::to_string(e.position()) + ": " + e.what(), 1);
    } catch (const amz::invariant_violation& e) {
        return fail("internal-invariant", e.what(), 2);
    } catch (const std::domain_error& e) {
        const std::string what = e.what();
        std::string tag = "domain";
        if (what.rfind("degree below 2", 0) == 0) tag = "degree-below-2";
        if (what.rfind("period bound too large", 0) == 0) tag = "period-bound-too-large";
        if (what.rfind("not a map", 0) == 0) tag = "not-a-map";
        return fail(tag, what, 1);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), 2);
    }
}
