#pragma once

#include <string>

#include <amz/zeta.hpp>

namespace amz::cli {

// Canonical JSON for a pipeline report. Key order is fixed and rationals are
// emitted as exact "p/q" strings, so parsing the output and re-serializing it
// reproduces the bytes.
//
// Schema:
//   { "degree": int,
//     "classes": [{"n":int,"q":int,"r":int,"points":int}],
//     "zeta": {"factors": [[[coeffs], exp]],
//              "reduced": {"num":[coeffs], "den":[coeffs]}},
//     "nk": [{"k":int,"closed":int,"oracle":int|null}],
//     "certification": {"periodBound":int,"earlyExit":bool} }
std::string report_to_json(const RunReport& report);

// Inverse of report_to_json (round-trip support and machine consumers).
RunReport report_from_json(const std::string& text);

// Plain-text rendering with the same numbers as the JSON form.
std::string report_to_text(const RunReport& report);

} // namespace amz::cli
