#include "report_json.hpp"

#include <sstream>

#include <json.hpp>

namespace amz::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json coeffs_json(const Poly& p) {
    ordered_json arr = ordered_json::array();
    for (const Rat& c : p.coeffs()) arr.push_back(rat_str(c));
    return arr;
}

Poly coeffs_from_json(const ordered_json& arr) {
    std::vector<Rat> cs;
    cs.reserve(arr.size());
    for (const auto& v : arr) cs.push_back(rat_from_string(v.get<std::string>()));
    return Poly(std::move(cs));
}

mpz_class int_from_json(const ordered_json& v) {
    if (v.is_number_integer()) return mpz_class(static_cast<long>(v.get<long long>()));
    return mpz_class(v.get<std::string>());
}

ordered_json int_to_json(const mpz_class& v) {
    if (v.fits_slong_p()) return ordered_json(v.get_si());
    return ordered_json(v.get_str());
}

} // namespace

std::string report_to_json(const RunReport& report) {
    ordered_json j;
    j["degree"] = report.degree;
    j["classes"] = ordered_json::array();
    for (const ParabolicClass& c : report.zeta.classes) {
        ordered_json row;
        row["n"] = c.n;
        row["q"] = c.q;
        row["r"] = c.r;
        row["points"] = c.point_count;
        j["classes"].push_back(std::move(row));
    }
    ordered_json zeta;
    zeta["factors"] = ordered_json::array();
    for (const auto& [poly, exp] : report.zeta.factors())
        zeta["factors"].push_back(ordered_json::array({coeffs_json(poly), exp}));
    ordered_json reduced;
    const auto [num, den] = report.zeta.reduced();
    reduced["num"] = coeffs_json(num);
    reduced["den"] = coeffs_json(den);
    zeta["reduced"] = std::move(reduced);
    j["zeta"] = std::move(zeta);
    j["nk"] = ordered_json::array();
    for (const NkRow& row : report.nk) {
        ordered_json r;
        r["k"] = row.k;
        r["closed"] = int_to_json(row.closed);
        r["oracle"] = row.oracle ? int_to_json(*row.oracle) : ordered_json(nullptr);
        j["nk"].push_back(std::move(r));
    }
    ordered_json cert;
    cert["periodBound"] = report.zeta.certification.period_bound;
    cert["earlyExit"] = report.zeta.certification.early_exit;
    j["certification"] = std::move(cert);
    return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    RunReport rep;
    rep.degree = j.at("degree").get<int>();
    std::vector<ParabolicClass> classes;
    for (const auto& row : j.at("classes"))
        classes.push_back({row.at("n").get<long>(), row.at("q").get<long>(),
                           row.at("r").get<long>(), row.at("points").get<long>()});
    Certification cert{j.at("certification").at("periodBound").get<long>(),
                       j.at("certification").at("earlyExit").get<bool>()};
    rep.zeta = assemble_zeta(rep.degree, classes, cert);
    for (const auto& row : j.at("nk")) {
        NkRow r;
        r.k = row.at("k").get<long>();
        r.closed = int_from_json(row.at("closed"));
        if (!row.at("oracle").is_null()) r.oracle = int_from_json(row.at("oracle"));
        rep.nk.push_back(std::move(r));
    }
    return rep;
}

std::string report_to_text(const RunReport& report) {
    std::ostringstream os;
    os << "degree: " << report.degree << "\n";
    os << "parabolic classes (n, q, r, points):";
    if (report.zeta.classes.empty()) os << " none";
    os << "\n";
    for (const ParabolicClass& c : report.zeta.classes)
        os << "  n=" << c.n << " q=" << c.q << " r=" << c.r << " points=" << c.point_count << "\n";
    os << "zeta factored:";
    for (const auto& [poly, exp] : report.zeta.factors())
        os << " (" << poly.str("T") << ")^" << exp;
    os << "\n";
    const auto [num, den] = report.zeta.reduced();
    os << "zeta reduced: (" << num.str("T") << ") / (" << den.str("T") << ")\n";
    os << "N_k (closed";
    const bool have_oracle = !report.nk.empty() && report.nk.front().oracle.has_value();
    os << (have_oracle ? " = oracle):\n" : "):\n");
    for (const NkRow& row : report.nk) {
        os << "  k=" << row.k << ": " << row.closed.get_str();
        if (row.oracle) {
            os << (row.closed == *row.oracle ? " = " : " != ") << row.oracle->get_str();
        }
        os << "\n";
    }
    if (report.selftest_run)
        os << "conjugation self-test: " << (report.selftest_ok ? "ok" : "FAILED") << "\n";
    const Certification& cert = report.zeta.certification;
    if (cert.early_exit) {
        os << "certification: complete (nonrepelling-cycle budget filled at period "
           << cert.period_bound << ")\n";
    } else {
        os << "certification: classes certified up to period bound " << cert.period_bound
           << " only\n";
    }
    return os.str();
}

} // namespace amz::cli
