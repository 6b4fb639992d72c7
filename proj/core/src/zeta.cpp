#include "amz/zeta.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "amz/cyclotomic.hpp"
#include "amz/errors.hpp"
#include "amz/jet.hpp"
#include "amz/numbers.hpp"
#include "amz/oracle.hpp"
#include "modp.hpp"

namespace amz {

namespace {

// Raised when a scan branch escapes to infinity; the driver answers with a
// global re-conjugation, never with per-branch chart switching.
struct NeedsConjugation {};

constexpr long kMuOrderStart = 8;
constexpr long kMuOrderCeiling = 1L << 20;

long saturating_mu_cap(long d, long nq) {
    long v = 1;
    for (long i = 0; i < nq; ++i) {
        v *= d;
        if (v > kMuOrderCeiling) return kMuOrderCeiling;
    }
    return v + 1; // total fixed-point count of the iterate bounds any multiplicity
}

// Orders q worth testing against a degree-D algebra: the multiplier generates
// a subfield, so its order q must satisfy phi(q) <= D. phi(q) >= sqrt(q/2)
// caps the search range.
std::vector<long> admissible_orders(long max_degree) {
    std::vector<long> qs;
    for (long q = 1; q <= 2 * max_degree * max_degree + 2; ++q) {
        if (euler_phi(q) <= max_degree) qs.push_back(q);
    }
    return qs;
}

// Sound mod-p prefilter for the order scan. If lambda has order q at some
// root of h over Q, then lambda^q = 1 survives reduction at any prime not
// dividing a denominator, so gcd(h, lambda^q - 1) stays nontrivial mod p.
// The returned set therefore contains every q the exact scan could hit;
// everything else is skipped without touching big-rational arithmetic.
// Returns nullopt when no usable prime is found (caller tests all orders).
std::optional<std::vector<long>> order_candidates_mod_p(const Poly& modulus, const Poly& lambda_rep,
                                                        const std::vector<long>& orders) {
    if (orders.empty()) return std::vector<long>{};
    const long qmax = orders.back();
    for (size_t attempt = 0; attempt < 25; ++attempt) {
        const uint64_t p = detail::engine_prime(attempt);
        auto hbar = detail::fp_from_poly(modulus, p);
        auto lbar = detail::fp_from_poly(lambda_rep, p);
        if (!hbar || !lbar || hbar->size() < 2) continue;
        std::vector<long> hits;
        detail::FpPoly power{1};
        size_t next = 0;
        for (long j = 1; j <= qmax && next < orders.size(); ++j) {
            power = detail::fp_rem(detail::fp_mul(power, *lbar, p), *hbar, p);
            if (orders[next] != j) continue;
            ++next;
            detail::FpPoly shifted = detail::fp_sub(power, detail::FpPoly{1}, p);
            if (detail::fp_gcd(*hbar, shifted, p).size() > 1) hits.push_back(j);
        }
        return hits;
    }
    return std::nullopt;
}

struct ScanState {
    const RationalMap& map;
    long degree_cap;
    std::vector<ClassRecord> records;
};

// Jets plus mu extraction for one parabolic branch, growing the truncation
// order adaptively (start small, double on exhaustion, stop at the hard cap).
void classify_mu(ScanState& st, const QuotientAlgebra& branch, long n, long q) {
    const long mu_cap = saturating_mu_cap(st.map.degree(), n * q);
    std::vector<std::pair<QuotientAlgebra, long>> work{{branch, std::min(kMuOrderStart, mu_cap)}};
    while (!work.empty()) {
        auto [alg, order] = work.back();
        work.pop_back();
        CycleJets cj = cycle_jet(st.map, alg, n, q, static_cast<int>(order));
        if (!cj.poles.empty()) throw NeedsConjugation{};
        for (const Branch<Jet>& jb : cj.jets) {
            MuOutcome mu = mu_extract(jb.value);
            for (const Branch<long>& mb : mu.values) {
                const long m = mb.value;
                // Divisibility is forced by lambda^q = 1 (hard invariant, not
                // a test): violation means the order scan mislabeled q.
                if ((m - 1) % q != 0)
                    throw invariant_violation("multiplier order does not divide mu - 1");
                st.records.push_back(
                    {{n, q, (m - 1) / q, mb.algebra.degree()}, m, mb.algebra.modulus()});
            }
            for (const QuotientAlgebra& ex : mu.exhausted) {
                if (order >= mu_cap)
                    throw invariant_violation("identity-like jet: no coefficient found below the multiplicity cap");
                work.push_back({ex, std::min(order * 2, mu_cap)});
            }
        }
    }
}

// Split one multiplier branch by the exact order of the multiplier as a root
// of unity: ascending q, splitting off the sub-branch where Phi_q(lambda)
// vanishes. Ascending order guarantees the first hit is the exact order.
void scan_orders(ScanState& st, const QuotientAlgebra& algebra, const AlgebraElement& lambda, long n) {
    std::vector<long> orders = admissible_orders(algebra.degree());
    if (auto filtered = order_candidates_mod_p(algebra.modulus(), lambda.rep(), orders))
        orders = std::move(*filtered);

    std::optional<QuotientAlgebra> remaining = algebra;
    AlgebraElement lam = lambda;
    for (long q : orders) {
        if (!remaining) break;
        if (euler_phi(q) > remaining->degree()) continue;
        const AlgebraElement value = eval_poly(cyclotomic(q), lam);
        const ZeroTest zt = elem_is_zero(value);
        if (zt.kind == ZeroKind::NonzeroEverywhere) continue;
        if (zt.kind == ZeroKind::ZeroEverywhere) {
            classify_mu(st, *remaining, n, q);
            remaining.reset();
            break;
        }
        classify_mu(st, *zt.zero_part, n, q);
        lam = lam.reduced_to(*zt.nonzero_part);
        remaining = *zt.nonzero_part;
    }
    // Whatever remains has no root-of-unity multiplier; nothing to record.
}

// Certificate that no root of h carries a root-of-unity multiplier along its
// period-n cycle, established entirely mod p: the orbit, the multiplier and
// the order scan are computed in F_p[z]/(h mod p). When every step of the
// rational computation reduces well mod p (all inversions succeed), the mod-p
// multiplier is the reduction of the rational one, and lambda^q = 1 at some
// root over Q would force a nontrivial gcd mod p. So "no order hits" mod one
// good prime rules out parabolic points at this period without touching
// big-rational arithmetic. Returns false when some order does hit (exact scan
// required) and nullopt when no usable prime certifies anything.
std::optional<bool> period_parabolic_free_mod_p(const RationalMap& g, const Poly& h, long n) {
    const std::vector<long> orders = admissible_orders(h.degree());
    const Poly wronskian = g.derivative_numer();
    for (size_t attempt = 0; attempt < 25; ++attempt) {
        const uint64_t p = detail::engine_prime(attempt);
        const auto hbar = detail::fp_from_poly(h, p);
        const auto num = detail::fp_from_poly(g.numer(), p);
        const auto den = detail::fp_from_poly(g.denom(), p);
        const auto wro = detail::fp_from_poly(wronskian, p);
        if (!hbar || !num || !den || !wro || hbar->size() < 2) continue;

        auto eval_bar = [&](const detail::FpPoly& poly, const detail::FpPoly& at) {
            detail::FpPoly acc;
            for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
                acc = detail::fp_rem(detail::fp_mul(acc, at, p), *hbar, p);
                if (*it != 0) {
                    if (acc.empty()) {
                        acc.push_back(*it);
                    } else {
                        acc[0] = detail::addm(acc[0], *it, p);
                        detail::fp_trim(acc);
                    }
                }
            }
            return acc;
        };

        detail::FpPoly point{0, 1}; // z
        detail::FpPoly lambda{1};
        bool bad_prime = false;
        for (long j = 0; j < n && !bad_prime; ++j) {
            const detail::FpPoly dj = eval_bar(*den, point);
            const auto u = detail::fp_inverse_mod(dj, *hbar, p);
            if (!u) { bad_prime = true; break; }
            lambda = detail::fp_rem(detail::fp_mul(lambda, eval_bar(*wro, point), p), *hbar, p);
            lambda = detail::fp_rem(detail::fp_mul(lambda, detail::fp_mul(*u, *u, p), p), *hbar, p);
            point = detail::fp_rem(detail::fp_mul(eval_bar(*num, point), *u, p), *hbar, p);
        }
        if (bad_prime) continue;
        if (!(point == detail::FpPoly{0, 1})) continue; // reduction did not track the orbit

        detail::FpPoly power{1};
        size_t next = 0;
        const long qmax = orders.empty() ? 0 : orders.back();
        for (long j = 1; j <= qmax && next < orders.size(); ++j) {
            power = detail::fp_rem(detail::fp_mul(power, lambda, p), *hbar, p);
            if (orders[next] != j) continue;
            ++next;
            const detail::FpPoly shifted = detail::fp_sub(power, detail::FpPoly{1}, p);
            if (detail::fp_gcd(*hbar, shifted, p).size() > 1) return false;
        }
        return true;
    }
    return std::nullopt;
}

// Point counts of every (n, q, r) group must split into whole cycles.
long certified_cycle_count(const std::vector<ClassRecord>& records) {
    std::map<std::tuple<long, long, long>, long> groups;
    for (const ClassRecord& rec : records)
        groups[{rec.cls.n, rec.cls.q, rec.cls.r}] += rec.cls.point_count;
    long cycles = 0;
    for (const auto& [key, total] : groups) {
        const long n = std::get<0>(key);
        if (total % n != 0)
            throw invariant_violation("Galois/cycle accounting violated: point count not divisible by the period");
        cycles += total / n;
    }
    return cycles;
}

// Classify one algebra worth of period-n points: exact multiplier along the
// cycle, then the root-of-unity order scan, unless a mod-p certificate
// already rules every root out.
void scan_period_algebra(ScanState& st, const Poly& h, long n) {
    if (period_parabolic_free_mod_p(st.map, h, n) == true) return;
    const QuotientAlgebra cycle_field(h);
    CycleMultiplier cm = multiplier_along_cycle(st.map, cycle_field, n);
    if (!cm.needs_conjugation.empty()) throw NeedsConjugation{};
    for (const Branch<AlgebraElement>& br : cm.multipliers)
        scan_orders(st, br.algebra, br.value, n);
}

Classification attempt_scan(const RationalMap& g, bool conjugated, bool fixed_infinity,
                            long period_bound, long degree_cap) {
    ScanState st{g, degree_cap, {}};
    Certification cert{period_bound, false};
    std::optional<RationalMap> chart;
    if (fixed_infinity) {
        // Fixed point at infinity, classified through the 1/z chart, where it
        // sits at the origin.
        chart = conjugate(g, Mobius(Rat(0), Rat(1), Rat(1), Rat(0)));
        ScanState chart_state{*chart, degree_cap, {}};
        scan_period_algebra(chart_state, Poly::variable(), 1);
        for (ClassRecord& rec : chart_state.records) {
            rec.at_infinity = true;
            st.records.push_back(std::move(rec));
        }
    }
    for (long n = 1; n <= period_bound; ++n) {
        const Poly h = minimal_period_poly(g, n, degree_cap);
        if (!h.is_constant()) scan_period_algebra(st, h, n);
        if (certified_cycle_count(st.records) >= 2 * g.degree() - 2) {
            cert = {n, true};
            break;
        }
    }
    return Classification{std::move(st.records), cert, g, conjugated, std::move(chart)};
}

// Smallest nonnegative integer that is not a root of any Per_k, k <= bound:
// conjugating by phi(z) = 1/(z - c) then pins infinity of the new coordinate
// to a non-periodic point, so every scanned cycle lives in the finite plane.
long nonperiodic_shift(const RationalMap& f, long period_bound, long degree_cap, long start) {
    std::vector<Poly> pers;
    for (long k = 1; k <= period_bound; ++k) pers.push_back(per_poly(f, k, degree_cap).finite);
    for (long c = start;; ++c) {
        bool periodic = false;
        for (const Poly& p : pers) {
            if (p.eval(Rat(c)) == 0) { periodic = true; break; }
        }
        if (!periodic) return c;
    }
}

RationalMap conjugated_for_scan(const RationalMap& f, long shift) {
    // phi(z) = (shift * z + 1) / z; its inverse sends infinity to the shift.
    const Mobius phi(Rat(shift), Rat(1), Rat(1), Rat(0));
    return conjugate(f, phi);
}

} // namespace

std::vector<ParabolicClass> Classification::classes() const {
    std::map<std::tuple<long, long, long>, long> groups;
    for (const ClassRecord& rec : records)
        groups[{rec.cls.n, rec.cls.q, rec.cls.r}] += rec.cls.point_count;
    std::vector<ParabolicClass> out;
    out.reserve(groups.size());
    for (const auto& [key, pc] : groups)
        out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), pc});
    return out;
}

Classification classify_parabolic(const RationalMap& f, long period_bound, long degree_cap) {
    if (period_bound < 1) throw std::domain_error("period bound must be >= 1");

    // A fixed infinity keeps every other cycle finite, so f can be scanned
    // directly with a separate chart record for infinity. Only an infinity
    // inside a longer cycle (within the bound) forces the global conjugation
    // that moves everything into the finite plane.
    const bool infinity_fixed = f.fixes_infinity();
    bool infinity_in_cycle = false;
    if (!infinity_fixed) {
        for (long k = 2; k <= period_bound && !infinity_in_cycle; ++k)
            infinity_in_cycle = iterate(f, k, degree_cap).fixes_infinity();
    }

    try {
        if (!infinity_in_cycle) return attempt_scan(f, false, infinity_fixed, period_bound, degree_cap);
        const long shift = nonperiodic_shift(f, period_bound, degree_cap, 0);
        return attempt_scan(conjugated_for_scan(f, shift), true, false, period_bound, degree_cap);
    } catch (const NeedsConjugation&) {
        // fall through to the single global re-conjugation retry
    }
    long shift = nonperiodic_shift(f, period_bound, degree_cap, 0);
    if (infinity_in_cycle) shift = nonperiodic_shift(f, period_bound, degree_cap, shift + 1);
    try {
        return attempt_scan(conjugated_for_scan(f, shift), true, false, period_bound, degree_cap);
    } catch (const NeedsConjugation&) {
        throw invariant_violation("classification kept escaping to infinity after re-conjugation");
    }
}

std::vector<std::pair<Poly, long>> ZetaFunction::factors() const {
    std::vector<std::pair<Poly, long>> out;
    std::vector<Rat> base{Rat(1), Rat(-degree)};
    out.emplace_back(Poly(base), -1);
    out.emplace_back(Poly(std::vector<Rat>{Rat(1), Rat(-1)}), -1);
    for (const ParabolicClass& c : classes) {
        Poly factor = Poly(Rat(1)) - Poly::monomial(static_cast<int>(c.n * c.q));
        out.emplace_back(std::move(factor), (c.point_count / c.n) * c.r);
    }
    return out;
}

std::pair<Poly, Poly> ZetaFunction::reduced() const {
    Poly num(Rat(1)), den(Rat(1));
    for (const auto& [factor, exp] : factors()) {
        for (long i = 0; i < (exp < 0 ? -exp : exp); ++i) {
            (exp > 0 ? num : den) = (exp > 0 ? num : den) * factor;
        }
    }
    const Poly g = poly_gcd(num, den);
    if (!g.is_one()) {
        num = exact_div(num, g);
        den = exact_div(den, g);
        // Monic gcd division scales both; restore constant terms to 1.
        const Rat c = den.coeff(0);
        num = num * (Rat(1) / c);
        den = den * (Rat(1) / c);
    }
    return {num, den};
}

ZetaFunction assemble_zeta(int degree, const std::vector<ParabolicClass>& classes, Certification cert) {
    std::map<std::tuple<long, long, long>, long> groups;
    for (const ParabolicClass& c : classes) {
        if (c.n < 1 || c.q < 1 || c.r < 1 || c.point_count < 1)
            throw invariant_violation("parabolic class with nonpositive entries");
        groups[{c.n, c.q, c.r}] += c.point_count;
    }
    ZetaFunction zf;
    zf.degree = degree;
    zf.certification = cert;
    for (const auto& [key, pc] : groups) {
        const long n = std::get<0>(key);
        if (pc % n != 0)
            throw invariant_violation("Galois/cycle accounting violated: point count not divisible by the period");
        zf.classes.push_back({n, std::get<1>(key), std::get<2>(key), pc});
    }
    return zf;
}

mpz_class nk_closed(int degree, const std::vector<ParabolicClass>& classes, long k) {
    if (k < 1) throw std::domain_error("nk_closed needs k >= 1");
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(degree), static_cast<unsigned long>(k));
    v += 1;
    for (const ParabolicClass& c : classes) {
        if (k % (c.n * c.q) == 0) v -= mpz_class(c.point_count) * c.q * c.r;
    }
    if (v < 0) throw invariant_violation("negative fixed-point count from the closed form");
    return v;
}

namespace {

// log p as a power series up to T^kmax, for p with constant term 1:
// integrate p' / p.
std::vector<Rat> series_log(const Poly& p, long kmax) {
    std::vector<Rat> inv(static_cast<size_t>(kmax), Rat(0)); // 1/p truncated to T^(kmax-1)
    inv[0] = 1;
    for (long k = 1; k < kmax; ++k) {
        Rat s(0);
        for (long j = 1; j <= k; ++j) s += p.coeff(static_cast<int>(j)) * inv[static_cast<size_t>(k - j)];
        inv[static_cast<size_t>(k)] = -s;
    }
    const Poly dp = p.derivative();
    std::vector<Rat> out(static_cast<size_t>(kmax), Rat(0));
    for (long k = 1; k <= kmax; ++k) {
        Rat s(0);
        for (long j = 0; j < k; ++j) s += dp.coeff(static_cast<int>(j)) * inv[static_cast<size_t>(k - 1 - j)];
        out[static_cast<size_t>(k - 1)] = s / Rat(k);
    }
    return out;
}

} // namespace

std::vector<Rat> zeta_log_coefficients(const ZetaFunction& zf, long kmax) {
    if (kmax < 1) throw std::domain_error("zeta_log_coefficients needs kmax >= 1");
    const auto [num, den] = zf.reduced();
    std::vector<Rat> ln = series_log(num, kmax);
    const std::vector<Rat> ld = series_log(den, kmax);
    for (size_t i = 0; i < ln.size(); ++i) ln[i] -= ld[i];
    return ln;
}

bool zeta_zeros_on_unit_circle(const ZetaFunction& zf) {
    Poly num = zf.reduced().first;
    long max_m = 1;
    for (const ParabolicClass& c : zf.classes) max_m = std::max(max_m, c.n * c.q);
    while (!num.is_constant()) {
        bool progress = false;
        for (long m = 1; m <= max_m && !num.is_constant(); ++m) {
            const Poly cyclic = Poly::monomial(static_cast<int>(m)) - Poly(Rat(1));
            const Poly g = poly_gcd(num, cyclic);
            if (!g.is_one()) {
                num = exact_div(num, g);
                progress = true;
            }
        }
        if (!progress) return false;
    }
    return true;
}

bool zeta_equal(const ZetaFunction& a, const ZetaFunction& b) {
    return a.degree == b.degree && a.reduced() == b.reduced();
}

bool RunReport::verified() const {
    if (!selftest_ok) return false;
    for (const NkRow& row : nk) {
        if (row.oracle && *row.oracle != row.closed) return false;
    }
    return true;
}

Mobius random_mobius(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-3, 3);
    while (true) {
        const Rat a(dist(rng)), b(dist(rng)), c(dist(rng)), d(dist(rng));
        if (a * d - b * c != 0) return Mobius(a, b, c, d);
    }
}

RunReport run_pipeline(const RationalMap& f, const RunOptions& opt) {
    const Classification cls = classify_parabolic(f, opt.period_bound, opt.degree_cap);
    std::vector<ParabolicClass> raw;
    raw.reserve(cls.records.size());
    for (const ClassRecord& rec : cls.records) raw.push_back(rec.cls);

    RunReport rep;
    rep.degree = f.degree();
    rep.zeta = assemble_zeta(f.degree(), raw, cls.cert);
    for (long k = 1; k <= opt.verify_k; ++k) {
        NkRow row;
        row.k = k;
        row.closed = nk_closed(rep.degree, rep.zeta.classes, k);
        if (opt.verify) row.oracle = oracle::nk_bruteforce(f, k, opt.degree_cap);
        rep.nk.push_back(std::move(row));
    }
    if (opt.verify) {
        rep.selftest_run = true;
        std::mt19937_64 rng(opt.seed);
        const RationalMap g = conjugate(f, random_mobius(rng));
        const Classification cls2 = classify_parabolic(g, opt.period_bound, opt.degree_cap);
        std::vector<ParabolicClass> raw2;
        for (const ClassRecord& rec : cls2.records) raw2.push_back(rec.cls);
        rep.selftest_ok = zeta_equal(rep.zeta, assemble_zeta(g.degree(), raw2, cls2.cert));
    }
    return rep;
}

} // namespace amz
