#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "amz/poly.hpp"
#include "amz/rational_map.hpp"

namespace amz {

// One group of parabolic periodic points sharing the same invariants:
//   n           minimal period,
//   q           exact order of the cycle multiplier as a root of unity,
//   r           (mu - 1) / q for the local multiplicity index mu of f^(nq),
//   point_count number of points (degree of the defining modulus).
struct ParabolicClass {
    long n;
    long q;
    long r;
    long point_count;

    friend bool operator==(const ParabolicClass&, const ParabolicClass&) = default;
};

struct Certification {
    long period_bound; // periods scanned: 1..period_bound
    bool early_exit;   // scan stopped because the nonrepelling-cycle budget 2d-2 was filled
};

// Per-branch classification record with the data the merged class rows drop:
// the local multiplicity index and the branch modulus, which downstream
// cross-checks need. The modulus lives in the coordinates of scanned_map,
// except for a fixed point at infinity, which is classified through the 1/z
// chart (at_infinity set, modulus in infinity_chart coordinates).
struct ClassRecord {
    ParabolicClass cls;
    long mu;
    Poly modulus;
    bool at_infinity = false;
};

struct Classification {
    std::vector<ClassRecord> records;
    Certification cert;
    RationalMap scanned_map; // f itself, or the conjugated copy actually scanned
    bool conjugated;
    std::optional<RationalMap> infinity_chart; // scanned_map conjugated by 1/z, when used

    // Records merged by (n, q, r) with point counts summed, sorted.
    std::vector<ParabolicClass> classes() const;

    // The map a record's modulus refers to.
    const RationalMap& map_for(const ClassRecord& rec) const {
        return rec.at_infinity ? *infinity_chart : scanned_map;
    }
};

// Scan all periods n <= period_bound of f, classify every cycle whose
// multiplier is a root of unity, and return the class records.
//
// When infinity is periodic within the bound, the scan runs on a conjugated
// copy of f that moves every relevant cycle into the finite plane (the class
// data is conjugation-invariant); a branch that still escapes to infinity
// triggers one more conjugation retry and then fails.
//
// The scan stops early once the classified cycles reach 2d-2, the classical
// bound on nonrepelling cycles of a degree-d map over the complex numbers
// (Milnor, "Dynamics in One Complex Variable", Cor. 10.16 combined with work
// of Shishikura); parabolic points over any characteristic-zero field embed
// into that count. Early exit is the only way the output is certified
// complete; otherwise it is complete for periods up to the bound only.
Classification classify_parabolic(const RationalMap& f, long period_bound,
                                  long degree_cap = kDefaultDegreeCap);

// Exact rational function zeta_f(T) in factored form, determined by the
// degree and the parabolic class list:
//   (1 - dT)^-1 (1 - T)^-1 prod over classes of (1 - T^(n q))^((pc/n) r).
class ZetaFunction {
  public:
    int degree = 0;
    std::vector<ParabolicClass> classes; // merged (n, q, r) groups
    Certification certification{0, false};

    // Factor list as (polynomial in T, exponent) pairs, base factors first.
    std::vector<std::pair<Poly, long>> factors() const;

    // Numerator / denominator in lowest terms, both with constant term 1.
    std::pair<Poly, Poly> reduced() const;
};

// Validates the class data (point counts divisible by the period within each
// group -- failure means a classification bug upstream) and merges it.
ZetaFunction assemble_zeta(int degree, const std::vector<ParabolicClass>& classes,
                           Certification cert);

// N_k = d^k + 1 - sum over classes with nq | k of point_count * q * r.
mpz_class nk_closed(int degree, const std::vector<ParabolicClass>& classes, long k);

// Coefficients of log zeta up to T^kmax, computed by formal power series from
// the reduced rational function (not from the class list, so agreement with
// nk_closed genuinely ties the two representations together). Entry k-1 holds
// the T^k coefficient, which equals N_k / k.
std::vector<Rat> zeta_log_coefficients(const ZetaFunction& zf, long kmax);

// True when every numerator factor of the reduced zeta divides some T^m - 1
// with m bounded by the largest n*q (all zeros on the unit circle).
bool zeta_zeros_on_unit_circle(const ZetaFunction& zf);

bool zeta_equal(const ZetaFunction& a, const ZetaFunction& b);

struct NkRow {
    long k;
    mpz_class closed;
    std::optional<mpz_class> oracle;
};

struct RunOptions {
    long period_bound = 4;
    long verify_k = 6;
    bool verify = true;        // brute-force N_k column + conjugation self-test
    unsigned long seed = 0;    // seeds the self-test Mobius map
    long degree_cap = kDefaultDegreeCap;
};

struct RunReport {
    int degree = 0;
    ZetaFunction zeta;
    std::vector<NkRow> nk;
    bool selftest_run = false;
    bool selftest_ok = true;

    bool verified() const; // every oracle entry present equals the closed value
};

RunReport run_pipeline(const RationalMap& f, const RunOptions& opt = {});

// Small random invertible Mobius map with entries in [-3, 3].
Mobius random_mobius(std::mt19937_64& rng);

} // namespace amz
