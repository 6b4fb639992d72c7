#include <stdexcept>

#include "amz/errors.hpp"
#include "amz/poly.hpp"
#include "modp.hpp"
#include "zpoly.hpp"

// Two gcd engines with one contract (monic gcd over Q).
//
// The production engine reconstructs the integer gcd from images modulo
// 31-bit primes (Brown's algorithm). Coprime inputs -- the overwhelmingly
// common case on squarefree-part queries against iterated-map polynomials --
// are settled by a single machine-word pass. The subresultant PRS engine is
// slower on large inputs but has no reconstruction step at all, which makes
// it the natural cross-check.

namespace amz {

namespace {

using detail::FpPoly;
using detail::ZPoly;

Poly gcd_preamble(const Poly& a, const Poly& b, bool& done) {
    done = true;
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of zero pair");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly(Rat(1));
    done = false;
    return Poly();
}

// CRT accumulator with symmetric (balanced) coefficient lifting.
struct CrtPoly {
    std::vector<mpz_class> residues; // in [0, modulus)
    mpz_class modulus{1};

    void start(const FpPoly& img, uint64_t p) {
        modulus = static_cast<unsigned long>(p);
        residues.assign(img.size(), 0);
        for (size_t i = 0; i < img.size(); ++i) residues[i] = static_cast<unsigned long>(img[i]);
    }

    void add(const FpPoly& img, uint64_t p) {
        const mpz_class zp(static_cast<unsigned long>(p));
        mpz_class minv;
        // modulus^{-1} mod p
        if (mpz_invert(minv.get_mpz_t(), mpz_class(modulus % zp).get_mpz_t(), zp.get_mpz_t()) == 0)
            throw invariant_violation("CRT moduli not coprime");
        for (size_t i = 0; i < residues.size(); ++i) {
            const mpz_class ri = residues[i] % zp;
            mpz_class delta = (mpz_class(static_cast<unsigned long>(i < img.size() ? img[i] : 0)) - ri) * minv % zp;
            if (delta < 0) delta += zp;
            residues[i] += delta * modulus;
        }
        modulus *= zp;
    }

    ZPoly balanced() const {
        ZPoly out(residues.size());
        const mpz_class half = modulus / 2;
        for (size_t i = 0; i < residues.size(); ++i)
            out[i] = residues[i] > half ? mpz_class(residues[i] - modulus) : residues[i];
        detail::ztrim(out);
        return out;
    }
};

} // namespace

Poly poly_gcd_modular(const Poly& a, const Poly& b) {
    bool done = false;
    Poly early = gcd_preamble(a, b, done);
    if (done) return early;

    const ZPoly za = detail::zfrom_poly(a);
    const ZPoly zb = detail::zfrom_poly(b);
    mpz_class lc_gcd;
    mpz_gcd(lc_gcd.get_mpz_t(), za.back().get_mpz_t(), zb.back().get_mpz_t());

    CrtPoly crt;
    int best_deg = -1;
    ZPoly previous;
    bool have_previous = false;

    for (size_t pi = 0; pi < 512; ++pi) {
        const uint64_t p = detail::engine_prime(pi);
        if (za.back() % static_cast<long>(p) == 0 || zb.back() % static_cast<long>(p) == 0) continue;

        FpPoly g = detail::fp_gcd(detail::fp_from_zpoly(za, p), detail::fp_from_zpoly(zb, p), p);
        const int dg = detail::fp_deg(g);
        if (dg == 0) return Poly(Rat(1));
        if (best_deg != -1 && dg > best_deg) continue; // unlucky prime
        // Scale the monic image so it lifts to an integer gcd candidate.
        const uint64_t scale = static_cast<uint64_t>(mpz_class(lc_gcd % static_cast<long>(p)).get_ui());
        for (uint64_t& c : g) c = detail::mulm(c, scale, p);

        if (best_deg == -1 || dg < best_deg) {
            best_deg = dg;
            crt.start(g, p);
            have_previous = false;
            continue;
        }
        crt.add(g, p);
        ZPoly candidate = crt.balanced();
        if (have_previous && candidate == previous) {
            ZPoly prim = detail::zprimitive(candidate);
            if (detail::zdivides(za, prim, nullptr) && detail::zdivides(zb, prim, nullptr))
                return detail::zto_poly_monic(prim);
        }
        previous = std::move(candidate);
        have_previous = true;
    }
    // Far more primes than any real input needs; reaching here means a bug.
    throw invariant_violation("modular gcd failed to stabilize");
}

Poly poly_gcd_subresultant(const Poly& a, const Poly& b) {
    bool done = false;
    Poly early = gcd_preamble(a, b, done);
    if (done) return early;

    ZPoly u = detail::zfrom_poly(a);
    ZPoly v = detail::zfrom_poly(b);
    if (detail::zdeg(u) < detail::zdeg(v)) std::swap(u, v);

    mpz_class g(1), h(1);
    while (true) {
        const long delta = detail::zdeg(u) - detail::zdeg(v);
        // Pseudo-remainder: lc(v)^(delta+1) * u  mod  v.
        ZPoly r = u;
        mpz_class lcv = v.back();
        mpz_class factor;
        mpz_pow_ui(factor.get_mpz_t(), lcv.get_mpz_t(), static_cast<unsigned long>(delta) + 1);
        for (mpz_class& c : r) c *= factor;
        while (!r.empty() && detail::zdeg(r) >= detail::zdeg(v)) {
            mpz_class q;
            mpz_divexact(q.get_mpz_t(), r.back().get_mpz_t(), lcv.get_mpz_t());
            const size_t off = r.size() - v.size();
            for (size_t j = 0; j < v.size(); ++j) mpz_submul(r[off + j].get_mpz_t(), q.get_mpz_t(), v[j].get_mpz_t());
            detail::ztrim(r);
        }
        if (r.empty()) break;
        if (detail::zdeg(r) == 0) return Poly(Rat(1));

        u = std::move(v);
        // Subresultant divisor g * h^delta keeps coefficients quasi-minimal.
        mpz_class divisor = g;
        mpz_class hpow;
        mpz_pow_ui(hpow.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        divisor *= hpow;
        v.resize(r.size());
        for (size_t i = 0; i < r.size(); ++i) mpz_divexact(v[i].get_mpz_t(), r[i].get_mpz_t(), divisor.get_mpz_t());

        g = u.back();
        if (delta == 0) {
            // h unchanged
        } else {
            // h = g^delta / h^(delta-1)
            mpz_class num;
            mpz_pow_ui(num.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_class den;
            mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta) - 1);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
    }
    return detail::zto_poly_monic(detail::zprimitive(v));
}

Poly poly_gcd(const Poly& a, const Poly& b) { return poly_gcd_modular(a, b); }

Poly squarefree_part(const Poly& a) {
    if (a.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
    if (a.is_constant()) return Poly(Rat(1));
    const Poly g = poly_gcd(a, a.derivative());
    return exact_div(a, g).monic();
}

} // namespace amz
