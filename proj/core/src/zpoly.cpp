#include "zpoly.hpp"

#include <stdexcept>

namespace amz::detail {

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    ztrim(r);
    return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    ztrim(r);
    return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    mpz_class t;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    ztrim(r);
    return r;
}

ZPoly zmul_scalar(const ZPoly& a, const mpz_class& s) {
    if (s == 0) return {};
    ZPoly r = a;
    for (mpz_class& c : r) c *= s;
    return r;
}

ZPoly zderivative(const ZPoly& a) {
    if (a.size() <= 1) return {};
    ZPoly r(a.size() - 1);
    for (size_t k = 1; k < a.size(); ++k) r[k - 1] = a[k] * static_cast<long>(k);
    ztrim(r);
    return r;
}

mpz_class zcontent(const ZPoly& a) {
    mpz_class g(0);
    for (const mpz_class& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly zprimitive(const ZPoly& a) {
    if (a.empty()) return {};
    mpz_class g = zcontent(a);
    if (a.back() < 0) g = -g;
    ZPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), g.get_mpz_t());
    return r;
}

bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly* q) {
    if (b.empty()) return false;
    ZPoly rem = a;
    ztrim(rem);
    ZPoly quot;
    if (rem.size() >= b.size()) quot.assign(rem.size() - b.size() + 1, 0);
    const mpz_class& lc = b.back();
    while (rem.size() >= b.size()) {
        mpz_class qc, r;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rem.back().get_mpz_t(), lc.get_mpz_t());
        if (r != 0) return false;
        const size_t off = rem.size() - b.size();
        quot[off] = qc;
        for (size_t j = 0; j < b.size(); ++j) mpz_submul(rem[off + j].get_mpz_t(), qc.get_mpz_t(), b[j].get_mpz_t());
        if (rem.back() != 0) return false; // cancellation must occur at the top
        rem.pop_back();
        ztrim(rem);
        if (rem.empty()) break;
    }
    if (!rem.empty()) return false;
    if (q) *q = std::move(quot);
    return true;
}

ZPoly zfrom_poly(const Poly& p) {
    if (p.is_zero()) return {};
    mpz_class den_lcm(1);
    for (const Rat& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly r(p.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) {
        const Rat& c = p.coeffs()[i];
        mpz_class scale;
        mpz_divexact(scale.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        r[i] = c.get_num() * scale;
    }
    return zprimitive(r);
}

Poly zto_poly(const ZPoly& a) {
    std::vector<Rat> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = Rat(a[i]);
    return Poly(std::move(c));
}

Poly zto_poly_monic(const ZPoly& a) {
    if (a.empty()) throw std::domain_error("monic form of zero polynomial");
    std::vector<Rat> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        c[i] = Rat(a[i], a.back());
        c[i].canonicalize();
    }
    return Poly(std::move(c));
}

void zfrom_poly_pair(const Poly& num, const Poly& den, ZPoly& znum, ZPoly& zden) {
    mpz_class den_lcm(1);
    for (const Rat& c : num.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    for (const Rat& c : den.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    auto scale_up = [&](const Poly& p) {
        ZPoly r(p.coeffs().size());
        for (size_t i = 0; i < r.size(); ++i) {
            const Rat& c = p.coeffs()[i];
            mpz_class s;
            mpz_divexact(s.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
            r[i] = c.get_num() * s;
        }
        ztrim(r);
        return r;
    };
    znum = scale_up(num);
    zden = scale_up(den);
    mpz_class g = zcontent(znum);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), zcontent(zden).get_mpz_t());
    if (g > 1) {
        for (mpz_class& c : znum) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        for (mpz_class& c : zden) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
}

} // namespace amz::detail
