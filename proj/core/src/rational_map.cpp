#include "amz/rational_map.hpp"

#include <stdexcept>
#include <utility>

#include "amz/errors.hpp"
#include "amz/numbers.hpp"
#include "zpoly.hpp"

namespace amz {

namespace {

using detail::ZPoly;

// Homogeneous evaluation sum f_i * A^i * B^(e - i) for an integer coefficient
// vector f of a map of homogenization degree e. This is the inner loop of
// composition; it runs over Z so no rational canonicalization is paid.
ZPoly homogeneous_eval(const ZPoly& f, const std::vector<ZPoly>& apow, const std::vector<ZPoly>& bpow, int e) {
    ZPoly acc;
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        ZPoly term = detail::zmul_scalar(detail::zmul(apow[i], bpow[static_cast<size_t>(e) - i]), f[i]);
        acc = detail::zadd(acc, term);
    }
    return acc;
}

struct ZPair {
    ZPoly num, den;
};

ZPair compose_pairs(const ZPair& outer, const ZPair& inner) {
    const int e = std::max(detail::zdeg(outer.num), detail::zdeg(outer.den));
    std::vector<ZPoly> apow(static_cast<size_t>(e) + 1), bpow(static_cast<size_t>(e) + 1);
    apow[0] = bpow[0] = ZPoly{1};
    for (int i = 1; i <= e; ++i) {
        apow[static_cast<size_t>(i)] = detail::zmul(apow[static_cast<size_t>(i - 1)], inner.num);
        bpow[static_cast<size_t>(i)] = detail::zmul(bpow[static_cast<size_t>(i - 1)], inner.den);
    }
    return {homogeneous_eval(outer.num, apow, bpow, e), homogeneous_eval(outer.den, apow, bpow, e)};
}

ZPair to_zpair(const RationalMap& f) {
    ZPair p;
    detail::zfrom_poly_pair(f.numer(), f.denom(), p.num, p.den);
    return p;
}

} // namespace

Mobius::Mobius(Rat a_, Rat b_, Rat c_, Rat d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (a * d - b * c == 0) throw std::domain_error("Mobius map needs nonzero determinant");
}

Mobius Mobius::identity() { return Mobius(Rat(1), Rat(0), Rat(0), Rat(1)); }

Mobius Mobius::inverse() const { return Mobius(d, -b, -c, a); }

Poly Mobius::numer() const { return Poly(std::vector<Rat>{b, a}); }

Poly Mobius::denom() const { return Poly(std::vector<Rat>{d, c}); }

RationalMap::RationalMap(const Poly& numer, const Poly& denom) {
    if (denom.is_zero()) throw std::domain_error("not a map: denominator is identically zero");
    if (numer.is_zero())
        throw std::domain_error("degree below 2: zeta closed form needs a map of degree >= 2");
    const Poly g = poly_gcd(numer, denom);
    num_ = g.is_one() ? numer : exact_div(numer, g);
    den_ = g.is_one() ? denom : exact_div(denom, g);
    deg_ = std::max(num_.degree(), den_.degree());
    if (deg_ < 2)
        throw std::domain_error("degree below 2: zeta closed form needs a map of degree >= 2");
    const Rat scale = Rat(1) / (den_.degree() >= num_.degree() ? den_.leading() : num_.leading());
    num_ = num_ * scale;
    den_ = den_ * scale;
}

Poly RationalMap::derivative_numer() const {
    return num_.derivative() * den_ - num_ * den_.derivative();
}

RationalMap iterate(const RationalMap& f, long n, long degree_cap) {
    if (n < 1) throw std::domain_error("iterate needs n >= 1");
    if (degree_cap < 2) throw std::domain_error("degree cap too small");
    // Degree guard before any work: d^n <= degree_cap.
    long expected = 1;
    for (long i = 0; i < n; ++i) {
        expected *= f.degree();
        if (expected > degree_cap)
            throw std::domain_error("period bound too large: iterate degree exceeds the configured cap");
    }

    const ZPair base = to_zpair(f);
    ZPair acc = base;
    for (long i = 1; i < n; ++i) acc = compose_pairs(base, acc);
    RationalMap result(detail::zto_poly(acc.num), detail::zto_poly(acc.den));
    if (result.degree() != expected)
        throw invariant_violation("iterate degree postcondition failed");
    return result;
}

PerPoly per_poly(const RationalMap& f, long k, long degree_cap) {
    const RationalMap fk = k == 1 ? f : iterate(f, k, degree_cap);
    Poly finite = fk.numer() - fk.denom().times_power(1);
    if (finite.is_zero()) throw invariant_violation("iterate equals the identity map");
    long dk = 1;
    for (long i = 0; i < k; ++i) dk *= f.degree();
    PerPoly out;
    out.infinity_fixed = fk.numer().degree() > fk.denom().degree();
    out.infinity_multiplicity = dk + 1 - finite.degree();
    out.finite = std::move(finite);
    if (out.infinity_multiplicity < 0 || (out.infinity_multiplicity > 0) != out.infinity_fixed)
        throw invariant_violation("fixed-point accounting failed for the iterate");
    return out;
}

Poly minimal_period_poly(const RationalMap& f, long n, long degree_cap) {
    Poly p = squarefree_part(per_poly(f, n, degree_cap).finite);
    for (long m : proper_divisors(n)) {
        if (p.is_constant()) break;
        const Poly q = squarefree_part(per_poly(f, m, degree_cap).finite);
        const Poly g = poly_gcd(p, q);
        if (!g.is_one()) p = exact_div(p, g);
    }
    return p.is_zero() ? Poly(Rat(1)) : p.monic();
}

RationalMap conjugate(const RationalMap& f, const Mobius& phi) {
    // f o phi through homogeneous substitution, then phi^{-1} applied on the left.
    const Poly pn = phi.numer(), pd = phi.denom();
    const int e = f.degree();
    std::vector<Poly> npow(static_cast<size_t>(e) + 1), dpow(static_cast<size_t>(e) + 1);
    npow[0] = dpow[0] = Poly(Rat(1));
    for (int i = 1; i <= e; ++i) {
        npow[static_cast<size_t>(i)] = npow[static_cast<size_t>(i - 1)] * pn;
        dpow[static_cast<size_t>(i)] = dpow[static_cast<size_t>(i - 1)] * pd;
    }
    auto hom = [&](const Poly& p) {
        Poly acc;
        for (int i = 0; i <= (p.is_zero() ? -1 : p.degree()); ++i) {
            if (p.coeff(i) == 0) continue;
            acc += npow[static_cast<size_t>(i)] * dpow[static_cast<size_t>(e - i)] * p.coeff(i);
        }
        return acc;
    };
    const Poly h0 = hom(f.numer());
    const Poly h1 = hom(f.denom());
    const Mobius inv = phi.inverse();
    RationalMap result(h0 * inv.a + h1 * inv.b, h0 * inv.c + h1 * inv.d);
    if (result.degree() != f.degree())
        throw invariant_violation("conjugation changed the degree");
    return result;
}

namespace {

void multiplier_branch(const RationalMap& f, const QuotientAlgebra& alg, long n, CycleMultiplier& out) {
    const AlgebraElement alpha = AlgebraElement::generator(alg);
    const Poly wronskian = f.derivative_numer();
    AlgebraElement point = alpha;
    AlgebraElement lambda = AlgebraElement::constant(alg, Rat(1));
    for (long j = 0; j < n; ++j) {
        const AlgebraElement den_val = eval_poly(f.denom(), point);
        const ZeroTest zt = elem_is_zero(den_val);
        if (zt.kind == ZeroKind::ZeroEverywhere) {
            // The whole branch orbit hits infinity at this step.
            out.needs_conjugation.push_back(alg);
            return;
        }
        if (zt.kind == ZeroKind::Split) {
            out.needs_conjugation.push_back(*zt.zero_part);
            // Rerun the whole orbit on the branch that stays finite here.
            multiplier_branch(f, *zt.nonzero_part, n, out);
            return;
        }
        const AlgebraElement u = elem_invert(den_val).inverses.front().value;
        lambda = lambda * eval_poly(wronskian, point) * u * u;
        point = eval_poly(f.numer(), point) * u;
    }
    if (!(point == alpha))
        throw invariant_violation("orbit does not close after n steps: modulus is not a factor of the minimal-period polynomial");
    out.multipliers.push_back({alg, std::move(lambda)});
}

} // namespace

CycleMultiplier multiplier_along_cycle(const RationalMap& f, const QuotientAlgebra& cycle_field, long n) {
    if (n < 1) throw std::domain_error("cycle period must be >= 1");
    CycleMultiplier out;
    multiplier_branch(f, cycle_field, n, out);
    return out;
}

} // namespace amz
