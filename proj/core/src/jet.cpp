#include "amz/jet.hpp"

#include <stdexcept>

#include "amz/errors.hpp"

namespace amz {

Jet::Jet(QuotientAlgebra algebra, int order) : alg_(std::move(algebra)) {
    if (order < 0) throw std::domain_error("jet order must be nonnegative");
    c_.assign(static_cast<size_t>(order) + 1, AlgebraElement::constant(alg_, Rat(0)));
}

Jet::Jet(QuotientAlgebra algebra, std::vector<AlgebraElement> coeffs)
    : alg_(std::move(algebra)), c_(std::move(coeffs)) {
    if (c_.empty()) throw std::domain_error("jet needs at least the constant coefficient");
}

void Jet::set_coeff(int i, AlgebraElement v) { c_[static_cast<size_t>(i)] = std::move(v); }

Jet Jet::truncated(int order) const {
    Jet r(alg_, order);
    const int top = std::min(order, this->order());
    for (int i = 0; i <= top; ++i) r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
    return r;
}

Jet Jet::reduced_to(const QuotientAlgebra& branch) const {
    std::vector<AlgebraElement> cs;
    cs.reserve(c_.size());
    for (const AlgebraElement& e : c_) cs.push_back(e.reduced_to(branch));
    return Jet(branch, std::move(cs));
}

Jet operator+(const Jet& a, const Jet& b) {
    const int ord = std::min(a.order(), b.order());
    Jet r(a.alg_, ord);
    for (int i = 0; i <= ord; ++i) r.c_[static_cast<size_t>(i)] = a.coeff(i) + b.coeff(i);
    return r;
}

Jet operator-(const Jet& a, const Jet& b) {
    const int ord = std::min(a.order(), b.order());
    Jet r(a.alg_, ord);
    for (int i = 0; i <= ord; ++i) r.c_[static_cast<size_t>(i)] = a.coeff(i) - b.coeff(i);
    return r;
}

Jet operator*(const Jet& a, const Jet& b) {
    const int ord = std::min(a.order(), b.order());
    Jet r(a.alg_, ord);
    for (int i = 0; i <= ord; ++i) {
        if (a.coeff(i).rep_is_zero()) continue;
        for (int j = 0; i + j <= ord; ++j) {
            if (b.coeff(j).rep_is_zero()) continue;
            r.c_[static_cast<size_t>(i + j)] = r.coeff(i + j) + a.coeff(i) * b.coeff(j);
        }
    }
    return r;
}

Jet Jet::compose(const Jet& inner) const {
    if (!inner.coeff(0).rep_is_zero())
        throw std::domain_error("jet composition needs an inner jet with zero constant term");
    const int ord = std::min(order(), inner.order());
    // Horner in the inner jet.
    Jet acc(alg_, ord);
    for (int i = order(); i >= 0; --i) {
        acc = acc * inner;
        acc.set_coeff(0, acc.coeff(0) + coeff(i));
    }
    return acc;
}

Jet Jet::of_polynomial(const Poly& p, const AlgebraElement& at, int order) {
    const QuotientAlgebra& alg = at.algebra();
    // Horner with (at + t) as the evaluation point.
    Jet acc(alg, order);
    if (p.is_zero()) return acc;
    for (int i = p.degree(); i >= 0; --i) {
        // acc = acc * (at + t) + p_i
        Jet next(alg, order);
        for (int k = 0; k <= order; ++k) {
            AlgebraElement v = acc.coeff(k) * at;
            if (k > 0) v = v + acc.coeff(k - 1);
            next.set_coeff(k, std::move(v));
        }
        next.set_coeff(0, next.coeff(0) + p.coeff(i));
        acc = std::move(next);
    }
    return acc;
}

namespace {

// 1 / q given the inverse of its constant term; the recurrence needs no
// further inversions, so it cannot split.
Jet jet_reciprocal(const Jet& q, const AlgebraElement& c0_inverse) {
    const int ord = q.order();
    Jet w(q.algebra(), ord);
    w.set_coeff(0, c0_inverse);
    for (int k = 1; k <= ord; ++k) {
        AlgebraElement s = AlgebraElement::constant(q.algebra(), Rat(0));
        for (int j = 1; j <= k; ++j) s = s + q.coeff(j) * w.coeff(k - j);
        w.set_coeff(k, -(c0_inverse * s));
    }
    return w;
}

void expand_branch(const Poly& numer, const Poly& denom, const AlgebraElement& at, int order,
                   JetExpansion& out) {
    const QuotientAlgebra& alg = at.algebra();
    const AlgebraElement den_at = eval_poly(denom, at);
    const ZeroTest zt = elem_is_zero(den_at);
    if (zt.kind == ZeroKind::ZeroEverywhere) {
        out.poles.push_back(alg);
        return;
    }
    if (zt.kind == ZeroKind::Split) {
        out.poles.push_back(*zt.zero_part);
        expand_branch(numer, denom, at.reduced_to(*zt.nonzero_part), order, out);
        return;
    }
    const AlgebraElement u = elem_invert(den_at).inverses.front().value;
    const Jet p = Jet::of_polynomial(numer, at, order);
    const Jet q = Jet::of_polynomial(denom, at, order);
    out.jets.push_back({alg, p * jet_reciprocal(q, u)});
}

} // namespace

JetExpansion jet_of_map_at(const Poly& numer, const Poly& denom, const AlgebraElement& at, int order) {
    if (denom.is_zero()) throw std::domain_error("cannot expand at pole: zero denominator");
    JetExpansion out;
    expand_branch(numer, denom, at, order, out);
    return out;
}

JetExpansion jet_of_map_at(const RationalMap& f, const AlgebraElement& at, int order) {
    return jet_of_map_at(f.numer(), f.denom(), at, order);
}

namespace {

void cycle_jet_branch(const RationalMap& f, const QuotientAlgebra& alg, long steps, int order,
                      CycleJets& out) {
    const AlgebraElement alpha = AlgebraElement::generator(alg);
    AlgebraElement point = alpha;
    // Deviation of the partial iterate from its orbit point, as a jet in the
    // initial displacement t; starts as the identity deviation t.
    Jet deviation(alg, order);
    deviation.set_coeff(1, AlgebraElement::constant(alg, Rat(1)));

    for (long s = 0; s < steps; ++s) {
        JetExpansion exp = jet_of_map_at(f, point, order);
        out.poles.insert(out.poles.end(), exp.poles.begin(), exp.poles.end());
        if (exp.jets.empty()) return;
        const Branch<Jet>& br = exp.jets.front();
        if (!(br.algebra == alg)) {
            cycle_jet_branch(f, br.algebra, steps, order, out);
            return;
        }
        Jet local = br.value; // f(point + s) as a jet in s
        const AlgebraElement next_point = local.coeff(0);
        local.set_coeff(0, AlgebraElement::constant(alg, Rat(0)));
        deviation = local.compose(deviation);
        point = next_point;
    }

    if (!(point == alpha))
        throw invariant_violation("cycle jet: orbit does not close");
    if (!(deviation.coeff(1) == AlgebraElement::constant(alg, Rat(1))))
        throw invariant_violation("cycle jet: linear coefficient differs from 1 "
                                  "(multiplier order classified incorrectly upstream)");
    Jet full = deviation;
    full.set_coeff(0, alpha);
    out.jets.push_back({alg, std::move(full)});
}

} // namespace

CycleJets cycle_jet(const RationalMap& f, const QuotientAlgebra& cycle_field, long n, long q, int order) {
    if (n < 1 || q < 1) throw std::domain_error("cycle_jet needs n >= 1 and q >= 1");
    CycleJets out;
    cycle_jet_branch(f, cycle_field, n * q, order, out);
    return out;
}

namespace {

void mu_branch(const Jet& j, int from, MuOutcome& out) {
    const QuotientAlgebra& alg = j.algebra();
    for (int i = from; i <= j.order(); ++i) {
        const ZeroTest zt = elem_is_zero(j.coeff(i));
        if (zt.kind == ZeroKind::ZeroEverywhere) continue;
        if (zt.kind == ZeroKind::NonzeroEverywhere) {
            out.values.push_back({alg, i});
            return;
        }
        out.values.push_back({*zt.nonzero_part, i});
        mu_branch(j.reduced_to(*zt.zero_part), i + 1, out);
        return;
    }
    out.exhausted.push_back(alg);
}

} // namespace

MuOutcome mu_extract(const Jet& j) {
    if (j.order() < 1 || !(j.coeff(1) == AlgebraElement::constant(j.algebra(), Rat(1))))
        throw invariant_violation("mu extraction expects a jet with linear coefficient 1");
    MuOutcome out;
    mu_branch(j, 2, out);
    return out;
}

} // namespace amz
