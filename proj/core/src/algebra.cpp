#include "amz/algebra.hpp"

#include <stdexcept>

#include "amz/errors.hpp"

namespace amz {

namespace {

// Extended Euclid over Q[z], specialized to the inverse computation:
// returns u with u*a = 1 (mod m), assuming gcd(a, m) = 1.
Poly invert_mod(const Poly& a, const Poly& m) {
    // Invariants: r0 = s0*a (mod m), r1 = s1*a (mod m).
    Poly r0 = m, r1 = Poly::divmod(a, m).second;
    Poly s0, s1 = Poly(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r2] = Poly::divmod(r0, r1);
        Poly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.is_constant() && !r0.is_zero()) {
        const Rat scale = Rat(1) / r0.coeff(0);
        return Poly::divmod(s0 * scale, m).second;
    }
    throw invariant_violation("invert_mod called on a non-unit");
}

} // namespace

QuotientAlgebra::QuotientAlgebra(const Poly& modulus) {
    if (modulus.is_zero() || modulus.is_constant())
        throw std::domain_error("quotient algebra needs a nonconstant modulus");
    Poly m = modulus.monic();
    if (!poly_gcd(m, m.derivative()).is_one())
        throw std::domain_error("quotient algebra modulus must be squarefree");
    m_ = std::make_shared<const Poly>(std::move(m));
}

QuotientAlgebra::QuotientAlgebra(Poly m, unchecked_tag) : m_(std::make_shared<const Poly>(std::move(m))) {}

QuotientAlgebra QuotientAlgebra::unchecked_factor(Poly monic_factor) {
    return QuotientAlgebra(std::move(monic_factor), unchecked_tag{});
}

AlgebraElement::AlgebraElement(QuotientAlgebra algebra, const Poly& value)
    : alg_(std::move(algebra)), rep_(Poly::divmod(value, alg_.modulus()).second) {}

AlgebraElement AlgebraElement::constant(const QuotientAlgebra& a, const Rat& c) {
    return AlgebraElement(a, Poly(c));
}

AlgebraElement AlgebraElement::generator(const QuotientAlgebra& a) {
    return AlgebraElement(a, Poly::variable());
}

AlgebraElement AlgebraElement::reduced_to(const QuotientAlgebra& branch) const {
    return AlgebraElement(branch, rep_);
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r = *this;
    r.rep_ = -r.rep_;
    return r;
}

namespace {
void require_same_algebra(const AlgebraElement& a, const AlgebraElement& b) {
    if (!(a.algebra() == b.algebra()))
        throw invariant_violation("algebra elements from different quotient algebras");
}
} // namespace

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_algebra(a, b);
    return AlgebraElement(a.algebra(), a.rep() + b.rep());
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_algebra(a, b);
    return AlgebraElement(a.algebra(), a.rep() - b.rep());
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_algebra(a, b);
    return AlgebraElement(a.algebra(), a.rep() * b.rep());
}

AlgebraElement operator*(const AlgebraElement& a, const Rat& s) {
    return AlgebraElement(a.algebra(), a.rep() * s);
}

AlgebraElement operator+(const AlgebraElement& a, const Rat& s) {
    return AlgebraElement(a.algebra(), a.rep() + Poly(s));
}

AlgebraElement operator-(const AlgebraElement& a, const Rat& s) {
    return AlgebraElement(a.algebra(), a.rep() - Poly(s));
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.algebra() == b.algebra() && a.rep() == b.rep();
}

AlgebraElement AlgebraElement::pow(long e) const {
    if (e < 0) throw std::domain_error("negative power of algebra element");
    AlgebraElement acc = constant(alg_, Rat(1));
    AlgebraElement base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

ZeroTest elem_is_zero(const AlgebraElement& x) {
    if (x.rep_is_zero()) return {ZeroKind::ZeroEverywhere, std::nullopt, std::nullopt};
    const Poly g = poly_gcd(x.algebra().modulus(), x.rep());
    if (g.is_one()) return {ZeroKind::NonzeroEverywhere, std::nullopt, std::nullopt};
    if (g.degree() == x.algebra().degree())
        return {ZeroKind::ZeroEverywhere, std::nullopt, std::nullopt};
    Poly cofactor = exact_div(x.algebra().modulus(), g).monic();
    return {ZeroKind::Split,
            QuotientAlgebra::unchecked_factor(g),
            QuotientAlgebra::unchecked_factor(std::move(cofactor))};
}

InvertOutcome elem_invert(const AlgebraElement& x) {
    const ZeroTest zt = elem_is_zero(x);
    if (zt.kind == ZeroKind::ZeroEverywhere)
        throw std::domain_error("division by zero in algebra");
    InvertOutcome out;
    if (zt.kind == ZeroKind::NonzeroEverywhere) {
        const QuotientAlgebra& a = x.algebra();
        out.inverses.push_back({a, AlgebraElement(a, invert_mod(x.rep(), a.modulus()))});
        return out;
    }
    out.zero_part = zt.zero_part;
    const QuotientAlgebra& sub = *zt.nonzero_part;
    const Poly r = Poly::divmod(x.rep(), sub.modulus()).second;
    out.inverses.push_back({sub, AlgebraElement(sub, invert_mod(r, sub.modulus()))});
    return out;
}

AlgebraElement eval_poly(const Poly& p, const AlgebraElement& x) {
    AlgebraElement acc = AlgebraElement::constant(x.algebra(), Rat(0));
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly char_poly(const AlgebraElement& x) {
    const int n = x.algebra().degree();
    const Poly& h = x.algebra().modulus();

    // Multiplication matrix: column j holds x * z^j mod h.
    std::vector<std::vector<Rat>> m(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
    Poly col = x.rep();
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = col.coeff(i);
        col = Poly::divmod(col.times_power(1), h).second;
    }

    // Reduce to upper Hessenberg form by a similarity transform, with exact
    // rational pivoting.
    for (int k = 0; k < n - 2; ++k) {
        int pivot = -1;
        for (int i = k + 1; i < n; ++i) {
            if (m[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) { pivot = i; break; }
        }
        if (pivot == -1) continue;
        if (pivot != k + 1) {
            std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(k + 1)]);
            for (int i = 0; i < n; ++i)
                std::swap(m[static_cast<size_t>(i)][static_cast<size_t>(pivot)],
                          m[static_cast<size_t>(i)][static_cast<size_t>(k + 1)]);
        }
        const Rat d = m[static_cast<size_t>(k + 1)][static_cast<size_t>(k)];
        for (int i = k + 2; i < n; ++i) {
            const Rat t = m[static_cast<size_t>(i)][static_cast<size_t>(k)] / d;
            if (t == 0) continue;
            for (int j = 0; j < n; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] -= t * m[static_cast<size_t>(k + 1)][static_cast<size_t>(j)];
            for (int j = 0; j < n; ++j)
                m[static_cast<size_t>(j)][static_cast<size_t>(k + 1)] += t * m[static_cast<size_t>(j)][static_cast<size_t>(i)];
        }
    }

    // Characteristic polynomials of leading principal Hessenberg blocks.
    std::vector<Poly> p(static_cast<size_t>(n) + 1);
    p[0] = Poly(Rat(1));
    const Poly t = Poly::variable();
    for (int k = 1; k <= n; ++k) {
        const auto K = static_cast<size_t>(k);
        p[K] = (t - Poly(m[K - 1][K - 1])) * p[K - 1];
        Rat prod(1);
        for (int i = 1; i < k; ++i) {
            prod *= m[static_cast<size_t>(k - i)][static_cast<size_t>(k - i - 1)];
            p[K] -= Poly(prod * m[static_cast<size_t>(k - i - 1)][K - 1]) * p[static_cast<size_t>(k - i - 1)];
        }
    }
    return p[static_cast<size_t>(n)];
}

} // namespace amz
