#pragma once

#include <vector>

#include "amz/algebra.hpp"
#include "amz/poly.hpp"
#include "amz/rat.hpp"

namespace amz {

inline constexpr long kDefaultDegreeCap = 20000;

// Degree-one rational map (az + b) / (cz + d) with nonzero determinant.
struct Mobius {
    Rat a, b, c, d;

    Mobius(Rat a_, Rat b_, Rat c_, Rat d_);
    static Mobius identity();

    Mobius inverse() const;
    // Numerator/denominator as polynomials in z.
    Poly numer() const;
    Poly denom() const;
};

// A rational self-map of the projective line over Q, held as a coprime
// numerator/denominator pair of degree d >= 2.
//
// Canonical scaling: the denominator is monic when deg(denom) >= deg(numer),
// otherwise the numerator is monic. That makes equality of maps plain
// coefficient equality.
class RationalMap {
  public:
    // Cancels the common factor and applies the canonical scaling.
    // Throws std::domain_error:
    //   "not a map"            when the denominator is identically zero,
    //   "degree below 2: ..."  when the reduced degree is 0 or 1 (the zeta
    //                          closed form computed here needs degree >= 2).
    RationalMap(const Poly& numer, const Poly& denom);

    const Poly& numer() const { return num_; }
    const Poly& denom() const { return den_; }
    int degree() const { return deg_; }

    // Numerator of the derivative: f0' f1 - f0 f1' (the denominator is f1^2).
    Poly derivative_numer() const;

    bool fixes_infinity() const { return num_.degree() > den_.degree(); }

    friend bool operator==(const RationalMap& f, const RationalMap& g) {
        return f.num_ == g.num_ && f.den_ == g.den_;
    }

  private:
    Poly num_, den_;
    int deg_ = 0;
};

inline RationalMap normalize(const Poly& numer, const Poly& denom) { return RationalMap(numer, denom); }

// f composed with itself n times; degree d^n, which must stay within
// degree_cap (throws std::domain_error "period bound too large" otherwise).
RationalMap iterate(const RationalMap& f, long n, long degree_cap = kDefaultDegreeCap);

// Data of the fixed-point polynomial of f^k.
struct PerPoly {
    Poly finite;                // numer(f^k) - z * denom(f^k); roots = finite fixed points of f^k
    bool infinity_fixed;        // deg numer(f^k) > deg denom(f^k)
    long infinity_multiplicity; // (d^k + 1) - deg(finite)
};

PerPoly per_poly(const RationalMap& f, long k, long degree_cap = kDefaultDegreeCap);

// Monic squarefree polynomial whose roots are exactly the finite points of
// minimal period n: squarefree part of the Per_n finite polynomial with the
// squarefree parts of all proper-divisor periods divided out. Constant 1 when
// no such points exist (e.g. when period-n candidates collapse onto a
// parabolic cycle of smaller period).
Poly minimal_period_poly(const RationalMap& f, long n, long degree_cap = kDefaultDegreeCap);

// phi^{-1} o f o phi, normalized. Degree is preserved.
RationalMap conjugate(const RationalMap& f, const Mobius& phi);

struct CycleMultiplier {
    // lambda(f^n; alpha) = prod of f'(f^j(alpha)) over the orbit, per branch.
    Branches<AlgebraElement> multipliers;
    // Branches whose orbit leaves the finite plane (a denominator vanished);
    // the caller must re-run on a conjugated copy of f.
    std::vector<QuotientAlgebra> needs_conjugation;
};

// Multiplier along the cycle for every root of the cycle_field modulus, which
// must divide minimal_period_poly(f, n). Splits the algebra as needed.
CycleMultiplier multiplier_along_cycle(const RationalMap& f, const QuotientAlgebra& cycle_field, long n);

} // namespace amz
