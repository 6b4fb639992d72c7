#pragma once

#include <vector>

#include "amz/algebra.hpp"
#include "amz/rational_map.hpp"

namespace amz {

// Truncated power series sum c_i t^i, 0 <= i <= order, with coefficients in a
// quotient algebra. Orders stay small here (the first nonvanishing coefficient
// past the linear term is what matters), so all arithmetic is the naive dense
// kind.
class Jet {
  public:
    Jet(QuotientAlgebra algebra, int order); // zero jet
    Jet(QuotientAlgebra algebra, std::vector<AlgebraElement> coeffs);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const QuotientAlgebra& algebra() const { return alg_; }
    const AlgebraElement& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    void set_coeff(int i, AlgebraElement v);

    Jet truncated(int order) const;
    Jet reduced_to(const QuotientAlgebra& branch) const;

    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b); // truncated to min order

    // this(inner(t)); the inner jet must have zero constant term.
    Jet compose(const Jet& inner) const;

    // Taylor expansion of a polynomial around an algebra point: p(at + t).
    static Jet of_polynomial(const Poly& p, const AlgebraElement& at, int order);

  private:
    QuotientAlgebra alg_;
    std::vector<AlgebraElement> c_;
};

struct JetExpansion {
    Branches<Jet> jets;
    // Branches where the denominator vanishes at the expansion point: the map
    // sends those roots to infinity and no finite-chart expansion exists.
    std::vector<QuotientAlgebra> poles;
};

// Coefficients of f(at + t) up to t^order, splitting the algebra when the
// denominator is invertible only at some roots. The (numer, denom) overload
// accepts arbitrary nonzero pairs so plain series arithmetic (including
// degree-one maps) can use it.
JetExpansion jet_of_map_at(const Poly& numer, const Poly& denom, const AlgebraElement& at, int order);
JetExpansion jet_of_map_at(const RationalMap& f, const AlgebraElement& at, int order);

struct CycleJets {
    Branches<Jet> jets;
    std::vector<QuotientAlgebra> poles;
};

// Jet of f^(n*q) at the generator of cycle_field, computed by walking jets of
// f along the orbit. The roots of cycle_field must have minimal period n and
// multiplier of exact order q; each returned jet has constant term equal to
// the expansion point and linear coefficient exactly 1, and a branch
// violating that raises invariant_violation.
CycleJets cycle_jet(const RationalMap& f, const QuotientAlgebra& cycle_field, long n, long q, int order);

struct MuOutcome {
    Branches<long> values; // least index i >= 2 with nonzero coefficient, per branch
    // Branches whose coefficients 2..order all vanish: retry with a larger order.
    std::vector<QuotientAlgebra> exhausted;
};

// Index of the first nonlinear term of a jet with linear coefficient 1 (the
// local multiplicity index when the jet is an iterate expanded at its own
// fixed point). Splits the algebra wherever roots disagree.
MuOutcome mu_extract(const Jet& j);

} // namespace amz
