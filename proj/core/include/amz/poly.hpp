#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "amz/rat.hpp"

namespace amz {

// Dense univariate polynomial over the rationals, coefficients in ascending
// degree order. Dense storage is deliberate: the polynomials handled here
// (iterated-map numerators, fixed-point polynomials) have essentially no
// coefficient sparsity, so a coefficient vector beats any sparse scheme.
//
// The zero polynomial is the empty coefficient vector. It has no degree;
// degree() throws on it rather than returning a sentinel index.
class Poly {
  public:
    Poly() = default;
    explicit Poly(Rat constant);
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<long> int_coeffs);

    static Poly variable();                       // z
    static Poly monomial(int k, Rat coeff = Rat(1));

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_constant() const { return c_.size() <= 1; }

    // Degree of a nonzero polynomial; throws std::domain_error on zero.
    int degree() const;

    // Coefficient of z^k; zero beyond the degree.
    const Rat& coeff(int k) const;
    const Rat& leading() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_monic() const;
    Poly monic() const;

    Rat eval(const Rat& x) const;
    Poly derivative() const;
    Poly times_power(int k) const;                // multiply by z^k

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Rat& s);
    friend Poly operator*(const Rat& s, const Poly& a) { return a * s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // Quotient and remainder with deg(rem) < deg(divisor); throws on zero divisor.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

    std::string str(const std::string& var = "z") const;

  private:
    void trim();
    std::vector<Rat> c_;
};

// Exact quotient; throws invariant_violation if the division leaves a remainder.
Poly exact_div(const Poly& a, const Poly& b);

// Monic greatest common divisor. Errors with "gcd of zero pair" when both
// inputs vanish. poly_gcd is the production engine (small-prime modular
// reconstruction); the subresultant PRS is kept as an independent engine with
// the same contract so either can check the other.
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_gcd_modular(const Poly& a, const Poly& b);
Poly poly_gcd_subresultant(const Poly& a, const Poly& b);

// Monic product of the distinct irreducible factors of a nonzero polynomial.
Poly squarefree_part(const Poly& a);

// Composition p(q).
Poly compose(const Poly& p, const Poly& q);

} // namespace amz
