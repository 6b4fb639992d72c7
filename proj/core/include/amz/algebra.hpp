#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "amz/poly.hpp"

namespace amz {

// Arithmetic in A = Q[z]/(h) for monic squarefree h, in the style of dynamic
// evaluation: we never factor h. A zero-test or inversion that would come out
// differently at different roots of h instead *splits* the algebra along a
// gcd, and the caller continues on each branch. Since h is squarefree, its
// roots are exactly the points the algebra talks about, and every branch
// modulus is again squarefree.
class QuotientAlgebra {
  public:
    // Validates: nonconstant, and squarefree (gcd with the derivative is 1).
    // The modulus is stored monic.
    explicit QuotientAlgebra(const Poly& modulus);

    const Poly& modulus() const { return *m_; }
    int degree() const { return m_->degree(); }

    friend bool operator==(const QuotientAlgebra& a, const QuotientAlgebra& b) {
        return a.m_ == b.m_ || *a.m_ == *b.m_;
    }

    // Branch construction from a known factor of an existing squarefree
    // modulus; skips the squarefree re-check.
    static QuotientAlgebra unchecked_factor(Poly monic_factor);

  private:
    struct unchecked_tag {};
    QuotientAlgebra(Poly m, unchecked_tag);
    std::shared_ptr<const Poly> m_;
};

class AlgebraElement {
  public:
    AlgebraElement(QuotientAlgebra algebra, const Poly& value); // reduces mod the modulus
    static AlgebraElement constant(const QuotientAlgebra& a, const Rat& c);
    static AlgebraElement generator(const QuotientAlgebra& a); // z mod h

    const QuotientAlgebra& algebra() const { return alg_; }
    const Poly& rep() const { return rep_; }
    bool rep_is_zero() const { return rep_.is_zero(); }

    // Image in a branch algebra whose modulus divides this one's.
    AlgebraElement reduced_to(const QuotientAlgebra& branch) const;

    AlgebraElement operator-() const;
    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const AlgebraElement& a, const Rat& s);
    friend AlgebraElement operator+(const AlgebraElement& a, const Rat& s);
    friend AlgebraElement operator-(const AlgebraElement& a, const Rat& s);
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

    AlgebraElement pow(long e) const;

  private:
    QuotientAlgebra alg_;
    Poly rep_;
};

// One branch of a split computation: an algebra together with the value the
// computation took on it. The branch moduli of any split are pairwise coprime
// and multiply back to the original modulus.
template <typename T>
struct Branch {
    QuotientAlgebra algebra;
    T value;
};
template <typename T>
using Branches = std::vector<Branch<T>>;

enum class ZeroKind {
    ZeroEverywhere,    // x = 0 at every root of the modulus
    NonzeroEverywhere, // x != 0 at every root
    Split,             // mixed: the algebra splits in two
};

struct ZeroTest {
    ZeroKind kind;
    // Populated when kind == Split: modulus of zero_part is gcd(h, rep),
    // modulus of nonzero_part the cofactor.
    std::optional<QuotientAlgebra> zero_part;
    std::optional<QuotientAlgebra> nonzero_part;
};

ZeroTest elem_is_zero(const AlgebraElement& x);

struct InvertOutcome {
    Branches<AlgebraElement> inverses;        // x^{-1} on each branch where x is a unit
    std::optional<QuotientAlgebra> zero_part; // branch where x vanishes identically
};

// Throws std::domain_error("division by zero in algebra") when x is zero
// everywhere.
InvertOutcome elem_invert(const AlgebraElement& x);

// Evaluate a rational-coefficient polynomial at an algebra element (Horner).
AlgebraElement eval_poly(const Poly& p, const AlgebraElement& x);

// Characteristic polynomial of multiplication by x on its algebra: the monic
// degree-D polynomial whose roots are the values of x at the D roots of the
// modulus, with multiplicity. Two elements represent the same multiset of
// values exactly when their characteristic polynomials agree.
Poly char_poly(const AlgebraElement& x);

} // namespace amz
