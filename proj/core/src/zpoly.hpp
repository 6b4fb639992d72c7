#pragma once

// Internal dense integer-polynomial layer. The public API works over Q; the
// heavy lifting (gcd reconstruction, map composition) runs here over Z where
// no per-operation gcd canonicalization is paid.

#include <gmpxx.h>

#include <vector>

#include "amz/poly.hpp"

namespace amz::detail {

// Ascending coefficients, trimmed; empty vector is the zero polynomial.
using ZPoly = std::vector<mpz_class>;

inline void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; } // -1 for zero

ZPoly zadd(const ZPoly& a, const ZPoly& b);
ZPoly zsub(const ZPoly& a, const ZPoly& b);
ZPoly zmul(const ZPoly& a, const ZPoly& b);
ZPoly zmul_scalar(const ZPoly& a, const mpz_class& s);
ZPoly zderivative(const ZPoly& a);

// Nonnegative gcd of all coefficients (0 for the zero polynomial).
mpz_class zcontent(const ZPoly& a);

// a / content with the leading coefficient made positive.
ZPoly zprimitive(const ZPoly& a);

// True and sets q when b divides a exactly over Z.
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly* q);

// Clear denominators and strip integer content: primitive integer polynomial
// with positive leading coefficient representing the same rational roots.
ZPoly zfrom_poly(const Poly& p);

Poly zto_poly(const ZPoly& a);
Poly zto_poly_monic(const ZPoly& a);

// Clear denominators of the pair (num, den) by one common scale, then strip
// the common integer content. Preserves the projective pair (num : den).
void zfrom_poly_pair(const Poly& num, const Poly& den, ZPoly& znum, ZPoly& zden);

} // namespace amz::detail
