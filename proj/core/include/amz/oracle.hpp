#pragma once

#include "amz/poly.hpp"
#include "amz/rational_map.hpp"

namespace amz::oracle {

// Brute-force verification layer. Everything here counts fixed points of the
// k-th iterate head-on -- squarefree degree counting plus a degree comparison
// for infinity -- so it shares no logic with the classification pipeline
// (no quotient algebras, no jets) and cannot inherit its bugs.

// Number of distinct fixed points of f^k on the projective line.
mpz_class nk_bruteforce(const RationalMap& f, long k, long degree_cap = kDefaultDegreeCap);

// Largest e with h^e dividing the fixed-point polynomial of f^k: the common
// multiplicity of the roots of h as fixed points of f^k. h must be a
// squarefree divisor of that polynomial.
long multiplicity_bruteforce(const RationalMap& f, const Poly& h, long k,
                             long degree_cap = kDefaultDegreeCap);

} // namespace amz::oracle
