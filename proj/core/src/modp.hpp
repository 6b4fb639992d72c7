#pragma once

// Internal F_p[z] arithmetic with 31-bit primes (products fit in uint64).
// Used by the modular gcd engine and by cheap soundness filters: a fact of
// the form "gcd = 1" or "this element is nonzero at every root" proved mod a
// good prime is valid over Q, so one machine-word computation often replaces
// a big-rational one.

#include <cstdint>
#include <optional>
#include <vector>

#include "amz/poly.hpp"
#include "zpoly.hpp"

namespace amz::detail {

using FpPoly = std::vector<uint64_t>; // ascending, trimmed, coefficients in [0, p)

inline uint64_t addm(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline uint64_t subm(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }
inline uint64_t mulm(uint64_t a, uint64_t b, uint64_t p) { return (a * b) % p; }
uint64_t powm(uint64_t a, uint64_t e, uint64_t p);
uint64_t invm(uint64_t a, uint64_t p);

bool is_prime_u64(uint64_t n);

// Deterministic descending sequence of 31-bit primes shared by all modular
// routines; index 0 is the largest prime below 2^31.
uint64_t engine_prime(size_t index);

inline void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int fp_deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, uint64_t p);
FpPoly fp_rem(FpPoly a, const FpPoly& b, uint64_t p);
FpPoly fp_gcd(FpPoly a, FpPoly b, uint64_t p); // monic (or empty)
FpPoly fp_monic(FpPoly a, uint64_t p);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b, uint64_t p);
FpPoly fp_derivative(const FpPoly& a, uint64_t p);

// Inverse of a modulo m over F_p, or nullopt when a is not a unit there.
std::optional<FpPoly> fp_inverse_mod(const FpPoly& a, const FpPoly& m, uint64_t p);

FpPoly fp_from_zpoly(const ZPoly& a, uint64_t p);

// Reduction of a rational-coefficient polynomial; nullopt when some
// denominator vanishes mod p (bad prime).
std::optional<FpPoly> fp_from_poly(const Poly& a, uint64_t p);

} // namespace amz::detail
