#pragma once

#include "amz/poly.hpp"

namespace amz {

// q-th cyclotomic polynomial, monic of degree euler_phi(q); q >= 1.
Poly cyclotomic(long q);

} // namespace amz
