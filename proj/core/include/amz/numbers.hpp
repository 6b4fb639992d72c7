#pragma once

#include <vector>

namespace amz {

// Euler's totient; n >= 1.
long euler_phi(long n);

// All positive divisors of n >= 1, ascending.
std::vector<long> divisors(long n);

// Proper divisors (excluding n itself), ascending.
std::vector<long> proper_divisors(long n);

} // namespace amz
