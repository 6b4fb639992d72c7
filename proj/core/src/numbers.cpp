#include "amz/numbers.hpp"

#include <algorithm>
#include <stdexcept>

namespace amz {

long euler_phi(long n) {
    if (n < 1) throw std::domain_error("euler_phi of nonpositive integer");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<long> divisors(long n) {
    if (n < 1) throw std::domain_error("divisors of nonpositive integer");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<long> proper_divisors(long n) {
    auto d = divisors(n);
    d.pop_back();
    return d;
}

} // namespace amz
