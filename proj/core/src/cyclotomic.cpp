#include "amz/cyclotomic.hpp"

#include <map>
#include <stdexcept>

#include "amz/numbers.hpp"

namespace amz {

namespace {

Poly x_pow_minus_one(long m) {
    Poly p = Poly::monomial(static_cast<int>(m));
    return p - Poly(Rat(1));
}

} // namespace

Poly cyclotomic(long q) {
    if (q < 1) throw std::domain_error("cyclotomic polynomial needs q >= 1");
    // Phi_d = (x^d - 1) / prod of Phi_e over proper divisors e of d,
    // built bottom-up over the divisors of q.
    std::map<long, Poly> phi;
    for (long d : divisors(q)) {
        Poly num = x_pow_minus_one(d);
        for (long e : proper_divisors(d)) num = exact_div(num, phi.at(e));
        phi.emplace(d, std::move(num));
    }
    return phi.at(q);
}

} // namespace amz
