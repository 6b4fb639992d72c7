#include "amz/oracle.hpp"

#include <stdexcept>

namespace amz::oracle {

mpz_class nk_bruteforce(const RationalMap& f, long k, long degree_cap) {
    if (k < 1) throw std::domain_error("nk_bruteforce needs k >= 1");
    const PerPoly pp = per_poly(f, k, degree_cap);
    const Poly sf = squarefree_part(pp.finite);
    const long finite_count = sf.is_constant() ? 0 : sf.degree();
    return mpz_class(finite_count + (pp.infinity_fixed ? 1 : 0));
}

long multiplicity_bruteforce(const RationalMap& f, const Poly& h, long k, long degree_cap) {
    if (h.is_zero() || h.is_constant())
        throw std::domain_error("multiplicity_bruteforce needs a nonconstant factor");
    Poly p = per_poly(f, k, degree_cap).finite;
    long e = 0;
    while (true) {
        auto [q, r] = Poly::divmod(p, h);
        if (!r.is_zero()) break;
        ++e;
        p = std::move(q);
        if (p.is_zero()) break;
    }
    if (e == 0) throw std::domain_error("factor does not divide the fixed-point polynomial");
    return e;
}

} // namespace amz::oracle
