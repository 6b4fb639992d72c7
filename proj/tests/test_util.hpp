#pragma once

#include <random>
#include <string>
#include <vector>

#include <amz/poly.hpp>
#include <amz/rational_map.hpp>

#include <expr_parser.hpp>

namespace amz::testutil {

inline RationalMap map(const std::string& expr) { return cli::parse_map(expr); }

inline Poly poly(const std::string& expr) {
    auto [num, den] = cli::parse_rational_expression(expr);
    if (!den.is_constant()) throw std::domain_error("not a polynomial: " + expr);
    return num * (Rat(1) / den.coeff(0));
}

inline Poly random_poly(std::mt19937_64& rng, int max_degree, long coeff_range = 9) {
    std::uniform_int_distribution<int> degd(0, max_degree);
    std::uniform_int_distribution<long> cd(-coeff_range, coeff_range);
    const int d = degd(rng);
    std::vector<Rat> cs(static_cast<size_t>(d) + 1);
    for (auto& c : cs) c = Rat(cd(rng));
    if (cs.back() == 0) cs.back() = 1;
    return Poly(cs);
}

inline Poly random_nonzero_poly(std::mt19937_64& rng, int max_degree, long coeff_range = 9) {
    while (true) {
        Poly p = random_poly(rng, max_degree, coeff_range);
        if (!p.is_zero()) return p;
    }
}

// Random monic squarefree polynomial of degree >= 1.
inline Poly random_squarefree(std::mt19937_64& rng, int max_degree) {
    while (true) {
        Poly p = random_nonzero_poly(rng, max_degree);
        if (p.is_constant()) continue;
        Poly sf = squarefree_part(p);
        if (!sf.is_constant()) return sf;
    }
}

} // namespace amz::testutil
