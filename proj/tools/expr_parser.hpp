#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include <amz/poly.hpp>
#include <amz/rational_map.hpp>

namespace amz::cli {

class parse_error : public std::runtime_error {
  public:
    parse_error(size_t position, const std::string& message)
        : std::runtime_error(message), position_(position) {}
    size_t position() const { return position_; }

  private:
    size_t position_;
};

// Parse an arithmetic expression in the variable z over integer literals with
// + - * / ^ and parentheses into a numerator/denominator pair. Fractions come
// from the division operator, so every value stays exact.
std::pair<Poly, Poly> parse_rational_expression(const std::string& text);

// Same, then normalized into a degree >= 2 map (std::domain_error on failure).
RationalMap parse_map(const std::string& text);

} // namespace amz::cli
