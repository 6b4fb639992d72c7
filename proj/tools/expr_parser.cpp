#include "expr_parser.hpp"

#include <cctype>

namespace amz::cli {

namespace {

// A rational function under construction. Kept reduced so intermediate
// expressions stay small.
struct RatFunc {
    Poly num;
    Poly den;

    static RatFunc constant(Rat c) { return {Poly(std::move(c)), Poly(Rat(1))}; }
    static RatFunc variable() { return {Poly::variable(), Poly(Rat(1))}; }
};

RatFunc reduce(Poly num, Poly den, size_t pos) {
    if (den.is_zero()) throw parse_error(pos, "division by the zero function");
    if (num.is_zero()) return {Poly(), Poly(Rat(1))};
    const Poly g = poly_gcd(num, den);
    if (!g.is_one()) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    return {std::move(num), std::move(den)};
}

class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    RatFunc run() {
        RatFunc v = expression();
        skip_ws();
        if (pos_ != s_.size()) throw parse_error(pos_, "unexpected trailing input");
        return v;
    }

  private:
    RatFunc expression() {
        RatFunc acc = term();
        while (true) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                const char op = s_[pos_++];
                const size_t at = pos_;
                RatFunc rhs = term();
                Poly num = op == '+' ? acc.num * rhs.den + rhs.num * acc.den
                                     : acc.num * rhs.den - rhs.num * acc.den;
                acc = reduce(std::move(num), acc.den * rhs.den, at);
            } else {
                return acc;
            }
        }
    }

    RatFunc term() {
        RatFunc acc = unary();
        while (true) {
            skip_ws();
            if (peek() == '*' || peek() == '/') {
                const char op = s_[pos_++];
                const size_t at = pos_;
                RatFunc rhs = unary();
                if (op == '*') {
                    acc = reduce(acc.num * rhs.num, acc.den * rhs.den, at);
                } else {
                    if (rhs.num.is_zero()) throw parse_error(at, "division by zero");
                    acc = reduce(acc.num * rhs.den, acc.den * rhs.num, at);
                }
            } else {
                return acc;
            }
        }
    }

    RatFunc unary() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            RatFunc v = unary();
            v.num = -v.num;
            return v;
        }
        if (peek() == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    RatFunc power() {
        RatFunc base = atom();
        skip_ws();
        if (peek() != '^') return base;
        ++pos_;
        skip_ws();
        const size_t at = pos_;
        if (!std::isdigit(peek()))
            throw parse_error(pos_, "exponent must be a nonnegative integer literal");
        long e = 0;
        while (std::isdigit(peek())) {
            e = e * 10 + (s_[pos_++] - '0');
            if (e > 4096) throw parse_error(at, "exponent too large");
        }
        RatFunc out = RatFunc::constant(Rat(1));
        RatFunc b = base;
        long k = e;
        while (k) {
            if (k & 1) out = reduce(out.num * b.num, out.den * b.den, at);
            b = reduce(b.num * b.num, b.den * b.den, at);
            k >>= 1;
        }
        return out;
    }

    RatFunc atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw parse_error(pos_, "unexpected end of expression");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc v = expression();
            skip_ws();
            if (peek() != ')') throw parse_error(pos_, "expected ')'");
            ++pos_;
            return v;
        }
        if (c == 'z') {
            ++pos_;
            return RatFunc::variable();
        }
        if (std::isdigit(c)) {
            const size_t start = pos_;
            while (std::isdigit(peek())) ++pos_;
            return RatFunc::constant(rat_from_string(s_.substr(start, pos_ - start)));
        }
        throw parse_error(pos_, std::string("unexpected character '") + c + "'");
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace

std::pair<Poly, Poly> parse_rational_expression(const std::string& text) {
    RatFunc v = Parser(text).run();
    return {std::move(v.num), std::move(v.den)};
}

RationalMap parse_map(const std::string& text) {
    auto [num, den] = parse_rational_expression(text);
    return RationalMap(num, den);
}

} // namespace amz::cli
