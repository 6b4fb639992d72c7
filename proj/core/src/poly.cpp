#include "amz/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "amz/errors.hpp"

namespace amz {

namespace {
const Rat kZero(0);
}

Poly::Poly(Rat constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> int_coeffs) {
    c_.reserve(int_coeffs.size());
    for (long v : int_coeffs) c_.emplace_back(v);
    trim();
}

Poly Poly::variable() { return monomial(1); }

Poly Poly::monomial(int k, Rat coeff) {
    Poly p;
    if (coeff == 0) return p;
    p.c_.assign(static_cast<size_t>(k) + 1, Rat(0));
    p.c_.back() = std::move(coeff);
    return p;
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

int Poly::degree() const {
    if (is_zero()) throw std::domain_error("degree of zero polynomial");
    return static_cast<int>(c_.size()) - 1;
}

const Rat& Poly::coeff(int k) const {
    if (k < 0 || static_cast<size_t>(k) >= c_.size()) return kZero;
    return c_[static_cast<size_t>(k)];
}

const Rat& Poly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

bool Poly::is_monic() const { return !is_zero() && c_.back() == 1; }

Poly Poly::monic() const {
    if (is_zero()) throw std::domain_error("monic form of zero polynomial");
    if (is_monic()) return *this;
    Poly r = *this;
    const Rat lc = r.c_.back();
    for (Rat& c : r.c_) c /= lc;
    return r;
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rat(static_cast<long>(k));
    return Poly(std::move(d));
}

Poly Poly::times_power(int k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.c_.assign(static_cast<size_t>(k), Rat(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (Rat& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Rat& s) {
    if (s == 0) return Poly();
    Poly r = a;
    for (Rat& c : r.c_) c *= s;
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero() || a.c_.size() < b.c_.size()) return {Poly(), a};
    std::vector<Rat> rem = a.c_;
    const size_t db = b.c_.size() - 1;
    std::vector<Rat> quot(a.c_.size() - db, Rat(0));
    const Rat& lc = b.c_.back();
    for (size_t k = a.c_.size(); k-- > db;) {
        if (rem[k] == 0) continue;
        Rat q = rem[k] / lc;
        quot[k - db] = q;
        for (size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.c_[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = Poly::divmod(a, b);
    if (!r.is_zero()) throw invariant_violation("exact_div left a nonzero remainder");
    return q;
}

Poly compose(const Poly& p, const Poly& q) {
    Poly acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * q + Poly(*it);
    return acc;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        const Rat& c = c_[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        Rat mag = neg ? Rat(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const bool unit = (mag == 1) && k > 0;
        if (!unit) os << mag.get_str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

} // namespace amz
