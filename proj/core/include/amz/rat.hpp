#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace amz {

// Exact rational numbers. mpq_class keeps values canonical (gcd(|num|, den) = 1,
// den > 0, zero is 0/1), which is exactly the representation we need.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::domain_error("malformed rational literal: " + s);
    if (q.get_den() == 0) throw std::domain_error("rational with zero denominator: " + s);
    q.canonicalize();
    return q;
}

} // namespace amz
