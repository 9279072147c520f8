#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace yangian {

// Exact rational scalar. GMP keeps values canonical (reduced, positive
// denominator) provided every value enters through these helpers;
// mpq_class's (num, den) constructor does NOT canonicalize on its own.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p/q" or a bare integer string. No decimals.
inline Rational rat_parse(const std::string& s) {
    if (s.empty() || s.find('.') != std::string::npos)
        throw std::invalid_argument("not an exact rational: '" + s + "'");
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("not an exact rational: '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

}  // namespace yangian
