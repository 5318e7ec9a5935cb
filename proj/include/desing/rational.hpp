#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace desing {

// Exact arbitrary-precision arithmetic. cpp_rational keeps gcd(num, den) = 1
// and den > 0, which is exactly the canonical form we need.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Renders "p" for integers and "p/q" otherwise.
inline std::string ratToString(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Int factorialInt(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace desing
