#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace polylog {

// Exact arbitrary-precision rational. cpp_rational keeps values canonical
// (reduced, positive denominator), so operator== is true equality.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

} // namespace polylog
