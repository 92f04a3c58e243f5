#include "polylog/big_float.hpp"

#include <stdexcept>

namespace polylog {

BigComplex BigComplex::from(const GaussianRational& q) {
  return {to_big(q.re), to_big(q.im)};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigReal n = b.norm();
  if (n.is_zero()) throw std::domain_error("complex division by zero");
  BigComplex c = a * b.conj();
  return {c.re / n, c.im / n};
}

BigReal big_abs(const BigComplex& z) { return sqrt(z.norm()); }

BigComplex big_log(const BigComplex& z) {
  if (z.is_zero()) throw std::domain_error("log of zero");
  // log|z| via 0.5*log(norm) avoids the intermediate sqrt.
  return {log(z.norm()) / 2, atan2(z.im, z.re)};
}

BigComplex big_pow(const BigComplex& z, long n) {
  if (n < 0) return BigComplex(1L) / big_pow(z, -n);
  BigComplex acc(1L);
  BigComplex base = z;
  for (; n > 0; n >>= 1) {
    if (n & 1) acc *= base;
    base *= base;
  }
  return acc;
}

BigReal big_pi() {
  // 4*atan(1) at the current working precision; recomputed on demand so the
  // value always matches the active PrecisionGuard.
  return 4 * atan(BigReal(1));
}

BigReal to_big(const Rational& q) {
  return BigReal(numerator(q)) / BigReal(denominator(q));
}

double abs_estimate(const BigComplex& z) {
  double r = static_cast<double>(z.re);
  double i = static_cast<double>(z.im);
  return (r < 0 ? -r : r) + (i < 0 ? -i : i);
}

std::string to_string(const BigReal& x, int digits) {
  // str's precision counts places after the point in scientific format, one
  // fewer than the significant digits asked for; 0 would mean "everything".
  int places = digits > 2 ? digits - 1 : 1;
  return x.str(places, std::ios_base::scientific);
}

} // namespace polylog
