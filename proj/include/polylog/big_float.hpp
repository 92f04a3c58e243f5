#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "polylog/gaussian_rational.hpp"

namespace polylog {

// Arbitrary-precision real with precision chosen at runtime.  Expression
// templates are off so BigReal behaves like a plain value type (auto, member
// structs, std containers all work without surprises).
using BigReal = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

// Scoped working precision.  MPFR precision is per-thread global state, so
// every entry point that computes must install one of these; nesting restores
// the previous setting on exit.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits)
      : saved_(BigReal::default_precision()) {
    // digits10 ~= bits * log10(2), rounded up plus a couple of guard digits.
    unsigned digits = static_cast<unsigned>(bits * 0.30103) + 3;
    BigReal::default_precision(digits);
  }
  ~PrecisionGuard() { BigReal::default_precision(saved_); }

  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

// Complex numbers over BigReal.  Boost.Multiprecision has no complex adaptor
// for the MPFR backend in the version we build against, so we carry the pair
// ourselves; only the handful of operations the evaluator needs are provided.
struct BigComplex {
  BigReal re;
  BigReal im;

  BigComplex() : re(0), im(0) {}
  explicit BigComplex(const BigReal& r) : re(r), im(0) {}
  BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(long r) : re(r), im(0) {}

  static BigComplex from(const GaussianRational& q);

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  BigComplex conj() const { return {re, -im}; }
  BigReal norm() const { return re * re + im * im; } // |.|^2

  BigComplex& operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  BigComplex& operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }

  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }

  friend BigComplex operator*(const BigComplex& a, const BigReal& s) {
    return {a.re * s, a.im * s};
  }
  friend BigComplex operator*(const BigReal& s, const BigComplex& a) { return a * s; }

  friend BigComplex operator/(const BigComplex& a, const BigReal& s) {
    return {a.re / s, a.im / s};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
};

BigReal big_abs(const BigComplex& z);

// Principal branch: log|z| + i arg(z), arg in (-pi, pi].  Throws on z == 0.
BigComplex big_log(const BigComplex& z);

BigComplex big_pow(const BigComplex& z, long n); // integer n, negative allowed

BigReal big_pi();

BigReal to_big(const Rational& q);

// Upper bound on |z| cheap enough for error accounting: |re| + |im|.
double abs_estimate(const BigComplex& z);

// Rounded decimal rendering with the given number of significant digits,
// scientific format ("1.2345e-01").
std::string to_string(const BigReal& x, int digits);

} // namespace polylog
