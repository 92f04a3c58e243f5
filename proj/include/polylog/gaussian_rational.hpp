#pragma once

#include "polylog/rational.hpp"

#include <compare>
#include <stdexcept>
#include <string>

namespace polylog {

// Element of Q(i): re + im*i with exact rational parts. This is the scalar
// field for singular points, Moebius maps and series labels; everything that
// must be compared for exact equality lives here rather than in floats.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r) {}
  GaussianRational(long r, long i) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  bool is_one() const { return re == 1 && im == 0; }

  GaussianRational conj() const { return {re, -im}; }
  // |z|^2, exact.
  Rational norm2() const { return re * re + im * im; }

  friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend GaussianRational operator-(const GaussianRational& x) { return {-x.re, -x.im}; }
  friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) {
    Rational n = y.norm2();
    if (n == 0) throw std::domain_error("GaussianRational: division by zero");
    GaussianRational t = x * y.conj();
    return {t.re / n, t.im / n};
  }
  GaussianRational& operator+=(const GaussianRational& y) { return *this = *this + y; }
  GaussianRational& operator-=(const GaussianRational& y) { return *this = *this - y; }
  GaussianRational& operator*=(const GaussianRational& y) { return *this = *this * y; }
  GaussianRational& operator/=(const GaussianRational& y) { return *this = *this / y; }

  friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
    return x.re == y.re && x.im == y.im;
  }
  // Lexicographic (re, im); an arbitrary but total order used for canonical
  // word/letter ordering and map keys, not a magnitude comparison.
  friend std::strong_ordering operator<=>(const GaussianRational& x, const GaussianRational& y) {
    if (x.re < y.re) return std::strong_ordering::less;
    if (y.re < x.re) return std::strong_ordering::greater;
    if (x.im < y.im) return std::strong_ordering::less;
    if (y.im < x.im) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  GaussianRational pow(long n) const;

  std::string str() const;
};

inline GaussianRational GaussianRational::pow(long n) const {
  GaussianRational base = *this, acc{Rational(1)};
  if (n < 0) {
    base = GaussianRational{Rational(1)} / base;
    n = -n;
  }
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

} // namespace polylog
