#pragma once

#include <map>

#include "polylog/big_float.hpp"
#include "polylog/sigma.hpp"
#include "polylog/word_poly.hpp"

namespace polylog {

// Noncommutative power series in the dual letters X_c (one per point of
// Sigma), truncated at a fixed total weight.  Words index monomials; missing
// words mean coefficient zero.  The concatenation product is the series
// product.
struct XSeries {
  int max_weight = 0;
  std::map<Word, BigComplex, WordLess> coeff;

  BigComplex at(const Word& w) const {
    auto it = coeff.find(w);
    return it == coeff.end() ? BigComplex() : it->second;
  }
  void add(const Word& w, const BigComplex& c) {
    if (static_cast<int>(w.size()) > max_weight) return;
    auto [it, fresh] = coeff.try_emplace(w, c);
    if (!fresh) it->second += c;
  }

  static XSeries unit(int max_weight);
};

// Product truncated at the common max_weight (which must agree).
XSeries xs_mul(const XSeries& f, const XSeries& g);

// Series inverse of f with unit constant term: g(1) = 1 and, grade by grade,
// g(w) = -sum over proper prefixes w = w1 w2, w1 != w, of g(w1) f(w2).
// Then g f = f g = 1 up to the truncation weight.
XSeries xs_inverse(const XSeries& f);

// Letter substitution X_c -> sum_d rows[c][d] X_d, extended multiplicatively;
// rows is the output of act_on_dual_alphabet.
XSeries xs_substitute(
    const XSeries& f,
    const std::map<Point, std::map<Point, int, std::less<Point>>,
                   std::less<Point>>& rows);

// exp(t X_c) truncated: sum_n t^n/n! X_c^n.
XSeries xs_exp_letter(const Point& c, const BigComplex& t, int max_weight);

} // namespace polylog
