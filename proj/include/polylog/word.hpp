#pragma once

#include "polylog/gaussian_rational.hpp"

#include <optional>
#include <vector>

namespace polylog {

// A singular point c in Sigma; the letter x_c of the alphabet is identified
// with its point.
using Point = GaussianRational;
using Letter = Point;

// Word in the letters x_c, stored as the sequence of points. The empty word
// is the algebra unit.
using Word = std::vector<Letter>;

// The point at infinity is not a letter (x_inf = 0); it only appears as a
// Moebius image / fixed point.
struct ExtendedPoint {
  std::optional<Point> p; // nullopt = infinity

  ExtendedPoint() = default;
  ExtendedPoint(Point q) : p(std::move(q)) {}
  static ExtendedPoint infinity() { return ExtendedPoint{}; }
  bool is_infinity() const { return !p.has_value(); }
  const Point& finite() const { return *p; }

  friend bool operator==(const ExtendedPoint& x, const ExtendedPoint& y) {
    if (x.is_infinity() || y.is_infinity()) return x.is_infinity() == y.is_infinity();
    return *x.p == *y.p;
  }
  // Finite points first (by their order), infinity last.
  friend bool operator<(const ExtendedPoint& x, const ExtendedPoint& y) {
    if (x.is_infinity()) return false;
    if (y.is_infinity()) return true;
    return *x.p < *y.p;
  }
};

// Graded lexicographic order: by length first, then letterwise by the
// canonical (re, im) point order. Total and deterministic; used everywhere a
// canonical enumeration or map key order is needed.
struct WordLess {
  bool operator()(const Word& u, const Word& v) const {
    if (u.size() != v.size()) return u.size() < v.size();
    for (size_t i = 0; i < u.size(); ++i) {
      auto c = u[i] <=> v[i];
      if (c != 0) return c < 0;
    }
    return false;
  }
};

inline Word concat(const Word& u, const Word& v) {
  Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

// All splits w = w1 w2, including the two trivial ones; |w|+1 pairs in order
// of growing |w1|.
inline std::vector<std::pair<Word, Word>> deconcatenations(const Word& w) {
  std::vector<std::pair<Word, Word>> out;
  out.reserve(w.size() + 1);
  for (size_t i = 0; i <= w.size(); ++i)
    out.emplace_back(Word(w.begin(), w.begin() + i), Word(w.begin() + i, w.end()));
  return out;
}

} // namespace polylog
