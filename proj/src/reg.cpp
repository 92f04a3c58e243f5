#include "polylog/reg.hpp"

namespace polylog {

namespace {

// w = core x_b^n with maximal n; returns n.
size_t strip_suffix(const Word& w, const Point& b, Word& core) {
  size_t n = 0;
  while (n < w.size() && w[w.size() - 1 - n] == b) ++n;
  core.assign(w.begin(), w.end() - n);
  return n;
}

// w = x_a^m core with maximal m; returns m.
size_t strip_prefix(const Word& w, const Point& a, Word& core) {
  size_t m = 0;
  while (m < w.size() && w[m] == a) ++m;
  core.assign(w.begin() + m, w.end());
  return m;
}

Word letter_power(const Point& c, size_t n) { return Word(n, c); }

} // namespace

bool in_Ab(const Word& w, const Point& b) { return w.empty() || w.back() != b; }

bool in_Aab(const Word& w, const Point& a, const Point& b) {
  return w.empty() || (w.front() != a && w.back() != b);
}

bool in_Ab(const WordPoly& p, const Point& b) {
  for (auto& [w, c] : p.terms())
    if (!in_Ab(w, b)) return false;
  return true;
}

bool in_Aab(const WordPoly& p, const Point& a, const Point& b) {
  for (auto& [w, c] : p.terms())
    if (!in_Aab(w, a, b)) return false;
  return true;
}

WordPoly reg_b(const Word& w, const Point& b) {
  Word core;
  size_t n = strip_suffix(w, b, core);
  WordPoly r;
  for (size_t j = 0; j <= n; ++j) {
    WordPoly part = shuffle(concat(core, letter_power(b, n - j)), letter_power(b, j));
    if (j % 2) part *= Rational(-1);
    r += part;
  }
  return r;
}

WordPoly reg_b(const WordPoly& p, const Point& b) {
  WordPoly r;
  for (auto& [w, c] : p.terms()) r += reg_b(w, b) * c;
  return r;
}

WordPoly reg_ab(const Word& w, const Point& a, const Point& b) {
  Word tail_stripped;
  size_t n = strip_suffix(w, b, tail_stripped);
  Word core;
  size_t m = strip_prefix(tail_stripped, a, core);
  // Note the order: the b-suffix is stripped first, so a word x_a^k alone is
  // treated as pure prefix (m = k, n = 0) unless a == b is ever allowed,
  // which it is not.
  WordPoly r;
  for (size_t i = 0; i <= m; ++i)
    for (size_t j = 0; j <= n; ++j) {
      Word middle = concat(letter_power(a, m - i), concat(core, letter_power(b, n - j)));
      WordPoly part = shuffle_poly(WordPoly(letter_power(a, i)),
                                   shuffle(middle, letter_power(b, j)));
      if ((i + j) % 2) part *= Rational(-1);
      r += part;
    }
  return r;
}

WordPoly reg_ab(const WordPoly& p, const Point& a, const Point& b) {
  WordPoly r;
  for (auto& [w, c] : p.terms()) r += reg_ab(w, a, b) * c;
  return r;
}

WordPoly reconstruct_b(const Word& w, const Point& b) {
  Word core;
  size_t n = strip_suffix(w, b, core);
  WordPoly r;
  for (size_t j = 0; j <= n; ++j)
    r += shuffle_poly(reg_b(concat(core, letter_power(b, n - j)), b),
                      WordPoly(letter_power(b, j)));
  return r;
}

WordPoly reconstruct_ab(const Word& w, const Point& a, const Point& b) {
  Word tail_stripped;
  size_t n = strip_suffix(w, b, tail_stripped);
  Word core;
  size_t m = strip_prefix(tail_stripped, a, core);
  WordPoly r;
  for (size_t i = 0; i <= m; ++i)
    for (size_t j = 0; j <= n; ++j) {
      Word middle = concat(letter_power(a, m - i), concat(core, letter_power(b, n - j)));
      r += shuffle_poly(WordPoly(letter_power(a, i)),
                        shuffle_poly(reg_ab(middle, a, b), WordPoly(letter_power(b, j))));
    }
  return r;
}

} // namespace polylog
