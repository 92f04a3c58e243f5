#pragma once

#include "polylog/word.hpp"

#include <map>

namespace polylog {

// Finite Q-linear combination of words. Zero coefficients are never stored,
// so equal polynomials compare equal via the underlying map; iteration order
// is graded-lex, which makes rendering and enumeration deterministic.
class WordPoly {
public:
  using Terms = std::map<Word, Rational, WordLess>;

  WordPoly() = default;
  explicit WordPoly(Word w, Rational c = Rational(1)) {
    if (c != 0) terms_.emplace(std::move(w), std::move(c));
  }
  static WordPoly unit() { return WordPoly(Word{}); } // empty word, coefficient 1
  static WordPoly zero() { return WordPoly(); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  // Largest word length appearing (0 for the zero polynomial).
  size_t weight() const {
    size_t w = 0;
    for (auto& [word, c] : terms_) w = std::max(w, word.size());
    return w;
  }

  Rational coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  WordPoly& operator+=(const WordPoly& o) {
    for (auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  WordPoly& operator-=(const WordPoly& o) {
    for (auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  WordPoly& operator*=(const Rational& c) {
    if (c == 0) { terms_.clear(); return *this; }
    for (auto& [w, k] : terms_) k *= c;
    return *this;
  }
  friend WordPoly operator+(WordPoly x, const WordPoly& y) { return x += y; }
  friend WordPoly operator-(WordPoly x, const WordPoly& y) { return x -= y; }
  friend WordPoly operator*(WordPoly x, const Rational& c) { return x *= c; }
  friend WordPoly operator*(const Rational& c, WordPoly x) { return x *= c; }
  friend WordPoly operator-(WordPoly x) { return x *= Rational(-1); }
  friend bool operator==(const WordPoly& x, const WordPoly& y) { return x.terms_ == y.terms_; }

private:
  Terms terms_;
};

// Shuffle product of two words, e.g. x_a sh x_a x_b = 2 x_a x_a x_b + x_a x_b x_a.
// Memoized over suffix pairs internally.
WordPoly shuffle(const Word& u, const Word& v);

// Bilinear extension.
WordPoly shuffle_poly(const WordPoly& p, const WordPoly& q);

// n-th shuffle power of a polynomial; shuffle_power(x_c, n) = n! x_c^n.
WordPoly shuffle_power(const WordPoly& p, unsigned n);

// Concatenation product, extended bilinearly.
WordPoly concat_poly(const WordPoly& p, const WordPoly& q);

// Antipode S: signed reversal S(x_{c1}...x_{cn}) = (-1)^n x_{cn}...x_{c1},
// the inverse for the deconcatenation convolution:
//   sum over w = w1 w2 of S(w1) sh w2 = 0   (w nonempty).
Word antipode_word(const Word& w, int& sign);
WordPoly antipode(const Word& w);
WordPoly antipode(const WordPoly& p);

} // namespace polylog
