#include "polylog/parse.hpp"

#include <cctype>

#include "polylog/errors.hpp"

namespace polylog {

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected '") + c + "' in " + what);
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }
  std::size_t pos() const { return pos_; }

  Integer integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected digits");
    Integer v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  // [-]INT[/INT]; the leading sign may have been consumed by the caller.
  Rational rational(int sign) {
    Integer num = integer();
    Integer den = 1;
    if (eat('/')) {
      den = integer();
      if (den == 0) fail("zero denominator");
    }
    return Rational(sign < 0 ? -num : num, den);
  }

  int sign() { return eat('-') ? -1 : (eat('+'), 1); }

  Point point() {
    skip_ws();
    int sg = sign();
    if (eat('i')) return GaussianRational(Rational(0), Rational(sg));
    Rational first = rational(sg);
    if (eat('i')) return GaussianRational(Rational(0), first);
    skip_ws();
    if (peek() == '+' || peek() == '-') {
      std::size_t mark = pos_;
      int sg2 = sign();
      skip_ws();
      if (eat('i')) return GaussianRational(first, Rational(sg2));
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        pos_ = mark;
        return GaussianRational(first);
      }
      Rational second = rational(sg2);
      expect('i', "imaginary part");
      return GaussianRational(first, second);
    }
    return GaussianRational(first);
  }

  Word word() {
    skip_ws();
    expect('[', "word literal");
    Word w;
    skip_ws();
    if (eat(']')) return w;
    while (true) {
      w.push_back(point());
      skip_ws();
      if (eat(']')) return w;
      expect(',', "word literal");
    }
  }

  // One x(point) factor sequence; empty means the unit word was written
  // implicitly (bare coefficient).
  Word factors() {
    Word w;
    while (true) {
      skip_ws();
      if (peek() != 'x') return w;
      ++pos_;
      expect('(', "letter");
      w.push_back(point());
      skip_ws();
      expect(')', "letter");
    }
  }

  WordPoly poly() {
    WordPoly p;
    bool first_term = true;
    while (true) {
      skip_ws();
      if (done()) {
        if (first_term) fail("empty polynomial");
        return p;
      }
      int sg = 1;
      if (!first_term) {
        if (eat('+'))
          sg = 1;
        else if (eat('-'))
          sg = -1;
        else
          fail("expected '+' or '-' between terms");
        skip_ws();
      } else if (eat('-')) {
        sg = -1;
        skip_ws();
      }
      Rational coeff(1);
      bool bare = !std::isdigit(static_cast<unsigned char>(peek()));
      if (!bare) coeff = rational(1);
      skip_ws();
      Word w = factors();
      if (bare && w.empty()) fail("expected a coefficient or an x(...) factor");
      p.add_term(w, sg < 0 ? -coeff : coeff);
      first_term = false;
    }
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

template <typename T, typename Fn>
T whole(const std::string& text, Fn&& fn) {
  Cursor c(text);
  T value = fn(c);
  c.skip_ws();
  if (!c.done()) c.fail("trailing input");
  return value;
}

} // namespace

Point parse_point(const std::string& text) {
  return whole<Point>(text, [](Cursor& c) { return c.point(); });
}

Word parse_word(const std::string& text) {
  return whole<Word>(text, [](Cursor& c) { return c.word(); });
}

WordPoly parse_word_poly(const std::string& text) {
  return whole<WordPoly>(text, [](Cursor& c) { return c.poly(); });
}

} // namespace polylog
