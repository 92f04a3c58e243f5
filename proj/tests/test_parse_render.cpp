#include "doctest.h"

#include <string>
#include <vector>

#include "polylog/errors.hpp"
#include "polylog/parse.hpp"
#include "polylog/render.hpp"

namespace polylog {
namespace {

const Point kZero(0), kOne(1), kMinusOne(-1);

TEST_CASE("point text round trips") {
  // Spellings the renderer itself produces survive a full cycle verbatim.
  const std::vector<std::string> canonical = {
      "0",  "1",      "-1",        "1/2", "-3/4",   "2i",
      "1i", "1/2-3i", "-1/2+2/3i", "5",   "3-2/5i", "-7/3+1i",
  };
  for (const auto& text : canonical) {
    CAPTURE(text);
    Point p = parse_point(text);
    CHECK(render_point(p) == text);
  }

  // Bare-i and whitespace spellings parse but render normalized.
  CHECK(parse_point("i") == Point(GaussianRational(0, 1)));
  CHECK(render_point(parse_point("-i")) == "-1i");
  CHECK(render_point(parse_point("1+i")) == "1+1i");
  CHECK(parse_point(" 1/2 ") == parse_point("1/2"));
  CHECK(parse_point("-0") == kZero);
}

TEST_CASE("point parse errors carry the offending column") {
  CHECK_THROWS_AS(parse_point(""), ParseError);
  CHECK_THROWS_AS(parse_point("x"), ParseError);
  CHECK_THROWS_AS(parse_point("1/0"), ParseError);
  CHECK_THROWS_AS(parse_point("1+"), ParseError);

  try {
    parse_point("1/2extra");
    FAIL("expected trailing input to be rejected");
  } catch (const ParseError& e) {
    CHECK(e.at == 3);
    CHECK(std::string(e.what()).find("column 3") != std::string::npos);
  }
}

TEST_CASE("word literal round trips") {
  CHECK(parse_word("[]").empty());
  CHECK(parse_word("[ -1, 0 ]") == (Word{kMinusOne, kZero}));
  CHECK(parse_word("[0,1,1]") == (Word{kZero, kOne, kOne}));
  CHECK(render_word_literal(Word{kZero, kOne}) == "[0, 1]");
  CHECK(render_word_literal(Word{}) == "[]");

  Word w{kMinusOne, Point(GaussianRational(0, 1)), kZero};
  CHECK(parse_word(render_word_literal(w)) == w);

  CHECK_THROWS_AS(parse_word("[0, 1"), ParseError);
  CHECK_THROWS_AS(parse_word("0, 1]"), ParseError);
  try {
    parse_word("[0; 1]");
    FAIL("expected the separator to be rejected");
  } catch (const ParseError& e) {
    CHECK(e.at == 2);
  }
}

TEST_CASE("polynomial text parses to canonical form") {
  WordPoly p = parse_word_poly("x(0)x(1) + x(1)x(0)");
  CHECK(p.coeff(Word{kZero, kOne}) == Rational(1));
  CHECK(p.coeff(Word{kOne, kZero}) == Rational(1));
  CHECK(p.terms().size() == 2);

  CHECK(parse_word_poly("2 x(0)x(0)") ==
        WordPoly((Word{kZero, kZero}), Rational(2)));
  CHECK(parse_word_poly("-x(0)x(-1)") ==
        WordPoly((Word{kZero, kMinusOne}), Rational(-1)));
  CHECK(parse_word_poly("1") == WordPoly::unit());
  CHECK(parse_word_poly("0") == WordPoly::zero());
  CHECK(parse_word_poly("3/2 x(1) - 3/2 x(1)") == WordPoly::zero());

  WordPoly mixed = parse_word_poly("1/2 x(1/2)x(-i) - 2 + x(0)");
  CHECK(mixed.coeff(Word{Point(Rational(1, 2)), Point(GaussianRational(0, -1))}) ==
        Rational(1, 2));
  CHECK(mixed.coeff(Word{}) == Rational(-2));
  CHECK(mixed.coeff(Word{kZero}) == Rational(1));

  CHECK_THROWS_AS(parse_word_poly("x(0) +"), ParseError);
  CHECK_THROWS_AS(parse_word_poly("x0"), ParseError);
  CHECK_THROWS_AS(parse_word_poly(""), ParseError);
}

TEST_CASE("rendered polynomials parse back unchanged") {
  std::vector<WordPoly> polys;
  polys.push_back(WordPoly::unit());
  polys.push_back(WordPoly::zero());
  polys.push_back(WordPoly((Word{kZero, kOne}), Rational(-3, 7)));
  {
    WordPoly p((Word{kOne}), Rational(2));
    p.add_term(Word{kZero, kMinusOne}, Rational(-1));
    p.add_term(Word{}, Rational(1, 3));
    polys.push_back(p);
  }
  for (const auto& p : polys) {
    std::string text = render_poly(p);
    CAPTURE(text);
    CHECK(parse_word_poly(text) == p);
  }

  CHECK(render_word(Word{kZero, kOne}) == "x(0)x(1)");
  CHECK(render_word(Word{}) == "1");
  CHECK(render_poly(WordPoly::zero()) == "0");
}

TEST_CASE("value rendering respects the tolerance") {
  BigReal x("1.64493406684822643647");
  // 1e-10 asks for 12 significant digits.
  CHECK(render_value(x, 1e-10) == "1.64493406685e+00");
  CHECK(render_value(BigReal(-2), 1e-4) == "-2.00000e+00");

  // Imaginary parts at noise level are suppressed, real ones kept.
  BigComplex noisy(x, BigReal(1e-14));
  CHECK(render_value(noisy, 1e-10) == "1.64493406685e+00");
  BigComplex genuine(BigReal(0), BigReal(1));
  std::string s = render_value(genuine, 1e-6);
  CHECK(s.find("i") != std::string::npos);
}

} // namespace
} // namespace polylog
