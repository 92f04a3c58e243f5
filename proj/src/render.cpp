#include "polylog/render.hpp"

#include <cmath>
#include <sstream>

namespace polylog {

namespace {

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

int digits_for(double tol) {
  if (!(tol > 0) || tol >= 1) return 3;
  return static_cast<int>(std::ceil(-std::log10(tol))) + 2;
}

} // namespace

std::string render_point(const Point& p) { return p.str(); }

std::string render_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w) {
    out += "x(";
    out += render_point(l);
    out += ')';
  }
  return out;
}

std::string render_word_literal(const Word& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += render_point(w[i]);
  }
  return out + "]";
}

std::string render_poly(const WordPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (w.empty())
      out += rational_str(mag); // bare coefficient stands for the unit word
    else {
      if (mag != 1) {
        out += rational_str(mag);
        out += ' ';
      }
      out += render_word(w);
    }
    first = false;
  }
  return out;
}

std::string render_value(const BigReal& x, double tol) {
  return to_string(x, digits_for(tol));
}

std::string render_value(const BigComplex& z, double tol) {
  double im = static_cast<double>(z.im);
  if (std::abs(im) <= tol) return render_value(z.re, tol);
  std::string out = render_value(z.re, tol);
  BigReal mag = z.im < 0 ? BigReal(-z.im) : z.im;
  out += z.im < 0 ? "-" : "+";
  out += to_string(mag, digits_for(tol));
  out += 'i';
  return out;
}

} // namespace polylog
