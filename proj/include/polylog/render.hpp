#pragma once

#include <string>

#include "polylog/big_float.hpp"
#include "polylog/word_poly.hpp"

namespace polylog {

// Inverse of the parse grammar; every renderer round-trips through the
// corresponding parser.
std::string render_point(const Point& p);              // 1/2-3i
std::string render_word(const Word& w);                // x(0)x(1); empty -> 1
std::string render_word_literal(const Word& w);        // [0, 1]
std::string render_poly(const WordPoly& p);            // 2 x(0)x(0) - x(1); zero -> 0

// Scientific decimal at the number of significant digits implied by tol
// (-log10(tol), plus two guard digits).  Complex values render as re+imi;
// an imaginary part at or below tol is suppressed.
std::string render_value(const BigReal& x, double tol);
std::string render_value(const BigComplex& z, double tol);

} // namespace polylog
