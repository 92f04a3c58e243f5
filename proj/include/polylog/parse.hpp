#pragma once

#include <string>

#include "polylog/word_poly.hpp"

namespace polylog {

// Text grammar (whitespace-tolerant; all parsers consume the whole string
// and throw ParseError with the offending 0-based column):
//
//   RAT   := [-]INT[/INT]
//   point := RAT | RATi | [-]i | RAT(+|-)RATi | RAT(+|-)i
//   word  := '[' (point (',' point)*)? ']'
//   poly  := term ((+|-) term)* ; term := [RAT] factor* | RAT | 1 ;
//            factor := 'x(' point ')'
Point parse_point(const std::string& text);
Word parse_word(const std::string& text);
WordPoly parse_word_poly(const std::string& text);

} // namespace polylog
