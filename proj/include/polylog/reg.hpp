#pragma once

#include "polylog/word_poly.hpp"

namespace polylog {

// Membership in the subalgebras used for regularized limits:
//   A^b  = span of words not ending in x_b,
//   A^ab = span of words not starting in x_a and not ending in x_b.
// The empty word belongs to both.
bool in_Ab(const Word& w, const Point& b);
bool in_Aab(const Word& w, const Point& a, const Point& b);
bool in_Ab(const WordPoly& p, const Point& b);
bool in_Aab(const WordPoly& p, const Point& a, const Point& b);

// Shuffle projection onto A^b along trailing-x_b powers:
//   reg_b(w_b x_b^n) = sum_{j=0..n} (-1)^j (w_b x_b^{n-j}) sh x_b^j
// extended linearly. Idempotent; the identity on A^b; a shuffle-algebra
// homomorphism.
WordPoly reg_b(const Word& w, const Point& b);
WordPoly reg_b(const WordPoly& p, const Point& b);

// Two-sided projection onto A^ab, stripping the maximal x_a-prefix and
// x_b-suffix:
//   reg_ab(x_a^m w x_b^n) =
//     sum_{i,j} (-1)^{i+j} x_a^i sh (x_a^{m-i} w x_b^{n-j}) sh x_b^j.
WordPoly reg_ab(const Word& w, const Point& a, const Point& b);
WordPoly reg_ab(const WordPoly& p, const Point& a, const Point& b);

// Inverse direction of the projections: rebuild w from its regularized
// pieces. Both must return exactly {w: 1}; used as a structural self-check.
//   variant b:  sum_j reg_b(w_b x_b^{n-j}) sh x_b^j
//   variant ab: sum_{i,j} x_a^i sh reg_ab(x_a^{m-i} w_ab x_b^{n-j}) sh x_b^j
WordPoly reconstruct_b(const Word& w, const Point& b);
WordPoly reconstruct_ab(const Word& w, const Point& a, const Point& b);

} // namespace polylog
