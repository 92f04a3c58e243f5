#pragma once

#include "polylog/word.hpp"

#include <vector>

namespace polylog {

// Explicit total order on a finite letter set. Lyndon words are relative to
// this order; by convention x_b is listed first so that x_b itself is the
// smallest letter and Lyndon words other than x_b avoid ending in it.
class LetterOrder {
public:
  explicit LetterOrder(std::vector<Point> letters);

  // Letters sorted (re, im) with `first` moved to the front.
  static LetterOrder with_first(std::vector<Point> letters, const Point& first);

  const std::vector<Point>& letters() const { return letters_; }
  // Rank of a letter; throws UnknownLetter if absent.
  size_t index(const Point& p) const;
  bool less(const Point& x, const Point& y) const { return index(x) < index(y); }
  // Lexicographic word comparison in this order (not graded).
  bool word_less(const Word& u, const Word& v) const;

private:
  std::vector<Point> letters_;
};

// w is Lyndon iff nonempty and strictly smaller than each of its proper
// suffixes (lexicographically in `ord`).
bool is_lyndon(const Word& w, const LetterOrder& ord);

// Chen–Fox–Lyndon factorization via Duval's algorithm: returns the unique
// non-increasing sequence of Lyndon words whose concatenation is w.
std::vector<Word> lyndon_factorization(const Word& w, const LetterOrder& ord);

} // namespace polylog
