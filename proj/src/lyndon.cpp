#include "polylog/lyndon.hpp"

#include "polylog/errors.hpp"

#include <algorithm>

namespace polylog {

LetterOrder::LetterOrder(std::vector<Point> letters) : letters_(std::move(letters)) {
  for (size_t i = 0; i < letters_.size(); ++i)
    for (size_t j = i + 1; j < letters_.size(); ++j)
      if (letters_[i] == letters_[j]) throw Error("LetterOrder: duplicate letter");
}

LetterOrder LetterOrder::with_first(std::vector<Point> letters, const Point& first) {
  std::sort(letters.begin(), letters.end(),
            [](const Point& x, const Point& y) { return x < y; });
  auto it = std::find(letters.begin(), letters.end(), first);
  if (it == letters.end()) throw UnknownLetter("LetterOrder: distinguished letter not in set");
  std::rotate(letters.begin(), it, it + 1);
  return LetterOrder(std::move(letters));
}

size_t LetterOrder::index(const Point& p) const {
  for (size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] == p) return i;
  throw UnknownLetter("LetterOrder: letter not in set: " + p.str());
}

bool LetterOrder::word_less(const Word& u, const Word& v) const {
  size_t n = std::min(u.size(), v.size());
  for (size_t i = 0; i < n; ++i) {
    size_t a = index(u[i]), b = index(v[i]);
    if (a != b) return a < b;
  }
  return u.size() < v.size();
}

bool is_lyndon(const Word& w, const LetterOrder& ord) {
  if (w.empty()) return false;
  for (size_t i = 1; i < w.size(); ++i) {
    Word suffix(w.begin() + i, w.end());
    if (!ord.word_less(w, suffix)) return false;
  }
  return true;
}

std::vector<Word> lyndon_factorization(const Word& w, const LetterOrder& ord) {
  // Duval: scan for the longest Lyndon prefix (as a power), emit, repeat.
  std::vector<size_t> s(w.size());
  for (size_t i = 0; i < w.size(); ++i) s[i] = ord.index(w[i]);

  std::vector<Word> out;
  size_t i = 0, n = w.size();
  while (i < n) {
    size_t j = i + 1, k = i;
    while (j < n && s[k] <= s[j]) {
      if (s[k] < s[j])
        k = i; // still extending one Lyndon word
      else
        ++k;   // periodic repeat
      ++j;
    }
    while (i <= k) {
      out.emplace_back(w.begin() + i, w.begin() + i + (j - k));
      i += j - k;
    }
  }
  return out;
}

} // namespace polylog
