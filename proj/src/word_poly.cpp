#include "polylog/word_poly.hpp"

namespace polylog {

namespace {

struct ShuffleMemo {
  // Keyed on the (suffix, suffix) pair actually recursed on. Symmetric, so
  // the pair is stored with the graded-lex smaller word first.
  std::map<std::pair<Word, Word>, WordPoly> cache;

  const WordPoly& run(const Word& u, const Word& v) {
    if (WordLess{}(v, u)) return run(v, u);
    auto key = std::make_pair(u, v);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    WordPoly r;
    if (u.empty()) {
      r = WordPoly(v);
    } else if (v.empty()) {
      r = WordPoly(u);
    } else {
      // l1 w1 sh l2 w2 = l1 (w1 sh l2 w2) + l2 (l1 w1 sh w2)
      Word u_tail(u.begin() + 1, u.end());
      Word v_tail(v.begin() + 1, v.end());
      const WordPoly& left = run(u_tail, v);
      const WordPoly& right = run(u, v_tail);
      for (auto& [w, c] : left.terms()) {
        Word p;
        p.reserve(w.size() + 1);
        p.push_back(u.front());
        p.insert(p.end(), w.begin(), w.end());
        r.add_term(p, c);
      }
      for (auto& [w, c] : right.terms()) {
        Word p;
        p.reserve(w.size() + 1);
        p.push_back(v.front());
        p.insert(p.end(), w.begin(), w.end());
        r.add_term(p, c);
      }
    }
    return cache.emplace(std::move(key), std::move(r)).first->second;
  }
};

} // namespace

WordPoly shuffle(const Word& u, const Word& v) {
  ShuffleMemo memo;
  return memo.run(u, v);
}

WordPoly shuffle_poly(const WordPoly& p, const WordPoly& q) {
  ShuffleMemo memo;
  WordPoly r;
  for (auto& [u, cu] : p.terms())
    for (auto& [v, cv] : q.terms()) {
      Rational c = cu * cv;
      for (auto& [w, k] : memo.run(u, v).terms()) r.add_term(w, c * k);
    }
  return r;
}

WordPoly shuffle_power(const WordPoly& p, unsigned n) {
  WordPoly r = WordPoly::unit();
  for (unsigned i = 0; i < n; ++i) r = shuffle_poly(r, p);
  return r;
}

WordPoly concat_poly(const WordPoly& p, const WordPoly& q) {
  WordPoly r;
  for (auto& [u, cu] : p.terms())
    for (auto& [v, cv] : q.terms()) r.add_term(concat(u, v), cu * cv);
  return r;
}

Word antipode_word(const Word& w, int& sign) {
  sign = (w.size() % 2 == 0) ? 1 : -1;
  return Word(w.rbegin(), w.rend());
}

WordPoly antipode(const Word& w) {
  int sign;
  Word r = antipode_word(w, sign);
  return WordPoly(std::move(r), Rational(sign));
}

WordPoly antipode(const WordPoly& p) {
  WordPoly r;
  for (auto& [w, c] : p.terms()) {
    int sign;
    Word rev = antipode_word(w, sign);
    r.add_term(rev, sign > 0 ? c : -c);
  }
  return r;
}

} // namespace polylog
