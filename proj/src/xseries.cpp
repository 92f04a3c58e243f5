#include "polylog/xseries.hpp"

#include <stdexcept>

namespace polylog {

XSeries XSeries::unit(int max_weight) {
  XSeries u;
  u.max_weight = max_weight;
  u.coeff.emplace(Word{}, BigComplex(1L));
  return u;
}

XSeries xs_mul(const XSeries& f, const XSeries& g) {
  if (f.max_weight != g.max_weight)
    throw std::invalid_argument("series truncated at different weights");
  XSeries h;
  h.max_weight = f.max_weight;
  for (const auto& [u, cu] : f.coeff) {
    if (cu.is_zero()) continue;
    for (const auto& [v, cv] : g.coeff) {
      if (u.size() + v.size() > static_cast<std::size_t>(h.max_weight)) break;
      h.add(concat(u, v), cu * cv);
    }
  }
  return h;
}

XSeries xs_inverse(const XSeries& f) {
  BigComplex lead = f.at(Word{});
  BigComplex d = lead - BigComplex(1L);
  if (!d.norm().is_zero())
    throw std::invalid_argument("series inverse needs unit constant term");

  XSeries g;
  g.max_weight = f.max_weight;
  g.add(Word{}, BigComplex(1L));
  // Fill by increasing weight: g(w) = -sum_{w = w1 w2, |w2| >= 1} g(w1) f(w2),
  // and every g(w1) needed is strictly shorter, hence already known.  Iterate
  // over known g-prefixes times f-terms instead of over target words.
  for (int wt = 1; wt <= f.max_weight; ++wt) {
    std::map<Word, BigComplex, WordLess> next;
    for (const auto& [u, cu] : g.coeff) {
      for (const auto& [v, cv] : f.coeff) {
        if (v.empty()) continue;
        if (u.size() + v.size() != static_cast<std::size_t>(wt)) continue;
        Word w = concat(u, v);
        auto [it, fresh] = next.try_emplace(w, cu * cv);
        if (!fresh) it->second += cu * cv;
      }
    }
    for (auto& [w, c] : next) g.add(w, -c);
  }
  return g;
}

XSeries xs_substitute(
    const XSeries& f,
    const std::map<Point, std::map<Point, int, std::less<Point>>,
                   std::less<Point>>& rows) {
  XSeries h;
  h.max_weight = f.max_weight;
  for (const auto& [w, c] : f.coeff) {
    if (c.is_zero()) continue;
    // Expand the product of letter images over all choices.
    std::map<Word, long, WordLess> expansion;
    expansion.emplace(Word{}, 1);
    for (const Letter& l : w) {
      auto row = rows.find(l);
      if (row == rows.end())
        throw std::invalid_argument("letter without a substitution row");
      std::map<Word, long, WordLess> grown;
      for (const auto& [prefix, mult] : expansion) {
        for (const auto& [target, k] : row->second) {
          if (k == 0) continue;
          Word ext = prefix;
          ext.push_back(target);
          grown[ext] += mult * k;
        }
      }
      expansion = std::move(grown);
    }
    for (const auto& [w2, mult] : expansion)
      if (mult != 0) h.add(w2, c * BigReal(mult));
  }
  return h;
}

XSeries xs_exp_letter(const Point& c, const BigComplex& t, int max_weight) {
  XSeries e;
  e.max_weight = max_weight;
  BigComplex term(1L);
  Word w;
  e.add(w, term);
  for (int n = 1; n <= max_weight; ++n) {
    term = term * t / BigReal(n);
    w.push_back(c);
    e.add(w, term);
  }
  return e;
}

} // namespace polylog
