#pragma once

#include "polylog/word_poly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace polylog {

// The singular set Sigma together with the distinguished endpoints a, b of
// the limit path. Nearest-point flags record whether |a - b| <= |c - b|
// (resp. |b - a| <= |c - a|) for every other c in Sigma; limit values in the
// corresponding direction are only defined when the flag holds.
class SigmaConfig {
public:
  SigmaConfig(std::vector<Point> points, Point a, Point b);

  const std::vector<Point>& points() const { return points_; }
  const Point& a() const { return a_; }
  const Point& b() const { return b_; }
  bool nearest_ab() const { return nearest_ab_; } // a is a nearest neighbour of b
  bool nearest_ba() const { return nearest_ba_; } // b is a nearest neighbour of a
  bool contains(const Point& p) const;

  // Same Sigma with the roles of a and b exchanged.
  SigmaConfig swapped() const { return SigmaConfig(points_, b_, a_); }

private:
  std::vector<Point> points_; // sorted by (re, im), duplicates rejected
  Point a_, b_;
  bool nearest_ab_, nearest_ba_;
};

// z -> (p z + q) / (r z + s) on the Riemann sphere, with exact Gaussian
// rational entries and nonzero determinant.
struct MobiusMap {
  GaussianRational p, q, r, s;

  MobiusMap(GaussianRational p_, GaussianRational q_, GaussianRational r_, GaussianRational s_);

  ExtendedPoint apply(const ExtendedPoint& z) const;
  ExtendedPoint apply(const Point& z) const { return apply(ExtendedPoint(z)); }
  MobiusMap compose(const MobiusMap& o) const; // this after o
  // Equal as maps, i.e. matrices proportional over Q(i).
  bool same_map(const MobiusMap& o) const;

  static MobiusMap identity() {
    return MobiusMap(GaussianRational(1), GaussianRational(0), GaussianRational(0),
                     GaussianRational(1));
  }
};

// The permutation of Sigma u {inf} induced by m; throws NotASymmetry if m
// does not map that set onto itself.
std::map<ExtendedPoint, ExtendedPoint> induced_permutation(const MobiusMap& m,
                                                           const SigmaConfig& cfg);

// Action on letters: sigma(x_c) = x_{sigma(c)} - x_{sigma(inf)}, where
// x_inf = 0. Result has one or two terms.
WordPoly act_on_letter(const MobiusMap& m, const SigmaConfig& cfg, const Point& c);

// Extension to word polynomials as a concatenation-algebra homomorphism
// (letterwise substitution); weight of every term is preserved.
WordPoly act_on_poly(const MobiusMap& m, const SigmaConfig& cfg, const WordPoly& p);

// tau = sigma after the antipode; requires sigma(a) = b and sigma(b) = a
// (NotASwap otherwise). The duality map on arguments of the limit values.
WordPoly tau(const MobiusMap& m, const SigmaConfig& cfg, const WordPoly& p);
WordPoly tau(const MobiusMap& m, const SigmaConfig& cfg, const Word& w);

// Normal form of an involutive a<->b swap. Every such Moebius map is either
//   z -> a + b - z                        (fixes infinity), or
//   z -> alpha - (alpha-a)(alpha-b)/(alpha-z)   with alpha = sigma(inf) finite.
struct InvolutionForm {
  bool fixes_infinity;
  std::optional<Point> alpha; // engaged iff finite sigma(inf)
};

// Verifies the swap and involutivity (NotASwap / NotInvolutive) and returns
// which of the two closed forms m is.
InvolutionForm classify_involution(const MobiusMap& m, const SigmaConfig& cfg);

// Action on the dual alphabet {X_c}: X_c -> X_{sigma(c)}, with
// X_inf = -sum_{d in Sigma} X_d. Each letter maps to a +-1 combination of
// letters; returned as coefficient maps.
std::map<Point, std::map<Point, int, std::less<Point>>, std::less<Point>>
act_on_dual_alphabet(const MobiusMap& m, const SigmaConfig& cfg);

} // namespace polylog
