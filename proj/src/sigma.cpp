#include "polylog/sigma.hpp"

#include "polylog/errors.hpp"

#include <algorithm>

namespace polylog {

SigmaConfig::SigmaConfig(std::vector<Point> points, Point a, Point b)
    : points_(std::move(points)), a_(std::move(a)), b_(std::move(b)) {
  if (points_.size() < 2) throw Error("SigmaConfig: need at least two points");
  std::sort(points_.begin(), points_.end(), [](const Point& x, const Point& y) { return x < y; });
  for (size_t i = 0; i + 1 < points_.size(); ++i)
    if (points_[i] == points_[i + 1]) throw Error("SigmaConfig: duplicate point");
  if (a_ == b_) throw Error("SigmaConfig: a and b must differ");
  if (!contains(a_) || !contains(b_)) throw Error("SigmaConfig: a and b must lie in Sigma");

  Rational dab = (a_ - b_).norm2();
  Rational dba = dab;
  nearest_ab_ = nearest_ba_ = true;
  for (const Point& c : points_) {
    if (!(c == b_) && (c - b_).norm2() < dab) nearest_ab_ = false;
    if (!(c == a_) && (c - a_).norm2() < dba) nearest_ba_ = false;
  }
}

bool SigmaConfig::contains(const Point& p) const {
  return std::find(points_.begin(), points_.end(), p) != points_.end();
}

MobiusMap::MobiusMap(GaussianRational p_, GaussianRational q_, GaussianRational r_,
                     GaussianRational s_)
    : p(std::move(p_)), q(std::move(q_)), r(std::move(r_)), s(std::move(s_)) {
  if ((p * s - q * r).is_zero()) throw Error("MobiusMap: zero determinant");
}

ExtendedPoint MobiusMap::apply(const ExtendedPoint& z) const {
  if (z.is_infinity()) {
    if (r.is_zero()) return ExtendedPoint::infinity();
    return ExtendedPoint(p / r);
  }
  GaussianRational den = r * z.finite() + s;
  if (den.is_zero()) return ExtendedPoint::infinity();
  return ExtendedPoint((p * z.finite() + q) / den);
}

MobiusMap MobiusMap::compose(const MobiusMap& o) const {
  return MobiusMap(p * o.p + q * o.r, p * o.q + q * o.s, r * o.p + s * o.r, r * o.q + s * o.s);
}

bool MobiusMap::same_map(const MobiusMap& o) const {
  // Proportional matrices: cross products of all entry pairs agree.
  return (p * o.q == q * o.p) && (p * o.r == r * o.p) && (p * o.s == s * o.p) &&
         (q * o.r == r * o.q) && (q * o.s == s * o.q) && (r * o.s == s * o.r);
}

std::map<ExtendedPoint, ExtendedPoint> induced_permutation(const MobiusMap& m,
                                                           const SigmaConfig& cfg) {
  std::vector<ExtendedPoint> domain;
  for (const Point& c : cfg.points()) domain.emplace_back(c);
  domain.push_back(ExtendedPoint::infinity());

  std::map<ExtendedPoint, ExtendedPoint> perm;
  for (const ExtendedPoint& z : domain) {
    ExtendedPoint img = m.apply(z);
    bool in_domain = img.is_infinity() || cfg.contains(img.finite());
    if (!in_domain)
      throw NotASymmetry("map does not stabilize Sigma u {inf}");
    perm.emplace(z, img);
  }
  // A Moebius map is injective, so surjectivity onto the finite set follows;
  // keep the explicit check as a guard against config mistakes.
  for (const ExtendedPoint& z : domain) {
    bool hit = false;
    for (auto& [from, to] : perm)
      if (to == z) { hit = true; break; }
    if (!hit) throw NotASymmetry("map is not onto Sigma u {inf}");
  }
  return perm;
}

WordPoly act_on_letter(const MobiusMap& m, const SigmaConfig& cfg, const Point& c) {
  if (!cfg.contains(c)) throw UnknownLetter("act_on_letter: " + c.str() + " not in Sigma");
  auto perm = induced_permutation(m, cfg);
  ExtendedPoint img = perm.at(ExtendedPoint(c));
  ExtendedPoint inf_img = perm.at(ExtendedPoint::infinity());

  WordPoly r;
  if (!img.is_infinity()) r.add_term(Word{img.finite()}, Rational(1));
  if (!inf_img.is_infinity()) r.add_term(Word{inf_img.finite()}, Rational(-1));
  return r;
}

WordPoly act_on_poly(const MobiusMap& m, const SigmaConfig& cfg, const WordPoly& p) {
  auto perm = induced_permutation(m, cfg);
  ExtendedPoint inf_img = perm.at(ExtendedPoint::infinity());

  // Letter images as weight-1 polynomials, fetched once.
  std::map<Point, WordPoly> letter_image;
  for (const Point& c : cfg.points()) {
    ExtendedPoint img = perm.at(ExtendedPoint(c));
    WordPoly l;
    if (!img.is_infinity()) l.add_term(Word{img.finite()}, Rational(1));
    if (!inf_img.is_infinity()) l.add_term(Word{inf_img.finite()}, Rational(-1));
    letter_image.emplace(c, std::move(l));
  }

  WordPoly r;
  for (auto& [w, coeff] : p.terms()) {
    WordPoly acc = WordPoly::unit();
    for (const Point& c : w) {
      auto it = letter_image.find(c);
      if (it == letter_image.end())
        throw UnknownLetter("act_on_poly: " + c.str() + " not in Sigma");
      acc = concat_poly(acc, it->second);
    }
    r += acc * coeff;
  }
  return r;
}

namespace {

void require_swap(const MobiusMap& m, const SigmaConfig& cfg) {
  if (!(m.apply(cfg.a()) == ExtendedPoint(cfg.b())) ||
      !(m.apply(cfg.b()) == ExtendedPoint(cfg.a())))
    throw NotASwap("map does not exchange a and b");
}

} // namespace

WordPoly tau(const MobiusMap& m, const SigmaConfig& cfg, const WordPoly& p) {
  require_swap(m, cfg);
  return act_on_poly(m, cfg, antipode(p));
}

WordPoly tau(const MobiusMap& m, const SigmaConfig& cfg, const Word& w) {
  return tau(m, cfg, WordPoly(w));
}

InvolutionForm classify_involution(const MobiusMap& m, const SigmaConfig& cfg) {
  require_swap(m, cfg);
  if (!m.compose(m).same_map(MobiusMap::identity()))
    throw NotInvolutive("map composed with itself is not the identity");

  const Point& a = cfg.a();
  const Point& b = cfg.b();
  ExtendedPoint inf_img = m.apply(ExtendedPoint::infinity());
  if (inf_img.is_infinity()) {
    // Must be z -> a + b - z.
    MobiusMap expected(GaussianRational(-1), a + b, GaussianRational(0), GaussianRational(1));
    if (!m.same_map(expected)) throw NotInvolutive("swap fixing infinity is not z -> a+b-z");
    return InvolutionForm{true, std::nullopt};
  }
  Point alpha = inf_img.finite();
  // z -> alpha - (alpha-a)(alpha-b)/(alpha-z) written as (pz+q)/(rz+s).
  MobiusMap expected(-alpha, alpha * alpha - (alpha - a) * (alpha - b), GaussianRational(-1),
                     alpha);
  if (!m.same_map(expected))
    throw NotInvolutive("swap with finite sigma(inf) is not of the reflection form");
  return InvolutionForm{false, alpha};
}

std::map<Point, std::map<Point, int, std::less<Point>>, std::less<Point>>
act_on_dual_alphabet(const MobiusMap& m, const SigmaConfig& cfg) {
  auto perm = induced_permutation(m, cfg);
  std::map<Point, std::map<Point, int, std::less<Point>>, std::less<Point>> out;
  for (const Point& c : cfg.points()) {
    ExtendedPoint img = perm.at(ExtendedPoint(c));
    std::map<Point, int, std::less<Point>> row;
    if (img.is_infinity()) {
      for (const Point& d : cfg.points()) row[d] = -1; // X_inf = -sum X_d
    } else {
      row[img.finite()] = 1;
    }
    out.emplace(c, std::move(row));
  }
  return out;
}

} // namespace polylog
