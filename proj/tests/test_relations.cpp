#include "doctest.h"

#include "polylog/errors.hpp"
#include "polylog/relations.hpp"

namespace polylog {
namespace {

const Point kZero(0), kOne(1), kMinusOne(-1);

SigmaConfig config01() { return SigmaConfig({kZero, kOne}, kOne, kZero); }

MobiusMap one_minus_z() {
  return MobiusMap(GaussianRational(-1), GaussianRational(1),
                   GaussianRational(0), GaussianRational(1));
}

PrecisionContext tight_ctx() {
  PrecisionContext ctx;
  ctx.precision_bits = 192;
  ctx.target_tol = 1e-12;
  return ctx;
}

const double kZeta2 = 1.6449340668482264365;
const double kZeta3 = 1.2020569031595942854;
const double kZeta2Sq = 2.7058080842778454788; // pi^4/36

double dist(const BigComplex& v, double re, double im = 0) {
  return abs_estimate(v - BigComplex(BigReal(re), BigReal(im)));
}

TEST_CASE("word enumeration is graded-lex and complete") {
  auto words = words_up_to({kZero, kOne}, 3);
  REQUIRE(words.size() == 15); // 1 + 2 + 4 + 8
  CHECK(words[0].empty());
  CHECK(words[1] == Word{kZero});
  CHECK(words[2] == Word{kOne});
  CHECK(words[3] == (Word{kZero, kZero}));
  for (size_t i = 1; i < words.size(); ++i)
    CHECK(WordLess{}(words[i - 1], words[i]));
}

TEST_CASE("generating series coefficients at low weight") {
  XSeries phi = phi_coefficients(config01(), 3, tight_ctx());
  CHECK(dist(phi.at(Word{}), 1.0) == 0.0);
  CHECK(abs_estimate(phi.at(Word{kZero})) < 1e-15);
  CHECK(abs_estimate(phi.at(Word{kOne})) < 1e-15);
  CHECK(dist(phi.at(Word{kZero, kOne}), -kZeta2) < 1e-11);
  CHECK(dist(phi.at(Word{kOne, kZero}), kZeta2) < 1e-11);
  CHECK(dist(phi.at(Word{kZero, kOne, kOne}), kZeta3) < 1e-11);
  CHECK(dist(phi.at(Word{kZero, kZero, kOne}), -kZeta3) < 1e-11);
}

TEST_CASE("antipode duality pairs verify numerically") {
  SigmaConfig cfg = config01();
  auto rels = duality_pairs(cfg, 3);
  // Words in A^ab of weight <= 3: empty, x0x1, x0x0x1, x0x1x1.
  REQUIRE(rels.size() == 4);
  for (const auto& rel : rels) {
    CHECK(rel.provenance == Provenance::kAntipodeDuality);
    VerificationReport rep = verify(rel, cfg, tight_ctx());
    CHECK(rep.passed);
    CHECK(rep.abs_residual < 1e-11);
  }

  // The weight-2 pair is zeta(2) up to sign on both sides.
  VerificationReport rep = verify(rels[1], cfg, tight_ctx());
  CHECK(dist(rep.lhs_value, -kZeta2) < 1e-11);
  CHECK(dist(rep.rhs_value, -kZeta2) < 1e-11);
}

TEST_CASE("duality requires mutually nearest endpoints") {
  SigmaConfig crowded({kZero, kOne, Point(Rational(1, 2))}, kOne, kZero);
  CHECK_THROWS_AS(duality_pairs(crowded, 2), NotMutuallyNearest);
  CHECK_THROWS_AS(sigma_duality_pairs(one_minus_z(), crowded, 2),
                  NotMutuallyNearest);
}

TEST_CASE("twisted duality pairs on the two-point set") {
  SigmaConfig cfg = config01();
  auto rels = sigma_duality_pairs(one_minus_z(), cfg, 3);
  REQUIRE(rels.size() == 4);
  for (const auto& rel : rels) {
    CHECK(rel.provenance == Provenance::kSigmaDuality);
    CHECK(!rel.rhs_regularized);
    VerificationReport rep = verify(rel, cfg, tight_ctx());
    CHECK(rep.passed);
  }

  // tau(x_0 x_1 x_1) = -x_0 x_0 x_1, i.e. zeta(2,1) = zeta(3).
  const Relation& r21 = rels[3];
  CHECK(r21.lhs == WordPoly((Word{kZero, kOne, kOne})));
  CHECK(r21.rhs == WordPoly((Word{kZero, kZero, kOne}), Rational(-1)));
}

TEST_CASE("twisted duality rejects non-swapping or non-involutive maps") {
  SigmaConfig cfg = config01();
  CHECK_THROWS_AS(sigma_duality_pairs(MobiusMap::identity(), cfg, 2), NotASwap);
}

TEST_CASE("inversion sum at interior points") {
  SigmaConfig cfg = config01();
  PrecisionContext ctx = tight_ctx();
  VerificationReport rep =
      euler_inversion_check(Word{kZero, kOne}, Point(Rational(1, 2)), cfg, ctx);
  CHECK(rep.passed);
  CHECK(rep.abs_residual < 1e-11);
  CHECK(dist(rep.rhs_value, -kZeta2) < 1e-11);

  rep = euler_inversion_check(Word{kZero, kOne, kOne}, Point(Rational(1, 3)),
                              cfg, ctx);
  CHECK(rep.passed);

  rep = sigma_euler_inversion_check(one_minus_z(), Word{kZero, kOne},
                                    Point(Rational(1, 3)), cfg, ctx);
  CHECK(rep.passed);
}

TEST_CASE("verify dispatches by provenance") {
  SigmaConfig cfg = config01();
  Relation bad;
  bad.lhs = WordPoly((Word{kZero, kOne}));
  bad.rhs = bad.lhs;
  bad.provenance = Provenance::kEulerInversion;
  CHECK_THROWS_AS(verify(bad, cfg, tight_ctx()), std::invalid_argument);
  bad.provenance = Provenance::kShuffleRelation;
  CHECK_THROWS_AS(verify(bad, cfg, tight_ctx()), std::invalid_argument);
}

TEST_CASE("a tampered relation fails verification") {
  SigmaConfig cfg = config01();
  Relation rel;
  rel.lhs = WordPoly((Word{kZero, kOne}));
  rel.rhs = WordPoly((Word{kOne, kOne, kZero})); // wrong dual
  rel.provenance = Provenance::kAntipodeDuality;
  VerificationReport rep = verify(rel, cfg, tight_ctx());
  CHECK(!rep.passed);
  CHECK(rep.abs_residual > 0.1);
}

TEST_CASE("shuffle relation check reproduces the square of zeta(2)") {
  SigmaConfig cfg = config01();
  Word w{kZero, kOne};
  VerificationReport rep = shuffle_relation_check(w, w, cfg, tight_ctx());
  CHECK(rep.passed);
  CHECK(rep.abs_residual < 1e-11);
  CHECK(dist(rep.lhs_value, kZeta2Sq) < 1e-11);
}

TEST_CASE("truncated series arithmetic") {
  XSeries f = XSeries::unit(3);
  f.add(Word{kZero}, BigComplex(1L));

  // Multiplication truncates at the weight cap.
  XSeries sq = xs_mul(f, f);
  CHECK(dist(sq.at(Word{}), 1.0) == 0.0);
  CHECK(dist(sq.at(Word{kZero}), 2.0) == 0.0);
  CHECK(dist(sq.at(Word{kZero, kZero}), 1.0) == 0.0);
  CHECK(abs_estimate(sq.at(Word{kZero, kZero, kZero})) == 0.0);

  // Inverse of 1 + X_0 is the alternating geometric series.
  XSeries inv = xs_inverse(f);
  CHECK(dist(inv.at(Word{kZero}), -1.0) == 0.0);
  CHECK(dist(inv.at(Word{kZero, kZero}), 1.0) == 0.0);
  CHECK(dist(inv.at(Word{kZero, kZero, kZero}), -1.0) == 0.0);
  XSeries prod = xs_mul(f, inv);
  CHECK(dist(prod.at(Word{}), 1.0) == 0.0);
  for (const auto& [w, c] : prod.coeff)
    if (!w.empty()) CHECK(abs_estimate(c) < 1e-40);

  // Exponential of a single letter.
  XSeries e = xs_exp_letter(kZero, big_log(BigComplex(2L)), 3);
  CHECK(dist(e.at(Word{kZero}), 0.69314718055994530942) < 1e-15);
  CHECK(dist(e.at(Word{kZero, kZero}), 0.24022650695910071233) < 1e-15);

  // Substitution along the dual-alphabet swap exchanges the letters.
  std::map<Point, std::map<Point, int, std::less<Point>>, std::less<Point>> rows;
  rows[kZero][kOne] = 1;
  rows[kOne][kZero] = 1;
  XSeries g = XSeries::unit(2);
  g.add(Word{kZero, kOne}, BigComplex(3L));
  XSeries h = xs_substitute(g, rows);
  CHECK(dist(h.at(Word{kOne, kZero}), 3.0) == 0.0);
  CHECK(abs_estimate(h.at(Word{kZero, kOne})) == 0.0);
}

TEST_CASE("series inverse matches the twisted series at low weight") {
  auto reports =
      associator_inverse_check(one_minus_z(), config01(), 3, tight_ctx());
  REQUIRE(reports.size() == 15);
  for (const auto& [w, rep] : reports) {
    CAPTURE(w.size());
    CHECK(rep.passed);
  }
}

} // namespace
} // namespace polylog
