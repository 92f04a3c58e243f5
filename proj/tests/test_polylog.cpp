#include "doctest.h"

#include "polylog/errors.hpp"
#include "polylog/polylog_eval.hpp"
#include "polylog/reg.hpp"

namespace polylog {
namespace {

const Point kZero(0), kOne(1), kMinusOne(-1);

SigmaConfig config01() { return SigmaConfig({kZero, kOne}, kOne, kZero); }

SigmaConfig config3() {
  return SigmaConfig({kZero, kOne, kMinusOne}, kOne, kZero);
}

PrecisionContext tight_ctx() {
  PrecisionContext ctx;
  ctx.precision_bits = 192;
  ctx.target_tol = 1e-12;
  return ctx;
}

const double kZeta2 = 1.6449340668482264365;
const double kZeta3 = 1.2020569031595942854;
const double kZeta4 = 1.0823232337111381915;
const double kZeta31 = 0.27058080842778454788;  // pi^4/360
const double kZeta22 = 0.81174242528335364364;  // pi^4/120
const double kZeta5 = 1.0369277551433699263;
const double kLog2 = 0.69314718055994530942;
const double kLi2Half = 0.58224052646501250590;
const double kLi2Third = 0.36621322997706348762;

double dist(const BigComplex& v, double re, double im = 0) {
  return abs_estimate(v - BigComplex(BigReal(re), BigReal(im)));
}

TEST_CASE("index form splits base-point runs") {
  IndexForm f = index_form(Word{kZero, kZero, kOne, kMinusOne}, kZero);
  CHECK(f.s == (std::vector<int>{3, 1}));
  CHECK(f.c == (std::vector<Point>{kOne, kMinusOne}));
  CHECK(f.depth() == 2);

  CHECK(index_form(Word{}, kZero).depth() == 0);
  CHECK_THROWS_AS(index_form(Word{kOne, kZero}, kZero), NotInAb);
}

TEST_CASE("disk polylogarithm at rational points") {
  SigmaConfig cfg = config01();
  PrecisionContext ctx = tight_ctx();
  Point half(Rational(1, 2)), third(Rational(1, 3));

  CHECK(dist(li_b(Word{}, half, cfg, ctx).value, 1.0) == 0.0);
  CHECK(li_b(Word{kOne}, kZero, cfg, ctx).value.is_zero());

  // li(x_1; z) = log(1-z).
  CHECK(dist(li_b(Word{kOne}, half, cfg, ctx).value, -kLog2) < 1e-12);
  // li(x_0 x_1; z) = -Li_2(z).
  CHECK(dist(li_b(Word{kZero, kOne}, half, cfg, ctx).value, -kLi2Half) < 1e-12);
  CHECK(dist(li_b(Word{kZero, kOne}, third, cfg, ctx).value, -kLi2Third) < 1e-12);

  CHECK_THROWS_AS(li_b(Word{kOne}, Point(2), cfg, ctx), OutOfDisk);
  CHECK_THROWS_AS(li_b(Word{kOne}, kOne, cfg, ctx), OutOfDisk);
  CHECK_THROWS_AS(li_b(Word{Point(7)}, half, cfg, ctx), UnknownLetter);
}

TEST_CASE("disk polylogarithm accepts floating-point arguments") {
  SigmaConfig cfg = config01();
  PrecisionContext ctx;
  ctx.target_tol = 1e-10;
  BigComplex z(BigReal(1) / BigReal(2));
  EvalResult r = li_b(Word{kZero, kOne}, z, cfg, ctx);
  CHECK(dist(r.value, -kLi2Half) < 1e-10);
}

TEST_CASE("regularized polylogarithm carries logarithm powers") {
  SigmaConfig cfg = config01();
  PrecisionContext ctx = tight_ctx();
  Point half(Rational(1, 2));

  // li_ab(x_0; z) = log z.
  CHECK(dist(li_ab(Word{kZero}, half, cfg, ctx).value, -kLog2) < 1e-12);
  // On A^b the regularized extension agrees with the disk function.
  CHECK(abs_estimate(li_ab(Word{kZero, kOne}, half, cfg, ctx).value -
                     li_b(Word{kZero, kOne}, half, cfg, ctx).value) < 1e-13);
  CHECK_THROWS_AS(li_ab(Word{kZero}, kZero, cfg, ctx), OutOfDisk);
}

TEST_CASE("regularized polylogarithm is a shuffle homomorphism") {
  SigmaConfig cfg = config01();
  PrecisionContext ctx = tight_ctx();
  Point third(Rational(1, 3));
  const Word words[] = {{kZero}, {kOne}, {kZero, kOne}, {kOne, kZero}};
  for (const Word& u : words)
    for (const Word& v : words) {
      BigComplex lhs = li_ab(shuffle(u, v), third, cfg, ctx).value;
      BigComplex rhs =
          li_ab(u, third, cfg, ctx).value * li_ab(v, third, cfg, ctx).value;
      CHECK(abs_estimate(lhs - rhs) < 1e-11);
    }
}

TEST_CASE("limit values at the far endpoint") {
  SigmaConfig cfg = config01();
  PrecisionContext ctx = tight_ctx();

  CHECK(dist(L_ab(Word{}, cfg, ctx).value, 1.0) == 0.0);
  CHECK(dist(L_ab(Word{kZero, kOne}, cfg, ctx).value, -kZeta2) < 1e-12);
  CHECK(dist(L_ab(Word{kZero, kOne, kOne}, cfg, ctx).value, kZeta3) < 1e-12);

  CHECK_THROWS_AS(L_ab(Word{kOne}, cfg, ctx), NotInAab);
  CHECK_THROWS_AS(L_ab(Word{kZero}, cfg, ctx), NotInAab);

  SigmaConfig crowded({kZero, kOne, Point(Rational(1, 2))}, kOne, kZero);
  CHECK_THROWS_AS(L_ab(Word{kZero, kOne}, crowded, ctx), NotNearest);

  // Linearity over a polynomial.
  WordPoly p(Word{kZero, kOne}, Rational(2));
  p.add_term(Word{kZero, kOne, kOne}, Rational(-1));
  CHECK(dist(L_ab(p, cfg, ctx).value, -2 * kZeta2 - kZeta3) < 1e-11);
}

TEST_CASE("limit value of an alternating letter is log 2") {
  // On {0,1,-1} the letter x_{-1} evaluates to -sum (-1)^m/m.
  CHECK(dist(L_ab(Word{kMinusOne}, config3(), tight_ctx()).value, kLog2) <
        1e-12);
}

TEST_CASE("multiple zeta values against frozen references") {
  PrecisionContext ctx = tight_ctx();
  CHECK(dist(mzv({2}, ctx).value, kZeta2) < 1e-12);
  CHECK(dist(mzv({3}, ctx).value, kZeta3) < 1e-12);
  CHECK(dist(mzv({4}, ctx).value, kZeta4) < 1e-12);
  CHECK(dist(mzv({5}, ctx).value, kZeta5) < 1e-12);
  CHECK(dist(mzv({2, 1}, ctx).value, kZeta3) < 1e-12);
  CHECK(dist(mzv({3, 1}, ctx).value, kZeta31) < 1e-12);
  CHECK(dist(mzv({2, 2}, ctx).value, kZeta22) < 1e-12);
  CHECK(dist(mzv({2, 1, 1}, ctx).value, kZeta4) < 1e-12);
  CHECK(dist(mzv({}, ctx).value, 1.0) == 0.0);

  CHECK_THROWS_AS(mzv({1, 2}, ctx), Divergent);
  CHECK_THROWS_AS(mzv({0}, ctx), std::invalid_argument);
}

TEST_CASE("multiple L-values at small moduli") {
  PrecisionContext ctx = tight_ctx();

  // Modulus 1 reduces to multiple zeta values.
  CHECK(dist(multiple_L_value({2}, {0}, 1, ctx).value, kZeta2) < 1e-12);

  // Modulus 2: alternating sums.
  CHECK(dist(multiple_L_value({1}, {1}, 2, ctx).value, -kLog2) < 1e-12);
  CHECK(dist(multiple_L_value({2}, {1}, 2, ctx).value, -0.82246703342411321824) <
        1e-12); // -pi^2/12

  // Modulus 4: bases are fourth roots of unity.
  BigComplex expect = -big_log(BigComplex(BigReal(1), BigReal(-1)));
  CHECK(abs_estimate(multiple_L_value({1}, {1}, 4, ctx).value - expect) <
        1e-12);

  CHECK_THROWS_AS(multiple_L_value({2}, {0}, 3, ctx), UnsupportedModulus);
  CHECK_THROWS_AS(multiple_L_value({1}, {2}, 2, ctx), Divergent);
  CHECK_THROWS_AS(multiple_L_value({1, 2}, {1}, 2, ctx), std::invalid_argument);
}

TEST_CASE("derivative of the regularized polylogarithm") {
  // d/dz li(x_c w; z) = li(w; z) / (z - c), probed by central differences.
  SigmaConfig cfg = config01();
  PrecisionContext ctx = tight_ctx();
  ctx.target_tol = 1e-14;
  ctx.precision_bits = 256;

  Word w{kZero, kOne, kOne};
  Point z(Rational(2, 5)), h(Rational(1, 100000));
  BigComplex up = li_ab(w, Point(z + h), cfg, ctx).value;
  BigComplex down = li_ab(w, Point(z - h), cfg, ctx).value;
  BigComplex fd = (up - down) / (BigReal(2) * to_big(h.re));
  BigComplex ref = li_ab(Word{kOne, kOne}, z, cfg, ctx).value /
                   BigComplex(to_big(z.re));
  CHECK(abs_estimate(fd - ref) < 1e-8);
}

} // namespace
} // namespace polylog
