#include "doctest.h"

#include "polylog/errors.hpp"
#include "polylog/lambda_eval.hpp"

namespace polylog {
namespace {

PrecisionContext tight_ctx() {
  PrecisionContext ctx;
  ctx.precision_bits = 192;
  ctx.target_tol = 1e-12;
  return ctx;
}

LambdaArgs exact_args(std::vector<int> s, std::vector<GaussianRational> b) {
  return LambdaArgs::from_exact(std::move(s), std::move(b));
}

// 20+ digit references computed independently of this library.
const double kZeta2 = 1.6449340668482264365;
const double kZeta3 = 1.2020569031595942854;
const double kZeta31 = 0.27058080842778454788;     // pi^4/360
const double kLi2Half = 0.58224052646501250590;    // pi^2/12 - log(2)^2/2
const double kLog2 = 0.69314718055994530942;
const double kLog3Half = 0.40546510810816438198;
const double kAlt21 = -0.50821521280468485081;     // sum (-1)^m2 / (m1^2 m2)

double dist(const BigComplex& v, double re, double im = 0) {
  return abs_estimate(v - BigComplex(BigReal(re), BigReal(im)));
}

TEST_CASE("empty argument list evaluates to one") {
  EvalResult r = lambda_eval(exact_args({}, {}), tight_ctx());
  CHECK(dist(r.value, 1.0) == 0.0);
  CHECK(r.err_bound == 0.0);
}

TEST_CASE("depth-one values against closed forms") {
  PrecisionContext ctx = tight_ctx();

  EvalResult zeta2 = lambda_eval(exact_args({2}, {GaussianRational(1)}), ctx);
  CHECK(dist(zeta2.value, kZeta2) < 1e-12);
  CHECK(zeta2.err_bound <= ctx.target_tol);

  EvalResult log2 = lambda_eval(exact_args({1}, {GaussianRational(2)}), ctx);
  CHECK(dist(log2.value, kLog2) < 1e-12);

  EvalResult alt = lambda_eval(exact_args({1}, {GaussianRational(-1)}), ctx);
  CHECK(dist(alt.value, -kLog2) < 1e-12);

  EvalResult log32 = lambda_eval(exact_args({1}, {GaussianRational(3)}), ctx);
  CHECK(dist(log32.value, kLog3Half) < 1e-12);

  EvalResult eta2 = lambda_eval(exact_args({2}, {GaussianRational(-1)}), ctx);
  CHECK(dist(eta2.value, -0.82246703342411321824) < 1e-12); // -pi^2/12
}

TEST_CASE("complex unimodular base") {
  // 1/b = i, so the value is sum i^m/m = -log(1-i).
  PrecisionContext ctx = tight_ctx();
  EvalResult r = lambda_eval(exact_args({1}, {GaussianRational(0, -1)}), ctx);
  BigComplex expect = -big_log(BigComplex(BigReal(1), BigReal(-1)));
  CHECK(abs_estimate(r.value - expect) < 1e-12);
}

TEST_CASE("nested sums against known double-sum values") {
  PrecisionContext ctx = tight_ctx();

  EvalResult z21 =
      lambda_eval(exact_args({2, 1}, {GaussianRational(1), GaussianRational(1)}), ctx);
  CHECK(dist(z21.value, kZeta3) < 1e-12);

  EvalResult z31 =
      lambda_eval(exact_args({3, 1}, {GaussianRational(1), GaussianRational(1)}), ctx);
  CHECK(dist(z31.value, kZeta31) < 1e-12);

  EvalResult mixed = lambda_eval(
      exact_args({2, 1}, {GaussianRational(1), GaussianRational(-1)}), ctx);
  CHECK(dist(mixed.value, kAlt21) < 1e-12);

  // sum over m1 > m2 of (-1)^{m1} (-1)^{m2 - m2}... shuffle square:
  // lambda(1; -1)^2 = 2 lambda(1,1; -1,-1), so the value is log(2)^2 / 2.
  EvalResult sq = lambda_eval(
      exact_args({1, 1}, {GaussianRational(-1), GaussianRational(-1)}), ctx);
  CHECK(dist(sq.value, kLog2 * kLog2 / 2) < 1e-12);
}

TEST_CASE("mixed geometric and harmonic levels") {
  // lambda(1,2; 2,1): u1 = 1/2, u2 = 2 with partial products bounded by 1,
  // so the outer terms decay like 1/m^3 and the plain route's geometric
  // tail gate can only certify down to ~1e-8 before the ratio estimate
  // saturates.  The value equals -lambda(2,1; 1,-1) (swap the summation
  // order in the alternating double sum), which pins the fast route.
  PrecisionContext fast = tight_ctx();
  PrecisionContext plain = tight_ctx();
  plain.acceleration = Acceleration::kNone;
  plain.target_tol = 1e-8;
  plain.truncation_M = 100'000;

  LambdaArgs args = exact_args({1, 2}, {GaussianRational(2), GaussianRational(1)});
  EvalResult accel = lambda_eval(args, fast);
  EvalResult direct = lambda_eval(args, plain);
  CHECK(dist(accel.value, -kAlt21) < 1e-12);
  CHECK(abs_estimate(accel.value - direct.value) < 5e-8);
}

TEST_CASE("accelerated and plain routes agree on contracting bases") {
  PrecisionContext ctx = tight_ctx();
  PrecisionContext plain = ctx;
  plain.acceleration = Acceleration::kNone;

  LambdaArgs args = exact_args({2}, {GaussianRational(2)});
  EvalResult fast = lambda_eval(args, ctx);
  EvalResult slow = lambda_eval(args, plain);
  CHECK(dist(fast.value, kLi2Half) < 1e-12);
  CHECK(dist(slow.value, kLi2Half) < 1e-12);
  CHECK(abs_estimate(fast.value - slow.value) < 2e-12);
}

TEST_CASE("floating-point bases take the plain route") {
  PrecisionContext ctx;
  ctx.precision_bits = 128;
  ctx.target_tol = 1e-10;
  LambdaArgs args;
  args.s = {2};
  args.b = {BigComplex(BigReal(2))};
  args.exact = {std::nullopt};
  EvalResult r = lambda_eval(args, ctx);
  CHECK(dist(r.value, kLi2Half) < 1e-10);
  CHECK(r.terms > 0);
}

TEST_CASE("error bounds are honest on the reference set") {
  PrecisionContext ctx = tight_ctx();
  struct Case {
    std::vector<int> s;
    std::vector<GaussianRational> b;
    double re;
  };
  const Case cases[] = {
      {{2}, {GaussianRational(1)}, kZeta2},
      {{1}, {GaussianRational(-1)}, -kLog2},
      {{2, 1}, {GaussianRational(1), GaussianRational(1)}, kZeta3},
      {{2, 1}, {GaussianRational(1), GaussianRational(-1)}, kAlt21},
  };
  // The references are double literals, so the bound check bottoms out at
  // their own representation error (~eps/2 of a value near 1).
  for (const Case& c : cases) {
    EvalResult r = lambda_eval(exact_args(c.s, c.b), ctx);
    CHECK(dist(r.value, c.re) <= std::max(r.err_bound, 5e-16));
  }
}

TEST_CASE("convergence domain is enforced") {
  PrecisionContext ctx = tight_ctx();
  CHECK_THROWS_AS(lambda_eval(exact_args({1}, {GaussianRational(1)}), ctx),
                  NotConvergent);
  CHECK_THROWS_AS(
      lambda_eval(exact_args({2}, {GaussianRational(Rational(1, 2))}), ctx),
      NotConvergent);
  CHECK_THROWS_AS(
      lambda_eval(
          exact_args({1, 1}, {GaussianRational(1), GaussianRational(2)}), ctx),
      NotConvergent);
  CHECK_THROWS_AS(lambda_eval(exact_args({0}, {GaussianRational(2)}), ctx),
                  std::invalid_argument);
}

TEST_CASE("plain route reports when the cap cannot certify the tolerance") {
  PrecisionContext ctx;
  ctx.acceleration = Acceleration::kNone;
  ctx.truncation_M = 1000;
  ctx.target_tol = 1e-10;
  CHECK_THROWS_AS(lambda_eval(exact_args({2}, {GaussianRational(1)}), ctx),
                  TailTooLarge);
}

TEST_CASE("precision context rejects unusable settings") {
  PrecisionContext ctx;
  ctx.precision_bits = 16;
  CHECK_THROWS_AS(ctx.validate(), std::invalid_argument);
  ctx = PrecisionContext{};
  ctx.target_tol = 0;
  CHECK_THROWS_AS(ctx.validate(), std::invalid_argument);
  ctx = PrecisionContext{};
  ctx.precision_bits = 64;
  ctx.target_tol = 1e-19; // below what 64 bits can certify
  CHECK_THROWS_AS(ctx.validate(), std::invalid_argument);
  ctx = PrecisionContext{};
  ctx.truncation_M = 10;
  CHECK_THROWS_AS(ctx.validate(), std::invalid_argument);
}

TEST_CASE("argument list shape is validated") {
  PrecisionContext ctx = tight_ctx();
  LambdaArgs bad;
  bad.s = {2, 1};
  bad.b = {BigComplex(BigReal(1))};
  bad.exact = {GaussianRational(1)};
  CHECK_THROWS_AS(lambda_eval(bad, ctx), std::invalid_argument);
}

} // namespace
} // namespace polylog
