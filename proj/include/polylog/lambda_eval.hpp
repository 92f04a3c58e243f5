#pragma once

#include <optional>
#include <vector>

#include "polylog/big_float.hpp"
#include "polylog/gaussian_rational.hpp"
#include "polylog/precision.hpp"

namespace polylog {

// One evaluation request for the nested series
//
//   lambda(s; b) = sum_{m_1 > m_2 > ... > m_k >= 1}
//                  prod_i b_i^{-(m_i - m_{i+1})} / m_i^{s_i}     (m_{k+1} = 0),
//
// the common core behind every polylogarithm variant in this library.  Each
// depth carries an exponent s_i >= 1 and a base b_i; `exact[i]` is set when
// b_i is a Gaussian rational known exactly, which is what allows the
// accelerated summation route (it must decide symbolically whether partial
// products of the b_i equal 1).
struct LambdaArgs {
  std::vector<int> s;
  std::vector<BigComplex> b;
  std::vector<std::optional<GaussianRational>> exact;

  std::size_t depth() const { return s.size(); }
  bool all_exact() const;

  static LambdaArgs from_exact(std::vector<int> s,
                               std::vector<GaussianRational> b);
};

struct EvalResult {
  BigComplex value;
  double err_bound = 0; // estimated absolute error, not a strict certificate
  long terms = 0;       // summand evaluations spent
};

// Evaluates lambda(s; b).  Throws NotConvergent when the series diverges
// (some |b_i| < 1, or s_1 = 1 with b_1 = 1), and TailTooLarge when the
// requested tolerance is out of reach within ctx.truncation_M.
//
// Two routes:
//  - acceleration = kEulerTransform and all bases exact: sums the tail
//    recursion W_j(m) = sum_{n >= m} u_j^n n^{-s_j} W_{j-1}(n+1) (with
//    u_j = b_{j-1}/b_j, b_0 = 1), seeding every level at a moderate cutoff
//    from asymptotic expansions and sweeping m downward.  Cost is a few
//    thousand terms regardless of how slowly the raw series converges.
//  - otherwise: plain ascending partial sums with an empirical geometric
//    tail estimate; adequate only when |b_1| is safely above 1.
//
// Callers that construct BigComplex inputs should already hold a
// PrecisionGuard for ctx.precision_bits; the evaluator installs its own
// guard for everything it allocates internally.
EvalResult lambda_eval(const LambdaArgs& args, const PrecisionContext& ctx);

} // namespace polylog
