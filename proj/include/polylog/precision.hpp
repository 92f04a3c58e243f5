#pragma once

#include <cmath>
#include <stdexcept>

namespace polylog {

// Tail handling for the nested-sum evaluator.  kEulerTransform is the
// default: series tails are replaced by asymptotic expansions so the sweep
// only ever touches small indices.  kNone sums term by term up to
// truncation_M and is kept for cross-checks and for arguments given only in
// floating point.
enum class Acceleration { kNone, kEulerTransform };

struct PrecisionContext {
  unsigned precision_bits = 128;
  long truncation_M = 1'000'000;
  double target_tol = 1e-10;
  Acceleration acceleration = Acceleration::kEulerTransform;

  // Rejects tolerances the working precision cannot certify: we need a
  // comfortable margin (8 bits) between the rounding floor and the target.
  void validate() const {
    if (precision_bits < 64 || precision_bits > 16384)
      throw std::invalid_argument("precision_bits out of range [64, 16384]");
    if (truncation_M < 100)
      throw std::invalid_argument("truncation_M must be at least 100");
    if (!(target_tol > 0))
      throw std::invalid_argument("target_tol must be positive");
    double floor = std::ldexp(1.0, -static_cast<int>(precision_bits) + 8);
    if (target_tol <= floor)
      throw std::invalid_argument(
          "target_tol below what precision_bits can certify");
  }
};

} // namespace polylog
