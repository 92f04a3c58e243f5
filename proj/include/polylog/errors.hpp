#pragma once

#include <stdexcept>
#include <string>

namespace polylog {

// Base for all domain errors thrown by the library; the CLI maps these to
// exit code 2 (bad input) unless noted otherwise.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Word/alphabet preconditions.
struct NotInAb : Error { using Error::Error; };         // word ends in x_b
struct NotInAab : Error { using Error::Error; };        // word starts in x_a or ends in x_b
struct UnknownLetter : Error { using Error::Error; };   // letter outside the configured Sigma

// Moebius / symmetry preconditions.
struct NotASymmetry : Error { using Error::Error; };    // map does not permute Sigma u {inf}
struct NotASwap : Error { using Error::Error; };        // sigma(a) != b or sigma(b) != a
struct NotInvolutive : Error { using Error::Error; };   // sigma composed with itself is not the identity

// Configuration preconditions for limit values.
struct NotNearest : Error { using Error::Error; };      // required nearest-point flag is false
struct NotMutuallyNearest : NotNearest { using NotNearest::NotNearest; }; // both directions required

// Series evaluation.
struct NotConvergent : Error { using Error::Error; };   // argument list outside the convergence domain
struct Divergent : Error { using Error::Error; };       // leading exponent 1 in a zeta-type sum
struct TailTooLarge : Error { using Error::Error; };    // truncation cannot certify the target tolerance
struct OutOfDisk : Error { using Error::Error; };       // z outside the series disk
struct UnsupportedModulus : Error { using Error::Error; };

// Input text that fails to parse; `at` is a 0-based column.
struct ParseError : Error {
  size_t at;
  ParseError(const std::string& msg, size_t pos)
      : Error(msg + " (column " + std::to_string(pos) + ")"), at(pos) {}
};

} // namespace polylog
