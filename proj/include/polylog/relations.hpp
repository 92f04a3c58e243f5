#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polylog/polylog_eval.hpp"
#include "polylog/xseries.hpp"

namespace polylog {

// How a relation was produced, which also fixes how each side is
// interpreted numerically (see verify).
enum class Provenance {
  kAntipodeDuality, // L_ba(S(w)) = L_ab(w)
  kSigmaDuality,    // L_ab(reg_ab(tau(w))) = L_ab(w)
  kShuffleRelation, // L_ab(u) L_ab(v) = L_ab(reg_ab(u sh v))
  kEulerInversion,  // deconcatenation sum at a point z
};

std::string provenance_name(Provenance p);

struct Relation {
  WordPoly lhs; // interpreted under L_ab
  WordPoly rhs; // under L_ba for antipode duality, else L_ab
  Provenance provenance = Provenance::kAntipodeDuality;
  std::optional<MobiusMap> sigma;
  // Set when regularization actually changed tau(w), i.e. tau(w) left A^ab;
  // surfaced in output so twisted duals can be audited.
  bool rhs_regularized = false;
  // For shuffle relations the left side is the product L(u) L(v), which is
  // not linear in a word polynomial; the factor words are kept verbatim.
  std::optional<std::pair<Word, Word>> factors;
};

struct VerificationReport {
  BigComplex lhs_value;
  BigComplex rhs_value;
  double abs_residual = 0;
  double tol_used = 0;
  bool passed = false;
  long terms_summed = 0;
};

// All words over `alphabet` of weight <= max_weight in graded lexicographic
// order, starting with the empty word.
std::vector<Word> words_up_to(const std::vector<Point>& alphabet,
                              int max_weight);

// Coefficients L_ab(reg_ab(w)) of the regularized generating series, for
// every word of weight <= max_weight.  The empty word gets 1.
XSeries phi_coefficients(const SigmaConfig& cfg, int max_weight,
                         const PrecisionContext& ctx);

// One relation L_ab(w) = L_ba(S(w)) per w in A^ab of weight <= max_weight,
// in graded-lex order.  Requires a, b mutually nearest (NotMutuallyNearest).
std::vector<Relation> duality_pairs(const SigmaConfig& cfg, int max_weight);

// One relation L_ab(w) = L_ab(reg_ab(tau(w))) per w in A^ab of weight
// <= max_weight, for an involutive a<->b symmetry m of Sigma u {inf}.
std::vector<Relation> sigma_duality_pairs(const MobiusMap& m,
                                          const SigmaConfig& cfg,
                                          int max_weight);

// Evaluates both sides of rel and compares against tol = 10 * target_tol.
VerificationReport verify(const Relation& rel, const SigmaConfig& cfg,
                          const PrecisionContext& ctx);

// sum over w = w1 w2 of li_ab(S(w1); z under swapped cfg) * li_ab(w2; z)
// against L_ab(w); z must lie in the convergence disks around both b and a.
VerificationReport euler_inversion_check(const Word& w, const Point& z,
                                         const SigmaConfig& cfg,
                                         const PrecisionContext& ctx);

// Twisted variant: sum over w = w1 w2 of li_ab(tau(w1); sigma(z)) *
// li_ab(w2; z) against L_ab(w); z and sigma(z) must lie in the disk
// around b.
VerificationReport sigma_euler_inversion_check(const MobiusMap& m,
                                               const Word& w, const Point& z,
                                               const SigmaConfig& cfg,
                                               const PrecisionContext& ctx);

// Coefficient-wise comparison of the series inverse of phi with
//   gamma^{X_b} * phi(sigma(X)) * gamma^{X_a},  gamma = (a-s)/(b-s),
// where s = m(inf) (gamma = 1 when m fixes infinity).  One report per word
// of weight <= max_weight, in graded-lex order.
std::vector<std::pair<Word, VerificationReport>> associator_inverse_check(
    const MobiusMap& m, const SigmaConfig& cfg, int max_weight,
    const PrecisionContext& ctx);

// L_ab(u) L_ab(v) versus L_ab(reg_ab(u sh v)) for u, v in A^ab.
VerificationReport shuffle_relation_check(const Word& u, const Word& v,
                                          const SigmaConfig& cfg,
                                          const PrecisionContext& ctx);

} // namespace polylog
