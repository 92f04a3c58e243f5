#pragma once

#include <vector>

#include "polylog/lambda_eval.hpp"
#include "polylog/sigma.hpp"
#include "polylog/word_poly.hpp"

namespace polylog {

// Decomposition of a word in A^b as x_b^{s_1 - 1} x_{c_1} ... x_b^{s_r - 1}
// x_{c_r} with every c_i != b; the bridge between words and series indices.
struct IndexForm {
  std::vector<int> s;
  std::vector<Point> c;

  std::size_t depth() const { return s.size(); }
};

// Throws NotInAb when w ends in x_b.
IndexForm index_form(const Word& w, const Point& b);

// The polylogarithm attached to a word in A^b, as a function of z in the
// open disk |z - b| < min_{c in Sigma, c != b} |c - b|:
//
//   li_b(w; z) = (-1)^r lambda(s; (c_1-b)/(z-b), ..., (c_r-b)/(z-b))
//
// with (s, c) = index_form(w, b).  li_b(1; z) = 1, and li_b(w; b) = 0 for
// weight >= 1.  Every letter must lie in cfg's point set.
EvalResult li_b(const Word& w, const Point& z, const SigmaConfig& cfg,
                const PrecisionContext& ctx);
EvalResult li_b(const WordPoly& p, const Point& z, const SigmaConfig& cfg,
                const PrecisionContext& ctx);
// Same function for a z known only in floating point; forced onto the plain
// summation route, so it needs |z - b| comfortably inside the disk.
EvalResult li_b(const Word& w, const BigComplex& z, const SigmaConfig& cfg,
                const PrecisionContext& ctx);

// Regularized extension to all words, carrying powers of
// ell = log((z-b)/(a-b)) (principal branch):
//
//   li_ab(w x_b^n; z) = sum_j li_b(reg_b(w x_b^{n-j}); z) ell^j / j!
//
// for w not ending in x_b; linear in the polynomial, multiplicative under
// the shuffle product.  Requires z != b in the disk.
EvalResult li_ab(const WordPoly& p, const Point& z, const SigmaConfig& cfg,
                 const PrecisionContext& ctx);
EvalResult li_ab(const Word& w, const Point& z, const SigmaConfig& cfg,
                 const PrecisionContext& ctx);

// Limit value of li_ab at z -> a for words in A^ab (no leading x_a, no
// trailing x_b):  L_ab(w) = (-1)^r lambda(s; (c_1-b)/(a-b), ...).
// Requires a to be among the nearest points to b (NotNearest otherwise).
EvalResult L_ab(const Word& w, const SigmaConfig& cfg,
                const PrecisionContext& ctx);
EvalResult L_ab(const WordPoly& p, const SigmaConfig& cfg,
                const PrecisionContext& ctx);

// Multiple zeta value zeta(k_1,...,k_r) = sum_{m_1>...>m_r>0} prod m_i^{-k_i},
// as the L_ab value of the word x_0^{k_1-1} x_1 ... x_0^{k_r-1} x_1 on
// Sigma = {0,1}, a = 1, b = 0, up to the sign (-1)^r.  Throws Divergent when
// k_1 = 1.
EvalResult mzv(const std::vector<int>& k, const PrecisionContext& ctx);

// Multiple L-value of modulus m in {1, 2, 4} (the moduli whose roots of
// unity are Gaussian rationals):  lambda(k; zeta_m^{-a_1}, ..., zeta_m^{-a_r}).
// Throws UnsupportedModulus otherwise, and Divergent when (k_1, a_1 mod m)
// = (1, 0).
EvalResult multiple_L_value(const std::vector<int>& k,
                            const std::vector<long>& a_res, long modulus,
                            const PrecisionContext& ctx);

} // namespace polylog
