#include "polylog/polylog_eval.hpp"

#include <stdexcept>

#include "polylog/errors.hpp"
#include "polylog/reg.hpp"

namespace polylog {

namespace {

// Smallest |c - b|^2 over c in Sigma \ {b}: the squared radius of the
// convergence disk around b.
Rational disk_radius2(const SigmaConfig& cfg, const Point& b) {
  Rational best(-1);
  for (const Point& c : cfg.points()) {
    if (c == b) continue;
    Rational n = (c - b).norm2();
    if (best < 0 || n < best) best = n;
  }
  if (best < 0)
    throw std::invalid_argument("Sigma must contain a point besides b");
  return best;
}

void check_letters(const Word& w, const SigmaConfig& cfg) {
  for (const Letter& l : w)
    if (!cfg.contains(l))
      throw UnknownLetter("letter x(" + l.str() + ") is not in Sigma");
}

double rat_mag(const Rational& q) {
  double d = q.convert_to<double>();
  return d < 0 ? -d : d;
}

// Sum coeff * per-term results over the terms of p.
template <typename TermEval>
EvalResult eval_linearly(const WordPoly& p, unsigned bits, TermEval&& one) {
  PrecisionGuard guard(bits);
  EvalResult total;
  for (const auto& [w, c] : p.terms()) {
    EvalResult r = one(w);
    BigReal cb = to_big(c);
    total.value += r.value * cb;
    total.err_bound += r.err_bound * rat_mag(c);
    total.terms += r.terms;
  }
  return total;
}

} // namespace

IndexForm index_form(const Word& w, const Point& b) {
  IndexForm f;
  int run = 0;
  for (const Letter& l : w) {
    if (l == b) {
      ++run;
      continue;
    }
    f.s.push_back(run + 1);
    f.c.push_back(l);
    run = 0;
  }
  if (run > 0)
    throw NotInAb("word ends in x(" + b.str() + ")");
  return f;
}

EvalResult li_b(const Word& w, const Point& z, const SigmaConfig& cfg,
                const PrecisionContext& ctx) {
  check_letters(w, cfg);
  IndexForm f = index_form(w, cfg.b());
  if (w.empty()) return {BigComplex(1L), 0, 0};
  if (z == cfg.b()) return {BigComplex(), 0, 0};
  if ((z - cfg.b()).norm2() >= disk_radius2(cfg, cfg.b()))
    throw OutOfDisk("z is outside the convergence disk around b");

  std::vector<GaussianRational> bases;
  bases.reserve(f.depth());
  for (const Point& c : f.c) bases.push_back((c - cfg.b()) / (z - cfg.b()));
  EvalResult r = lambda_eval(LambdaArgs::from_exact(f.s, std::move(bases)), ctx);
  if (f.depth() % 2) r.value = -r.value;
  return r;
}

EvalResult li_b(const WordPoly& p, const Point& z, const SigmaConfig& cfg,
                const PrecisionContext& ctx) {
  return eval_linearly(p, ctx.precision_bits,
                       [&](const Word& w) { return li_b(w, z, cfg, ctx); });
}

EvalResult li_b(const Word& w, const BigComplex& z, const SigmaConfig& cfg,
                const PrecisionContext& ctx) {
  check_letters(w, cfg);
  IndexForm f = index_form(w, cfg.b());
  if (w.empty()) return {BigComplex(1L), 0, 0};
  PrecisionGuard guard(ctx.precision_bits);
  BigComplex zb = z - BigComplex::from(cfg.b());
  if (zb.is_zero()) return {BigComplex(), 0, 0};
  if (zb.norm() >= to_big(disk_radius2(cfg, cfg.b())))
    throw OutOfDisk("z is outside the convergence disk around b");

  LambdaArgs args;
  args.s = f.s;
  for (const Point& c : f.c)
    args.b.push_back(BigComplex::from(c - cfg.b()) / zb);
  args.exact.assign(f.depth(), std::nullopt);
  PrecisionContext plain = ctx;
  plain.acceleration = Acceleration::kNone;
  EvalResult r = lambda_eval(args, plain);
  if (f.depth() % 2) r.value = -r.value;
  return r;
}

EvalResult li_ab(const WordPoly& p, const Point& z, const SigmaConfig& cfg,
                 const PrecisionContext& ctx) {
  if (z == cfg.b())
    throw OutOfDisk("li_ab requires z != b (log((z-b)/(a-b)) appears)");
  PrecisionGuard guard(ctx.precision_bits);
  BigComplex ell = big_log(BigComplex::from((z - cfg.b()) / (cfg.a() - cfg.b())));
  double ell_mag = abs_estimate(ell);

  EvalResult total;
  for (const auto& [w, coeff] : p.terms()) {
    // w = core x_b^n with maximal n
    Word core = w;
    int n = 0;
    while (!core.empty() && core.back() == cfg.b()) {
      core.pop_back();
      ++n;
    }
    BigComplex factor(1L); // ell^j / j!
    double factor_mag = 1;
    for (int j = 0; j <= n; ++j) {
      Word stem = core;
      stem.insert(stem.end(), n - j, cfg.b());
      EvalResult r = li_b(reg_b(stem, cfg.b()), z, cfg, ctx);
      total.value += r.value * factor * to_big(coeff);
      total.err_bound += r.err_bound * factor_mag * rat_mag(coeff);
      total.terms += r.terms;
      factor = factor * ell / BigReal(j + 1);
      factor_mag *= ell_mag / (j + 1);
    }
  }
  return total;
}

EvalResult li_ab(const Word& w, const Point& z, const SigmaConfig& cfg,
                 const PrecisionContext& ctx) {
  return li_ab(WordPoly(w), z, cfg, ctx);
}

EvalResult L_ab(const Word& w, const SigmaConfig& cfg,
                const PrecisionContext& ctx) {
  check_letters(w, cfg);
  if (!in_Aab(w, cfg.a(), cfg.b()))
    throw NotInAab("word must not start in x_a or end in x_b");
  if (!cfg.nearest_ab())
    throw NotNearest("a is not among the nearest points to b");
  if (w.empty()) return {BigComplex(1L), 0, 0};

  IndexForm f = index_form(w, cfg.b());
  std::vector<GaussianRational> bases;
  bases.reserve(f.depth());
  for (const Point& c : f.c)
    bases.push_back((c - cfg.b()) / (cfg.a() - cfg.b()));
  EvalResult r = lambda_eval(LambdaArgs::from_exact(f.s, std::move(bases)), ctx);
  if (f.depth() % 2) r.value = -r.value;
  return r;
}

EvalResult L_ab(const WordPoly& p, const SigmaConfig& cfg,
                const PrecisionContext& ctx) {
  return eval_linearly(p, ctx.precision_bits,
                       [&](const Word& w) { return L_ab(w, cfg, ctx); });
}

EvalResult mzv(const std::vector<int>& k, const PrecisionContext& ctx) {
  if (k.empty()) return {BigComplex(1L), 0, 0};
  for (int ki : k)
    if (ki < 1) throw std::invalid_argument("zeta exponents must be >= 1");
  if (k[0] == 1) throw Divergent("zeta diverges when the leading exponent is 1");

  SigmaConfig cfg({Point(0L), Point(1L)}, Point(1L), Point(0L));
  Word w;
  for (int ki : k) {
    w.insert(w.end(), ki - 1, Point(0L));
    w.push_back(Point(1L));
  }
  EvalResult r = L_ab(w, cfg, ctx);
  if (k.size() % 2) r.value = -r.value;
  return r;
}

EvalResult multiple_L_value(const std::vector<int>& k,
                            const std::vector<long>& a_res, long modulus,
                            const PrecisionContext& ctx) {
  if (modulus != 1 && modulus != 2 && modulus != 4)
    throw UnsupportedModulus(
        "only moduli 1, 2, 4 have Gaussian-rational roots of unity");
  if (k.size() != a_res.size())
    throw std::invalid_argument("exponent and residue lists differ in length");
  if (k.empty()) return {BigComplex(1L), 0, 0};
  for (int ki : k)
    if (ki < 1) throw std::invalid_argument("exponents must be >= 1");
  if (k[0] == 1 && a_res[0] % modulus == 0)
    throw Divergent("diverges when (k_1, a_1 mod m) = (1, 0)");

  GaussianRational root =
      modulus == 1 ? GaussianRational(1)
                   : modulus == 2 ? GaussianRational(-1)
                                  : GaussianRational(Rational(0), Rational(1));
  std::vector<GaussianRational> bases;
  bases.reserve(k.size());
  for (long a : a_res) {
    long e = ((-a) % modulus + modulus) % modulus;
    bases.push_back(root.pow(e));
  }
  return lambda_eval(LambdaArgs::from_exact(k, std::move(bases)), ctx);
}

} // namespace polylog
