#include "polylog/lambda_eval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "polylog/errors.hpp"

namespace polylog {

bool LambdaArgs::all_exact() const {
  if (exact.size() != s.size()) return false;
  for (const auto& e : exact)
    if (!e) return false;
  return true;
}

LambdaArgs LambdaArgs::from_exact(std::vector<int> s,
                                  std::vector<GaussianRational> b) {
  LambdaArgs a;
  a.s = std::move(s);
  a.b.reserve(b.size());
  a.exact.reserve(b.size());
  for (auto& q : b) {
    a.b.push_back(BigComplex::from(q));
    a.exact.emplace_back(std::move(q));
  }
  return a;
}

namespace {

// Expansions keep the powers 1/m^0 .. 1/m^kPmax.  With seed cutoffs of a few
// hundred or more, the first omitted order is below 1e-40 even after the
// safety factors, comfortably past the tolerances the context can certify.
constexpr int kPmax = 16;
constexpr double kRefCutoff = 800; // reference cutoff for drop bookkeeping

// B_2, B_4, ..., B_20.
const Rational kBernoulli[] = {
    Rational(1, 6),        Rational(-1, 30),    Rational(1, 42),
    Rational(-1, 30),      Rational(5, 66),     Rational(-691, 2730),
    Rational(7, 6),        Rational(-3617, 510), Rational(43867, 798),
    Rational(-174611, 330)};

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

// p(p+1)...(p+len-1)
Integer rising(int p, int len) {
  Integer r = 1;
  for (int i = 0; i < len; ++i) r *= p + i;
  return r;
}

// Truncated expansion sum_p coeff[p]/m^p, with a ledger of everything shed
// past power kPmax so the final error estimate can account for it.
struct PowerSeries {
  std::vector<BigComplex> coeff;
  double dropped = 0; // magnitudes normalized to order kPmax+1 at kRefCutoff

  PowerSeries() : coeff(kPmax + 1) {}

  void drop(int power, double magnitude) {
    dropped += magnitude * std::pow(kRefCutoff, -(power - (kPmax + 1)));
  }

  int min_power() const {
    for (int p = 0; p <= kPmax; ++p)
      if (!coeff[p].is_zero()) return p;
    return kPmax + 1;
  }
};

// P(1/(n+1)) re-expanded in powers of 1/n.
PowerSeries shift_arg(const PowerSeries& in) {
  PowerSeries out;
  out.dropped = in.dropped;
  out.coeff[0] = in.coeff[0];
  for (int p = 1; p <= kPmax; ++p) {
    if (in.coeff[p].is_zero()) continue;
    // (n+1)^{-p} = sum_t (-1)^t C(p+t-1, t) n^{-(p+t)}
    for (int t = 0; p + t <= kPmax; ++t) {
      BigReal c = to_big(Rational((t % 2 ? -1 : 1) * binom(p + t - 1, t)));
      out.coeff[p + t] += in.coeff[p] * c;
    }
    int t0 = kPmax - p + 1;
    out.drop(kPmax + 1, 2 * abs_estimate(in.coeff[p]) *
                            static_cast<double>(binom(p + t0 - 1, t0)));
  }
  return out;
}

PowerSeries mul_inv_pow(const PowerSeries& in, int s) {
  PowerSeries out;
  out.dropped = in.dropped;
  for (int p = 0; p <= kPmax; ++p) {
    if (in.coeff[p].is_zero()) continue;
    if (p + s <= kPmax)
      out.coeff[p + s] = in.coeff[p];
    else
      out.drop(p + s, abs_estimate(in.coeff[p]));
  }
  return out;
}

// Forward difference (Delta f)(m) = f(m+1) - f(m), again as a power series.
PowerSeries forward_diff(const PowerSeries& in) {
  PowerSeries out = shift_arg(in);
  for (int p = 0; p <= kPmax; ++p) out.coeff[p] -= in.coeff[p];
  return out;
}

bool all_zero(const PowerSeries& s) {
  return s.min_power() > kPmax;
}

// sum_{n >= m} phi(n) for a pure power series phi with min power >= 2,
// via Euler-Maclaurin:
//   sum = int_m^inf phi + phi(m)/2 + sum_k B_{2k}/(2k)! (p)_{2k-1} m^{-(p+2k-1)}
// No logarithms can appear because every power is >= 2.
PowerSeries em_tail(const PowerSeries& phi) {
  if (!phi.coeff[0].is_zero() || !phi.coeff[1].is_zero())
    throw std::logic_error("em_tail needs integrand powers >= 2");
  PowerSeries out;
  out.dropped = phi.dropped;
  for (int p = 2; p <= kPmax; ++p) {
    if (phi.coeff[p].is_zero()) continue;
    const BigComplex& c = phi.coeff[p];
    out.coeff[p - 1] += c / BigReal(p - 1);
    out.coeff[p] += c / BigReal(2);
    for (int k = 1; k <= 10; ++k) {
      int q = p + 2 * k - 1;
      Rational f = kBernoulli[k - 1] * Rational(rising(p, 2 * k - 1)) /
                   Rational(factorial(2 * k));
      double mag = std::abs(static_cast<double>(to_big(f))) * abs_estimate(c);
      if (q <= kPmax)
        out.coeff[q] += c * to_big(f);
      else {
        out.drop(q, 2 * mag);
        break; // geometric in 1/m past the cutoff; first term dominates
      }
    }
    // remainder beyond B_20 sits at power p + 21 > kPmax
    out.drop(p + 21,
             abs_estimate(c) * 6200.0 * static_cast<double>(rising(p, 21)) /
                 static_cast<double>(factorial(22)));
  }
  return out;
}

// sum_{n >= m} ell^n phi(n) for ell != 1, |ell| <= 1.  Iterating the
// Abel-summation identity
//   sum = ell^m phi(m)/(1-ell) + (ell/(1-ell)) sum_{n>=m} ell^n (Delta phi)(n)
// gives  ell^m/(1-ell) * sum_t (ell/(1-ell))^t (Delta^t phi)(m);  each
// difference raises the minimum power by one, so the sum truncates itself at
// order kPmax.  Returns the series multiplying ell^m.
PowerSeries newton_tail(const PowerSeries& phi, const GaussianRational& ell) {
  GaussianRational one_minus = GaussianRational(1) - ell;
  BigComplex w = BigComplex::from(ell / one_minus);
  BigComplex pref = BigComplex::from(GaussianRational(1) / one_minus);

  PowerSeries acc = phi;
  PowerSeries cur = phi;
  BigComplex wt(1L);
  for (int t = 1; t <= kPmax + 1 && !all_zero(cur); ++t) {
    cur = forward_diff(cur);
    wt *= w;
    double wmag = abs_estimate(wt);
    for (int p = 0; p <= kPmax; ++p) acc.coeff[p] += wt * cur.coeff[p];
    acc.dropped += wmag * cur.dropped;
  }
  for (int p = 0; p <= kPmax; ++p) acc.coeff[p] = pref * acc.coeff[p];
  acc.dropped *= abs_estimate(pref) + 1;
  return acc;
}

struct LevelAsym {
  GaussianRational label{1}; // W_j(m) ~ label^m * series(1/m)
  PowerSeries series;
};

// One step of the tail recursion applied to asymptotic data:
//   W_j(m) = sum_{n>=m} u^n n^{-s} W_{j-1}(n+1).
LevelAsym apply_level(const LevelAsym& in, int s, const GaussianRational& u) {
  PowerSeries phi = shift_arg(in.series);
  if (!in.label.is_one()) {
    BigComplex lab = BigComplex::from(in.label); // from label^{n+1}
    for (int p = 0; p <= kPmax; ++p) phi.coeff[p] = lab * phi.coeff[p];
  }
  phi = mul_inv_pow(phi, s);

  LevelAsym out;
  out.label = u * in.label;
  out.series = out.label.is_one() ? em_tail(phi) : newton_tail(phi, out.label);
  return out;
}

BigComplex horner(const PowerSeries& s, const BigReal& x) {
  BigComplex acc = s.coeff[kPmax];
  for (int p = kPmax - 1; p >= 0; --p) acc = acc * x + s.coeff[p];
  return acc;
}

double roundoff_floor(const PrecisionContext& ctx, double ops) {
  return std::ldexp(1.0, 8 - static_cast<int>(ctx.precision_bits)) *
         (16.0 + ops);
}

// Accelerated route: asymptotic seeds at a cutoff M0, then an exact downward
// sweep of W_j(m) = W_j(m+1) + u_j^m m^{-s_j} W_{j-1}(m+1) for m = M0..1.
// Everything the sweep touches is bounded (the partial base products all
// have modulus <= 1), so no cancellation occurs at any depth.
EvalResult engine_eval(const LambdaArgs& args, const PrecisionContext& ctx) {
  const int k = static_cast<int>(args.depth());

  std::vector<GaussianRational> u(k);
  GaussianRational prev_b(1);
  for (int j = 0; j < k; ++j) {
    u[j] = prev_b / *args.exact[j];
    prev_b = *args.exact[j];
  }

  std::vector<LevelAsym> lv(k + 1);
  lv[0].series.coeff[0] = BigComplex(1L);
  for (int j = 1; j <= k; ++j)
    lv[j] = apply_level(lv[j - 1], args.s[j - 1], u[j - 1]);

  double est_norm = 0;
  for (int j = 1; j <= k; ++j) {
    est_norm += abs_estimate(lv[j].series.coeff[kPmax]) +
                abs_estimate(lv[j].series.coeff[kPmax - 1]) / kRefCutoff +
                lv[j].series.dropped;
  }

  long m0 = 0;
  double err = 0;
  for (long cand : {800L, 3200L, 12800L, 51200L}) {
    long m = std::min(cand, ctx.truncation_M);
    double scale = std::pow(static_cast<double>(m + 1), -(kPmax + 1));
    if (m < kRefCutoff) scale *= std::pow(kRefCutoff / m, 4); // drop ledger margin
    double e = 16 * est_norm * scale +
               roundoff_floor(ctx, static_cast<double>(m) * k);
    if (e <= 0.1 * ctx.target_tol) {
      m0 = m;
      err = e;
      break;
    }
  }
  if (m0 == 0)
    throw TailTooLarge("accelerated tail estimate exceeds target_tol at the "
                       "largest supported cutoff");

  BigReal x = BigReal(1) / BigReal(m0 + 1);
  std::vector<BigComplex> W(k + 1);
  W[0] = BigComplex(1L);
  std::vector<BigComplex> upow(k), uinv(k);
  for (int j = 1; j <= k; ++j) {
    W[j] = big_pow(BigComplex::from(lv[j].label), m0 + 1) *
           horner(lv[j].series, x);
    upow[j - 1] = big_pow(BigComplex::from(u[j - 1]), m0);
    uinv[j - 1] = BigComplex::from(GaussianRational(1) / u[j - 1]);
  }

  int smax = *std::max_element(args.s.begin(), args.s.end());
  std::vector<BigReal> mp(smax + 1);
  for (long m = m0; m >= 1; --m) {
    mp[0] = 1;
    BigReal minv = BigReal(1) / BigReal(m);
    for (int i = 1; i <= smax; ++i) mp[i] = mp[i - 1] * minv;
    for (int j = k; j >= 1; --j) {
      W[j] += upow[j - 1] * mp[args.s[j - 1]] * W[j - 1];
      upow[j - 1] *= uinv[j - 1];
    }
  }
  return {W[k], err, m0 * k};
}

// Plain route: ascending partial sums A_j(M) = sum_{m<=M} u_j^m m^{-s_j}
// A_{j+1}(m-1), stopping once an empirical geometric tail estimate clears
// the tolerance.  Converges usefully only when |b_1| is safely above 1.
EvalResult plain_eval(const LambdaArgs& args, const PrecisionContext& ctx) {
  const int k = static_cast<int>(args.depth());

  std::vector<BigComplex> u(k);
  BigComplex prev_b(1L);
  for (int j = 0; j < k; ++j) {
    BigComplex bj =
        args.exact.size() > static_cast<std::size_t>(j) && args.exact[j]
            ? BigComplex::from(*args.exact[j])
            : args.b[j];
    u[j] = prev_b / bj;
    prev_b = bj;
  }

  std::vector<BigComplex> A(k + 1);
  A[k] = BigComplex(1L);
  std::vector<BigComplex> upow(k, BigComplex(1L));

  int smax = *std::max_element(args.s.begin(), args.s.end());
  std::vector<BigReal> mp(smax + 1);
  double tmag[3] = {0, 0, 0}; // |t| for the last three steps
  for (long m = 1; m <= ctx.truncation_M; ++m) {
    mp[0] = 1;
    BigReal minv = BigReal(1) / BigReal(m);
    for (int i = 1; i <= smax; ++i) mp[i] = mp[i - 1] * minv;

    BigComplex t;
    for (int j = 0; j < k; ++j) {
      upow[j] *= u[j];
      BigComplex inc = upow[j] * mp[args.s[j]] * A[j + 1];
      A[j] += inc;
      if (j == 0) t = inc;
    }
    tmag[m % 3] = abs_estimate(t);

    if (m >= std::max(2L * k + 10, 25L) && tmag[0] > 0 && tmag[1] > 0 &&
        tmag[2] > 0) {
      double r = 0;
      for (int i = 0; i < 2; ++i) {
        double prev = tmag[(m - i - 1) % 3], curr = tmag[(m - i) % 3];
        r = std::max(r, curr / prev);
      }
      if (r < 0.9999) {
        double est = tmag[m % 3] * r / (1 - r);
        if (est < 0.5 * ctx.target_tol)
          return {A[0], est + roundoff_floor(ctx, static_cast<double>(m) * k),
                  m * k};
      }
    }
  }
  throw TailTooLarge("series tail still above target_tol at truncation_M "
                     "terms; raise truncation_M or use acceleration");
}

void check_convergence(const LambdaArgs& args) {
  const double near = std::ldexp(1.0, -40);
  for (std::size_t i = 0; i < args.depth(); ++i) {
    if (args.s[i] < 1)
      throw std::invalid_argument("exponents s_i must be >= 1");
    bool inside;
    if (args.exact.size() > i && args.exact[i])
      inside = args.exact[i]->norm2() < 1;
    else
      inside = args.b[i].norm() < BigReal(1 - near) * BigReal(1 - near);
    if (inside)
      throw NotConvergent("series requires |b_i| >= 1 for every depth");
  }
  if (args.s[0] == 1) {
    bool b1_is_one;
    if (!args.exact.empty() && args.exact[0])
      b1_is_one = args.exact[0]->is_one();
    else {
      BigComplex d = args.b[0] - BigComplex(1L);
      b1_is_one = d.norm() <= BigReal(near) * BigReal(near);
    }
    if (b1_is_one)
      throw NotConvergent("series diverges when s_1 = 1 and b_1 = 1");
  }
}

} // namespace

EvalResult lambda_eval(const LambdaArgs& args, const PrecisionContext& ctx) {
  ctx.validate();
  if (args.s.size() != args.b.size() && !(args.b.empty() && args.all_exact()))
    throw std::invalid_argument("mismatched argument lists");
  if (args.depth() == 0) return {BigComplex(1L), 0, 0};

  PrecisionGuard guard(ctx.precision_bits);
  check_convergence(args);

  if (ctx.acceleration == Acceleration::kEulerTransform && args.all_exact())
    return engine_eval(args, ctx);
  return plain_eval(args, ctx);
}

} // namespace polylog
