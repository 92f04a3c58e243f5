#include "polylog/relations.hpp"

#include <map>
#include <stdexcept>

#include "polylog/errors.hpp"
#include "polylog/reg.hpp"

namespace polylog {

namespace {

double residual_of(const BigComplex& lhs, const BigComplex& rhs) {
  return static_cast<double>(big_abs(lhs - rhs));
}

VerificationReport make_report(const BigComplex& lhs, const BigComplex& rhs,
                               long terms, const PrecisionContext& ctx) {
  VerificationReport rep;
  rep.lhs_value = lhs;
  rep.rhs_value = rhs;
  rep.abs_residual = residual_of(lhs, rhs);
  rep.tol_used = 10 * ctx.target_tol;
  rep.passed = rep.abs_residual <= rep.tol_used;
  rep.terms_summed = terms;
  return rep;
}

void require_mutually_nearest(const SigmaConfig& cfg) {
  if (!cfg.nearest_ab() || !cfg.nearest_ba())
    throw NotMutuallyNearest(
        "a and b must each be among the other's nearest points");
}

// L_ab extended linearly with a per-word cache; the relation families reuse
// the same monomials heavily.
class CachedLab {
 public:
  CachedLab(const SigmaConfig& cfg, const PrecisionContext& ctx)
      : cfg_(cfg), ctx_(ctx) {}

  EvalResult poly(const WordPoly& p) {
    EvalResult total;
    PrecisionGuard guard(ctx_.precision_bits);
    for (const auto& [w, c] : p.terms()) {
      const EvalResult& r = word(w);
      total.value += r.value * to_big(c);
      total.err_bound += r.err_bound * std::abs(c.convert_to<double>());
      total.terms += r.terms;
    }
    return total;
  }

  const EvalResult& word(const Word& w) {
    auto it = cache_.find(w);
    if (it == cache_.end())
      it = cache_.emplace(w, L_ab(w, cfg_, ctx_)).first;
    return it->second;
  }

 private:
  const SigmaConfig& cfg_;
  const PrecisionContext& ctx_;
  std::map<Word, EvalResult, WordLess> cache_;
};

} // namespace

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kAntipodeDuality: return "antipode_duality";
    case Provenance::kSigmaDuality: return "sigma_duality";
    case Provenance::kShuffleRelation: return "shuffle_relation";
    case Provenance::kEulerInversion: return "euler_inversion";
  }
  return "unknown";
}

std::vector<Word> words_up_to(const std::vector<Point>& alphabet,
                              int max_weight) {
  std::vector<Word> out;
  out.emplace_back(); // empty word
  std::vector<Word> layer = {Word{}};
  for (int wt = 1; wt <= max_weight; ++wt) {
    std::vector<Word> next;
    next.reserve(layer.size() * alphabet.size());
    for (const Word& w : layer) {
      for (const Point& l : alphabet) {
        Word e = w;
        e.push_back(l);
        next.push_back(std::move(e));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

XSeries phi_coefficients(const SigmaConfig& cfg, int max_weight,
                         const PrecisionContext& ctx) {
  if (!cfg.nearest_ab())
    throw NotNearest("a is not among the nearest points to b");
  CachedLab lab(cfg, ctx);
  XSeries phi;
  phi.max_weight = max_weight;
  for (const Word& w : words_up_to(cfg.points(), max_weight)) {
    EvalResult r = lab.poly(reg_ab(w, cfg.a(), cfg.b()));
    phi.coeff.emplace(w, r.value);
  }
  return phi;
}

std::vector<Relation> duality_pairs(const SigmaConfig& cfg, int max_weight) {
  require_mutually_nearest(cfg);
  std::vector<Relation> out;
  for (const Word& w : words_up_to(cfg.points(), max_weight)) {
    if (!in_Aab(w, cfg.a(), cfg.b())) continue;
    Relation rel;
    rel.lhs = WordPoly(w);
    rel.rhs = antipode(w);
    rel.provenance = Provenance::kAntipodeDuality;
    out.push_back(std::move(rel));
  }
  return out;
}

std::vector<Relation> sigma_duality_pairs(const MobiusMap& m,
                                          const SigmaConfig& cfg,
                                          int max_weight) {
  require_mutually_nearest(cfg);
  classify_involution(m, cfg); // throws NotASwap / NotInvolutive early
  std::vector<Relation> out;
  for (const Word& w : words_up_to(cfg.points(), max_weight)) {
    if (!in_Aab(w, cfg.a(), cfg.b())) continue;
    Relation rel;
    rel.lhs = WordPoly(w);
    WordPoly twisted = tau(m, cfg, w);
    rel.rhs = reg_ab(twisted, cfg.a(), cfg.b());
    rel.rhs_regularized = !(rel.rhs == twisted);
    rel.provenance = Provenance::kSigmaDuality;
    rel.sigma = m;
    out.push_back(std::move(rel));
  }
  return out;
}

VerificationReport verify(const Relation& rel, const SigmaConfig& cfg,
                          const PrecisionContext& ctx) {
  EvalResult lhs, rhs;
  switch (rel.provenance) {
    case Provenance::kAntipodeDuality: {
      lhs = L_ab(rel.lhs, cfg, ctx);
      SigmaConfig sw = cfg.swapped();
      rhs = L_ab(rel.rhs, sw, ctx);
      break;
    }
    case Provenance::kSigmaDuality:
      lhs = L_ab(rel.lhs, cfg, ctx);
      rhs = L_ab(rel.rhs, cfg, ctx);
      break;
    case Provenance::kShuffleRelation: {
      if (!rel.factors)
        throw std::invalid_argument("shuffle relation without factor words");
      PrecisionGuard guard(ctx.precision_bits);
      EvalResult fu = L_ab(rel.factors->first, cfg, ctx);
      EvalResult fv = L_ab(rel.factors->second, cfg, ctx);
      lhs.value = fu.value * fv.value;
      lhs.err_bound = fu.err_bound * abs_estimate(fv.value) +
                      fv.err_bound * abs_estimate(fu.value);
      lhs.terms = fu.terms + fv.terms;
      rhs = L_ab(rel.rhs, cfg, ctx);
      break;
    }
    case Provenance::kEulerInversion:
      throw std::invalid_argument(
          "point-dependent relations verify through euler_inversion_check");
  }
  return make_report(lhs.value, rhs.value, lhs.terms + rhs.terms, ctx);
}

VerificationReport euler_inversion_check(const Word& w, const Point& z,
                                         const SigmaConfig& cfg,
                                         const PrecisionContext& ctx) {
  PrecisionGuard guard(ctx.precision_bits);
  SigmaConfig sw = cfg.swapped();
  EvalResult lhs;
  for (const auto& [w1, w2] : deconcatenations(w)) {
    EvalResult f1 = li_ab(antipode(w1), z, sw, ctx);
    EvalResult f2 = li_ab(w2, z, cfg, ctx);
    lhs.value += f1.value * f2.value;
    lhs.err_bound += f1.err_bound * abs_estimate(f2.value) +
                     f2.err_bound * abs_estimate(f1.value);
    lhs.terms += f1.terms + f2.terms;
  }
  EvalResult rhs = L_ab(w, cfg, ctx);
  return make_report(lhs.value, rhs.value, lhs.terms + rhs.terms, ctx);
}

VerificationReport sigma_euler_inversion_check(const MobiusMap& m,
                                               const Word& w, const Point& z,
                                               const SigmaConfig& cfg,
                                               const PrecisionContext& ctx) {
  PrecisionGuard guard(ctx.precision_bits);
  ExtendedPoint sz = m.apply(z);
  if (sz.is_infinity())
    throw OutOfDisk("sigma(z) is the point at infinity");
  EvalResult lhs;
  for (const auto& [w1, w2] : deconcatenations(w)) {
    EvalResult f1 = li_ab(tau(m, cfg, w1), sz.finite(), cfg, ctx);
    EvalResult f2 = li_ab(w2, z, cfg, ctx);
    lhs.value += f1.value * f2.value;
    lhs.err_bound += f1.err_bound * abs_estimate(f2.value) +
                     f2.err_bound * abs_estimate(f1.value);
    lhs.terms += f1.terms + f2.terms;
  }
  EvalResult rhs = L_ab(w, cfg, ctx);
  return make_report(lhs.value, rhs.value, lhs.terms + rhs.terms, ctx);
}

std::vector<std::pair<Word, VerificationReport>> associator_inverse_check(
    const MobiusMap& m, const SigmaConfig& cfg, int max_weight,
    const PrecisionContext& ctx) {
  require_mutually_nearest(cfg);
  InvolutionForm form = classify_involution(m, cfg);

  PrecisionGuard guard(ctx.precision_bits);
  XSeries phi = phi_coefficients(cfg, max_weight, ctx);
  XSeries inv = xs_inverse(phi);
  XSeries twisted = xs_substitute(phi, act_on_dual_alphabet(m, cfg));

  BigComplex log_gamma; // stays 0 when m fixes infinity
  if (!form.fixes_infinity) {
    GaussianRational gamma =
        (cfg.a() - *form.alpha) / (cfg.b() - *form.alpha);
    log_gamma = big_log(BigComplex::from(gamma));
  }
  XSeries rhs = xs_mul(
      xs_mul(xs_exp_letter(cfg.b(), log_gamma, max_weight), twisted),
      xs_exp_letter(cfg.a(), log_gamma, max_weight));

  std::vector<std::pair<Word, VerificationReport>> out;
  for (const Word& w : words_up_to(cfg.points(), max_weight))
    out.emplace_back(w, make_report(inv.at(w), rhs.at(w), 0, ctx));
  return out;
}

VerificationReport shuffle_relation_check(const Word& u, const Word& v,
                                          const SigmaConfig& cfg,
                                          const PrecisionContext& ctx) {
  PrecisionGuard guard(ctx.precision_bits);
  EvalResult fu = L_ab(u, cfg, ctx);
  EvalResult fv = L_ab(v, cfg, ctx);
  EvalResult lhs;
  lhs.value = fu.value * fv.value;
  lhs.err_bound = fu.err_bound * abs_estimate(fv.value) +
                  fv.err_bound * abs_estimate(fu.value);
  lhs.terms = fu.terms + fv.terms;
  EvalResult rhs = L_ab(reg_ab(shuffle(u, v), cfg.a(), cfg.b()), cfg, ctx);
  return make_report(lhs.value, rhs.value, lhs.terms + rhs.terms, ctx);
}

} // namespace polylog
