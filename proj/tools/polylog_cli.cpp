// Command-line front end: configuration plumbing plus thin wrappers around
// the library's shuffle / regularization / duality / evaluation entry points.
//
// Exit codes: 0 success (all verifications passed), 1 at least one
// verification failed, 2 malformed input or violated precondition.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "polylog/errors.hpp"
#include "polylog/parse.hpp"
#include "polylog/reg.hpp"
#include "polylog/polylog_eval.hpp"
#include "polylog/relations.hpp"
#include "polylog/render.hpp"

namespace {

using nlohmann::json;
using namespace polylog;

struct RunConfig {
  std::vector<Point> sigma{Point(0), Point(1)};
  Point a{1};
  Point b{0};
  PrecisionContext ctx;
  int max_weight = 3;
  std::optional<MobiusMap> sigma_map;
};

Acceleration parse_acceleration(const std::string& name) {
  if (name == "none") return Acceleration::kNone;
  if (name == "euler-transform") return Acceleration::kEulerTransform;
  throw std::invalid_argument("unknown acceleration '" + name +
                              "' (expected none or euler-transform)");
}

// Point literals in JSON may be given as strings ("1/2-3i") or as plain
// integers for convenience.
Point json_point(const json& v) {
  if (v.is_number_integer()) return Point(v.get<long>());
  return parse_point(v.get<std::string>());
}

MobiusMap map_from_entries(const std::vector<Point>& e) {
  if (e.size() != 4)
    throw std::invalid_argument("sigma_map needs exactly 4 entries p, q, r, s");
  return MobiusMap(e[0], e[1], e[2], e[3]);
}

void apply_config_file(RunConfig& rc, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  json j = json::parse(in);
  if (j.contains("sigma")) {
    rc.sigma.clear();
    for (const auto& v : j.at("sigma")) rc.sigma.push_back(json_point(v));
  }
  if (j.contains("a")) rc.a = json_point(j.at("a"));
  if (j.contains("b")) rc.b = json_point(j.at("b"));
  if (j.contains("precision_bits"))
    rc.ctx.precision_bits = j.at("precision_bits").get<unsigned>();
  if (j.contains("truncation_M"))
    rc.ctx.truncation_M = j.at("truncation_M").get<long>();
  if (j.contains("target_tol"))
    rc.ctx.target_tol = j.at("target_tol").get<double>();
  if (j.contains("acceleration"))
    rc.ctx.acceleration = parse_acceleration(j.at("acceleration").get<std::string>());
  if (j.contains("max_weight")) rc.max_weight = j.at("max_weight").get<int>();
  if (j.contains("sigma_map")) {
    std::vector<Point> e;
    for (const auto& v : j.at("sigma_map")) e.push_back(json_point(v));
    rc.sigma_map = map_from_entries(e);
  }
}

std::string format_bound(double err, double tol) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.0e", std::max(err, tol));
  return buf;
}

std::string format_residual(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", r);
  return buf;
}

void print_report_line(std::ostream& os, const std::string& lhs,
                       const std::string& rhs, const VerificationReport& rep,
                       bool regularized) {
  os << (rep.passed ? "PASS" : "FAIL") << "  " << lhs << "  =  " << rhs
     << "  residual " << format_residual(rep.abs_residual);
  if (regularized) os << "  [regularized]";
  os << "\n";
}

json relation_json(const Relation& rel, const VerificationReport& rep,
                   double tol) {
  json r;
  r["lhs"] = render_poly(rel.lhs);
  r["rhs"] = render_poly(rel.rhs);
  r["provenance"] = provenance_name(rel.provenance);
  r["lhs_value"] = render_value(rep.lhs_value, tol);
  r["rhs_value"] = render_value(rep.rhs_value, tol);
  r["residual"] = rep.abs_residual;
  r["passed"] = rep.passed;
  if (rel.provenance == Provenance::kSigmaDuality)
    r["rhs_regularized"] = rel.rhs_regularized;
  return r;
}

// The two word literals of `shuffle` may arrive as one argument or two; the
// joined text must contain exactly two bracketed words.
std::pair<Word, Word> two_words(const std::vector<std::string>& args) {
  std::string text;
  for (const auto& s : args) {
    if (!text.empty()) text += ' ';
    text += s;
  }
  size_t close = text.find(']');
  if (close == std::string::npos)
    throw ParseError("expected a word literal", 0);
  Word u = parse_word(text.substr(0, close + 1));
  Word v = parse_word(text.substr(close + 1));
  return {u, v};
}

int run_relations(const RunConfig& rc, const std::string& mode,
                  const std::string& out) {
  SigmaConfig cfg(rc.sigma, rc.a, rc.b);
  std::vector<Relation> rels;
  if (mode == "dual") {
    rels = duality_pairs(cfg, rc.max_weight);
  } else if (mode == "sigma-dual") {
    if (!rc.sigma_map)
      throw std::invalid_argument("sigma-dual mode requires --sigma-map");
    rels = sigma_duality_pairs(*rc.sigma_map, cfg, rc.max_weight);
  } else {
    throw std::invalid_argument("unknown mode '" + mode +
                                "' (expected dual or sigma-dual)");
  }

  bool all_passed = true;
  if (out == "json") {
    json doc;
    doc["sigma"] = json::array();
    for (const auto& p : rc.sigma) doc["sigma"].push_back(render_point(p));
    doc["a"] = render_point(rc.a);
    doc["b"] = render_point(rc.b);
    doc["relations"] = json::array();
    for (const auto& rel : rels) {
      VerificationReport rep = verify(rel, cfg, rc.ctx);
      all_passed = all_passed && rep.passed;
      doc["relations"].push_back(relation_json(rel, rep, rc.ctx.target_tol));
    }
    std::cout << doc.dump(2) << "\n";
  } else if (out == "text") {
    long failed = 0;
    for (const auto& rel : rels) {
      VerificationReport rep = verify(rel, cfg, rc.ctx);
      if (!rep.passed) ++failed;
      print_report_line(std::cout, render_poly(rel.lhs), render_poly(rel.rhs),
                        rep, rel.rhs_regularized);
    }
    all_passed = failed == 0;
    std::cout << rels.size() << " relations, " << failed << " failed\n";
  } else {
    throw std::invalid_argument("unknown output format '" + out +
                                "' (expected json or text)");
  }
  return all_passed ? 0 : 1;
}

// Re-runs every relation recorded in a JSON file produced by `relations
// --out json`.  Any unparseable or failing entry makes the whole run FAIL:
// a tampered file must not verify.
int reverify_file(const RunConfig& rc, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open relations file " + path);

  long failed = 0, total = 0;
  try {
    json doc = json::parse(in);
    SigmaConfig cfg = doc.contains("sigma")
                          ? [&] {
                              std::vector<Point> pts;
                              for (const auto& v : doc.at("sigma"))
                                pts.push_back(json_point(v));
                              return SigmaConfig(pts, json_point(doc.at("a")),
                                                 json_point(doc.at("b")));
                            }()
                          : SigmaConfig(rc.sigma, rc.a, rc.b);
    for (const auto& entry : doc.at("relations")) {
      ++total;
      std::string lhs_text = entry.at("lhs").get<std::string>();
      std::string rhs_text = entry.at("rhs").get<std::string>();
      try {
        Relation rel;
        rel.lhs = parse_word_poly(lhs_text);
        rel.rhs = parse_word_poly(rhs_text);
        std::string prov = entry.at("provenance").get<std::string>();
        if (prov == provenance_name(Provenance::kAntipodeDuality)) {
          rel.provenance = Provenance::kAntipodeDuality;
        } else if (prov == provenance_name(Provenance::kSigmaDuality)) {
          rel.provenance = Provenance::kSigmaDuality;
        } else {
          throw std::invalid_argument("cannot re-verify provenance " + prov);
        }
        VerificationReport rep = verify(rel, cfg, rc.ctx);
        if (!rep.passed) ++failed;
        print_report_line(std::cout, lhs_text, rhs_text, rep, false);
      } catch (const Error& e) {
        ++failed;
        std::cout << "FAIL  " << lhs_text << "  =  " << rhs_text << "  ("
                  << e.what() << ")\n";
      } catch (const std::invalid_argument& e) {
        ++failed;
        std::cout << "FAIL  " << lhs_text << "  =  " << rhs_text << "  ("
                  << e.what() << ")\n";
      }
    }
  } catch (const json::exception& e) {
    std::cout << "FAIL  unreadable relations file: " << e.what() << "\n";
    return 1;
  }
  std::cout << total << " relations, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

int run_verify(const RunConfig& rc, const std::string& word_text,
               const std::string& z_text, const std::string& mode) {
  SigmaConfig cfg(rc.sigma, rc.a, rc.b);
  bool sigma_mode = mode == "sigma-dual";
  if (sigma_mode && !rc.sigma_map)
    throw std::invalid_argument("sigma-dual mode requires --sigma-map");
  if (!sigma_mode && mode != "dual")
    throw std::invalid_argument("unknown mode '" + mode +
                                "' (expected dual or sigma-dual)");

  std::optional<Point> z;
  if (!z_text.empty()) z = parse_point(z_text);

  long failed = 0, total = 0;
  auto run_one = [&](const Word& w) {
    VerificationReport rep;
    Relation rel;
    if (z) {
      rep = sigma_mode
                ? sigma_euler_inversion_check(*rc.sigma_map, w, *z, cfg, rc.ctx)
                : euler_inversion_check(w, *z, cfg, rc.ctx);
      rel.lhs.add_term(w, Rational(1));
      rel.rhs = rel.lhs;
      print_report_line(std::cout, "inversion sum of " + render_word(w),
                        render_word(w) + " at z=" + render_point(*z), rep,
                        false);
    } else if (sigma_mode) {
      WordPoly twisted = tau(*rc.sigma_map, cfg, w);
      rel.lhs.add_term(w, Rational(1));
      rel.rhs = reg_ab(twisted, cfg.a(), cfg.b());
      rel.provenance = Provenance::kSigmaDuality;
      rel.rhs_regularized = !(rel.rhs == twisted);
      rep = verify(rel, cfg, rc.ctx);
      print_report_line(std::cout, render_poly(rel.lhs), render_poly(rel.rhs),
                        rep, rel.rhs_regularized);
    } else {
      rel.lhs.add_term(w, Rational(1));
      rel.rhs = antipode(rel.lhs);
      rel.provenance = Provenance::kAntipodeDuality;
      rep = verify(rel, cfg, rc.ctx);
      print_report_line(std::cout, render_poly(rel.lhs), render_poly(rel.rhs),
                        rep, false);
    }
    ++total;
    if (!rep.passed) ++failed;
  };

  if (!word_text.empty()) {
    run_one(parse_word(word_text));
  } else {
    for (const Word& w : words_up_to(cfg.points(), rc.max_weight)) {
      if (!in_Aab(w, cfg.a(), cfg.b())) continue;
      run_one(w);
    }
  }
  std::cout << total << " relations, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

int run_eval(const RunConfig& rc, const std::string& word_text,
             const std::string& z_text, const std::string& mzv_text,
             const std::string& lambda_text, const std::string& base_text) {
  auto parse_int_list = [](const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      size_t pos = 0;
      int v = std::stoi(item, &pos);
      while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos])))
        ++pos;
      if (pos != item.size())
        throw std::invalid_argument("bad integer list entry '" + item + "'");
      out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
  };

  EvalResult res;
  if (!mzv_text.empty()) {
    res = mzv(parse_int_list(mzv_text), rc.ctx);
  } else if (!lambda_text.empty()) {
    std::vector<int> s = parse_int_list(lambda_text);
    std::vector<GaussianRational> bases = parse_word(base_text);
    res = lambda_eval(LambdaArgs::from_exact(s, bases), rc.ctx);
  } else if (!word_text.empty()) {
    SigmaConfig cfg(rc.sigma, rc.a, rc.b);
    Word w = parse_word(word_text);
    res = z_text.empty() ? L_ab(w, cfg, rc.ctx)
                         : li_ab(w, parse_point(z_text), cfg, rc.ctx);
  } else {
    throw std::invalid_argument("eval needs one of --word, --mzv, --lambda");
  }
  std::cout << render_value(res.value, rc.ctx.target_tol) << " ± "
            << format_bound(res.err_bound, rc.ctx.target_tol) << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shuffle-algebra words, regularization, and multiple"
               " polylogarithm values"};
  app.require_subcommand(1);

  RunConfig rc;
  std::string config_path, sigma_text, a_text, b_text, accel_text, map_text;
  auto* opt_config = app.add_option("--config", config_path,
                                    "JSON config file; flags override it");
  auto* opt_sigma = app.add_option(
      "--sigma", sigma_text, "singular set as a point list, e.g. \"[0, 1, -1]\"");
  auto* opt_a = app.add_option("--a", a_text, "endpoint a (limit point)");
  auto* opt_b = app.add_option("--b", b_text, "base point b");
  auto* opt_bits =
      app.add_option("--precision-bits", rc.ctx.precision_bits,
                     "working mantissa bits (env POLYLOG_PRECISION_BITS)");
  auto* opt_m = app.add_option("--truncation-m", rc.ctx.truncation_M,
                               "hard cap on summation index");
  auto* opt_tol = app.add_option("--target-tol", rc.ctx.target_tol,
                                 "absolute tolerance for values");
  auto* opt_accel = app.add_option("--acceleration", accel_text,
                                   "tail handling: none | euler-transform");
  auto* opt_maxw =
      app.add_option("--max-weight", rc.max_weight, "weight cap for suites");
  auto* opt_map = app.add_option(
      "--sigma-map", map_text,
      "Moebius map (pz+q)/(rz+s) as \"[p, q, r, s]\"");

  auto* c_shuffle = app.add_subcommand("shuffle", "shuffle product of two words");
  // Plain string positionals: a vector option would make CLI11 treat each
  // "[...]" argument as a container literal and strip the brackets.
  std::string shuffle_w1, shuffle_w2;
  c_shuffle->add_option("first", shuffle_w1, "word literal")->required();
  c_shuffle->add_option("second", shuffle_w2,
                        "word literal (may be joined with the first)");

  auto* c_reg = app.add_subcommand("reg", "regularization projection");
  std::string reg_word;
  bool reg_flag_b = false, reg_flag_ab = false;
  c_reg->add_option("word", reg_word, "word literal")->required();
  c_reg->add_flag("--b", reg_flag_b, "project onto words not ending in x_b");
  c_reg->add_flag("--ab", reg_flag_ab,
                  "project onto words neither starting x_a nor ending x_b");

  auto* c_dualize = app.add_subcommand(
      "dualize", "antipode of a word, or its twisted dual under --sigma-map");
  std::string dualize_word;
  c_dualize->add_option("word", dualize_word, "word literal")->required();

  auto* c_eval = app.add_subcommand("eval", "numerical value with error bound");
  std::string eval_word, eval_z, eval_mzv, eval_lambda, eval_base;
  c_eval->add_option("--word", eval_word, "word literal; limit value at z=a");
  c_eval->add_option("--z", eval_z, "evaluate at this point instead of the limit");
  c_eval->add_option("--mzv", eval_mzv, "multiple zeta value, e.g. 2,1");
  c_eval->add_option("--lambda", eval_lambda, "exponent list, e.g. 2,1");
  c_eval->add_option("--base", eval_base,
                     "base-point list for --lambda, e.g. \"[1, -1]\"");

  auto* c_verify = app.add_subcommand(
      "verify", "verify duality relations or point-wise inversion sums");
  std::string verify_word, verify_z, verify_mode = "dual", verify_file;
  c_verify->add_option("--word", verify_word, "single word to verify");
  c_verify->add_option("--z", verify_z, "verify the inversion sum at this point");
  c_verify->add_option("--mode", verify_mode, "dual | sigma-dual");
  c_verify->add_option("--file", verify_file, "re-verify a relations JSON file");

  auto* c_relations = app.add_subcommand(
      "relations", "generate and verify a relation suite up to --max-weight");
  std::string rel_mode = "dual", rel_out = "text";
  c_relations->add_option("--mode", rel_mode, "dual | sigma-dual");
  c_relations->add_option("--out", rel_out, "json | text");

  for (auto* sub : {c_shuffle, c_reg, c_dualize, c_eval, c_verify, c_relations})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (const char* env = std::getenv("POLYLOG_PRECISION_BITS");
        env && !opt_bits->count()) {
      size_t pos = 0;
      rc.ctx.precision_bits = std::stoul(env, &pos);
      if (pos != std::string(env).size())
        throw std::invalid_argument("bad POLYLOG_PRECISION_BITS value");
    }
    if (opt_config->count()) {
      RunConfig from_file = rc;
      apply_config_file(from_file, config_path);
      // Flags seen on the command line win over the file.
      if (!opt_bits->count()) rc.ctx.precision_bits = from_file.ctx.precision_bits;
      if (!opt_m->count()) rc.ctx.truncation_M = from_file.ctx.truncation_M;
      if (!opt_tol->count()) rc.ctx.target_tol = from_file.ctx.target_tol;
      if (!opt_maxw->count()) rc.max_weight = from_file.max_weight;
      rc.sigma = from_file.sigma;
      rc.a = from_file.a;
      rc.b = from_file.b;
      rc.ctx.acceleration = from_file.ctx.acceleration;
      rc.sigma_map = from_file.sigma_map;
    }
    if (opt_sigma->count()) rc.sigma = parse_word(sigma_text);
    if (opt_a->count()) rc.a = parse_point(a_text);
    if (opt_b->count()) rc.b = parse_point(b_text);
    if (opt_accel->count()) rc.ctx.acceleration = parse_acceleration(accel_text);
    if (opt_map->count()) rc.sigma_map = map_from_entries(parse_word(map_text));
    rc.ctx.validate();

    if (c_shuffle->parsed()) {
      std::vector<std::string> shuffle_args{shuffle_w1};
      if (!shuffle_w2.empty()) shuffle_args.push_back(shuffle_w2);
      auto [u, v] = two_words(shuffle_args);
      std::cout << render_poly(shuffle(u, v)) << "\n";
      return 0;
    }
    if (c_reg->parsed()) {
      if (reg_flag_b == reg_flag_ab)
        throw std::invalid_argument("reg needs exactly one of --b, --ab");
      Word w = parse_word(reg_word);
      WordPoly out = reg_flag_b ? reg_b(w, rc.b) : reg_ab(w, rc.a, rc.b);
      std::cout << render_poly(out) << "\n";
      return 0;
    }
    if (c_dualize->parsed()) {
      Word w = parse_word(dualize_word);
      if (rc.sigma_map) {
        SigmaConfig cfg(rc.sigma, rc.a, rc.b);
        std::cout << render_poly(
                         reg_ab(tau(*rc.sigma_map, cfg, w), rc.a, rc.b))
                  << "\n";
      } else {
        WordPoly p;
        p.add_term(w, Rational(1));
        std::cout << render_poly(antipode(p)) << "\n";
      }
      return 0;
    }
    if (c_eval->parsed())
      return run_eval(rc, eval_word, eval_z, eval_mzv, eval_lambda, eval_base);
    if (c_verify->parsed()) {
      if (!verify_file.empty()) return reverify_file(rc, verify_file);
      return run_verify(rc, verify_word, verify_z, verify_mode);
    }
    if (c_relations->parsed()) return run_relations(rc, rel_mode, rel_out);
    throw std::invalid_argument("no subcommand given");
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
