// Copyright 2026 The linrep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "linrep/errors.h"
#include "linrep/families.h"
#include "linrep/hyperfinite.h"
#include "linrep/io.h"
#include "linrep/ncrat.h"
#include "linrep/parallel.h"
#include "linrep/representation.h"
#include "linrep/sofic.h"
#include "linrep/tiling.h"

namespace linrep::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kGrammars = R"(Grammars:
  element  := term (('+'|'-') term)*      e.g. "g1 - 1", "2*g1^-1*g2 + g2"
  term     := coeff ['*' word] | word     coefficients are field codes
  word     := gen ('*' gen)*, gen := 'g' index ['^' int]
  ratexpr  := term (('+'|'-') term)*, term := factor ('*' factor)*
  factor   := 'z' digits | digits | 'inv' '(' ratexpr ')' | '(' ratexpr ')'
  poly     := element grammar with x in place of g1
  field    := p | q | p^d                 e.g. 2, 4, 2^8
  family   := cyclic | abelian:M1,M2,.. | random:SEED:N:R | @file.json
  k range  := A..B | k1,k2,..
Exit codes: 0 ok, 1 input error, 2 check failed, 3 budget exceeded.
Rationals are printed as {"num": a, "den": b}.)";

Json rational_json(const Rational& r) { return Json{{"num", r.numerator()}, {"den", r.denominator()}}; }

FieldPtr parse_field_spec(const std::string& text) {
  auto to_u32 = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(s, &used);
      if (used != s.size() || v > (1ul << 20)) throw InputError("");
      return static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
      throw InputError("malformed field '" + text + "'");
    }
  };
  const auto caret = text.find('^');
  if (caret != std::string::npos) {
    return Field::make(to_u32(text.substr(0, caret)), to_u32(text.substr(caret + 1)));
  }
  std::uint32_t q = to_u32(text);
  if (q < 2) throw InputError("field order must be at least 2");
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    std::uint32_t d = 0;
    while (q % p == 0) {
      q /= p;
      ++d;
    }
    if (q != 1) break;
    return Field::make(p, d);
  }
  throw InputError("field order '" + text + "' is not a prime power");
}

std::vector<std::size_t> parse_k_range(const std::string& text) {
  std::vector<std::size_t> ks;
  auto num = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(s, &used);
      if (used != s.size()) throw InputError("");
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw InputError("malformed level list '" + text + "'");
    }
  };
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const std::size_t a = num(text.substr(0, dots));
    const std::size_t b = num(text.substr(dots + 2));
    if (a == 0 || b < a || b - a > 100000) throw InputError("bad level range '" + text + "'");
    for (std::size_t k = a; k <= b; ++k) ks.push_back(k);
    return ks;
  }
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) ks.push_back(num(part));
  if (ks.empty()) throw InputError("empty level list");
  return ks;
}

std::vector<std::size_t> parse_size_list(const std::string& text) { return parse_k_range(text); }

FamilyDescriptor load_family(const std::string& text) {
  if (!text.empty() && text[0] == '@') return read_family(read_text_file(text.substr(1)));
  return parse_family(text);
}

Representation load_rep(const std::string& path) { return read_representation(read_text_file(path)); }

AlgebraMatrix load_element(const std::string& element, const std::string& matrix_path,
                           const FieldPtr& field, std::uint32_t r) {
  if (!matrix_path.empty()) return read_algebra_matrix(read_text_file(matrix_path), field, r);
  if (element.empty()) throw InputError("give --element or --matrix");
  return AlgebraMatrix(parse_element(element, field, r));
}

Json matrix_json(const DenseMatrix& m) { return Json::parse(write_matrix(m)); }

// Options shared across subcommands; each subcommand binds what it needs.
struct Options {
  std::string rep, family, ks, element, matrix, field = "2";
  std::string problem, cert, witness, data, out_path, expr, tuple, lhs, rhs;
  std::string window_tol = "1/32", delta, epsilon = "1/10", alpha = "0", elements;
  std::string sizes = "1..4";
  std::size_t window = 8, budget = 256, K = 5, k = 0, trials = 0, cap = 64, ext_deg = 8;
  std::uint64_t seed = 0, cap_subspaces = kExpansionBudget;
};

int cmd_rank(const Options& o, std::ostream& out) {
  const Representation rep = load_rep(o.rep);
  const AlgebraMatrix a = load_element(o.element, o.matrix, rep.field(), rep.rank());
  const NormalizedRank nr = normalized_rank(rep, a);
  out << Json{{"rank", nr.rank}, {"n_k", nr.block}, {"value", rational_json(nr.value())}}.dump()
      << "\n";
  return kOk;
}

RankProfile compute_profile(const Options& o, std::size_t threads) {
  const FieldPtr field = parse_field_spec(o.field);
  const FamilyDescriptor family = load_family(o.family);
  const std::vector<std::size_t> ks = parse_k_range(o.ks);
  const std::uint32_t r = family_generate(family, field, ks.front()).rank();
  const AlgebraMatrix a = load_element(o.element, o.matrix, field, r);
  return rank_profile(family, field, ks, a, threads);
}

int cmd_profile(const Options& o, std::size_t threads, std::ostream& out) {
  out << write_profile_csv(compute_profile(o, threads));
  return kOk;
}

int cmd_atiyah(const Options& o, std::size_t threads, std::ostream& out) {
  const RankProfile profile = compute_profile(o, threads);
  const AtiyahReport rep = atiyah_check(profile, o.window, parse_rational(o.window_tol));
  out << Json{{"limit_estimate", rational_json(rep.limit_estimate)},
              {"tail_oscillation", rational_json(rep.tail_oscillation)},
              {"nearest_integer", rep.nearest_integer},
              {"integral", rep.integral},
              {"tolerance", rational_json(rep.tolerance)}}
             .dump()
      << "\n";
  return rep.integral ? kOk : kCheckFailed;
}

Json precondition_json(const PreconditionReport& p) {
  return Json{{"in_span", p.in_span},           {"candidate_dim", p.candidate_dim},
              {"kernel_bound", p.kernel_bound}, {"f_size", p.f_size},
              {"h_dim", p.h_dim},               {"good_map", p.good_map},
              {"dim_candidate", p.dim_candidate}, {"max_kernel", p.max_kernel},
              {"dim_good", p.dim_good},         {"all", p.all()}};
}

int cmd_tile(const Options& o, std::ostream& out) {
  const TilingProblem p = read_tiling_problem(read_text_file(o.problem));
  const PreconditionReport pre = precondition_check(p.map, p.f, p.h, p.i, p.delta);
  const TilingCertificate cert = greedy_tiling(p.map, p.f, p.h, p.i, p.delta, {o.budget, o.seed});
  const std::string cert_text = write_certificate(cert);
  if (!o.out_path.empty()) write_text_file(o.out_path, cert_text + "\n");
  out << Json{{"preconditions", precondition_json(pre)},
              {"certificate", Json::parse(cert_text)}}
             .dump()
      << "\n";
  return cert.partial ? kCheckFailed : kOk;
}

int cmd_tile_verify(const Options& o, std::ostream& out) {
  const TilingProblem p = read_tiling_problem(read_text_file(o.problem));
  const TilingCertificate cert = read_certificate(read_text_file(o.cert), p.map.field(), p.map.dim());
  const CertificateCheck check = verify_certificate(cert, p.map, p.f, p.h, p.i, p.delta);
  out << Json{{"ok", check.ok}, {"failure", check.failure}}.dump() << "\n";
  return check.ok ? kOk : kCheckFailed;
}

int cmd_hyperfinite_check(const Options& o, std::ostream& out) {
  const Representation rep = load_rep(o.rep);
  const HyperfiniteWitness w = read_witness(read_text_file(o.witness), rep.field(), rep.dim());
  const WitnessVerdict v = witness_report(rep, w);
  out << Json{{"ok", v.ok}, {"failure", v.failure}, {"coverage", v.coverage}}.dump() << "\n";
  return v.ok ? kOk : kCheckFailed;
}

int cmd_hyperfinite_search(const Options& o, std::ostream& out, std::ostream& err) {
  const Representation rep = load_rep(o.rep);
  const auto w = witness_search(rep, parse_rational(o.epsilon), o.K, {o.budget, o.seed});
  if (!w) {
    err << "no witness found within the budget (this says nothing about hyperfiniteness)\n";
    out << Json{{"found", false}}.dump() << "\n";
    return kBudgetExceeded;
  }
  const std::string text = write_witness(*w);
  if (!o.out_path.empty()) write_text_file(o.out_path, text + "\n");
  out << text << "\n";
  return kOk;
}

int cmd_cheeger(const Options& o, std::size_t threads, std::ostream& out) {
  const Representation rep = load_rep(o.rep);
  const ExpansionReport r = o.trials > 0 ? cheeger_random(rep, o.trials, o.seed, threads)
                                         : cheeger_exact(rep, threads, o.cap_subspaces);
  out << write_expansion_report(r) << "\n";
  return kOk;
}

int cmd_expander(const Options& o, std::size_t threads, std::ostream& out) {
  const Representation rep = load_rep(o.rep);
  const Rational alpha = parse_rational(o.alpha);
  const ExpansionReport r = cheeger_exact(rep, threads, o.cap_subspaces);
  const bool ok = r.min_ratio >= 1 + alpha;
  out << Json{{"expander", ok}, {"alpha", rational_json(alpha)},
              {"min_ratio", rational_json(r.min_ratio)}}
             .dump()
      << "\n";
  return ok ? kOk : kCheckFailed;
}

int cmd_sofic_check(const Options& o, std::ostream& out) {
  const SoficData data = read_sofic_data(read_text_file(o.data));
  std::vector<std::size_t> ks;
  if (o.k > 0) {
    ks.push_back(o.k);
  } else {
    for (std::size_t k = 1; k <= data.maps.size(); ++k) ks.push_back(k);
  }
  Json reports = Json::array();
  bool all = true;
  for (std::size_t k : ks) {
    const SoficReport r = sofic_check(data, k);
    all = all && r.ok();
    reports.push_back(Json{{"k", r.k},
                           {"span", r.span},
                           {"unit", r.unit},
                           {"rank_ok", r.rank_ok},
                           {"defect_ok", r.defect_ok},
                           {"defect_bound", rational_json(r.defect_bound)},
                           {"defect_basis_max", rational_json(r.defect_basis_max)},
                           {"min_rank", rational_json(r.min_rank)},
                           {"checked_elements", r.checked_elements},
                           {"failure", r.failure}});
  }
  out << Json{{"ok", all}, {"maps", reports}}.dump() << "\n";
  return all ? kOk : kCheckFailed;
}

int cmd_folner(const Options& o, std::ostream& out) {
  const FieldPtr field = parse_field_spec(o.field);
  std::vector<AlgebraElement> e;
  std::stringstream ss(o.elements);
  for (std::string part; std::getline(ss, part, ';');) e.push_back(parse_poly(part, field));
  if (e.empty()) throw InputError("give at least one element with --elements");
  const FolnerPair fp = folner_pair(PolyInstance{field, o.cap}, e, parse_rational(o.delta));
  out << Json{{"m", fp.m}, {"d", fp.d}, {"dim_v1", fp.v1.dim()}, {"dim_v", fp.v.dim()}}.dump()
      << "\n";
  return kOk;
}

Json path_json(const std::vector<std::size_t>& path) { return Json(path); }

int cmd_ncrat_eval(const Options& o, std::ostream& out) {
  const RatExpr e = parse_ratexpr(o.expr);
  const std::vector<DenseMatrix> tuple = read_tuple(read_text_file(o.tuple));
  const EvalResult r = evaluate(e, tuple);
  if (r.ok()) {
    out << Json{{"in_domain", true}, {"value", matrix_json(*r.value)}}.dump() << "\n";
    return kOk;
  }
  out << Json{{"in_domain", false}, {"failure_path", path_json(r.failure_path)}}.dump() << "\n";
  return kCheckFailed;
}

int cmd_ncrat_equiv(const Options& o, std::size_t threads, std::ostream& out) {
  const RatExpr l = parse_ratexpr(o.lhs);
  const RatExpr r = parse_ratexpr(o.rhs);
  const FieldPtr base = parse_field_spec(o.field);
  EquivOptions opts;
  opts.sizes = parse_size_list(o.sizes);
  opts.trials = o.trials > 0 ? o.trials : 50;
  opts.ext_deg = static_cast<std::uint32_t>(o.ext_deg);
  opts.seed = o.seed;
  opts.threads = threads;
  const EquivVerdict v = equiv_probabilistic(l, r, base, opts);
  Json j{{"common_samples", v.common_samples}, {"trials_run", v.trials_run}};
  switch (v.kind) {
    case EquivVerdict::Kind::kCounterexample: {
      Json point = Json::array();
      for (const auto& m : v.point) point.push_back(matrix_json(m));
      j["verdict"] = "counterexample";
      j["size"] = v.size;
      j["point"] = point;
      j["left"] = matrix_json(*v.left);
      j["right"] = matrix_json(*v.right);
      out << j.dump() << "\n";
      return kCheckFailed;
    }
    case EquivVerdict::Kind::kConsistent:
      j["verdict"] = "consistent";
      out << j.dump() << "\n";
      return kOk;
    case EquivVerdict::Kind::kNoCommonDomain:
      j["verdict"] = "no-common-domain";
      out << j.dump() << "\n";
      return kBudgetExceeded;
  }
  return kInputError;
}

int cmd_repair(const Options& o, std::ostream& out) {
  const FieldPtr field = parse_field_spec(o.field);
  const DenseMatrix m = read_matrix(read_text_file(o.matrix), field);
  const DenseMatrix fixed = repair_to_invertible(m);
  out << Json{{"matrix", matrix_json(fixed)},
              {"defect", m.rows() - rank(m)},
              {"rank_distance", rank_distance(m, fixed)}}
             .dump()
      << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-field representations of free groups: ranks, tilings, witnesses, expansion.",
               "linrep"};
  app.footer(kGrammars);
  app.require_subcommand(1);
  app.fallthrough();
  std::size_t threads = default_thread_count();
  Options o;
  app.add_option("--threads", threads, "Worker threads (default: LINREP_THREADS or 1)")
      ->check(CLI::PositiveNumber);

  auto* rank = app.add_subcommand("rank", "Normalized rank of a group-algebra matrix");
  rank->add_option("--rep", o.rep, "Representation JSON")->required();
  rank->add_option("--element", o.element, "Single element (1 x 1 matrix)");
  rank->add_option("--matrix", o.matrix, "Algebra matrix JSON");

  auto* profile = app.add_subcommand("profile", "Rank profile over a family, as CSV");
  auto* atiyah = app.add_subcommand("atiyah", "Atiyah integrality diagnostic");
  for (auto* sc : {profile, atiyah}) {
    sc->add_option("--family", o.family, "Family descriptor")->required();
    sc->add_option("--k", o.ks, "Levels")->required();
    sc->add_option("--element", o.element, "Single element");
    sc->add_option("--matrix", o.matrix, "Algebra matrix JSON");
    sc->add_option("--field", o.field, "Field")->capture_default_str();
  }
  atiyah->add_option("--window", o.window, "Tail window")->capture_default_str();
  atiyah->add_option("--tol", o.window_tol, "Tolerance")->capture_default_str();

  auto* tile = app.add_subcommand("tile", "Greedy linear tiling");
  tile->add_option("--problem", o.problem, "Tiling problem JSON")->required();
  tile->add_option("--budget", o.budget, "Random candidates")->capture_default_str();
  tile->add_option("--seed", o.seed, "Seed")->capture_default_str();
  tile->add_option("--out", o.out_path, "Write the certificate here");

  auto* tile_verify = app.add_subcommand("tile-verify", "Re-check a tiling certificate");
  tile_verify->add_option("--problem", o.problem, "Tiling problem JSON")->required();
  tile_verify->add_option("--cert", o.cert, "Certificate JSON")->required();

  auto* hf_check = app.add_subcommand("hyperfinite-check", "Re-check a hyperfiniteness witness");
  hf_check->add_option("--rep", o.rep, "Representation JSON")->required();
  hf_check->add_option("--witness", o.witness, "Witness JSON")->required();

  auto* hf_search = app.add_subcommand("hyperfinite-search", "Heuristic witness search");
  hf_search->add_option("--rep", o.rep, "Representation JSON")->required();
  hf_search->add_option("--epsilon", o.epsilon, "Epsilon")->capture_default_str();
  hf_search->add_option("--K", o.K, "Tile dimension cap")->capture_default_str();
  hf_search->add_option("--budget", o.budget, "Random seed vectors")->capture_default_str();
  hf_search->add_option("--seed", o.seed, "Seed")->capture_default_str();
  hf_search->add_option("--out", o.out_path, "Write the witness here");

  auto* cheeger = app.add_subcommand("cheeger", "Linear Cheeger constant (minimum growth)");
  cheeger->add_option("--rep", o.rep, "Representation JSON")->required();
  cheeger->add_option("--trials", o.trials, "Random trials; 0 means exact")->capture_default_str();
  cheeger->add_option("--seed", o.seed, "Seed")->capture_default_str();
  cheeger->add_option("--cap", o.cap_subspaces, "Exact scan subspace cap")->capture_default_str();

  auto* expander = app.add_subcommand("expander", "Dimension-expander check");
  expander->add_option("--rep", o.rep, "Representation JSON")->required();
  expander->add_option("--alpha", o.alpha, "Expansion alpha")->capture_default_str();
  expander->add_option("--cap", o.cap_subspaces, "Exact scan subspace cap")->capture_default_str();

  auto* sofic = app.add_subcommand("sofic-check", "Check sofic approximation data");
  sofic->add_option("--data", o.data, "Sofic data JSON")->required();
  sofic->add_option("--k", o.k, "Single map index (default: all)");

  auto* folner = app.add_subcommand("folner", "Folner pair for polynomials in x");
  folner->add_option("--elements", o.elements, "Polynomials separated by ';'")->required();
  folner->add_option("--delta", o.delta, "Delta")->required();
  folner->add_option("--cap", o.cap, "Largest degree cap m")->capture_default_str();
  folner->add_option("--field", o.field, "Field")->capture_default_str();

  auto* ncrat_eval = app.add_subcommand("ncrat-eval", "Evaluate a rational expression");
  ncrat_eval->add_option("--expr", o.expr, "Expression")->required();
  ncrat_eval->add_option("--tuple", o.tuple, "Matrix tuple JSON")->required();

  auto* ncrat_equiv = app.add_subcommand("ncrat-equiv", "Probabilistic equivalence test");
  ncrat_equiv->add_option("--lhs", o.lhs, "Left expression")->required();
  ncrat_equiv->add_option("--rhs", o.rhs, "Right expression")->required();
  ncrat_equiv->add_option("--sizes", o.sizes, "Matrix sizes")->capture_default_str();
  ncrat_equiv->add_option("--trials", o.trials, "Trials per size (default 50)");
  ncrat_equiv->add_option("--ext-deg", o.ext_deg, "Extension degree")->capture_default_str();
  ncrat_equiv->add_option("--field", o.field, "Base field")->capture_default_str();
  ncrat_equiv->add_option("--seed", o.seed, "Seed")->capture_default_str();

  auto* repair = app.add_subcommand("repair", "Nearest invertible matrix in rank distance");
  repair->add_option("--matrix", o.matrix, "Matrix JSON")->required();
  repair->add_option("--field", o.field, "Field")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*rank) return cmd_rank(o, out);
    if (*profile) return cmd_profile(o, threads, out);
    if (*atiyah) return cmd_atiyah(o, threads, out);
    if (*tile) return cmd_tile(o, out);
    if (*tile_verify) return cmd_tile_verify(o, out);
    if (*hf_check) return cmd_hyperfinite_check(o, out);
    if (*hf_search) return cmd_hyperfinite_search(o, out, err);
    if (*cheeger) return cmd_cheeger(o, threads, out);
    if (*expander) return cmd_expander(o, threads, out);
    if (*sofic) return cmd_sofic_check(o, out);
    if (*folner) return cmd_folner(o, out);
    if (*ncrat_eval) return cmd_ncrat_eval(o, out);
    if (*ncrat_equiv) return cmd_ncrat_equiv(o, threads, out);
    if (*repair) return cmd_repair(o, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace linrep::cli
