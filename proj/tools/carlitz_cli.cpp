// Batch front door: evaluate finite multiple zeta values and finite Carlitz
// multiple polylogarithms over prime windows, verify the identities between
// them, and search for product relations. Emits deterministic JSON (or CSV)
// for a fixed configuration and seed; --jobs never changes the output bytes.
//
// Exit codes: 0 all checks passed, 1 a verification failed, 2 usage error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "carlitz/encoding.hpp"
#include "carlitz/identities.hpp"
#include "carlitz/parallel.hpp"

using namespace carlitz;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
  uint64_t p = 0;
  uint32_t e = 1;
  uint64_t q = 0;
  std::string modulus;
  std::string s, s2, u, u2;
  int prime_deg_max = -1;
  std::vector<std::string> primes;
  int d = -1;
  int nmax = -1;
  int weight_max = -1;
  int depth_max = 3;
  int stuffle_depth_max = 2;
  int s_single = -1, i_single = -1, s_max = 4, i_max = 3;
  int points = 5;
  int probe_deg_max = 3;
  int validate_deg_max = -1;
  uint64_t seed = 0;
  int jobs = 1;
  uint64_t budget = kDefaultBudget;
  bool csv = false;
};

void add_field_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--p", o.p, "characteristic of the base field");
  cmd->add_option("--e", o.e, "extension degree (default 1)");
  cmd->add_option("--q", o.q, "prime power p^e, alternative to --p/--e");
  cmd->add_option("--modulus", o.modulus,
                  "monic degree-e modulus over F_p, e.g. [1,1,1]");
}

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_flag("--json", "emit JSON (the default)");
  cmd->add_flag("--csv", o.csv, "emit CSV instead of JSON");
  cmd->add_option("--jobs", o.jobs, "worker threads; 0 = all cores (default 1)");
  cmd->add_option("--budget", o.budget, "per-call ring-operation cap");
}

void add_prime_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--prime-deg-max", o.prime_deg_max,
                  "use every monic irreducible of degree <= this");
  // one whole bracket string per occurrence; stop CLI11 from expanding
  // [c0,c1,...] into separate list elements
  cmd->add_option("--prime", o.primes, "explicit prime [c0,...]; repeatable")
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
}

Field resolve_field(Options& o) {
  if (o.q != 0) {
    if (o.p != 0) throw Error("give either --q or --p/--e, not both");
    auto [p, e] = split_prime_power(o.q);
    o.p = p;
    o.e = e;
  }
  if (o.p == 0) throw Error("a base field is required: --p (with --e) or --q");
  std::optional<std::vector<uint32_t>> mod;
  if (!o.modulus.empty()) {
    // modulus coefficients live in F_p; parse through a prime-field context
    auto fp = make_field(o.p, 1);
    mod = parse_theta_poly(fp, o.modulus).coeffs();
  }
  return make_field(o.p, o.e, mod);
}

int resolve_jobs(const Options& o) { return o.jobs == 0 ? hardware_jobs() : o.jobs; }

std::vector<ThetaPoly> resolve_primes(const Field& f, const Options& o) {
  std::vector<ThetaPoly> primes;
  if (!o.primes.empty()) {
    for (const auto& ps : o.primes) {
      ThetaPoly P = parse_theta_poly(f, ps);
      if (P.is_zero() || !P.monic() || !is_irreducible(P, o.budget))
        throw NotIrreducible("'" + ps + "' is not a monic irreducible polynomial");
      primes.push_back(std::move(P));
    }
  } else if (o.prime_deg_max >= 1) {
    primes = irreducibles_up_to(f, o.prime_deg_max, o.budget);
  } else {
    throw Error("select primes with --prime-deg-max or --prime");
  }
  return primes;
}

ordered_json window_json(const AkWindow& w) {
  ordered_json res;
  res["label"] = w.label;
  res["entries"] = ordered_json::array();
  for (const auto& e : w.entries)
    res["entries"].push_back({{"prime", encode(e.prime)}, {"residue", encode(e.value)}});
  res["excluded"] = ordered_json::array();
  for (const auto& x : w.excluded)
    res["excluded"].push_back({{"prime", encode(x.prime)}, {"reason", x.reason}});
  return res;
}

ordered_json report_json(const Report& r) {
  ordered_json j;
  j["identity"] = r.identity;
  ordered_json params;
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  if (!r.excluded.empty()) {
    j["excluded"] = r.excluded;
  } else {
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["equal"] = r.equal;
  }
  return j;
}

ordered_json reports_json(const std::vector<Report>& reports) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr;
}

void emit_json(const std::string& command, const Field& f, const ordered_json& params,
               const ordered_json& results) {
  ordered_json out;
  out["schema_version"] = "1";
  out["command"] = command;
  out["q"] = f->q();
  out["params"] = params;
  out["results"] = results;
  std::cout << out.dump(2) << "\n";
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit_window_csv(const AkWindow& w) {
  std::cout << "kind,prime,value\n";
  for (const auto& e : w.entries)
    std::cout << "entry," << csv_escape(encode(e.prime)) << ","
              << csv_escape(encode(e.value)) << "\n";
  for (const auto& x : w.excluded)
    std::cout << "excluded," << csv_escape(encode(x.prime)) << "," << csv_escape(x.reason)
              << "\n";
}

void emit_reports_csv(const std::vector<Report>& reports) {
  std::cout << "identity,params,lhs,rhs,status\n";
  for (const auto& r : reports) {
    std::string params;
    for (const auto& [k, v] : r.params) {
      if (!params.empty()) params += ';';
      params += k + "=" + v;
    }
    std::string status =
        !r.excluded.empty() ? "excluded" : (r.equal ? "pass" : "fail");
    std::cout << r.identity << "," << csv_escape(params) << "," << csv_escape(r.lhs)
              << "," << csv_escape(r.rhs) << "," << status << "\n";
  }
}

// Shared parameter echo. Execution-only knobs (--jobs) are deliberately
// omitted so identical configurations emit identical bytes at any width.
ordered_json base_params(const Field& f) {
  ordered_json params;
  params["p"] = f->p();
  params["e"] = f->ext_degree();
  if (f->ext_degree() > 1) {
    std::string m = "[";
    for (size_t i = 0; i < f->modulus().size(); ++i) {
      if (i) m += ',';
      m += std::to_string(f->modulus()[i]);
    }
    params["modulus"] = m + "]";
  }
  return params;
}

int run_fmzv_like(WindowKind kind, Options& o) {
  Field f = resolve_field(o);
  auto primes = resolve_primes(f, o);
  Composition s = parse_composition(o.s);
  std::optional<EvalPoint> u;
  if (kind == WindowKind::fcmpl) {
    if (o.u.empty()) throw Error("fcmpl needs an evaluation point: --u");
    u = EvalPoint{parse_point(f, o.u)};
  }
  AkWindow w = window(kind, s, u, primes, resolve_jobs(o), o.budget);

  ordered_json params = base_params(f);
  params["s"] = s.str();
  if (u) params["u"] = u->str();
  if (o.prime_deg_max >= 1) params["prime_deg_max"] = o.prime_deg_max;
  if (!o.primes.empty()) params["primes"] = o.primes;
  params["budget"] = o.budget;
  if (o.csv)
    emit_window_csv(w);
  else
    emit_json(kind == WindowKind::fmzv ? "fmzv" : "fcmpl", f, params, window_json(w));
  return 0;
}

int finish_verify(const std::string& command, const Field& f, const ordered_json& params,
                  const std::vector<Report>& reports, const Options& o) {
  if (o.csv)
    emit_reports_csv(reports);
  else
    emit_json(command, f, params, reports_json(reports));
  return all_passed(reports) ? 0 : 1;
}

int run_verify_main(Options& o) {
  Field f = resolve_field(o);
  auto primes = resolve_primes(f, o);
  SweepConfig cfg{resolve_jobs(o), o.budget};
  ordered_json params = base_params(f);

  std::vector<Report> reports;
  if (!o.s.empty()) {
    Composition s = parse_composition(o.s);
    params["s"] = s.str();
    for (const auto& P : primes) {
      try {
        reports.push_back(verify_main_theorem(s, P, o.budget));
      } catch (const ExcludedPrime& ex) {
        Report rep;
        rep.identity = "main-theorem";
        rep.params = {{"s", s.str()}, {"prime", encode(P)}};
        rep.excluded = ex.what();
        reports.push_back(std::move(rep));
      }
    }
  } else {
    const int wmax = o.weight_max >= 1 ? o.weight_max : 3;
    params["weight_max"] = wmax;
    params["depth_max"] = o.depth_max;
    reports = main_theorem_sweep(f, wmax, o.depth_max, primes, cfg);
  }
  if (o.prime_deg_max >= 1) params["prime_deg_max"] = o.prime_deg_max;
  if (!o.primes.empty()) params["primes"] = o.primes;
  params["budget"] = o.budget;
  return finish_verify("verify main-theorem", f, params, reports, o);
}

int run_verify_interpolation(Options& o) {
  Field f = resolve_field(o);
  SweepConfig cfg{resolve_jobs(o), o.budget};
  ordered_json params = base_params(f);
  std::vector<Report> reports;
  if (o.s_single >= 1) {
    const int i = o.i_single >= 0 ? o.i_single : 0;
    params["s"] = o.s_single;
    params["i"] = i;
    reports.push_back(verify_interpolation(f, o.s_single, i, o.budget));
  } else {
    params["s_max"] = o.s_max;
    params["i_max"] = o.i_max;
    reports = interpolation_sweep(f, o.s_max, o.i_max, cfg);
  }
  params["budget"] = o.budget;
  return finish_verify("verify interpolation", f, params, reports, o);
}

int run_verify_stuffle(Options& o) {
  Field f = resolve_field(o);
  auto primes = resolve_primes(f, o);
  SweepConfig cfg{resolve_jobs(o), o.budget};
  ordered_json params = base_params(f);
  std::vector<Report> reports;

  if (!o.s.empty() && !o.s2.empty()) {
    Composition s = parse_composition(o.s);
    Composition s2 = parse_composition(o.s2);
    params["s"] = s.str();
    params["s2"] = s2.str();
    if (!o.u.empty() && !o.u2.empty()) {
      EvalPoint u{parse_point(f, o.u)};
      EvalPoint u2{parse_point(f, o.u2)};
      params["u"] = u.str();
      params["u2"] = u2.str();
      for (const auto& P : primes) {
        try {
          reports.push_back(verify_stuffle(s, s2, u, u2, P, o.budget));
        } catch (const ExcludedPrime& ex) {
          Report rep;
          rep.identity = "stuffle";
          rep.params = {{"s", s.str()}, {"s2", s2.str()}, {"prime", encode(P)}};
          rep.excluded = ex.what();
          reports.push_back(std::move(rep));
        }
      }
    } else if (o.u.empty() != o.u2.empty()) {
      throw Error("give both --u and --u2, or neither for seeded points");
    } else {
      params["points"] = o.points;
      params["seed"] = o.seed;
      reports = stuffle_pairs_sweep(f, {{s, s2}}, primes, o.points, o.seed, cfg);
    }
  } else if (o.s.empty() != o.s2.empty()) {
    throw Error("give both --s and --s2, or neither for a sweep");
  } else {
    const int wmax = o.weight_max >= 1 ? o.weight_max : 4;
    params["weight_max"] = wmax;
    params["depth_max"] = o.stuffle_depth_max;
    params["points"] = o.points;
    params["seed"] = o.seed;
    reports = stuffle_sweep(f, wmax, o.stuffle_depth_max, primes, o.points, o.seed, cfg);
  }
  if (o.prime_deg_max >= 1) params["prime_deg_max"] = o.prime_deg_max;
  if (!o.primes.empty()) params["primes"] = o.primes;
  params["budget"] = o.budget;
  return finish_verify("verify stuffle", f, params, reports, o);
}

int run_verify_chang(Options& o) {
  Field f = resolve_field(o);
  SweepConfig cfg{resolve_jobs(o), o.budget};
  ordered_json params = base_params(f);
  const int dmax = o.d >= 0 ? o.d : 3;
  std::vector<Report> reports;
  if (!o.s.empty()) {
    Composition s = parse_composition(o.s);
    params["s"] = s.str();
    params["d"] = dmax;
    reports.push_back(verify_truncated_chang(f, s, dmax, o.budget));
  } else {
    const int wmax = o.weight_max >= 1 ? o.weight_max : 3;
    params["weight_max"] = wmax;
    params["d_max"] = dmax;
    reports = truncated_chang_sweep(f, wmax, dmax, cfg);
  }
  params["budget"] = o.budget;
  return finish_verify("verify truncated-chang", f, params, reports, o);
}

int run_at_poly(Options& o) {
  Field f = resolve_field(o);
  if (o.nmax < 0) throw Error("at-poly needs --nmax");
  auto H = at_polys(f, o.nmax);

  ordered_json params = base_params(f);
  params["nmax"] = o.nmax;
  if (o.csv) {
    std::cout << "n,t_exp,coeff\n";
    for (size_t n = 0; n < H.size(); ++n)
      for (size_t j = 0; j < H[n].coeffs().size(); ++j) {
        if (H[n].coeffs()[j].is_zero()) continue;
        std::cout << n << "," << j << "," << csv_escape(encode(H[n].coeffs()[j])) << "\n";
      }
    return 0;
  }
  ordered_json results = ordered_json::array();
  for (const auto& h : H) {
    ordered_json entry = ordered_json::array();
    for (size_t j = 0; j < h.coeffs().size(); ++j) {
      if (h.coeffs()[j].is_zero()) continue;
      entry.push_back(ordered_json::array({j, encode(h.coeffs()[j])}));
    }
    results.push_back(entry);
  }
  emit_json("at-poly", f, params, results);
  return 0;
}

int run_discover(Options& o) {
  Field f = resolve_field(o);
  Composition s = parse_composition(o.s);
  Composition s2 = parse_composition(o.s2);
  const int vmax = o.validate_deg_max >= 1 ? o.validate_deg_max : o.probe_deg_max + 1;
  if (vmax <= o.probe_deg_max)
    throw Error("--validate-deg-max must exceed --probe-deg-max");
  auto probes = irreducibles_up_to(f, o.probe_deg_max, o.budget);
  std::vector<ThetaPoly> validation;
  for (int d = o.probe_deg_max + 1; d <= vmax; ++d)
    for (auto& P : irreducibles(f, d, o.budget)) validation.push_back(std::move(P));

  ordered_json params = base_params(f);
  params["s"] = s.str();
  params["s2"] = s2.str();
  params["probe_deg_max"] = o.probe_deg_max;
  params["validate_deg_max"] = vmax;
  params["budget"] = o.budget;

  RelationCandidate cand = discover_relation(f, s, s2, probes, validation, o.budget);

  if (o.csv) {
    std::cout << "composition,coefficient\n";
    for (size_t i = 0; i < cand.unknowns.size(); ++i)
      std::cout << csv_escape(cand.unknowns[i].str()) << "," << cand.coefficients[i]
                << "\n";
    return 0;
  }
  ordered_json res;
  res["weight"] = cand.weight;
  res["unknowns"] = ordered_json::array();
  for (const auto& c : cand.unknowns) res["unknowns"].push_back(c.str());
  res["coefficients"] = cand.coefficients;
  res["nullspace"] = cand.nullspace;
  ordered_json nv = ordered_json::array();
  for (bool b : cand.nullspace_validated) nv.push_back(b);
  res["nullspace_validated"] = nv;
  res["stabilized"] = cand.stabilized;
  res["probes_used"] = ordered_json::array();
  for (const auto& P : cand.probes_used) res["probes_used"].push_back(encode(P));
  res["validation_primes"] = ordered_json::array();
  for (const auto& P : cand.validation_primes)
    res["validation_primes"].push_back(encode(P));
  emit_json("discover", f, params, res);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite multiple zeta values and Carlitz multiple polylogarithms over F_q[theta]"};
  app.require_subcommand(1);
  Options o;

  auto* at = app.add_subcommand("at-poly", "Anderson-Thakur polynomials H_0..H_N");
  add_field_flags(at, o);
  add_output_flags(at, o);
  at->add_option("--nmax", o.nmax, "largest index N");

  auto* zeta = app.add_subcommand("fmzv", "finite multiple zeta value window");
  add_field_flags(zeta, o);
  add_output_flags(zeta, o);
  add_prime_flags(zeta, o);
  zeta->add_option("--s", o.s, "composition, e.g. 1,2")->required();

  auto* li = app.add_subcommand("fcmpl", "finite Carlitz multiple polylogarithm window");
  add_field_flags(li, o);
  add_output_flags(li, o);
  add_prime_flags(li, o);
  li->add_option("--s", o.s, "composition, e.g. 1,2")->required();
  li->add_option("--u", o.u, "evaluation point, e.g. \"1,[0,1]/[1,1]\"");

  auto* verify = app.add_subcommand("verify", "identity verifiers");
  verify->require_subcommand(1);

  auto* vmain = verify->add_subcommand("main-theorem",
                                       "zeta window against the polylog expansion");
  add_field_flags(vmain, o);
  add_output_flags(vmain, o);
  add_prime_flags(vmain, o);
  vmain->add_option("--s", o.s, "single composition (otherwise sweep)");
  vmain->add_option("--weight-max", o.weight_max, "sweep weight bound (default 3)");
  vmain->add_option("--depth-max", o.depth_max, "sweep depth bound (default 3)");

  auto* vint = verify->add_subcommand("interpolation", "power-sum interpolation in k");
  add_field_flags(vint, o);
  add_output_flags(vint, o);
  vint->add_option("--s", o.s_single, "single exponent (otherwise sweep)");
  vint->add_option("--i", o.i_single, "single degree index");
  vint->add_option("--s-max", o.s_max, "sweep bound on s (default 4)");
  vint->add_option("--i-max", o.i_max, "sweep bound on i (default 3)");

  auto* vstuf = verify->add_subcommand("stuffle", "quasi-shuffle product relation");
  add_field_flags(vstuf, o);
  add_output_flags(vstuf, o);
  add_prime_flags(vstuf, o);
  vstuf->add_option("--s", o.s, "left composition");
  vstuf->add_option("--s2", o.s2, "right composition");
  vstuf->add_option("--u", o.u, "left point (with --u2: explicit case)");
  vstuf->add_option("--u2", o.u2, "right point");
  vstuf->add_option("--weight-max", o.weight_max, "sweep weight bound per tuple (default 4)");
  vstuf->add_option("--depth-max", o.stuffle_depth_max, "sweep depth bound per tuple (default 2)");
  vstuf->add_option("--points", o.points, "seeded points per case (default 5)");
  vstuf->add_option("--seed", o.seed, "seed for the evaluation points");

  auto* vchang = verify->add_subcommand("truncated-chang",
                                        "truncated expansion, exact in k");
  add_field_flags(vchang, o);
  add_output_flags(vchang, o);
  vchang->add_option("--s", o.s, "single composition (otherwise sweep)");
  vchang->add_option("--d", o.d, "truncation level (max level in sweeps, default 3)");
  vchang->add_option("--weight-max", o.weight_max, "sweep weight bound (default 3)");

  auto* disc = app.add_subcommand("discover", "F_p-relation discovery for products");
  add_field_flags(disc, o);
  add_output_flags(disc, o);
  disc->add_option("--s", o.s, "left composition")->required();
  disc->add_option("--s2", o.s2, "right composition")->required();
  disc->add_option("--probe-deg-max", o.probe_deg_max, "probe prime degrees (default 3)");
  disc->add_option("--validate-deg-max", o.validate_deg_max,
                   "held-out degrees up to this (default probe+1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (at->parsed()) return run_at_poly(o);
    if (zeta->parsed()) return run_fmzv_like(WindowKind::fmzv, o);
    if (li->parsed()) return run_fmzv_like(WindowKind::fcmpl, o);
    if (verify->parsed()) {
      if (vmain->parsed()) return run_verify_main(o);
      if (vint->parsed()) return run_verify_interpolation(o);
      if (vstuf->parsed()) return run_verify_stuffle(o);
      if (vchang->parsed()) return run_verify_chang(o);
    }
    if (disc->parsed()) return run_discover(o);
    std::cerr << "usage error: no subcommand\n";
    return 2;
  } catch (const ValidationFailed& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const NoSolution& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const InexactDivision& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
}
