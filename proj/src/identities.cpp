#include "carlitz/identities.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "carlitz/encoding.hpp"
#include "carlitz/gf_solver.hpp"
#include "carlitz/parallel.hpp"

namespace carlitz {

namespace {

// Size-k subsets of {0..n-1} as sorted position lists, lexicographic.
std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(k));
  std::iota(cur.begin(), cur.end(), 0);
  if (k > n) return out;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace

std::vector<StuffleTerm> stuffle_terms(const Composition& s, const Composition& s2) {
  const int r = s.depth(), r2 = s2.depth();
  std::vector<StuffleTerm> out;
  for (int rr = std::max(r, r2); rr <= r + r2; ++rr) {
    for (const auto& pos_l : combinations(rr, r)) {
      for (const auto& pos_r : combinations(rr, r2)) {
        std::vector<StufflePosition> pattern(static_cast<size_t>(rr));
        for (int j = 0; j < r; ++j) pattern[static_cast<size_t>(pos_l[static_cast<size_t>(j)])].left = j;
        for (int l = 0; l < r2; ++l) pattern[static_cast<size_t>(pos_r[static_cast<size_t>(l)])].right = l;
        bool covered = true;
        std::vector<int> merged(static_cast<size_t>(rr), 0);
        for (int i = 0; i < rr; ++i) {
          const auto& pp = pattern[static_cast<size_t>(i)];
          if (pp.left < 0 && pp.right < 0) {
            covered = false;
            break;
          }
          if (pp.left >= 0) merged[static_cast<size_t>(i)] += s.parts[static_cast<size_t>(pp.left)];
          if (pp.right >= 0) merged[static_cast<size_t>(i)] += s2.parts[static_cast<size_t>(pp.right)];
        }
        if (!covered) continue;
        out.push_back({Composition::of(std::move(merged)), std::move(pattern)});
      }
    }
  }
  return out;
}

EvalPoint assemble_point(const StuffleTerm& term, const EvalPoint& u, const EvalPoint& u2) {
  EvalPoint z;
  z.coords.reserve(term.pattern.size());
  for (const auto& pp : term.pattern) {
    if (pp.left >= 0 && pp.right >= 0) {
      z.coords.push_back(u.coords[static_cast<size_t>(pp.left)] *
                         u2.coords[static_cast<size_t>(pp.right)]);
    } else if (pp.left >= 0) {
      z.coords.push_back(u.coords[static_cast<size_t>(pp.left)]);
    } else {
      z.coords.push_back(u2.coords[static_cast<size_t>(pp.right)]);
    }
  }
  return z;
}

bool all_passed(const std::vector<Report>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const Report& r) { return r.passed(); });
}

Report verify_stuffle(const Composition& s, const Composition& s2, const EvalPoint& u,
                      const EvalPoint& u2, const ThetaPoly& P, uint64_t budget) {
  const auto terms = stuffle_terms(s, s2);
  Residue lhs = fcmpl_p(s, u, P, budget) * fcmpl_p(s2, u2, P, budget);
  Residue rhs = Residue::zero(P);
  for (const auto& term : terms)
    rhs += fcmpl_p(term.merged, assemble_point(term, u, u2), P, budget);

  Report rep;
  rep.identity = "stuffle";
  rep.params = {{"s", s.str()},
                {"s2", s2.str()},
                {"u", u.str()},
                {"u2", u2.str()},
                {"prime", encode(P)},
                {"terms", std::to_string(terms.size())}};
  rep.lhs = encode(lhs);
  rep.rhs = encode(rhs);
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

Report verify_interpolation(const Field& f, int s, int i, uint64_t budget) {
  if (s < 1 || i < 0) throw Error("interpolation check needs s >= 1, i >= 0");
  const TThetaPoly h = at_polys(f, s - 1).back();
  RationalFn lhs = RationalFn::normalize(h.twist(static_cast<unsigned>(i)).eval_at_theta(),
                                         l_poly(f, i).pow(static_cast<uint64_t>(s)));
  RationalFn rhs =
      RationalFn::of(carlitz_gamma(f, s)) * power_sum_exact(f, i, s, budget);

  Report rep;
  rep.identity = "interpolation";
  rep.params = {{"s", std::to_string(s)}, {"i", std::to_string(i)}};
  rep.lhs = encode(lhs);
  rep.rhs = encode(rhs);
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

namespace {

Residue main_theorem_rhs(const ATExpansion& ex, const ThetaPoly& P, uint64_t budget) {
  const Field& f = P.field();
  Residue acc = Residue::zero(P);
  for (const auto& jt : ex.index_tuples()) {
    EvalPoint uj;
    uj.coords.reserve(jt.size());
    uint64_t jsum = 0;
    for (size_t i = 0; i < jt.size(); ++i) {
      uj.coords.push_back(RationalFn::of(ex.u[i][static_cast<size_t>(jt[i])]));
      jsum += static_cast<uint64_t>(jt[i]);
    }
    const Residue a_j = Residue::reduce(ThetaPoly::theta(f).pow(jsum), P);
    acc += a_j * fcmpl_p(ex.s, uj, P, budget);
  }
  return Residue::reduce(ex.gamma, P).inverse() * acc;
}

}  // namespace

Report verify_main_theorem(const Composition& s, const ThetaPoly& P, uint64_t budget) {
  const Field& f = P.field();
  const ATExpansion ex = at_expansion(f, s);
  if (Residue::reduce(ex.gamma, P).is_zero())
    throw ExcludedPrime("P divides Gamma_s");

  Report rep;
  rep.identity = "main-theorem";
  rep.params = {{"s", s.str()}, {"prime", encode(P)}};
  rep.lhs = encode(fmzv_p(s, P, budget));
  rep.rhs = encode(main_theorem_rhs(ex, P, budget));
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

Report verify_truncated_chang(const Field& f, const Composition& s, int d,
                              uint64_t budget) {
  const ATExpansion ex = at_expansion(f, s);
  RationalFn lhs = s_truncated(f, s, d, budget);

  RationalFn acc = RationalFn::zero(f);
  for (const auto& jt : ex.index_tuples()) {
    EvalPoint uj;
    uj.coords.reserve(jt.size());
    uint64_t jsum = 0;
    for (size_t i = 0; i < jt.size(); ++i) {
      uj.coords.push_back(RationalFn::of(ex.u[i][static_cast<size_t>(jt[i])]));
      jsum += static_cast<uint64_t>(jt[i]);
    }
    acc += RationalFn::of(ThetaPoly::theta(f).pow(jsum)) *
           fcmpl_truncated(f, s, uj, d, budget);
  }
  RationalFn rhs = acc / RationalFn::of(ex.gamma);

  Report rep;
  rep.identity = "truncated-chang";
  rep.params = {{"s", s.str()}, {"d", std::to_string(d)}};
  rep.lhs = encode(lhs);
  rep.rhs = encode(rhs);
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

// ----- sweeps ---------------------------------------------------------------

namespace {

std::vector<Composition> compositions_up_to(int weight_max, int depth_max) {
  std::vector<Composition> out;
  for (int w = 1; w <= weight_max; ++w) {
    auto batch = compositions_of_weight(w, depth_max);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t fold(uint64_t h, uint64_t v) { return mix64(h ^ mix64(v)); }

// Seeded coordinate: numerator of degree <= 1 (zero allowed), monic
// denominator of degree <= 1 coprime to P.
RationalFn seeded_coord(const Field& f, const ThetaPoly& P, std::mt19937_64& rng) {
  const uint64_t q = f->q();
  ThetaPoly num = ThetaPoly::from_coeffs(
      f, {static_cast<uint32_t>(rng() % q), static_cast<uint32_t>(rng() % q)});
  for (;;) {
    ThetaPoly den =
        rng() % 2 == 0
            ? ThetaPoly::one(f)
            : ThetaPoly::from_coeffs(f, {static_cast<uint32_t>(rng() % q), 1});
    if (!Residue::reduce(den, P).is_zero())
      return RationalFn::normalize(num, den);
  }
}

EvalPoint seeded_point(const Field& f, const ThetaPoly& P, int depth,
                       std::mt19937_64& rng) {
  EvalPoint u;
  u.coords.reserve(static_cast<size_t>(depth));
  for (int i = 0; i < depth; ++i) u.coords.push_back(seeded_coord(f, P, rng));
  return u;
}

}  // namespace

namespace {

// Thread context for sweeps: a cloned field plus the primes rebased onto it.
struct SweepCtx {
  Field f;
  std::vector<ThetaPoly> primes;
};

std::function<SweepCtx()> sweep_ctx_maker(const Field& f,
                                          const std::vector<ThetaPoly>& primes) {
  return [&f, &primes] {
    SweepCtx ctx{clone_field(f), {}};
    ctx.primes.reserve(primes.size());
    for (const auto& P : primes) ctx.primes.push_back(rebase(P, ctx.f));
    return ctx;
  };
}

}  // namespace

std::vector<Report> main_theorem_sweep(const Field& f, int weight_max, int depth_max,
                                       const std::vector<ThetaPoly>& primes,
                                       const SweepConfig& cfg) {
  for (const auto& P : primes) check_same_field(*f, *P.field());
  const auto comps = compositions_up_to(weight_max, depth_max);
  struct Case {
    size_t comp, prime;
  };
  std::vector<Case> cases;
  for (size_t c = 0; c < comps.size(); ++c)
    for (size_t p = 0; p < primes.size(); ++p) cases.push_back({c, p});

  std::vector<Report> reports(cases.size());
  parallel_for_with(cases.size(), cfg.jobs, sweep_ctx_maker(f, primes),
                    [&](size_t k, const SweepCtx& ctx) {
                      const Composition& s = comps[cases[k].comp];
                      const ThetaPoly& P = ctx.primes[cases[k].prime];
                      try {
                        reports[k] = verify_main_theorem(s, P, cfg.budget);
                      } catch (const ExcludedPrime& e) {
                        Report rep;
                        rep.identity = "main-theorem";
                        rep.params = {{"s", s.str()}, {"prime", encode(P)}};
                        rep.excluded = e.what();
                        reports[k] = std::move(rep);
                      }
                    });
  return reports;
}

std::vector<Report> interpolation_sweep(const Field& f, int s_max, int i_max,
                                        const SweepConfig& cfg) {
  struct Case {
    int s, i;
  };
  std::vector<Case> cases;
  for (int s = 1; s <= s_max; ++s)
    for (int i = 0; i <= i_max; ++i) cases.push_back({s, i});
  std::vector<Report> reports(cases.size());
  parallel_for_with(cases.size(), cfg.jobs, [&] { return clone_field(f); },
                    [&](size_t k, const Field& mine) {
                      reports[k] =
                          verify_interpolation(mine, cases[k].s, cases[k].i, cfg.budget);
                    });
  return reports;
}

std::vector<Report> stuffle_sweep(const Field& f, int weight_max_each,
                                  int depth_max_each,
                                  const std::vector<ThetaPoly>& primes, int points,
                                  uint64_t seed, const SweepConfig& cfg) {
  const auto comps = compositions_up_to(weight_max_each, depth_max_each);
  std::vector<std::pair<Composition, Composition>> pairs;
  pairs.reserve(comps.size() * comps.size());
  for (const auto& s : comps)
    for (const auto& s2 : comps) pairs.emplace_back(s, s2);
  return stuffle_pairs_sweep(f, pairs, primes, points, seed, cfg);
}

std::vector<Report> stuffle_pairs_sweep(
    const Field& f, const std::vector<std::pair<Composition, Composition>>& pairs,
    const std::vector<ThetaPoly>& primes, int points, uint64_t seed,
    const SweepConfig& cfg) {
  struct Case {
    const Composition* s;
    const Composition* s2;
    size_t prime;
    EvalPoint u, u2;
  };
  std::vector<Case> cases;
  for (const auto& [s, s2] : pairs) {
    for (size_t pi = 0; pi < primes.size(); ++pi) {
      const ThetaPoly& P = primes[pi];
      for (int n = 0; n < points; ++n) {
        // The per-case seed depends only on the case data, not on the
        // sweep layout, so reports are reproducible case by case.
        uint64_t h = fold(seed, 0x5eedu);
        for (int part : s.parts) h = fold(h, static_cast<uint64_t>(part));
        h = fold(h, 0xffffffffULL);
        for (int part : s2.parts) h = fold(h, static_cast<uint64_t>(part));
        h = fold(h, 0xffffffffULL);
        for (uint32_t c : P.coeffs()) h = fold(h, c);
        h = fold(h, static_cast<uint64_t>(n));
        std::mt19937_64 rng(h);
        Case c{&s, &s2, pi, seeded_point(f, P, s.depth(), rng),
               seeded_point(f, P, s2.depth(), rng)};
        cases.push_back(std::move(c));
      }
    }
  }

  std::vector<Report> reports(cases.size());
  parallel_for_with(cases.size(), cfg.jobs, sweep_ctx_maker(f, primes),
                    [&](size_t k, const SweepCtx& ctx) {
                      const Case& c = cases[k];
                      EvalPoint u, u2;
                      for (const auto& x : c.u.coords) u.coords.push_back(rebase(x, ctx.f));
                      for (const auto& x : c.u2.coords)
                        u2.coords.push_back(rebase(x, ctx.f));
                      reports[k] = verify_stuffle(*c.s, *c.s2, u, u2,
                                                  ctx.primes[c.prime], cfg.budget);
                    });
  return reports;
}

std::vector<Report> truncated_chang_sweep(const Field& f, int weight_max, int d_max,
                                          const SweepConfig& cfg) {
  const auto comps = compositions_up_to(weight_max, -1);
  struct Case {
    const Composition* s;
    int d;
  };
  std::vector<Case> cases;
  for (const auto& s : comps)
    for (int d = 0; d <= d_max; ++d) cases.push_back({&s, d});
  std::vector<Report> reports(cases.size());
  parallel_for_with(cases.size(), cfg.jobs, [&] { return clone_field(f); },
                    [&](size_t k, const Field& mine) {
                      reports[k] = verify_truncated_chang(mine, *cases[k].s, cases[k].d,
                                                          cfg.budget);
                    });
  return reports;
}

// ----- relation discovery ---------------------------------------------------

namespace {

// Coordinates of a residue as deg(P) * e scalars over F_p.
std::vector<uint32_t> residue_coords(const Residue& r) {
  const Field& f = r.prime().field();
  const int d = r.prime().deg();
  std::vector<uint32_t> out;
  out.reserve(static_cast<size_t>(d) * f->ext_degree());
  for (int c = 0; c < d; ++c) {
    for (uint32_t digit : f->coords(r.rep().coeff(static_cast<size_t>(c))))
      out.push_back(digit);
  }
  return out;
}

// Evaluates sum_i coeff_i zeta(unknowns_i)_P against zeta(s)_P zeta(s2)_P.
bool relation_holds(const std::vector<Composition>& unknowns,
                    const std::vector<uint32_t>& coeffs, const Composition& s,
                    const Composition& s2, const ThetaPoly& P, uint64_t budget) {
  Residue rhs = Residue::zero(P);
  for (size_t i = 0; i < unknowns.size(); ++i) {
    if (coeffs[i] == 0) continue;
    rhs += Residue::reduce(fmzv_p(unknowns[i], P, budget).rep().scaled(coeffs[i]), P);
  }
  return fmzv_p(s, P, budget) * fmzv_p(s2, P, budget) == rhs;
}

bool homogeneous_holds(const std::vector<Composition>& unknowns,
                       const std::vector<uint32_t>& coeffs, const ThetaPoly& P,
                       uint64_t budget) {
  Residue acc = Residue::zero(P);
  for (size_t i = 0; i < unknowns.size(); ++i) {
    if (coeffs[i] == 0) continue;
    acc += Residue::reduce(fmzv_p(unknowns[i], P, budget).rep().scaled(coeffs[i]), P);
  }
  return acc.is_zero();
}

size_t nonzero_count(const std::vector<uint32_t>& v) {
  size_t n = 0;
  for (uint32_t c : v) n += c != 0;
  return n;
}

}  // namespace

RelationCandidate discover_relation(const Field& f, const Composition& s,
                                    const Composition& s2,
                                    std::vector<ThetaPoly> probe_primes,
                                    std::vector<ThetaPoly> validation_primes,
                                    uint64_t budget) {
  for (const auto& P : probe_primes)
    if (!P.monic() || !is_irreducible(P, budget))
      throw NotIrreducible("probe primes must be monic irreducible");
  for (const auto& P : validation_primes)
    if (!P.monic() || !is_irreducible(P, budget))
      throw NotIrreducible("validation primes must be monic irreducible");
  std::sort(probe_primes.begin(), probe_primes.end(), ThetaPoly::less);
  std::sort(validation_primes.begin(), validation_primes.end(), ThetaPoly::less);
  for (const auto& P : probe_primes)
    if (std::binary_search(validation_primes.begin(), validation_primes.end(), P,
                           ThetaPoly::less))
      throw Error("probe and validation primes must be disjoint");

  RelationCandidate cand;
  cand.weight = s.weight() + s2.weight();
  cand.unknowns = compositions_of_weight(cand.weight);
  cand.validation_primes = validation_primes;
  const size_t ncols = cand.unknowns.size();
  const uint64_t p = f->p();

  std::vector<std::vector<uint32_t>> rows;
  std::vector<uint32_t> rhs;
  GfSolveResult solved;
  int unchanged = 0;
  bool have_prev = false;
  GfSolveResult prev;

  for (const auto& P : probe_primes) {
    // One block of deg(P) * e scalar equations from this prime.
    std::vector<std::vector<uint32_t>> cols(ncols);
    for (size_t i = 0; i < ncols; ++i)
      cols[i] = residue_coords(fmzv_p(cand.unknowns[i], P, budget));
    const std::vector<uint32_t> target =
        residue_coords(fmzv_p(s, P, budget) * fmzv_p(s2, P, budget));
    for (size_t rr = 0; rr < target.size(); ++rr) {
      std::vector<uint32_t> row(ncols);
      for (size_t i = 0; i < ncols; ++i) row[i] = cols[i][rr];
      rows.push_back(std::move(row));
      rhs.push_back(target[rr]);
    }
    cand.probes_used.push_back(P);

    solved = gf_solve(p, rows, rhs);
    if (!solved.consistent)
      throw NoSolution("probe system became inconsistent at prime " + encode(P) +
                       "; this contradicts the product structure and signals a bug");
    const bool same = have_prev && prev.particular == solved.particular &&
                      prev.nullspace == solved.nullspace &&
                      prev.pivot_cols == solved.pivot_cols;
    unchanged = same ? unchanged + 1 : 0;
    prev = solved;
    have_prev = true;
    // Early exit once the space is unchanged twice in a row. This is only
    // sound when the solution is already unique: extra rows cannot reopen an
    // empty nullspace, whereas low-degree primes contribute duplicate
    // equations that would otherwise stop the scan before the informative
    // primes arrive. With a nontrivial nullspace every probe is consumed.
    if (unchanged >= 2 && solved.nullspace.empty()) {
      cand.stabilized = true;
      break;
    }
  }
  if (!have_prev) throw Error("discovery needs at least one probe prime");
  cand.stabilized = cand.stabilized || unchanged >= 2;

  // Pick the coset representative with the fewest nonzero coefficients,
  // ties broken lexicographically. Enumerating the coset is affordable for
  // the homogeneous dimensions seen at desk scale; fall back to the RREF
  // particular if it is not.
  cand.nullspace = solved.nullspace;
  std::vector<uint32_t> best = solved.particular;
  uint64_t combos = 1;
  bool enumerable = true;
  for (size_t i = 0; i < cand.nullspace.size(); ++i) {
    combos *= p;
    if (combos > 4096) {
      enumerable = false;
      break;
    }
  }
  if (enumerable && !cand.nullspace.empty()) {
    std::vector<uint32_t> sel(cand.nullspace.size(), 0);
    for (uint64_t it = 0; it < combos; ++it) {
      uint64_t v = it;
      for (size_t i = 0; i < sel.size(); ++i) {
        sel[i] = static_cast<uint32_t>(v % p);
        v /= p;
      }
      std::vector<uint32_t> candvec = solved.particular;
      for (size_t i = 0; i < sel.size(); ++i) {
        if (sel[i] == 0) continue;
        for (size_t cix = 0; cix < ncols; ++cix)
          candvec[cix] = static_cast<uint32_t>(
              (candvec[cix] + uint64_t(sel[i]) * cand.nullspace[i][cix]) % p);
      }
      if (nonzero_count(candvec) < nonzero_count(best) ||
          (nonzero_count(candvec) == nonzero_count(best) && candvec < best))
        best = std::move(candvec);
    }
  }
  cand.coefficients = best;

  for (const auto& P : validation_primes) {
    if (!relation_holds(cand.unknowns, cand.coefficients, s, s2, P, budget))
      throw ValidationFailed("relation fits the probe primes but fails held-out prime " +
                             encode(P));
  }
  cand.nullspace_validated.reserve(cand.nullspace.size());
  for (const auto& vec : cand.nullspace) {
    bool ok = true;
    for (const auto& P : validation_primes)
      if (!homogeneous_holds(cand.unknowns, vec, P, budget)) {
        ok = false;
        break;
      }
    cand.nullspace_validated.push_back(ok);
  }
  return cand;
}

}  // namespace carlitz
