#pragma once

#include "carlitz/evaluator.hpp"

namespace carlitz {

// One zero-insertion pair of the stuffle product: the merged tuple v + v'
// and, per position, which original coordinates landed there.
struct StufflePosition {
  int left = -1;   // index into s, or -1
  int right = -1;  // index into s', or -1
};
struct StuffleTerm {
  Composition merged;
  std::vector<StufflePosition> pattern;
};

// All pairs (v, v') over max{r, r'} <= r'' <= r + r' positions, where v is s
// with zeros inserted, v' is s' with zeros inserted, and no position is zero
// in both. Deterministic order: by r'', then by the two position sets.
std::vector<StuffleTerm> stuffle_terms(const Composition& s, const Composition& s2);

// The point z'' of the merged term: u_j, u2_l, or u_j * u2_l per position.
EvalPoint assemble_point(const StuffleTerm& term, const EvalPoint& u, const EvalPoint& u2);

// Outcome of one identity check. equal is string equality of the canonical
// encodings of the two sides. excluded is set when the case cannot be
// evaluated at this prime (and lhs/rhs/equal are then meaningless).
struct Report {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;
  std::string lhs;
  std::string rhs;
  bool equal = false;
  std::string excluded;  // empty unless the case was excluded

  bool passed() const { return !excluded.empty() || equal; }
};

bool all_passed(const std::vector<Report>& reports);

// Li(s at u) * Li(s' at u') = sum over stuffle terms of Li(v+v' at z''),
// compared in A/(P). Throws ExcludedPrime when P divides a denominator.
Report verify_stuffle(const Composition& s, const Composition& s2, const EvalPoint& u,
                      const EvalPoint& u2, const ThetaPoly& P,
                      uint64_t budget = kDefaultBudget);

// twist(H_(s-1), i) at t = theta, divided by L_i^s, equals
// Gamma_s * sum_{a monic of degree i} a^(-s), exactly in k.
Report verify_interpolation(const Field& f, int s, int i,
                            uint64_t budget = kDefaultBudget);

// zeta(s)_P = Gamma_s^(-1) sum_{j in J_s} theta^(j_1+...+j_r) Li(s at u_j)_P.
// Throws ExcludedPrime when P | Gamma_s.
Report verify_main_theorem(const Composition& s, const ThetaPoly& P,
                           uint64_t budget = kDefaultBudget);

// The truncated form of the same expansion, exactly in k at every level d:
// S_{<d}(s) = Gamma_s^(-1) sum_j theta^(...) Li-truncated(s at u_j, d).
Report verify_truncated_chang(const Field& f, const Composition& s, int d,
                              uint64_t budget = kDefaultBudget);

// ----- sweeps (the parallel kernels; jobs <= 1 is the serial reference) ----

struct SweepConfig {
  int jobs = 1;
  uint64_t budget = kDefaultBudget;
};

std::vector<Report> main_theorem_sweep(const Field& f, int weight_max, int depth_max,
                                       const std::vector<ThetaPoly>& primes,
                                       const SweepConfig& cfg = {});

std::vector<Report> interpolation_sweep(const Field& f, int s_max, int i_max,
                                        const SweepConfig& cfg = {});

// Seeded evaluation points, `points` per (s, s', P) case; coordinates are
// small rational functions with denominators coprime to P.
std::vector<Report> stuffle_sweep(const Field& f, int weight_max_each,
                                  int depth_max_each,
                                  const std::vector<ThetaPoly>& primes, int points,
                                  uint64_t seed, const SweepConfig& cfg = {});

// The same seeded check over an explicit list of composition pairs.
std::vector<Report> stuffle_pairs_sweep(
    const Field& f, const std::vector<std::pair<Composition, Composition>>& pairs,
    const std::vector<ThetaPoly>& primes, int points, uint64_t seed,
    const SweepConfig& cfg = {});

std::vector<Report> truncated_chang_sweep(const Field& f, int weight_max, int d_max,
                                          const SweepConfig& cfg = {});

// ----- relation discovery --------------------------------------------------

// An F_p-linear expression of zeta(s) zeta(s') in zeta values of weight
// wt(s) + wt(s'). coefficients follows the lex order of `unknowns`.
struct RelationCandidate {
  int weight = 0;
  std::vector<Composition> unknowns;
  std::vector<uint32_t> coefficients;
  std::vector<std::vector<uint32_t>> nullspace;  // genuine-looking homogeneous relations
  std::vector<bool> nullspace_validated;         // per basis vector, on held-out primes
  std::vector<ThetaPoly> probes_used;
  std::vector<ThetaPoly> validation_primes;
  bool stabilized = false;
};

// Solves for the coefficients over the probe primes (they exist for every
// pair; an inconsistent system throws NoSolution), picks the coset
// representative with the fewest nonzero coefficients, and re-verifies it on
// the validation primes. A representative that fits the probes but fails a
// held-out prime throws ValidationFailed.
RelationCandidate discover_relation(const Field& f, const Composition& s,
                                    const Composition& s2,
                                    std::vector<ThetaPoly> probe_primes,
                                    std::vector<ThetaPoly> validation_primes,
                                    uint64_t budget = kDefaultBudget);

}  // namespace carlitz
