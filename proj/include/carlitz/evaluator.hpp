#pragma once

#include <optional>
#include <string>

#include "carlitz/carlitz_seq.hpp"
#include "carlitz/enumerate.hpp"
#include "carlitz/rational.hpp"
#include "carlitz/residue.hpp"

namespace carlitz {

// An evaluation point u in k^r, paired with a composition of the same depth.
struct EvalPoint {
  std::vector<RationalFn> coords;

  static EvalPoint all_ones(const Field& f, int depth);
  int depth() const { return static_cast<int>(coords.size()); }
  std::string str() const;
};

// sum_{a monic, deg a = i} (a^(-1))^s mod P, by direct enumeration of the
// q^i terms. Requires i < deg P so that every a is invertible mod P.
Residue power_sum_mod(int i, int s, const ThetaPoly& P,
                      uint64_t budget = kDefaultBudget);

// The same sum exactly in k.
RationalFn power_sum_exact(const Field& f, int i, int s,
                           uint64_t budget = kDefaultBudget);

// The P-component of the finite multiple zeta value for s: the sum of
// 1/(a_1^(s_1) ... a_r^(s_r)) mod P over monic tuples with
// deg P > deg a_1 > ... > deg a_r. Evaluated by dynamic programming over
// decreasing degree chains; identically 0 when deg P < depth.
Residue fmzv_p(const Composition& s, const ThetaPoly& P,
               uint64_t budget = kDefaultBudget);

// Literal tuple enumeration of the same sum; the oracle for fmzv_p.
Residue fmzv_p_direct(const Composition& s, const ThetaPoly& P,
                      uint64_t budget = kDefaultBudget);

// Number of tuples fmzv_p_direct visits (used to gate oracle sweeps).
uint64_t fmzv_direct_tuple_count(uint64_t q, const Composition& s, int deg_p);

// S_{<d}: the same multiple harmonic sum truncated at degree d, exactly in k.
RationalFn s_truncated(const Field& f, const Composition& s, int d,
                       uint64_t budget = kDefaultBudget);

// The P-component of the finite Carlitz multiple polylogarithm at u:
// sum over deg P > i_1 > ... > i_r >= 0 of
//   u_1^(q^(i_1)) ... u_r^(q^(i_r)) / (L_(i_1)^(s_1) ... L_(i_r)^(s_r)) mod P.
// Throws ExcludedPrime when P divides a denominator of u.
Residue fcmpl_p(const Composition& s, const EvalPoint& u, const ThetaPoly& P,
                uint64_t budget = kDefaultBudget);

// The same sum with indices capped at i_1 < d, exactly in k.
RationalFn fcmpl_truncated(const Field& f, const Composition& s, const EvalPoint& u,
                           int d, uint64_t budget = kDefaultBudget);

// A finite window into A_k: one residue per prime, with excluded primes
// recorded (never silently dropped). Entries are ordered by (deg P, packed
// coefficient order).
struct WindowEntry {
  ThetaPoly prime;
  Residue value;
};
struct WindowExclusion {
  ThetaPoly prime;
  std::string reason;
};
struct AkWindow {
  std::string label;
  std::vector<WindowEntry> entries;
  std::vector<WindowExclusion> excluded;
};

enum class WindowKind { fmzv, fcmpl };

// Evaluates one component per prime. Primes must be monic irreducible and
// distinct (NotIrreducible otherwise). jobs > 1 runs the per-prime
// evaluations in parallel; the assembled window does not depend on jobs.
AkWindow window(WindowKind kind, const Composition& s,
                const std::optional<EvalPoint>& u, std::vector<ThetaPoly> primes,
                int jobs = 1, uint64_t budget = kDefaultBudget);

}  // namespace carlitz
