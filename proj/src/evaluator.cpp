#include "carlitz/evaluator.hpp"

#include <algorithm>

#include "carlitz/encoding.hpp"
#include "carlitz/parallel.hpp"

namespace carlitz {

EvalPoint EvalPoint::all_ones(const Field& f, int depth) {
  return EvalPoint{std::vector<RationalFn>(static_cast<size_t>(depth), RationalFn::one(f))};
}

std::string EvalPoint::str() const {
  std::string out;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ',';
    out += encode(coords[i]);
  }
  return out;
}

Residue power_sum_mod(int i, int s, const ThetaPoly& P, uint64_t budget) {
  if (i < 0 || s < 1) throw Error("power_sum_mod needs i >= 0 and s >= 1");
  if (i >= P.deg())
    throw IndexOutOfRange("degree index " + std::to_string(i) +
                          " is not below deg P = " + std::to_string(P.deg()));
  const Field& f = P.field();
  BudgetMeter meter{budget};
  Residue acc = Residue::zero(P);
  for_each_monic(f, i, meter, [&](const ThetaPoly& a) {
    acc += Residue::reduce(a, P).inverse().pow(static_cast<uint64_t>(s));
  });
  return acc;
}

RationalFn power_sum_exact(const Field& f, int i, int s, uint64_t budget) {
  if (i < 0 || s < 1) throw Error("power_sum_exact needs i >= 0 and s >= 1");
  BudgetMeter meter{budget};
  RationalFn acc = RationalFn::zero(f);
  for_each_monic(f, i, meter, [&](const ThetaPoly& a) {
    acc += RationalFn::normalize(ThetaPoly::one(f), a.pow(static_cast<uint64_t>(s)));
  });
  return acc;
}

namespace {

// Chain sum over deg P > i_1 > ... > i_r >= 0 of prod_j term(i_j, j), for an
// arbitrary ring with 0, +, *. term(i, j) is the j-th coordinate factor.
// Standard suffix accumulation: O(r d) ring operations on top of the terms.
template <typename T, typename TermFn>
T chain_sum(int d, int depth, const T& zero_val, const TermFn& term) {
  // layer r-1 first (innermost coordinate), then fold towards coordinate 0.
  std::vector<T> suffix(static_cast<size_t>(d), zero_val);  // suffix[i] = sum_{i' <= i} layer(i')
  for (int j = depth - 1; j >= 0; --j) {
    std::vector<T> layer;
    layer.reserve(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
      T v = term(i, j);
      if (j + 1 < depth) {
        // chains continue strictly below i
        if (i == 0) {
          v = zero_val;
        } else {
          v = v * suffix[static_cast<size_t>(i - 1)];
        }
      }
      layer.push_back(std::move(v));
    }
    T run = zero_val;
    for (int i = 0; i < d; ++i) {
      run = run + layer[static_cast<size_t>(i)];
      suffix[static_cast<size_t>(i)] = run;
    }
  }
  return d > 0 ? suffix[static_cast<size_t>(d - 1)] : zero_val;
}

}  // namespace

Residue fmzv_p(const Composition& s, const ThetaPoly& P, uint64_t budget) {
  const int d = P.deg();
  const int r = s.depth();
  if (d < r) return Residue::zero(P);

  // Precompute the power sums S_i(s_j) for every degree i < d and coordinate.
  BudgetMeter meter{budget};
  const Field& f = P.field();
  std::vector<std::vector<Residue>> term(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    // enumerate inverses of monic degree-i polynomials once
    std::vector<Residue> inverses;
    for_each_monic(f, i, meter, [&](const ThetaPoly& a) {
      inverses.push_back(Residue::reduce(a, P).inverse());
    });
    term[static_cast<size_t>(i)].reserve(static_cast<size_t>(r));
    for (int j = 0; j < r; ++j) {
      Residue acc = Residue::zero(P);
      for (const Residue& inv : inverses)
        acc += inv.pow(static_cast<uint64_t>(s.parts[static_cast<size_t>(j)]));
      meter.charge(inverses.size());
      term[static_cast<size_t>(i)].push_back(std::move(acc));
    }
  }
  return chain_sum(d, r, Residue::zero(P), [&](int i, int j) {
    return term[static_cast<size_t>(i)][static_cast<size_t>(j)];
  });
}

namespace {

// Recursive tuple enumeration for the oracle: monic a_j of degree i_j along
// every strictly decreasing degree chain.
void direct_rec(const Composition& s, const ThetaPoly& P, size_t j, int max_deg,
                const Residue& partial, BudgetMeter& meter, Residue& acc) {
  const Field& f = P.field();
  if (j == s.parts.size()) {
    acc += partial;
    return;
  }
  const int remaining = static_cast<int>(s.parts.size() - j);
  for (int i = static_cast<int>(remaining) - 1; i < max_deg; ++i) {
    for_each_monic(f, i, meter, [&](const ThetaPoly& a) {
      Residue factor =
          Residue::reduce(a, P).inverse().pow(static_cast<uint64_t>(s.parts[j]));
      direct_rec(s, P, j + 1, i, partial * factor, meter, acc);
    });
  }
}

}  // namespace

Residue fmzv_p_direct(const Composition& s, const ThetaPoly& P, uint64_t budget) {
  BudgetMeter meter{budget};
  Residue acc = Residue::zero(P);
  direct_rec(s, P, 0, P.deg(), Residue::one(P), meter, acc);
  return acc;
}

uint64_t fmzv_direct_tuple_count(uint64_t q, const Composition& s, int deg_p) {
  const int r = s.depth();
  // sum over deg_p > i_1 > ... > i_r >= 0 of prod q^(i_j)
  std::vector<uint64_t> qpow(static_cast<size_t>(std::max(deg_p, 1)), 1);
  for (size_t i = 1; i < qpow.size(); ++i) qpow[i] = qpow[i - 1] * q;
  // suffix dp as in chain_sum, over plain integers
  std::vector<uint64_t> suffix(static_cast<size_t>(deg_p), 0);
  for (int j = r - 1; j >= 0; --j) {
    std::vector<uint64_t> layer(static_cast<size_t>(deg_p), 0);
    for (int i = 0; i < deg_p; ++i) {
      uint64_t v = qpow[static_cast<size_t>(i)];
      if (j + 1 < r) v = i == 0 ? 0 : v * suffix[static_cast<size_t>(i - 1)];
      layer[static_cast<size_t>(i)] = v;
    }
    uint64_t run = 0;
    for (int i = 0; i < deg_p; ++i) {
      run += layer[static_cast<size_t>(i)];
      suffix[static_cast<size_t>(i)] = run;
    }
  }
  return deg_p > 0 ? suffix[static_cast<size_t>(deg_p - 1)] : 0;
}

RationalFn s_truncated(const Field& f, const Composition& s, int d, uint64_t budget) {
  if (d < 0) throw Error("truncation level must be nonnegative");
  const int r = s.depth();
  if (d < r) return RationalFn::zero(f);
  std::vector<std::vector<RationalFn>> term(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < r; ++j)
      term[static_cast<size_t>(i)].push_back(
          power_sum_exact(f, i, s.parts[static_cast<size_t>(j)], budget));
  return chain_sum(d, r, RationalFn::zero(f), [&](int i, int j) {
    return term[static_cast<size_t>(i)][static_cast<size_t>(j)];
  });
}

namespace {

void check_point_depth(const Composition& s, const EvalPoint& u) {
  if (u.depth() != s.depth())
    throw Error("evaluation point has depth " + std::to_string(u.depth()) +
                ", composition has depth " + std::to_string(s.depth()));
}

}  // namespace

Residue fcmpl_p(const Composition& s, const EvalPoint& u, const ThetaPoly& P,
                uint64_t budget) {
  check_point_depth(s, u);
  const Field& f = P.field();
  for (const RationalFn& c : u.coords) {
    if (Residue::reduce(c.den(), P).is_zero())
      throw ExcludedPrime("P divides a denominator of the evaluation point");
  }
  const int d = P.deg();
  const int r = s.depth();
  if (d < r) return Residue::zero(P);

  BudgetMeter meter{budget};
  meter.charge(static_cast<uint64_t>(d) * static_cast<uint64_t>(r));

  // L_i mod P for i < d; every factor theta - theta^(q^m) with 0 < m < deg P
  // is invertible mod P, so the inverses below always exist.
  const ThetaPoly th = ThetaPoly::theta(f);
  std::vector<Residue> l_inv;
  l_inv.reserve(static_cast<size_t>(d));
  Residue l_run = Residue::one(P);
  Residue th_q = Residue::reduce(th, P);
  for (int i = 0; i < d; ++i) {
    if (i > 0) {
      th_q = th_q.frobenius(1);  // theta^(q^i) mod P
      l_run = l_run * (Residue::reduce(th, P) - th_q);
    }
    l_inv.push_back(l_run.inverse());
  }

  // u_j^(q^i) mod P by iterated q-powers.
  std::vector<std::vector<Residue>> ufrob(static_cast<size_t>(r));
  for (int j = 0; j < r; ++j) {
    Residue base = reduce_mod(u.coords[static_cast<size_t>(j)], P);
    ufrob[static_cast<size_t>(j)].reserve(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
      if (i > 0) base = base.frobenius(1);
      ufrob[static_cast<size_t>(j)].push_back(base);
    }
  }

  return chain_sum(d, r, Residue::zero(P), [&](int i, int j) {
    return ufrob[static_cast<size_t>(j)][static_cast<size_t>(i)] *
           l_inv[static_cast<size_t>(i)].pow(
               static_cast<uint64_t>(s.parts[static_cast<size_t>(j)]));
  });
}

RationalFn fcmpl_truncated(const Field& f, const Composition& s, const EvalPoint& u,
                           int d, uint64_t budget) {
  check_point_depth(s, u);
  if (d < 0) throw Error("truncation level must be nonnegative");
  const int r = s.depth();
  if (d < r) return RationalFn::zero(f);

  BudgetMeter meter{budget};
  std::vector<std::vector<RationalFn>> ufrob(static_cast<size_t>(r));
  std::vector<RationalFn> l;
  for (int i = 0; i < d; ++i) {
    meter.charge(1 + (i > 0 ? static_cast<uint64_t>(f->q()) : 0));
    l.push_back(RationalFn::of(l_poly(f, i)));
  }
  for (int j = 0; j < r; ++j) {
    RationalFn base = u.coords[static_cast<size_t>(j)];
    for (int i = 0; i < d; ++i) {
      if (i > 0) base = base.frobenius(1);
      ufrob[static_cast<size_t>(j)].push_back(base);
    }
  }
  return chain_sum(d, r, RationalFn::zero(f), [&](int i, int j) {
    return ufrob[static_cast<size_t>(j)][static_cast<size_t>(i)] /
           l[static_cast<size_t>(i)].pow(
               static_cast<uint64_t>(s.parts[static_cast<size_t>(j)]));
  });
}

AkWindow window(WindowKind kind, const Composition& s,
                const std::optional<EvalPoint>& u, std::vector<ThetaPoly> primes,
                int jobs, uint64_t budget) {
  if (kind == WindowKind::fcmpl && !u)
    throw Error("a polylogarithm window needs an evaluation point");
  for (const ThetaPoly& P : primes) {
    if (P.is_zero() || !P.monic() || !is_irreducible(P, budget))
      throw NotIrreducible("window primes must be monic irreducible");
  }
  std::sort(primes.begin(), primes.end(), ThetaPoly::less);
  for (size_t i = 1; i < primes.size(); ++i)
    if (primes[i] == primes[i - 1]) throw Error("duplicate prime in window");

  AkWindow w;
  if (kind == WindowKind::fmzv) {
    w.label = "zeta(" + s.str() + ")";
  } else {
    w.label = "Li_(" + s.str() + ")(" + u->str() + ")";
  }

  if (primes.empty()) return w;

  struct Slot {
    std::optional<Residue> value;
    std::string exclusion;
  };
  struct TaskCtx {
    std::vector<ThetaPoly> primes;
    std::optional<EvalPoint> u;
  };
  const Field& f = primes.front().field();
  auto make_ctx = [&]() {
    Field mine = clone_field(f);
    TaskCtx ctx;
    ctx.primes.reserve(primes.size());
    for (const auto& P : primes) ctx.primes.push_back(rebase(P, mine));
    if (u) {
      EvalPoint ru;
      for (const auto& c : u->coords) ru.coords.push_back(rebase(c, mine));
      ctx.u = std::move(ru);
    }
    return ctx;
  };

  std::vector<Slot> slots(primes.size());
  parallel_for_with(primes.size(), jobs, make_ctx, [&](size_t k, const TaskCtx& ctx) {
    const ThetaPoly& P = ctx.primes[k];
    try {
      slots[k].value = kind == WindowKind::fmzv ? fmzv_p(s, P, budget)
                                                : fcmpl_p(s, *ctx.u, P, budget);
    } catch (const ExcludedPrime& e) {
      slots[k].exclusion = e.what();
    }
  });
  for (size_t k = 0; k < primes.size(); ++k) {
    if (slots[k].value) {
      w.entries.push_back({primes[k], *slots[k].value});
    } else {
      w.excluded.push_back({primes[k], slots[k].exclusion});
    }
  }
  return w;
}

}  // namespace carlitz
