#include "carlitz/carlitz_seq.hpp"

#include <algorithm>
#include <numeric>

namespace carlitz {

Composition Composition::of(std::vector<int> parts) {
  if (parts.empty()) throw Error("a composition needs at least one part");
  for (int s : parts)
    if (s < 1) throw Error("composition parts must be positive");
  return Composition{std::move(parts)};
}

int Composition::weight() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Composition::str() const {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s;
}

std::vector<Composition> compositions_of_weight(int w, int depth_max) {
  std::vector<Composition> out;
  std::vector<int> cur;
  // Recursive descent emits lexicographic order: smaller first parts first.
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      if (!cur.empty()) out.push_back(Composition{cur});
      return;
    }
    if (depth_max >= 0 && static_cast<int>(cur.size()) == depth_max) return;
    for (int part = 1; part <= remaining; ++part) {
      cur.push_back(part);
      self(self, remaining - part);
      cur.pop_back();
    }
  };
  if (w >= 1) rec(rec, w);
  return out;
}

ThetaPoly d_poly(const Field& f, int i) {
  if (i < 0) throw Error("index must be nonnegative");
  ThetaPoly r = ThetaPoly::one(f);
  const ThetaPoly th = ThetaPoly::theta(f);
  const ThetaPoly top = th.frobenius(static_cast<unsigned>(i));  // theta^(q^i)
  for (int j = 0; j < i; ++j) r *= top - th.frobenius(static_cast<unsigned>(j));
  return r;
}

ThetaPoly l_poly(const Field& f, int i) {
  if (i < 0) throw Error("index must be nonnegative");
  ThetaPoly r = ThetaPoly::one(f);
  const ThetaPoly th = ThetaPoly::theta(f);
  for (int j = 1; j <= i; ++j) r *= th - th.frobenius(static_cast<unsigned>(j));
  return r;
}

ThetaPoly carlitz_gamma(const Field& f, int m) {
  if (m < 1) throw Error("Carlitz factorial is defined for m >= 1");
  uint64_t n = static_cast<uint64_t>(m) - 1;
  ThetaPoly r = ThetaPoly::one(f);
  const uint64_t q = f->q();
  for (int i = 0; n > 0; ++i, n /= q) {
    const uint64_t digit = n % q;
    if (digit > 0) r *= d_poly(f, i).pow(digit);
  }
  return r;
}

TThetaPoly g_poly(const Field& f, int n) {
  if (n < 0) throw Error("index must be nonnegative");
  TThetaPoly r = TThetaPoly::one(f);
  if (n == 0) return r;
  uint64_t qn = 1;
  for (int k = 0; k < n; ++k) qn *= f->q();
  const ThetaPoly th = ThetaPoly::theta(f);
  for (int i = 1; i <= n; ++i) {
    // t^(q^n) - theta^(q^i)
    TThetaPoly factor =
        TThetaPoly::t_monomial(f, ThetaPoly::one(f), static_cast<size_t>(qn)) -
        TThetaPoly::constant(th.frobenius(static_cast<unsigned>(i)));
    r *= factor;
  }
  return r;
}

namespace {

// theta -> t on an element of A is a pure renaming; the coefficient vector
// carries over unchanged and is reused in the t-role.
ThetaPoly rename_theta_to_t(const ThetaPoly& a) { return a; }

}  // namespace

std::vector<TThetaPoly> at_polys(const Field& f, int nmax) {
  if (nmax < 0) throw Error("nmax must be nonnegative");
  const uint64_t q = f->q();

  // The series S = sum_{q^i <= nmax} (G_i(theta) / D_i|_{theta=t}) x^(q^i)
  // has x-valuation 1 (the i = 0 term sits at x^1), so the geometric
  // inverse B with (1 - S) B = 1 satisfies the recurrence
  //   B_n = sum_{q^i <= n} S_(q^i) B_(n - q^i),  B_0 = 1.
  // Each B_n is H_n / Gamma_(n+1)|_{theta=t} with H_n polynomial, so B_n is
  // re-normalized to that exact shape at every step; denominators stay in
  // F_q[t] and never accumulate.
  struct STerm {
    uint64_t x_exp;
    TThetaPoly g;    // G_i(theta)
    ThetaPoly d_t;   // D_i with theta renamed to t
  };
  std::vector<STerm> sterms;
  uint64_t qi = 1;
  for (int i = 0; qi <= static_cast<uint64_t>(nmax); ++i) {
    sterms.push_back({qi, g_poly(f, i), rename_theta_to_t(d_poly(f, i))});
    if (qi > static_cast<uint64_t>(nmax) / q) break;
    qi *= q;
  }

  std::vector<ThetaPoly> gamma_t;  // Gamma_(n+1)|_{theta=t}
  gamma_t.reserve(static_cast<size_t>(nmax) + 1);
  for (int n = 0; n <= nmax; ++n)
    gamma_t.push_back(rename_theta_to_t(carlitz_gamma(f, n + 1)));

  std::vector<TThetaPoly> H;
  H.reserve(static_cast<size_t>(nmax) + 1);
  H.push_back(TThetaPoly::one(f));  // H_0 = 1, Gamma_1 = 1

  for (int n = 1; n <= nmax; ++n) {
    TThetaFraction acc = TThetaFraction::zero(f);
    for (const auto& term : sterms) {
      if (term.x_exp > static_cast<uint64_t>(n)) break;
      const auto m = static_cast<size_t>(n - static_cast<int>(term.x_exp));
      TThetaFraction contrib{term.g * H[m], term.d_t * gamma_t[m]};
      acc = acc + contrib;
    }
    // H_n = B_n * Gamma_(n+1)|_{theta=t}; the division must be exact.
    TThetaPoly hn = div_exact_tpoly(acc.num.mul_tpoly(gamma_t[static_cast<size_t>(n)]),
                                    acc.den);
    H.push_back(std::move(hn));
  }
  return H;
}

uint64_t ATExpansion::index_count() const {
  uint64_t n = 1;
  for (int mi : m) n *= static_cast<uint64_t>(mi) + 1;
  return n;
}

std::vector<std::vector<int>> ATExpansion::index_tuples() const {
  std::vector<std::vector<int>> out;
  out.reserve(index_count());
  std::vector<int> cur(m.size(), 0);
  while (true) {
    out.push_back(cur);
    size_t k = m.size();
    while (k-- > 0) {
      if (cur[k] < m[k]) {
        ++cur[k];
        std::fill(cur.begin() + static_cast<long>(k) + 1, cur.end(), 0);
        break;
      }
      if (k == 0) return out;
    }
  }
}

ATExpansion at_expansion(const Field& f, const Composition& s) {
  const int smax = *std::max_element(s.parts.begin(), s.parts.end());
  auto H_all = at_polys(f, smax - 1);

  ATExpansion ex{s, {}, {}, {}, ThetaPoly::one(f)};
  ex.H.reserve(s.parts.size());
  ex.m.reserve(s.parts.size());
  ex.u.reserve(s.parts.size());
  const uint64_t q = f->q();
  for (int si : s.parts) {
    const TThetaPoly& h = H_all[static_cast<size_t>(si) - 1];
    if (h.is_zero()) throw Error("internal: H_(s-1) vanished");
    const int mi = h.deg_t();
    std::vector<ThetaPoly> row;
    row.reserve(static_cast<size_t>(mi) + 1);
    for (int j = 0; j <= mi; ++j) row.push_back(h.coeff(static_cast<size_t>(j)));
    // Canonical stripping guarantees the top coefficient is nonzero.
    if (row.back().is_zero()) throw Error("internal: zero leading coefficient after trim");
    // deg_theta u_ij < s_i q / (q - 1), strictly.
    for (const auto& uij : row) {
      if (uij.is_zero()) continue;
      if (static_cast<uint64_t>(uij.deg()) * (q - 1) >= static_cast<uint64_t>(si) * q)
        throw Error("internal: coefficient degree bound violated");
    }
    ex.H.push_back(h);
    ex.m.push_back(mi);
    ex.u.push_back(std::move(row));
    ex.gamma *= carlitz_gamma(f, si);
  }
  return ex;
}

}  // namespace carlitz
