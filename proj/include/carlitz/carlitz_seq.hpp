#pragma once

#include <string>

#include "carlitz/tpoly.hpp"

namespace carlitz {

// An index tuple s = (s_1, ..., s_r) of positive integers. r is the depth
// and the part sum the weight.
struct Composition {
  std::vector<int> parts;

  static Composition of(std::vector<int> parts);
  int depth() const { return static_cast<int>(parts.size()); }
  int weight() const;
  std::string str() const;  // "1,2"

  bool operator==(const Composition& o) const { return parts == o.parts; }
  bool operator<(const Composition& o) const { return parts < o.parts; }
};

// All compositions of weight w (2^(w-1) of them) in lexicographic order of
// their part vectors, optionally capped by depth.
std::vector<Composition> compositions_of_weight(int w, int depth_max = -1);

// D_i = prod_{j=0}^{i-1} (theta^(q^i) - theta^(q^j)), D_0 = 1.
ThetaPoly d_poly(const Field& f, int i);

// L_i = (theta - theta^q) ... (theta - theta^(q^i)), L_0 = 1.
ThetaPoly l_poly(const Field& f, int i);

// Carlitz factorial: with n = m - 1 = sum n_i q^i in base q,
// Gamma_m = prod D_i^(n_i). Gamma_1 = 1.
ThetaPoly carlitz_gamma(const Field& f, int m);

// G_n with y already substituted by theta:
// G_n(theta) = prod_{i=1}^{n} (t^(q^n) - theta^(q^i)), G_0 = 1.
TThetaPoly g_poly(const Field& f, int n);

// The Anderson-Thakur polynomials H_0..H_N from the generating-function
// identity (1 - sum_i G_i(theta)/D_i|_{theta=t} x^(q^i))^(-1)
//          = sum_n H_n/Gamma_(n+1)|_{theta=t} x^n.
// Every H_n lands in F_q[theta, t]; an inexact division is an internal
// consistency failure and throws InexactDivision.
std::vector<TThetaPoly> at_polys(const Field& f, int nmax);

// The expansion data of H_(s_i - 1) = sum_{j=0}^{m_i} u_ij t^j for a tuple s:
// exact t-degrees m_i (zero top coefficients stripped, so u_i,m_i != 0),
// the coefficient table u, and Gamma_s = prod Gamma_(s_i).
struct ATExpansion {
  Composition s;
  std::vector<TThetaPoly> H;            // H[i] = H_(s_i - 1)
  std::vector<int> m;                   // m[i] = deg_t H[i]
  std::vector<std::vector<ThetaPoly>> u;  // u[i][j], 0 <= j <= m[i]
  ThetaPoly gamma;                      // Gamma_s

  uint64_t index_count() const;  // |J_s| = prod (m_i + 1)
  // J_s = {0..m_1} x ... x {0..m_r} in lexicographic order.
  std::vector<std::vector<int>> index_tuples() const;
};

ATExpansion at_expansion(const Field& f, const Composition& s);

}  // namespace carlitz
