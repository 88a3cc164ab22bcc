#include "carlitz/gf_solver.hpp"

#include <stdexcept>

namespace carlitz {

namespace {

uint32_t fp_inv(uint64_t p, uint32_t a) {
  // extended Euclid on integers
  int64_t t = 0, new_t = 1;
  int64_t r = static_cast<int64_t>(p), new_r = a;
  while (new_r != 0) {
    int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::logic_error("fp_inv: not invertible");
  if (t < 0) t += static_cast<int64_t>(p);
  return static_cast<uint32_t>(t);
}

}  // namespace

GfSolveResult gf_solve(uint64_t p, std::vector<std::vector<uint32_t>> rows,
                       std::vector<uint32_t> rhs) {
  const size_t m = rows.size();
  const size_t n = m ? rows[0].size() : 0;

  size_t rank = 0;
  std::vector<int> pivot_of_col(n, -1);
  std::vector<int> pivot_cols;
  for (size_t col = 0; col < n && rank < m; ++col) {
    size_t pr = rank;
    while (pr < m && rows[pr][col] == 0) ++pr;
    if (pr == m) continue;
    std::swap(rows[pr], rows[rank]);
    std::swap(rhs[pr], rhs[rank]);
    const uint64_t inv = fp_inv(p, rows[rank][col]);
    for (size_t j = col; j < n; ++j)
      rows[rank][j] = static_cast<uint32_t>((rows[rank][j] * inv) % p);
    rhs[rank] = static_cast<uint32_t>((rhs[rank] * inv) % p);
    for (size_t i = 0; i < m; ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const uint64_t factor = rows[i][col];
      for (size_t j = col; j < n; ++j) {
        uint64_t v = rows[i][j] + (p - (factor * rows[rank][j]) % p);
        rows[i][j] = static_cast<uint32_t>(v % p);
      }
      uint64_t v = rhs[i] + (p - (factor * rhs[rank]) % p);
      rhs[i] = static_cast<uint32_t>(v % p);
    }
    pivot_of_col[col] = static_cast<int>(rank);
    pivot_cols.push_back(static_cast<int>(col));
    ++rank;
  }

  GfSolveResult out;
  out.pivot_cols = pivot_cols;
  for (size_t i = rank; i < m; ++i)
    if (rhs[i] != 0) return out;  // inconsistent: consistent stays false
  out.consistent = true;

  out.particular.assign(n, 0);
  for (size_t col = 0; col < n; ++col)
    if (pivot_of_col[col] >= 0)
      out.particular[col] = rhs[static_cast<size_t>(pivot_of_col[col])];

  for (size_t free_col = 0; free_col < n; ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    std::vector<uint32_t> v(n, 0);
    v[free_col] = 1;
    for (size_t col = 0; col < n; ++col) {
      if (pivot_of_col[col] < 0) continue;
      const auto r = static_cast<size_t>(pivot_of_col[col]);
      v[col] = static_cast<uint32_t>((p - rows[r][free_col] % p) % p);
    }
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

bool in_affine_span(uint64_t p, const std::vector<uint32_t>& target,
                    const std::vector<uint32_t>& particular,
                    const std::vector<std::vector<uint32_t>>& nullspace) {
  // Solve nullspace^T c = target - particular.
  const size_t n = target.size();
  std::vector<std::vector<uint32_t>> rows(n, std::vector<uint32_t>(nullspace.size(), 0));
  std::vector<uint32_t> rhs(n, 0);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < nullspace.size(); ++j) rows[i][j] = nullspace[j][i];
    rhs[i] = static_cast<uint32_t>((target[i] + p - particular[i]) % p);
  }
  return gf_solve(p, std::move(rows), std::move(rhs)).consistent;
}

}  // namespace carlitz
