#pragma once

#include <cstdint>
#include <vector>

namespace carlitz {

// Dense affine solve A x = b over F_p with deterministic pivoting (first
// nonzero row in order). Row-reduces a copy; suitable for the small systems
// the relation-discovery engine assembles.
struct GfSolveResult {
  bool consistent = false;
  std::vector<uint32_t> particular;               // free variables set to 0
  std::vector<std::vector<uint32_t>> nullspace;   // basis, one vector per free column
  std::vector<int> pivot_cols;
};

GfSolveResult gf_solve(uint64_t p, std::vector<std::vector<uint32_t>> rows,
                       std::vector<uint32_t> rhs);

// Whether target lies in particular + span(nullspace) over F_p.
bool in_affine_span(uint64_t p, const std::vector<uint32_t>& target,
                    const std::vector<uint32_t>& particular,
                    const std::vector<std::vector<uint32_t>>& nullspace);

}  // namespace carlitz
