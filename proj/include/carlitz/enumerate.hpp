#pragma once

#include <functional>
#include <vector>

#include "carlitz/theta_poly.hpp"

namespace carlitz {

// Default per-call cap on enumeration work, in ring operations. Runaway
// parameters fail fast with BudgetExceeded instead of hanging.
inline constexpr uint64_t kDefaultBudget = 1'000'000;

struct BudgetMeter {
  uint64_t cap = kDefaultBudget;
  uint64_t used = 0;
  void charge(uint64_t n) {
    used += n;
    if (used > cap)
      throw BudgetExceeded("enumeration budget of " + std::to_string(cap) +
                           " ring operations exceeded");
  }
};

// Visits the q^d monic polynomials of degree d in ascending packed
// coefficient order (the constant coefficient varies fastest).
void for_each_monic(const Field& f, int d, BudgetMeter& meter,
                    const std::function<void(const ThetaPoly&)>& fn);

std::vector<ThetaPoly> enumerate_monic(const Field& f, int d,
                                       uint64_t budget = kDefaultBudget);

// Trial division by all monic polynomials of degree <= deg(P)/2.
bool is_irreducible(const ThetaPoly& P, uint64_t budget = kDefaultBudget);

// The monic irreducibles of degree d, in enumeration order.
std::vector<ThetaPoly> irreducibles(const Field& f, int d,
                                    uint64_t budget = kDefaultBudget);

// All monic irreducibles of degree 1..dmax, ordered by (degree, packed value).
std::vector<ThetaPoly> irreducibles_up_to(const Field& f, int dmax,
                                          uint64_t budget = kDefaultBudget);

}  // namespace carlitz
