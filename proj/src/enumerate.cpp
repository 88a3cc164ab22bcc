#include "carlitz/enumerate.hpp"

namespace carlitz {

void for_each_monic(const Field& f, int d, BudgetMeter& meter,
                    const std::function<void(const ThetaPoly&)>& fn) {
  if (d < 0) throw Error("degree must be nonnegative");
  const uint64_t q = f->q();
  uint64_t count = 1;
  for (int i = 0; i < d; ++i) {
    count *= q;
    if (count > meter.cap) break;  // charge() below reports the overflow
  }
  meter.charge(count);

  std::vector<uint32_t> coeffs(static_cast<size_t>(d) + 1, 0);
  coeffs[static_cast<size_t>(d)] = 1;
  for (uint64_t v = 0; v < count; ++v) {
    uint64_t t = v;
    for (int i = 0; i < d; ++i) {
      coeffs[static_cast<size_t>(i)] = static_cast<uint32_t>(t % q);
      t /= q;
    }
    fn(ThetaPoly::from_coeffs(f, coeffs));
  }
}

std::vector<ThetaPoly> enumerate_monic(const Field& f, int d, uint64_t budget) {
  BudgetMeter meter{budget};
  std::vector<ThetaPoly> out;
  for_each_monic(f, d, meter, [&](const ThetaPoly& m) { out.push_back(m); });
  return out;
}

bool is_irreducible(const ThetaPoly& P, uint64_t budget) {
  if (P.is_zero() || P.deg() < 1) return false;
  const int d = P.deg();
  if (d == 1) return true;
  BudgetMeter meter{budget};
  const Field& f = P.field();
  for (int m = 1; 2 * m <= d; ++m) {
    bool divisible = false;
    for_each_monic(f, m, meter, [&](const ThetaPoly& g) {
      if (!divisible && poly_divrem(P, g).second.is_zero()) divisible = true;
    });
    if (divisible) return false;
  }
  return true;
}

std::vector<ThetaPoly> irreducibles(const Field& f, int d, uint64_t budget) {
  if (d < 1) throw Error("irreducibles are enumerated from degree 1");
  BudgetMeter meter{budget};
  std::vector<ThetaPoly> out;
  for_each_monic(f, d, meter, [&](const ThetaPoly& m) {
    // Reuse the remaining budget for the trial divisions.
    if (is_irreducible(m, meter.cap - meter.used)) out.push_back(m);
  });
  return out;
}

std::vector<ThetaPoly> irreducibles_up_to(const Field& f, int dmax, uint64_t budget) {
  std::vector<ThetaPoly> out;
  for (int d = 1; d <= dmax; ++d) {
    auto batch = irreducibles(f, d, budget);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

}  // namespace carlitz
