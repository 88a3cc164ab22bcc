#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "carlitz/field.hpp"

namespace carlitz {

// An element of A = F_q[theta], dense little-endian, always canonical
// (no trailing zero coefficients). Coefficients are packed F_q values.
//
// The zero polynomial has no well-defined degree; degree() returns nullopt
// for it and deg() must not be called on it.
class ThetaPoly {
 public:
  static ThetaPoly zero(const Field& f) { return ThetaPoly(f, {}); }
  static ThetaPoly one(const Field& f) { return ThetaPoly(f, {1}); }
  static ThetaPoly theta(const Field& f) { return ThetaPoly(f, {0, 1}); }
  static ThetaPoly constant(const Field& f, uint32_t c);
  static ThetaPoly monomial(const Field& f, uint32_t c, size_t k);
  static ThetaPoly from_coeffs(const Field& f, std::vector<uint32_t> coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }
  int deg() const;  // requires a nonzero polynomial
  uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  uint32_t leading() const;
  bool monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<uint32_t>& coeffs() const { return c_; }
  const Field& field() const { return field_; }

  ThetaPoly operator+(const ThetaPoly& o) const;
  ThetaPoly operator-(const ThetaPoly& o) const;
  ThetaPoly operator*(const ThetaPoly& o) const;
  ThetaPoly operator-() const;
  ThetaPoly& operator+=(const ThetaPoly& o) { return *this = *this + o; }
  ThetaPoly& operator-=(const ThetaPoly& o) { return *this = *this - o; }
  ThetaPoly& operator*=(const ThetaPoly& o) { return *this = *this * o; }

  ThetaPoly scaled(uint32_t c) const;          // c * this
  ThetaPoly shifted(size_t k) const;           // theta^k * this
  ThetaPoly pow(uint64_t n) const;
  ThetaPoly frobenius(unsigned i) const;       // q^i-th power (coefficient spread)
  ThetaPoly make_monic() const;                // divide by the leading coefficient

  bool operator==(const ThetaPoly& o) const;
  bool operator!=(const ThetaPoly& o) const { return !(*this == o); }

  // Total order used for deterministic listings: degree, then the packed
  // coefficient vector from the top down. Zero sorts first.
  static bool less(const ThetaPoly& a, const ThetaPoly& b);

 private:
  ThetaPoly(Field f, std::vector<uint32_t> c) : field_(std::move(f)), c_(std::move(c)) {}
  void trim();

  Field field_;
  std::vector<uint32_t> c_;
};

// a = quot * b + rem with deg rem < deg b. Throws DivisionByZero on b = 0.
std::pair<ThetaPoly, ThetaPoly> poly_divrem(const ThetaPoly& a, const ThetaPoly& b);

struct ExtGcd {
  ThetaPoly g;  // monic gcd
  ThetaPoly x;  // x*a + y*b = g
  ThetaPoly y;
};

// Throws BothZero when a = b = 0.
ExtGcd poly_ext_gcd(const ThetaPoly& a, const ThetaPoly& b);
ThetaPoly poly_gcd(const ThetaPoly& a, const ThetaPoly& b);

inline ThetaPoly frobenius(const ThetaPoly& x, unsigned i) { return x.frobenius(i); }

// The same polynomial bound to another context with identical (p, e, modulus).
inline ThetaPoly rebase(const ThetaPoly& a, const Field& f) {
  check_same_field(*a.field(), *f);
  return ThetaPoly::from_coeffs(f, a.coeffs());
}

}  // namespace carlitz
