#pragma once

#include "carlitz/theta_poly.hpp"

namespace carlitz {

// An element of k = F_q(theta) in canonical form: gcd(num, den) = 1 and den
// monic, so equality is coordinatewise equality of the two polynomials.
class RationalFn {
 public:
  static RationalFn normalize(const ThetaPoly& num, const ThetaPoly& den);
  static RationalFn of(const ThetaPoly& p) { return RationalFn(p, ThetaPoly::one(p.field())); }
  static RationalFn zero(const Field& f) { return of(ThetaPoly::zero(f)); }
  static RationalFn one(const Field& f) { return of(ThetaPoly::one(f)); }

  const ThetaPoly& num() const { return num_; }
  const ThetaPoly& den() const { return den_; }
  const Field& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalFn operator+(const RationalFn& o) const;
  RationalFn operator-(const RationalFn& o) const;
  RationalFn operator*(const RationalFn& o) const;
  RationalFn operator/(const RationalFn& o) const;
  RationalFn operator-() const { return RationalFn(-num_, den_); }
  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }

  RationalFn inverse() const;
  RationalFn pow(uint64_t n) const;
  RationalFn frobenius(unsigned i) const;

  bool operator==(const RationalFn& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFn& o) const { return !(*this == o); }

 private:
  RationalFn(ThetaPoly num, ThetaPoly den) : num_(std::move(num)), den_(std::move(den)) {}

  ThetaPoly num_;
  ThetaPoly den_;
};

inline RationalFn frobenius(const RationalFn& x, unsigned i) { return x.frobenius(i); }

inline RationalFn rebase(const RationalFn& x, const Field& f) {
  // the operands are already canonical, so normalize only re-derives the form
  return RationalFn::normalize(rebase(x.num(), f), rebase(x.den(), f));
}

// Per-operation canonicalization: every public constructor and operator
// returns the reduced monic-denominator form.
RationalFn ratfn_normalize(const ThetaPoly& num, const ThetaPoly& den);

}  // namespace carlitz
