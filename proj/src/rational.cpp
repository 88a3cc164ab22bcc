#include "carlitz/rational.hpp"

namespace carlitz {

RationalFn RationalFn::normalize(const ThetaPoly& num, const ThetaPoly& den) {
  check_same_field(*num.field(), *den.field());
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  const Field& f = num.field();
  if (num.is_zero()) return RationalFn(ThetaPoly::zero(f), ThetaPoly::one(f));
  ThetaPoly g = poly_gcd(num, den);
  ThetaPoly n = poly_divrem(num, g).first;
  ThetaPoly d = poly_divrem(den, g).first;
  const uint32_t lead = d.leading();
  if (lead != 1) {
    const uint32_t li = f->inv(lead);
    n = n.scaled(li);
    d = d.scaled(li);
  }
  return RationalFn(std::move(n), std::move(d));
}

RationalFn ratfn_normalize(const ThetaPoly& num, const ThetaPoly& den) {
  return RationalFn::normalize(num, den);
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
  return normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator-(const RationalFn& o) const {
  return normalize(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
  return normalize(num_ * o.num_, den_ * o.den_);
}

RationalFn RationalFn::operator/(const RationalFn& o) const {
  if (o.is_zero()) throw DivisionByZero("division by the zero rational function");
  return normalize(num_ * o.den_, den_ * o.num_);
}

RationalFn RationalFn::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
  return normalize(den_, num_);
}

RationalFn RationalFn::pow(uint64_t n) const {
  // num and den stay coprime under powers, so no re-reduction is needed.
  ThetaPoly np = num_.pow(n);
  ThetaPoly dp = den_.pow(n);
  return normalize(np, dp);
}

RationalFn RationalFn::frobenius(unsigned i) const {
  // Spreads preserve coprimality and monic denominators.
  return RationalFn(num_.frobenius(i), den_.frobenius(i));
}

}  // namespace carlitz
