#include "carlitz/residue.hpp"

namespace carlitz {

Residue Residue::reduce(const ThetaPoly& a, const ThetaPoly& P) {
  check_same_field(*a.field(), *P.field());
  if (P.is_zero() || P.deg() < 1 || !P.monic())
    throw Error("residue modulus must be monic of positive degree");
  return Residue(P, poly_divrem(a, P).second);
}

void Residue::check_compatible(const Residue& o) const {
  if (P_ != o.P_) throw Error("residues live in different quotient rings");
}

Residue Residue::operator+(const Residue& o) const {
  check_compatible(o);
  return Residue(P_, rep_ + o.rep_);
}

Residue Residue::operator-(const Residue& o) const {
  check_compatible(o);
  return Residue(P_, rep_ - o.rep_);
}

Residue Residue::operator-() const { return Residue(P_, -rep_); }

Residue Residue::operator*(const Residue& o) const {
  check_compatible(o);
  return Residue(P_, poly_divrem(rep_ * o.rep_, P_).second);
}

Residue Residue::inverse() const {
  if (rep_.is_zero())
    throw NotInvertible("element is divisible by the prime");
  auto egcd = poly_ext_gcd(rep_, P_);
  if (!egcd.g.is_one())
    throw NotInvertible("element shares a factor with the modulus");
  return Residue(P_, poly_divrem(egcd.x, P_).second);
}

Residue Residue::pow(uint64_t n) const {
  Residue r = one(P_);
  Residue base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    if (n >>= 1) base = base * base;
  }
  return r;
}

Residue Residue::frobenius(unsigned i) const {
  // One q-power at a time: spread the representative, reduce, repeat. This
  // keeps intermediate degrees at (deg P - 1) * q instead of q^i.
  ThetaPoly r = rep_;
  for (unsigned k = 0; k < i; ++k) r = poly_divrem(r.frobenius(1), P_).second;
  return Residue(P_, std::move(r));
}

bool Residue::operator==(const Residue& o) const {
  check_compatible(o);
  return rep_ == o.rep_;
}

Residue residue_inverse(const ThetaPoly& a, const ThetaPoly& P) {
  return Residue::reduce(a, P).inverse();
}

Residue reduce_mod(const RationalFn& x, const ThetaPoly& P) {
  Residue den = Residue::reduce(x.den(), P);
  if (den.is_zero())
    throw NotInvertible("denominator is divisible by the prime");
  return Residue::reduce(x.num(), P) * den.inverse();
}

}  // namespace carlitz
