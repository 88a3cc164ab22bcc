#pragma once

#include "carlitz/rational.hpp"
#include "carlitz/theta_poly.hpp"

namespace carlitz {

// An element of A/(P) for a monic irreducible P, held as the reduced
// representative of degree < deg P. Construction checks that P is monic of
// positive degree; irreducibility is the caller's invariant (the evaluator
// and CLI verify primes once, where they enter).
class Residue {
 public:
  static Residue reduce(const ThetaPoly& a, const ThetaPoly& P);
  static Residue zero(const ThetaPoly& P) { return reduce(ThetaPoly::zero(P.field()), P); }
  static Residue one(const ThetaPoly& P) { return reduce(ThetaPoly::one(P.field()), P); }

  const ThetaPoly& rep() const { return rep_; }
  const ThetaPoly& prime() const { return P_; }
  bool is_zero() const { return rep_.is_zero(); }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const;
  Residue& operator+=(const Residue& o) { return *this = *this + o; }
  Residue& operator*=(const Residue& o) { return *this = *this * o; }

  Residue inverse() const;  // throws NotInvertible when P | rep
  Residue pow(uint64_t n) const;
  Residue frobenius(unsigned i) const;  // q^i-th power mod P

  bool operator==(const Residue& o) const;
  bool operator!=(const Residue& o) const { return !(*this == o); }

 private:
  Residue(ThetaPoly P, ThetaPoly rep) : P_(std::move(P)), rep_(std::move(rep)) {}
  void check_compatible(const Residue& o) const;

  ThetaPoly P_;
  ThetaPoly rep_;
};

// Inverse of a mod P via the extended gcd. Throws NotInvertible when P | a.
Residue residue_inverse(const ThetaPoly& a, const ThetaPoly& P);

// Reduction of an exact rational function mod P. Throws NotInvertible when
// P divides the canonical denominator.
Residue reduce_mod(const RationalFn& x, const ThetaPoly& P);

inline Residue frobenius(const Residue& x, unsigned i) { return x.frobenius(i); }

}  // namespace carlitz
