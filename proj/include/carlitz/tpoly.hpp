#pragma once

#include "carlitz/theta_poly.hpp"

namespace carlitz {

// An element of F_q[t, theta], dense little-endian in t with coefficients in
// A = F_q[theta]. Canonical: no trailing zero coefficients in t.
class TThetaPoly {
 public:
  static TThetaPoly zero(const Field& f) { return TThetaPoly(f, {}); }
  static TThetaPoly one(const Field& f) { return TThetaPoly(f, {ThetaPoly::one(f)}); }
  static TThetaPoly t(const Field& f) {
    return TThetaPoly(f, {ThetaPoly::zero(f), ThetaPoly::one(f)});
  }
  static TThetaPoly from_coeffs(const Field& f, std::vector<ThetaPoly> coeffs);
  static TThetaPoly constant(const ThetaPoly& c);  // a theta-polynomial as t-degree 0
  // Embeds an element of F_q[t] (carried as a plain coefficient vector over
  // F_q) as a TThetaPoly with constant theta-coefficients.
  static TThetaPoly from_tpoly(const ThetaPoly& f_in_t);
  static TThetaPoly t_monomial(const Field& f, const ThetaPoly& c, size_t j);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  std::optional<int> degree_t() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }
  int deg_t() const;
  ThetaPoly coeff(size_t j) const;  // zero beyond the degree
  const std::vector<ThetaPoly>& coeffs() const { return c_; }
  const Field& field() const { return field_; }

  TThetaPoly operator+(const TThetaPoly& o) const;
  TThetaPoly operator-(const TThetaPoly& o) const;
  TThetaPoly operator*(const TThetaPoly& o) const;
  TThetaPoly operator-() const;
  TThetaPoly& operator+=(const TThetaPoly& o) { return *this = *this + o; }
  TThetaPoly& operator-=(const TThetaPoly& o) { return *this = *this - o; }
  TThetaPoly& operator*=(const TThetaPoly& o) { return *this = *this * o; }

  TThetaPoly scaled(const ThetaPoly& c) const;
  // Multiplication by an element of F_q[t] (plain coefficient vector over F_q).
  TThetaPoly mul_tpoly(const ThetaPoly& f_in_t) const;
  TThetaPoly pow(uint64_t n) const;

  // Coefficient-wise q^i-th power; t is untouched.
  TThetaPoly twist(unsigned i) const;
  // Substitution t := theta, collapsing into A.
  ThetaPoly eval_at_theta() const;

  bool operator==(const TThetaPoly& o) const;
  bool operator!=(const TThetaPoly& o) const { return !(*this == o); }

 private:
  TThetaPoly(Field f, std::vector<ThetaPoly> c) : field_(std::move(f)), c_(std::move(c)) {}
  void trim();

  Field field_;
  std::vector<ThetaPoly> c_;
};

inline TThetaPoly twist(const TThetaPoly& h, unsigned i) { return h.twist(i); }

// Exact division of num by a nonzero element of F_q[t]; the remainder must
// vanish, anything else throws InexactDivision.
TThetaPoly div_exact_tpoly(const TThetaPoly& num, const ThetaPoly& den_in_t);

// A fraction num / den with den in F_q[t] only, reduced lazily. Both series
// coefficients in the generating-function inversion and nothing else use it.
struct TThetaFraction {
  TThetaPoly num;
  ThetaPoly den;  // element of F_q[t], nonzero

  static TThetaFraction of(const TThetaPoly& p) {
    return {p, ThetaPoly::one(p.field())};
  }
  static TThetaFraction zero(const Field& f) {
    return {TThetaPoly::zero(f), ThetaPoly::one(f)};
  }

  bool is_zero() const { return num.is_zero(); }
  TThetaFraction operator+(const TThetaFraction& o) const {
    return {num.mul_tpoly(o.den) + o.num.mul_tpoly(den), den * o.den};
  }
  TThetaFraction operator*(const TThetaFraction& o) const {
    return {num * o.num, den * o.den};
  }
};

}  // namespace carlitz
