#include "carlitz/tpoly.hpp"

#include <algorithm>

namespace carlitz {

void TThetaPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TThetaPoly TThetaPoly::from_coeffs(const Field& f, std::vector<ThetaPoly> coeffs) {
  for (const auto& c : coeffs) check_same_field(*f, *c.field());
  TThetaPoly r(f, std::move(coeffs));
  r.trim();
  return r;
}

TThetaPoly TThetaPoly::constant(const ThetaPoly& c) {
  if (c.is_zero()) return zero(c.field());
  return TThetaPoly(c.field(), {c});
}

TThetaPoly TThetaPoly::from_tpoly(const ThetaPoly& f_in_t) {
  const Field& f = f_in_t.field();
  std::vector<ThetaPoly> coeffs;
  coeffs.reserve(f_in_t.coeffs().size());
  for (uint32_t c : f_in_t.coeffs()) coeffs.push_back(ThetaPoly::constant(f, c));
  return TThetaPoly(f, std::move(coeffs));
}

TThetaPoly TThetaPoly::t_monomial(const Field& f, const ThetaPoly& c, size_t j) {
  if (c.is_zero()) return zero(f);
  std::vector<ThetaPoly> coeffs(j + 1, ThetaPoly::zero(f));
  coeffs[j] = c;
  return TThetaPoly(f, std::move(coeffs));
}

int TThetaPoly::deg_t() const {
  if (c_.empty()) throw Error("t-degree of the zero polynomial is undefined");
  return static_cast<int>(c_.size()) - 1;
}

ThetaPoly TThetaPoly::coeff(size_t j) const {
  if (j < c_.size()) return c_[j];
  return ThetaPoly::zero(field_);
}

TThetaPoly TThetaPoly::operator+(const TThetaPoly& o) const {
  check_same_field(*field_, *o.field_);
  std::vector<ThetaPoly> r;
  const size_t n = std::max(c_.size(), o.c_.size());
  r.reserve(n);
  for (size_t j = 0; j < n; ++j) {
    ThetaPoly a = j < c_.size() ? c_[j] : ThetaPoly::zero(field_);
    ThetaPoly b = j < o.c_.size() ? o.c_[j] : ThetaPoly::zero(field_);
    r.push_back(a + b);
  }
  TThetaPoly out(field_, std::move(r));
  out.trim();
  return out;
}

TThetaPoly TThetaPoly::operator-(const TThetaPoly& o) const { return *this + (-o); }

TThetaPoly TThetaPoly::operator-() const {
  std::vector<ThetaPoly> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(-c);
  return TThetaPoly(field_, std::move(r));
}

TThetaPoly TThetaPoly::operator*(const TThetaPoly& o) const {
  check_same_field(*field_, *o.field_);
  if (is_zero() || o.is_zero()) return zero(field_);
  std::vector<ThetaPoly> r(c_.size() + o.c_.size() - 1, ThetaPoly::zero(field_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r[i + j] += c_[i] * o.c_[j];
    }
  }
  TThetaPoly out(field_, std::move(r));
  out.trim();
  return out;
}

TThetaPoly TThetaPoly::scaled(const ThetaPoly& c) const {
  if (c.is_zero()) return zero(field_);
  std::vector<ThetaPoly> r;
  r.reserve(c_.size());
  for (const auto& a : c_) r.push_back(a * c);
  TThetaPoly out(field_, std::move(r));
  out.trim();
  return out;
}

TThetaPoly TThetaPoly::mul_tpoly(const ThetaPoly& f_in_t) const {
  if (is_zero() || f_in_t.is_zero()) return zero(field_);
  const auto& fc = f_in_t.coeffs();
  std::vector<ThetaPoly> r(c_.size() + fc.size() - 1, ThetaPoly::zero(field_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < fc.size(); ++j) {
      if (fc[j] == 0) continue;
      r[i + j] += c_[i].scaled(fc[j]);
    }
  }
  TThetaPoly out(field_, std::move(r));
  out.trim();
  return out;
}

TThetaPoly TThetaPoly::pow(uint64_t n) const {
  TThetaPoly r = one(field_);
  TThetaPoly base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    if (n >>= 1) base = base * base;
  }
  return r;
}

TThetaPoly TThetaPoly::twist(unsigned i) const {
  if (i == 0) return *this;
  std::vector<ThetaPoly> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(c.frobenius(i));
  return TThetaPoly(field_, std::move(r));
}

ThetaPoly TThetaPoly::eval_at_theta() const {
  ThetaPoly acc = ThetaPoly::zero(field_);
  // Horner in t = theta.
  for (size_t j = c_.size(); j-- > 0;) acc = acc * ThetaPoly::theta(field_) + c_[j];
  return acc;
}

bool TThetaPoly::operator==(const TThetaPoly& o) const {
  check_same_field(*field_, *o.field_);
  if (c_.size() != o.c_.size()) return false;
  for (size_t j = 0; j < c_.size(); ++j)
    if (c_[j] != o.c_[j]) return false;
  return true;
}

TThetaPoly div_exact_tpoly(const TThetaPoly& num, const ThetaPoly& den_in_t) {
  if (den_in_t.is_zero()) throw DivisionByZero("division by the zero t-polynomial");
  const Field& f = num.field();
  if (num.is_zero()) return TThetaPoly::zero(f);

  const int dd = den_in_t.deg();
  const uint32_t lead_inv = f->inv(den_in_t.leading());
  std::vector<ThetaPoly> rem = num.coeffs();
  if (static_cast<int>(rem.size()) - 1 < dd)
    throw InexactDivision("t-degree of the numerator is below the denominator");
  std::vector<ThetaPoly> quot(rem.size() - static_cast<size_t>(dd),
                              ThetaPoly::zero(f));
  for (int k = static_cast<int>(rem.size()) - 1 - dd; k >= 0; --k) {
    ThetaPoly top = rem[static_cast<size_t>(k + dd)];
    if (top.is_zero()) continue;
    ThetaPoly qc = top.scaled(lead_inv);
    quot[static_cast<size_t>(k)] = qc;
    for (int i = 0; i <= dd; ++i) {
      auto idx = static_cast<size_t>(k + i);
      rem[idx] -= qc.scaled(den_in_t.coeff(static_cast<size_t>(i)));
    }
  }
  for (const auto& r : rem)
    if (!r.is_zero())
      throw InexactDivision("nonzero remainder in a division that must be exact");
  return TThetaPoly::from_coeffs(f, std::move(quot));
}

}  // namespace carlitz
