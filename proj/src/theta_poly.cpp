#include "carlitz/theta_poly.hpp"

#include <algorithm>

namespace carlitz {

void ThetaPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ThetaPoly ThetaPoly::constant(const Field& f, uint32_t c) {
  if (c >= f->q()) throw Error("constant out of range");
  if (c == 0) return zero(f);
  return ThetaPoly(f, {c});
}

ThetaPoly ThetaPoly::monomial(const Field& f, uint32_t c, size_t k) {
  if (c >= f->q()) throw Error("coefficient out of range");
  if (c == 0) return zero(f);
  std::vector<uint32_t> v(k + 1, 0);
  v[k] = c;
  return ThetaPoly(f, std::move(v));
}

ThetaPoly ThetaPoly::from_coeffs(const Field& f, std::vector<uint32_t> coeffs) {
  for (uint32_t c : coeffs)
    if (c >= f->q()) throw Error("coefficient out of range for F_q");
  ThetaPoly r(f, std::move(coeffs));
  r.trim();
  return r;
}

int ThetaPoly::deg() const {
  if (c_.empty()) throw Error("degree of the zero polynomial is undefined");
  return static_cast<int>(c_.size()) - 1;
}

uint32_t ThetaPoly::leading() const {
  if (c_.empty()) throw Error("zero polynomial has no leading coefficient");
  return c_.back();
}

ThetaPoly ThetaPoly::operator+(const ThetaPoly& o) const {
  check_same_field(*field_, *o.field_);
  const FieldCtx& F = *field_;
  std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = F.add(coeff(i), o.coeff(i));
  ThetaPoly out(field_, std::move(r));
  out.trim();
  return out;
}

ThetaPoly ThetaPoly::operator-(const ThetaPoly& o) const {
  check_same_field(*field_, *o.field_);
  const FieldCtx& F = *field_;
  std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = F.sub(coeff(i), o.coeff(i));
  ThetaPoly out(field_, std::move(r));
  out.trim();
  return out;
}

ThetaPoly ThetaPoly::operator-() const {
  const FieldCtx& F = *field_;
  std::vector<uint32_t> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = F.neg(c_[i]);
  return ThetaPoly(field_, std::move(r));
}

ThetaPoly ThetaPoly::operator*(const ThetaPoly& o) const {
  check_same_field(*field_, *o.field_);
  if (is_zero() || o.is_zero()) return zero(field_);
  const FieldCtx& F = *field_;
  std::vector<uint32_t> r(c_.size() + o.c_.size() - 1, 0);
  if (F.ext_degree() == 1) {
    // Prime field: accumulate in 64 bits, reduce once per output index.
    const uint64_t p = F.p();
    for (size_t i = 0; i < r.size(); ++i) {
      uint64_t acc = 0;
      const size_t jlo = i >= o.c_.size() ? i - o.c_.size() + 1 : 0;
      const size_t jhi = std::min(i, c_.size() - 1);
      for (size_t j = jlo; j <= jhi; ++j) acc += uint64_t(c_[j]) * o.c_[i - j];
      r[i] = static_cast<uint32_t>(acc % p);
    }
  } else {
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (size_t j = 0; j < o.c_.size(); ++j)
        r[i + j] = F.add(r[i + j], F.mul(c_[i], o.c_[j]));
    }
  }
  ThetaPoly out(field_, std::move(r));
  out.trim();
  return out;
}

ThetaPoly ThetaPoly::scaled(uint32_t c) const {
  const FieldCtx& F = *field_;
  if (c == 0) return zero(field_);
  std::vector<uint32_t> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = F.mul(c_[i], c);
  ThetaPoly out(field_, std::move(r));
  out.trim();
  return out;
}

ThetaPoly ThetaPoly::shifted(size_t k) const {
  if (is_zero() || k == 0) return k == 0 ? *this : zero(field_);
  std::vector<uint32_t> r(c_.size() + k, 0);
  std::copy(c_.begin(), c_.end(), r.begin() + static_cast<long>(k));
  return ThetaPoly(field_, std::move(r));
}

ThetaPoly ThetaPoly::pow(uint64_t n) const {
  ThetaPoly r = one(field_);
  ThetaPoly base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    if (n >>= 1) base = base * base;
  }
  return r;
}

ThetaPoly ThetaPoly::frobenius(unsigned i) const {
  // (sum c_j theta^j)^(q^i) = sum c_j theta^(j q^i): the coefficients are
  // fixed by the q-power map, so only the exponents spread.
  if (i == 0 || is_zero()) return *this;
  uint64_t step = 1;
  for (unsigned k = 0; k < i; ++k) {
    step *= field_->q();
    if (step > (1u << 26)) throw Error("frobenius exponent out of supported range");
  }
  std::vector<uint32_t> r((c_.size() - 1) * step + 1, 0);
  for (size_t j = 0; j < c_.size(); ++j) r[j * step] = c_[j];
  return ThetaPoly(field_, std::move(r));
}

ThetaPoly ThetaPoly::make_monic() const {
  if (is_zero()) throw DivisionByZero("cannot normalize the zero polynomial");
  if (monic()) return *this;
  return scaled(field_->inv(leading()));
}

bool ThetaPoly::operator==(const ThetaPoly& o) const {
  check_same_field(*field_, *o.field_);
  return c_ == o.c_;
}

bool ThetaPoly::less(const ThetaPoly& a, const ThetaPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (size_t i = a.c_.size(); i-- > 0;)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

std::pair<ThetaPoly, ThetaPoly> poly_divrem(const ThetaPoly& a, const ThetaPoly& b) {
  check_same_field(*a.field(), *b.field());
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const Field& f = a.field();
  const FieldCtx& F = *f;
  if (a.is_zero() || a.deg() < b.deg())
    return {ThetaPoly::zero(f), a};

  const int db = b.deg();
  const uint32_t lead_inv = F.inv(b.leading());
  std::vector<uint32_t> rem = a.coeffs();
  std::vector<uint32_t> quot(static_cast<size_t>(a.deg() - db) + 1, 0);
  for (int k = a.deg() - db; k >= 0; --k) {
    const uint32_t top = rem[static_cast<size_t>(k + db)];
    if (top == 0) continue;
    const uint32_t qc = F.mul(top, lead_inv);
    quot[static_cast<size_t>(k)] = qc;
    for (int i = 0; i <= db; ++i) {
      auto idx = static_cast<size_t>(k + i);
      rem[idx] = F.sub(rem[idx], F.mul(qc, b.coeff(static_cast<size_t>(i))));
    }
  }
  return {ThetaPoly::from_coeffs(f, std::move(quot)), ThetaPoly::from_coeffs(f, std::move(rem))};
}

ExtGcd poly_ext_gcd(const ThetaPoly& a, const ThetaPoly& b) {
  check_same_field(*a.field(), *b.field());
  if (a.is_zero() && b.is_zero()) throw BothZero("gcd(0, 0) is undefined");
  const Field& f = a.field();

  ThetaPoly r0 = a, r1 = b;
  ThetaPoly x0 = ThetaPoly::one(f), x1 = ThetaPoly::zero(f);
  ThetaPoly y0 = ThetaPoly::zero(f), y1 = ThetaPoly::one(f);
  while (!r1.is_zero()) {
    auto [q, r] = poly_divrem(r0, r1);
    ThetaPoly x2 = x0 - q * x1;
    ThetaPoly y2 = y0 - q * y1;
    r0 = std::move(r1);
    r1 = std::move(r);
    x0 = std::move(x1);
    x1 = std::move(x2);
    y0 = std::move(y1);
    y1 = std::move(y2);
  }
  const uint32_t lead = r0.leading();
  if (lead != 1) {
    const uint32_t li = f->inv(lead);
    r0 = r0.scaled(li);
    x0 = x0.scaled(li);
    y0 = y0.scaled(li);
  }
  return {std::move(r0), std::move(x0), std::move(y0)};
}

ThetaPoly poly_gcd(const ThetaPoly& a, const ThetaPoly& b) {
  check_same_field(*a.field(), *b.field());
  if (a.is_zero() && b.is_zero()) throw BothZero("gcd(0, 0) is undefined");
  ThetaPoly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    auto [q, r] = poly_divrem(r0, r1);
    (void)q;
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  return r0.make_monic();
}

}  // namespace carlitz
