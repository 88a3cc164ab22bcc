#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "carlitz/errors.hpp"

namespace carlitz {

class FieldCtx;

// Shared, immutable field context. Safe to copy across threads.
using Field = std::shared_ptr<const FieldCtx>;

// The base field F_q, q = p^e, in the polynomial basis over F_p.
//
// Elements are packed as the integer sum d_i p^i of their coordinates, the
// same integer the canonical text encoding uses (so F_4's generator is 2).
// For small q the context precomputes full add/mul/inv tables; larger fields
// fall back to per-operation digit arithmetic.
class FieldCtx {
 public:
  // p prime, e >= 1. A modulus is required exactly when e > 1; when omitted,
  // a deterministic built-in (the lexicographically least monic irreducible
  // of degree e over F_p, by ascending packed value) is looked up for
  // q in {4, 8, 9, 16, 25, 27}.
  static Field make(uint64_t p, uint32_t e,
                    const std::optional<std::vector<uint32_t>>& modulus = std::nullopt);

  uint64_t p() const { return p_; }
  uint32_t ext_degree() const { return e_; }
  uint64_t q() const { return q_; }
  // Monic, little-endian, length e+1; empty when e == 1.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  bool same_field(const FieldCtx& other) const {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }

  // Arithmetic on packed values in [0, q).
  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const { return sub(0, a); }
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;  // throws NotInvertible on 0
  uint32_t pow(uint32_t a, uint64_t n) const;

  std::vector<uint32_t> coords(uint32_t a) const;  // base-p digits, length e
  uint32_t from_coords(const std::vector<uint32_t>& digits) const;

 private:
  FieldCtx(uint64_t p, uint32_t e, std::vector<uint32_t> modulus);

  uint32_t mul_digits(uint32_t a, uint32_t b) const;
  void build_tables();

  uint64_t p_;
  uint32_t e_;
  uint64_t q_;
  std::vector<uint32_t> modulus_;
  // x^(e+k) mod modulus for k in [0, e-1), as digit vectors of length e.
  std::vector<std::vector<uint32_t>> reduction_;
  std::vector<uint32_t> add_tab_, mul_tab_, inv_tab_;
  bool has_tables_ = false;

  static constexpr uint64_t kTableLimit = 256;
};

inline void check_same_field(const FieldCtx& a, const FieldCtx& b) {
  if (!a.same_field(b)) throw Error("operands belong to different fields");
}

// One field element bound to its context. Convenience type for API-level
// code and tests; inner loops work on packed values through FieldCtx.
class FqElem {
 public:
  FqElem(Field field, uint32_t packed) : field_(std::move(field)), v_(packed) {
    if (v_ >= field_->q()) throw Error("packed value out of range");
  }
  static FqElem from_coords(Field field, const std::vector<uint32_t>& digits) {
    uint32_t v = field->from_coords(digits);
    return FqElem(std::move(field), v);
  }

  uint32_t value() const { return v_; }
  std::vector<uint32_t> coords() const { return field_->coords(v_); }
  const Field& field() const { return field_; }
  bool is_zero() const { return v_ == 0; }

  FqElem operator+(const FqElem& o) const { return bin(o, &FieldCtx::add); }
  FqElem operator-(const FqElem& o) const { return bin(o, &FieldCtx::sub); }
  FqElem operator*(const FqElem& o) const { return bin(o, &FieldCtx::mul); }
  FqElem operator-() const { return FqElem(field_, field_->neg(v_)); }
  FqElem inverse() const { return FqElem(field_, field_->inv(v_)); }
  FqElem operator/(const FqElem& o) const { return *this * o.inverse(); }
  FqElem pow(uint64_t n) const { return FqElem(field_, field_->pow(v_, n)); }

  // x^(q^i); the q-power map fixes F_q, applied i times regardless.
  FqElem frobenius(unsigned i) const {
    uint32_t r = v_;
    for (unsigned k = 0; k < i; ++k) r = field_->pow(r, field_->q());
    return FqElem(field_, r);
  }

  bool operator==(const FqElem& o) const {
    check_same_field(*field_, *o.field_);
    return v_ == o.v_;
  }
  bool operator!=(const FqElem& o) const { return !(*this == o); }

 private:
  FqElem bin(const FqElem& o, uint32_t (FieldCtx::*op)(uint32_t, uint32_t) const) const {
    check_same_field(*field_, *o.field_);
    return FqElem(field_, (field_.get()->*op)(v_, o.v_));
  }

  Field field_;
  uint32_t v_;
};

inline FqElem frobenius(const FqElem& x, unsigned i) { return x.frobenius(i); }

Field make_field(uint64_t p, uint32_t e,
                 const std::optional<std::vector<uint32_t>>& modulus = std::nullopt);

// A fresh context with the same (p, e, modulus). Parallel kernels give each
// worker thread its own clone so reference-count traffic stays thread-local.
Field clone_field(const Field& f);

// Splits a prime power q into (p, e); throws NonPrimeP otherwise.
std::pair<uint64_t, uint32_t> split_prime_power(uint64_t q);

}  // namespace carlitz
