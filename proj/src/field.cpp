#include "carlitz/field.hpp"

#include <algorithm>
#include <map>

namespace carlitz {

namespace {

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Minimal F_p[x] helpers used only for modulus validation. ThetaPoly cannot
// be used here since it depends on a finished FieldCtx.
using FpPoly = std::vector<uint32_t>;  // little-endian, coefficients in [0, p)

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a by monic g.
FpPoly fp_rem(FpPoly a, const FpPoly& g, uint64_t p) {
  fp_trim(a);
  const size_t dg = g.size() - 1;
  while (a.size() >= g.size()) {
    const uint64_t top = a.back();
    const size_t shift = a.size() - 1 - dg;
    for (size_t i = 0; i <= dg; ++i) {
      uint64_t cur = a[shift + i];
      uint64_t s = (top * g[i]) % p;
      a[shift + i] = static_cast<uint32_t>((cur + p - s) % p);
    }
    fp_trim(a);
  }
  return a;
}

bool fp_is_irreducible(const FpPoly& f, uint64_t p) {
  const size_t d = f.size() - 1;
  if (d == 0) return false;
  if (d == 1) return true;
  // Trial division by every monic polynomial of degree 1..d/2.
  for (size_t m = 1; 2 * m <= d; ++m) {
    uint64_t count = 1;
    for (size_t i = 0; i < m; ++i) count *= p;
    for (uint64_t v = 0; v < count; ++v) {
      FpPoly g(m + 1, 0);
      uint64_t t = v;
      for (size_t i = 0; i < m; ++i) {
        g[i] = static_cast<uint32_t>(t % p);
        t /= p;
      }
      g[m] = 1;
      if (fp_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Built-in moduli: lexicographically least monic irreducible (by ascending
// packed value of the non-leading coefficients), verified at construction.
const std::map<std::pair<uint64_t, uint32_t>, FpPoly>& builtin_moduli() {
  static const std::map<std::pair<uint64_t, uint32_t>, FpPoly> table = {
      {{2, 2}, {1, 1, 1}},     // x^2 + x + 1
      {{2, 3}, {1, 1, 0, 1}},  // x^3 + x + 1
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{3, 2}, {1, 0, 1}},     // x^2 + 1
      {{3, 3}, {1, 2, 0, 1}},  // x^3 + 2x + 1
      {{5, 2}, {2, 0, 1}},     // x^2 + 2
  };
  return table;
}

}  // namespace

FieldCtx::FieldCtx(uint64_t p, uint32_t e, std::vector<uint32_t> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
  q_ = 1;
  for (uint32_t i = 0; i < e_; ++i) {
    q_ *= p_;
    if (q_ > (1u << 30)) throw Error("field size q exceeds the supported range");
  }
  if (e_ > 1) {
    // Precompute x^(e+k) mod modulus as digit vectors.
    reduction_.assign(e_ - 1, std::vector<uint32_t>(e_, 0));
    std::vector<uint32_t> cur(e_, 0);
    for (uint32_t i = 0; i < e_; ++i) cur[i] = (p_ - modulus_[i]) % p_;  // x^e mod m
    reduction_[0] = cur;
    for (uint32_t k = 1; k + 1 < e_; ++k) {
      std::vector<uint32_t> nxt(e_, 0);
      // multiply cur by x, reduce the overflow digit through x^e
      uint32_t carry = cur[e_ - 1];
      for (uint32_t i = e_ - 1; i > 0; --i) nxt[i] = cur[i - 1];
      nxt[0] = 0;
      for (uint32_t i = 0; i < e_; ++i)
        nxt[i] = static_cast<uint32_t>((nxt[i] + uint64_t(carry) * reduction_[0][i]) % p_);
      reduction_[k] = nxt;
      cur = nxt;
    }
  }
  // Prime fields already reduce with one integer op; tables only pay off
  // for extensions.
  if (e_ > 1 && q_ <= kTableLimit) build_tables();
}

std::vector<uint32_t> FieldCtx::coords(uint32_t a) const {
  std::vector<uint32_t> d(e_);
  uint64_t v = a;
  for (uint32_t i = 0; i < e_; ++i) {
    d[i] = static_cast<uint32_t>(v % p_);
    v /= p_;
  }
  return d;
}

uint32_t FieldCtx::from_coords(const std::vector<uint32_t>& digits) const {
  if (digits.size() != e_) throw Error("coordinate vector has wrong length");
  uint64_t v = 0;
  for (size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= p_) throw Error("coordinate out of range");
    v = v * p_ + digits[i];
  }
  return static_cast<uint32_t>(v);
}

uint32_t FieldCtx::add(uint32_t a, uint32_t b) const {
  if (e_ == 1) {
    uint64_t s = uint64_t(a) + b;
    return static_cast<uint32_t>(s >= p_ ? s - p_ : s);
  }
  if (has_tables_) return add_tab_[a * q_ + b];
  auto da = coords(a), db = coords(b);
  for (uint32_t i = 0; i < e_; ++i) da[i] = static_cast<uint32_t>((uint64_t(da[i]) + db[i]) % p_);
  return from_coords(da);
}

uint32_t FieldCtx::sub(uint32_t a, uint32_t b) const {
  if (e_ == 1) {
    uint64_t s = uint64_t(a) + p_ - b;
    return static_cast<uint32_t>(s >= p_ ? s - p_ : s);
  }
  auto da = coords(a), db = coords(b);
  for (uint32_t i = 0; i < e_; ++i)
    da[i] = static_cast<uint32_t>((uint64_t(da[i]) + p_ - db[i]) % p_);
  return from_coords(da);
}

uint32_t FieldCtx::mul_digits(uint32_t a, uint32_t b) const {
  auto da = coords(a), db = coords(b);
  std::vector<uint64_t> conv(2 * e_ - 1, 0);
  for (uint32_t i = 0; i < e_; ++i)
    for (uint32_t j = 0; j < e_; ++j) conv[i + j] += uint64_t(da[i]) * db[j];
  // Fold degrees e..2e-2 through the precomputed reductions.
  std::vector<uint64_t> out(e_, 0);
  for (uint32_t i = 0; i < e_; ++i) out[i] = conv[i] % p_;
  for (uint32_t k = 0; k + 1 < e_; ++k) {
    uint64_t c = conv[e_ + k] % p_;
    if (c == 0) continue;
    for (uint32_t i = 0; i < e_; ++i) out[i] = (out[i] + c * reduction_[k][i]) % p_;
  }
  std::vector<uint32_t> d(e_);
  for (uint32_t i = 0; i < e_; ++i) d[i] = static_cast<uint32_t>(out[i]);
  return from_coords(d);
}

uint32_t FieldCtx::mul(uint32_t a, uint32_t b) const {
  if (e_ == 1) return static_cast<uint32_t>((uint64_t(a) * b) % p_);
  if (has_tables_) return mul_tab_[a * q_ + b];
  return mul_digits(a, b);
}

uint32_t FieldCtx::pow(uint32_t a, uint64_t n) const {
  uint32_t r = 1, base = a;
  while (n > 0) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

uint32_t FieldCtx::inv(uint32_t a) const {
  if (a == 0) throw NotInvertible("0 has no inverse in F_q");
  if (has_tables_ && !inv_tab_.empty()) return inv_tab_[a];
  return pow(a, q_ - 2);
}

void FieldCtx::build_tables() {
  const size_t q = q_;
  add_tab_.resize(q * q);
  mul_tab_.resize(q * q);
  inv_tab_.assign(q, 0);
  for (size_t a = 0; a < q; ++a) {
    for (size_t b = 0; b < q; ++b) {
      uint32_t s, m;
      if (e_ == 1) {
        s = static_cast<uint32_t>((a + b) % p_);
        m = static_cast<uint32_t>((a * b) % p_);
      } else {
        auto da = coords(static_cast<uint32_t>(a)), db = coords(static_cast<uint32_t>(b));
        std::vector<uint32_t> ds(e_);
        for (uint32_t i = 0; i < e_; ++i)
          ds[i] = static_cast<uint32_t>((uint64_t(da[i]) + db[i]) % p_);
        s = from_coords(ds);
        m = mul_digits(static_cast<uint32_t>(a), static_cast<uint32_t>(b));
      }
      add_tab_[a * q + b] = s;
      mul_tab_[a * q + b] = m;
      if (m == 1) {
        inv_tab_[a] = static_cast<uint32_t>(b);
      }
    }
  }
  has_tables_ = true;
}

Field FieldCtx::make(uint64_t p, uint32_t e,
                     const std::optional<std::vector<uint32_t>>& modulus) {
  if (!is_prime_u64(p)) throw NonPrimeP("p = " + std::to_string(p) + " is not prime");
  if (e < 1) throw Error("extension degree must be at least 1");
  if (e > 16) throw Error("extension degree out of supported range");

  std::vector<uint32_t> mod;
  if (e == 1) {
    if (modulus && !modulus->empty())
      throw Error("a modulus may only be given for extension fields (e > 1)");
  } else if (modulus) {
    mod = *modulus;
    if (mod.size() != size_t(e) + 1 || mod.back() != 1)
      throw Error("modulus must be monic of degree e");
    for (uint32_t c : mod)
      if (c >= p) throw Error("modulus coefficient out of range");
    if (!fp_is_irreducible(mod, p))
      throw ReducibleModulus("the given modulus factors over F_" + std::to_string(p));
  } else {
    auto it = builtin_moduli().find({p, e});
    if (it == builtin_moduli().end())
      throw MissingModulus("no built-in modulus for p = " + std::to_string(p) +
                           ", e = " + std::to_string(e) + "; pass one explicitly");
    mod = it->second;
    if (!fp_is_irreducible(mod, p)) throw Error("internal: built-in modulus is reducible");
  }
  return Field(new FieldCtx(p, e, std::move(mod)));
}

Field make_field(uint64_t p, uint32_t e,
                 const std::optional<std::vector<uint32_t>>& modulus) {
  return FieldCtx::make(p, e, modulus);
}

Field clone_field(const Field& f) {
  if (f->ext_degree() == 1) return FieldCtx::make(f->p(), 1);
  return FieldCtx::make(f->p(), f->ext_degree(), f->modulus());
}

std::pair<uint64_t, uint32_t> split_prime_power(uint64_t q) {
  if (q < 2) throw NonPrimeP("q must be at least 2");
  uint64_t p = q;
  for (uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  uint32_t e = 0;
  uint64_t v = q;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  if (v != 1) throw NonPrimeP("q = " + std::to_string(q) + " is not a prime power");
  return {p, e};
}

}  // namespace carlitz
