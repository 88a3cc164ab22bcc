#include "carlitz/encoding.hpp"

#include <cstdlib>

namespace carlitz {

std::string encode(const ThetaPoly& a) {
  std::string s = "[";
  const auto& c = a.coeffs();
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  s += ']';
  return s;
}

std::string encode(const RationalFn& x) { return encode(x.num()) + "/" + encode(x.den()); }

std::string encode(const Residue& r) { return encode(r.rep()); }

std::string encode(const TThetaPoly& h) {
  std::string s = "[";
  bool first = true;
  for (size_t j = 0; j < h.coeffs().size(); ++j) {
    const ThetaPoly& c = h.coeffs()[j];
    if (c.is_zero()) continue;
    if (!first) s += ',';
    first = false;
    s += "[" + std::to_string(j) + "," + encode(c) + "]";
  }
  s += ']';
  return s;
}

namespace {

[[noreturn]] void bad_input(const std::string& what, const std::string& s) {
  throw Error("cannot parse " + what + " from '" + s + "'");
}

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// Splits on top-level commas, respecting brackets.
std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

uint64_t parse_uint(const std::string& s) {
  const std::string t = strip(s);
  if (t.empty()) bad_input("integer", s);
  char* end = nullptr;
  unsigned long long v = std::strtoull(t.c_str(), &end, 10);
  if (end != t.c_str() + t.size()) bad_input("integer", s);
  return v;
}

}  // namespace

ThetaPoly parse_theta_poly(const Field& f, const std::string& raw) {
  const std::string s = strip(raw);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') bad_input("polynomial", raw);
  const std::string body = strip(s.substr(1, s.size() - 2));
  if (body.empty()) return ThetaPoly::zero(f);
  std::vector<uint32_t> coeffs;
  for (const auto& part : split_commas(body)) {
    uint64_t v = parse_uint(part);
    if (v >= f->q()) throw Error("coefficient " + std::to_string(v) + " is not below q");
    coeffs.push_back(static_cast<uint32_t>(v));
  }
  return ThetaPoly::from_coeffs(f, std::move(coeffs));
}

RationalFn parse_rational(const Field& f, const std::string& raw) {
  const std::string s = strip(raw);
  size_t slash = std::string::npos;
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    if (s[i] == ']') --depth;
    if (s[i] == '/' && depth == 0) {
      slash = i;
      break;
    }
  }
  if (slash == std::string::npos) bad_input("rational function", raw);
  return RationalFn::normalize(parse_theta_poly(f, s.substr(0, slash)),
                               parse_theta_poly(f, s.substr(slash + 1)));
}

RationalFn parse_coord(const Field& f, const std::string& raw) {
  const std::string s = strip(raw);
  if (s.empty()) bad_input("coordinate", raw);

  auto parse_side = [&](const std::string& side) -> ThetaPoly {
    const std::string t = strip(side);
    if (!t.empty() && t.front() == '[') return parse_theta_poly(f, t);
    // Bare integers are constants in F_p.
    uint64_t v = parse_uint(t);
    return ThetaPoly::constant(f, static_cast<uint32_t>(v % f->p()));
  };

  size_t slash = std::string::npos;
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    if (s[i] == ']') --depth;
    if (s[i] == '/' && depth == 0) {
      slash = i;
      break;
    }
  }
  if (slash == std::string::npos) return RationalFn::of(parse_side(s));
  return RationalFn::normalize(parse_side(s.substr(0, slash)),
                               parse_side(s.substr(slash + 1)));
}

std::vector<RationalFn> parse_point(const Field& f, const std::string& s) {
  std::vector<RationalFn> coords;
  for (const auto& part : split_commas(strip(s))) coords.push_back(parse_coord(f, part));
  return coords;
}

Composition parse_composition(const std::string& s) {
  std::vector<int> parts;
  for (const auto& part : split_commas(strip(s))) {
    uint64_t v = parse_uint(part);
    if (v < 1 || v > 64) throw Error("composition part out of range: " + part);
    parts.push_back(static_cast<int>(v));
  }
  return Composition::of(std::move(parts));
}

}  // namespace carlitz
