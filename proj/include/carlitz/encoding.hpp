#pragma once

#include <string>

#include "carlitz/carlitz_seq.hpp"
#include "carlitz/rational.hpp"
#include "carlitz/residue.hpp"

namespace carlitz {

// Canonical text encoding, bit-exact across every module:
//   ThetaPoly   [c0,c1,...,cn]   little-endian packed F_q values, zero = []
//   RationalFn  num/den
//   FqElem      the packed integer itself
// These strings appear verbatim in all CLI and JSON output.

std::string encode(const ThetaPoly& a);
std::string encode(const RationalFn& x);
std::string encode(const Residue& r);  // the representative only
std::string encode(const TThetaPoly& h);  // [[j, "[...]"], ...] style, ascending j

ThetaPoly parse_theta_poly(const Field& f, const std::string& s);
RationalFn parse_rational(const Field& f, const std::string& s);

// Point coordinates: a bare integer is a constant in F_p; polynomials use
// the bracket syntax; fractions are coord '/' coord.
RationalFn parse_coord(const Field& f, const std::string& s);
std::vector<RationalFn> parse_point(const Field& f, const std::string& s);

Composition parse_composition(const std::string& s);  // "1,2"

}  // namespace carlitz
