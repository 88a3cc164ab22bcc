#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "carlitz/carlitz_seq.hpp"
#include "carlitz/encoding.hpp"
#include "carlitz/evaluator.hpp"

using namespace carlitz;

namespace {

// x-series coefficients of 1 - sum_i (G_i(theta)/D_i|_{theta=t}) x^(q^i),
// built directly from the definitions (not through at_polys).
std::vector<TThetaFraction> one_minus_s_series(const Field& f, int nmax) {
  std::vector<TThetaFraction> coeff(static_cast<size_t>(nmax) + 1,
                                    TThetaFraction::zero(f));
  coeff[0] = TThetaFraction::of(TThetaPoly::one(f));
  uint64_t qi = 1;
  for (int i = 0; qi <= static_cast<uint64_t>(nmax); ++i) {
    coeff[static_cast<size_t>(qi)] = TThetaFraction{-g_poly(f, i), d_poly(f, i)};
    if (qi > static_cast<uint64_t>(nmax) / f->q()) break;
    qi *= f->q();
  }
  return coeff;
}

bool fraction_is(const TThetaFraction& x, const TThetaPoly& value) {
  return x.num == value.mul_tpoly(x.den);
}

}  // namespace

TEST_CASE("compositions") {
  CHECK_THROWS_AS(Composition::of({}), Error);
  CHECK_THROWS_AS(Composition::of({1, 0}), Error);
  Composition s = Composition::of({1, 2});
  CHECK(s.depth() == 2);
  CHECK(s.weight() == 3);
  CHECK(s.str() == "1,2");

  for (int w = 1; w <= 6; ++w)
    CHECK(compositions_of_weight(w).size() == (size_t(1) << (w - 1)));
  auto lex = compositions_of_weight(3);
  REQUIRE(lex.size() == 4);
  CHECK(lex[0].parts == std::vector<int>{1, 1, 1});
  CHECK(lex[1].parts == std::vector<int>{1, 2});
  CHECK(lex[2].parts == std::vector<int>{2, 1});
  CHECK(lex[3].parts == std::vector<int>{3});
  CHECK(compositions_of_weight(4, 2).size() == 4);  // depth-capped
}

TEST_CASE("Carlitz sequences D, L, Gamma") {
  for (uint64_t q : {2u, 3u}) {
    auto [p, e] = split_prime_power(q);
    auto f = make_field(p, e);
    const ThetaPoly th = ThetaPoly::theta(f);

    CHECK(d_poly(f, 0).is_one());
    CHECK(d_poly(f, 1) == th.frobenius(1) - th);
    CHECK(d_poly(f, 2) == (th.frobenius(2) - th) * (th.frobenius(2) - th.frobenius(1)));

    CHECK(l_poly(f, 0).is_one());
    CHECK(l_poly(f, 1) == th - th.frobenius(1));
    CHECK(l_poly(f, 2) == (th - th.frobenius(1)) * (th - th.frobenius(2)));

    CHECK(carlitz_gamma(f, 1).is_one());
    CHECK(carlitz_gamma(f, 2).is_one());
    CHECK(carlitz_gamma(f, static_cast<int>(q) + 1) == th.frobenius(1) - th);

    // The digit definition, recomputed independently for a few m.
    for (int m : {3, 5, 8, 11}) {
      uint64_t n = static_cast<uint64_t>(m) - 1;
      ThetaPoly expect = ThetaPoly::one(f);
      for (int i = 0; n > 0; ++i, n /= q) {
        for (uint64_t rep = 0; rep < n % q; ++rep) expect *= d_poly(f, i);
      }
      CHECK(carlitz_gamma(f, m) == expect);
    }
  }
}

TEST_CASE("G polynomials") {
  auto f = make_field(3, 1);
  const uint64_t q = 3;
  const ThetaPoly th = ThetaPoly::theta(f);
  CHECK(g_poly(f, 0).is_one());

  TThetaPoly t_q = TThetaPoly::t_monomial(f, ThetaPoly::one(f), q);
  CHECK(g_poly(f, 1) == t_q - TThetaPoly::constant(th.frobenius(1)));

  TThetaPoly t_q2 = TThetaPoly::t_monomial(f, ThetaPoly::one(f), q * q);
  CHECK(g_poly(f, 2) == (t_q2 - TThetaPoly::constant(th.frobenius(1))) *
                            (t_q2 - TThetaPoly::constant(th.frobenius(2))));
}

TEST_CASE("twist") {
  auto f = make_field(3, 1);
  const TThetaPoly one = TThetaPoly::one(f);
  CHECK(one.twist(5) == one);
  TThetaPoly t_minus_theta = TThetaPoly::t(f) - TThetaPoly::constant(ThetaPoly::theta(f));
  CHECK(t_minus_theta.twist(0) == t_minus_theta);
  TThetaPoly expect =
      TThetaPoly::t(f) - TThetaPoly::constant(ThetaPoly::theta(f).frobenius(1));
  CHECK(t_minus_theta.twist(1) == expect);
}

TEST_CASE("Anderson-Thakur polynomials: closed small cases") {
  for (uint64_t q : {2u, 3u, 4u}) {
    auto [p, e] = split_prime_power(q);
    auto f = make_field(p, e);
    auto H = at_polys(f, static_cast<int>(q) + 1);

    for (uint64_t n = 0; n <= q - 1; ++n) CHECK(H[n].is_one());

    // H_q = (t - theta)^q + t^q - t
    TThetaPoly t = TThetaPoly::t(f);
    TThetaPoly th = TThetaPoly::constant(ThetaPoly::theta(f));
    TThetaPoly expect = (t - th).pow(q) + t.pow(q) - t;
    CHECK(H[q] == expect);
  }
}

TEST_CASE("generating-function reconstruction up to x^13") {
  for (uint64_t q : {2u, 3u}) {
    auto [p, e] = split_prime_power(q);
    auto f = make_field(p, e);
    const int N = 12;
    auto H = at_polys(f, N);
    auto lhs = one_minus_s_series(f, N);

    // B_n = H_n / Gamma_(n+1)|_{theta=t}; Gamma is transported by renaming.
    std::vector<TThetaFraction> inv;
    for (int n = 0; n <= N; ++n)
      inv.push_back(TThetaFraction{H[static_cast<size_t>(n)], carlitz_gamma(f, n + 1)});

    for (int n = 0; n <= N; ++n) {
      TThetaFraction acc = TThetaFraction::zero(f);
      for (int a = 0; a <= n; ++a)
        acc = acc + lhs[static_cast<size_t>(a)] * inv[static_cast<size_t>(n - a)];
      if (n == 0) {
        CHECK(fraction_is(acc, TThetaPoly::one(f)));
      } else {
        CHECK(acc.is_zero());
      }
    }
  }
}

TEST_CASE("coefficient degree bound and leading coefficients") {
  for (uint64_t q : {2u, 3u, 4u}) {
    auto [p, e] = split_prime_power(q);
    auto f = make_field(p, e);
    auto H = at_polys(f, 7);  // H_(s-1) for s <= 8
    for (int s = 1; s <= 8; ++s) {
      const TThetaPoly& h = H[static_cast<size_t>(s) - 1];
      REQUIRE_FALSE(h.is_zero());
      CHECK_FALSE(h.coeffs().back().is_zero());  // u_(m) != 0 after stripping
      for (const ThetaPoly& u : h.coeffs()) {
        if (u.is_zero()) continue;
        // deg u < s q/(q-1), strictly
        CHECK(static_cast<uint64_t>(u.deg()) * (q - 1) < static_cast<uint64_t>(s) * q);
      }
    }
  }
}

TEST_CASE("interpolation consistency of H against exact power sums") {
  for (uint64_t q : {2u, 3u}) {
    auto [p, e] = split_prime_power(q);
    auto f = make_field(p, e);
    auto H = at_polys(f, 3);
    for (int s = 1; s <= 4; ++s) {
      for (int i = 0; i <= 3; ++i) {
        RationalFn lhs = RationalFn::normalize(
            H[static_cast<size_t>(s) - 1].twist(static_cast<unsigned>(i)).eval_at_theta(),
            l_poly(f, i).pow(static_cast<uint64_t>(s)));
        RationalFn rhs =
            RationalFn::of(carlitz_gamma(f, s)) * power_sum_exact(f, i, s);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("expansion data for index tuples") {
  auto f3 = make_field(3, 1);

  auto single = at_expansion(f3, Composition::of({1}));
  CHECK(single.m == std::vector<int>{0});
  CHECK(single.u[0][0].is_one());
  CHECK(single.gamma.is_one());
  CHECK(single.index_tuples() == std::vector<std::vector<int>>{{0}});

  auto low = at_expansion(f3, Composition::of({1, 2}));
  CHECK(low.gamma.is_one());
  CHECK(low.index_count() == 1);
  for (const auto& h : low.H) CHECK(h.is_one());

  // s = q + 1 at q = 3: H_3 = 2t^3 - t - theta^3, so m = 3 with top entry 2.
  auto big = at_expansion(f3, Composition::of({4}));
  CHECK(big.m == std::vector<int>{3});
  CHECK(encode(big.u[0][3]) == "[2]");
  CHECK(encode(big.u[0][0]) == "[0,0,0,2]");
  CHECK(big.gamma == carlitz_gamma(f3, 4));

  // At q = 2 the formal t^q coefficient of H_q is 2 = 0 and gets stripped.
  auto f2 = make_field(2, 1);
  auto even = at_expansion(f2, Composition::of({3}));
  CHECK(even.m == std::vector<int>{1});
  CHECK(encode(even.u[0][1]) == "[1]");
  CHECK(encode(even.u[0][0]) == "[0,0,1]");  // theta^2

  // index tuples run in lexicographic order
  auto pair = at_expansion(f3, Composition::of({4, 1}));
  auto tuples = pair.index_tuples();
  REQUIRE(tuples.size() == 4);
  CHECK(tuples[0] == std::vector<int>{0, 0});
  CHECK(tuples[3] == std::vector<int>{3, 0});
}
