#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "carlitz/encoding.hpp"
#include "carlitz/enumerate.hpp"
#include "carlitz/rational.hpp"
#include "carlitz/residue.hpp"

using namespace carlitz;

namespace {

ThetaPoly random_poly(const Field& f, std::mt19937_64& rng, int max_deg) {
  std::vector<uint32_t> c(static_cast<size_t>(rng() % (max_deg + 1)) + 1);
  for (auto& x : c) x = static_cast<uint32_t>(rng() % f->q());
  return ThetaPoly::from_coeffs(f, std::move(c));
}

ThetaPoly random_nonzero_poly(const Field& f, std::mt19937_64& rng, int max_deg) {
  for (;;) {
    ThetaPoly a = random_poly(f, rng, max_deg);
    if (!a.is_zero()) return a;
  }
}

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

// Independent oracle for the irreducible count: (1/d) sum_{m | d} mu(m) q^(d/m).
long necklace_count(long q, int d) {
  long total = 0;
  for (int m = 1; m <= d; ++m) {
    if (d % m) continue;
    long qp = 1;
    for (int i = 0; i < d / m; ++i) qp *= q;
    total += moebius(m) * qp;
  }
  return total / d;
}

}  // namespace

TEST_CASE("field construction") {
  auto f3 = make_field(3, 1);
  CHECK(f3->q() == 3);
  CHECK(f3->p() == 3);

  auto f4 = make_field(2, 2, std::vector<uint32_t>{1, 1, 1});
  CHECK(f4->q() == 4);
  // The modulus w^2 + w + 1 has no root in F_2.
  for (uint32_t x : {0u, 1u}) CHECK((x * x + x + 1) % 2 == 1);

  CHECK_THROWS_AS(make_field(4, 1), NonPrimeP);
  CHECK_THROWS_AS(make_field(1, 1), NonPrimeP);
  CHECK_THROWS_AS(make_field(2, 2, std::vector<uint32_t>{1, 0, 1}), ReducibleModulus);
  CHECK_THROWS_AS(make_field(7, 2), MissingModulus);
  CHECK_THROWS_AS(make_field(3, 1, std::vector<uint32_t>{1, 1}), Error);

  // Built-in table entries resolve without an explicit modulus.
  for (auto [p, e] : {std::pair<uint64_t, uint32_t>{2, 2},
                      {2, 3},
                      {2, 4},
                      {3, 2},
                      {3, 3},
                      {5, 2}}) {
    auto f = make_field(p, e);
    CHECK(f->modulus().size() == e + 1);
    CHECK(f->modulus().back() == 1);
  }
  CHECK(make_field(2, 2)->modulus() == std::vector<uint32_t>{1, 1, 1});

  CHECK(split_prime_power(27) == std::pair<uint64_t, uint32_t>{3, 3});
  CHECK(split_prime_power(4) == std::pair<uint64_t, uint32_t>{2, 2});
  CHECK_THROWS_AS(split_prime_power(12), NonPrimeP);
}

TEST_CASE("FqElem field axioms, exhaustive for small extensions") {
  for (uint64_t q : {4u, 8u, 9u}) {
    auto [p, e] = split_prime_power(q);
    auto f = make_field(p, e);
    for (uint32_t a = 0; a < q; ++a) {
      for (uint32_t b = 0; b < q; ++b) {
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        for (uint32_t c = 0; c < q; ++c) {
          CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
          CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
      if (a != 0) {
        CHECK(f->mul(a, f->inv(a)) == 1);
        // x^q = x on F_q
        CHECK(f->pow(a, q) == a);
      }
    }
    CHECK_THROWS_AS(f->inv(0), NotInvertible);
  }
  // F_4's generator is packed as 2 with coordinates (0, 1).
  auto f4 = make_field(2, 2);
  FqElem w(f4, 2);
  CHECK(w.coords() == std::vector<uint32_t>{0, 1});
  CHECK((w * w).value() == 3);  // w^2 = w + 1
  CHECK(frobenius(w, 5) == w);  // the q-power map fixes F_q
}

TEST_CASE("theta polynomial ring axioms on random triples") {
  for (uint64_t q : {2u, 3u, 4u, 5u}) {
    auto [p, e] = split_prime_power(q);
    auto f = make_field(p, e);
    std::mt19937_64 rng(17 * q);
    for (int iter = 0; iter < 200; ++iter) {
      ThetaPoly a = random_poly(f, rng, 6);
      ThetaPoly b = random_poly(f, rng, 6);
      ThetaPoly c = random_poly(f, rng, 6);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == ThetaPoly::zero(f));
    }
  }
}

TEST_CASE("division with remainder") {
  auto f = make_field(3, 1);
  const ThetaPoly a = parse_theta_poly(f, "[1,0,1]");  // theta^2 + 1
  const ThetaPoly b = ThetaPoly::theta(f);

  auto [quot, rem] = poly_divrem(a, b);
  CHECK(encode(quot) == "[0,1]");
  CHECK(encode(rem) == "[1]");

  auto [q2, r2] = poly_divrem(b, a);
  CHECK(q2.is_zero());
  CHECK(r2 == b);

  CHECK_THROWS_AS(poly_divrem(a, ThetaPoly::zero(f)), DivisionByZero);

  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 300; ++iter) {
    ThetaPoly x = random_poly(f, rng, 8);
    ThetaPoly y = random_nonzero_poly(f, rng, 5);
    auto [qq, rr] = poly_divrem(x, y);
    CHECK(qq * y + rr == x);
    if (!rr.is_zero()) CHECK(rr.deg() < y.deg());
  }
}

TEST_CASE("extended gcd") {
  auto f = make_field(3, 1);
  const ThetaPoly a = parse_theta_poly(f, "[1,0,1]");
  const ThetaPoly b = ThetaPoly::theta(f);

  auto r = poly_ext_gcd(a, b);
  CHECK(r.g.is_one());
  CHECK(r.x * a + r.y * b == r.g);

  auto same = poly_ext_gcd(b, b);
  CHECK(same.g == b);  // theta is already monic

  auto with_zero = poly_ext_gcd(ThetaPoly::zero(f), parse_theta_poly(f, "[1,1]"));
  CHECK(with_zero.g == parse_theta_poly(f, "[1,1]"));

  CHECK_THROWS_AS(poly_ext_gcd(ThetaPoly::zero(f), ThetaPoly::zero(f)), BothZero);

  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    ThetaPoly x = random_poly(f, rng, 6);
    ThetaPoly y = random_poly(f, rng, 6);
    if (x.is_zero() && y.is_zero()) continue;
    auto e = poly_ext_gcd(x, y);
    CHECK(e.g.monic());
    CHECK(e.x * x + e.y * y == e.g);
    if (!x.is_zero()) CHECK(poly_divrem(x, e.g).second.is_zero());
    if (!y.is_zero()) CHECK(poly_divrem(y, e.g).second.is_zero());
  }
}

TEST_CASE("frobenius is the q-power ring map") {
  auto f = make_field(3, 1);
  CHECK(encode(parse_theta_poly(f, "[1,1]").frobenius(1)) == "[1,0,0,1]");
  const ThetaPoly a = parse_theta_poly(f, "[2,1,1]");
  CHECK(a.frobenius(0) == a);
  CHECK(ThetaPoly::constant(f, 2).frobenius(3) == ThetaPoly::constant(f, 2));

  for (uint64_t q : {2u, 3u, 4u}) {
    auto [p, e] = split_prime_power(q);
    auto fq = make_field(p, e);
    std::mt19937_64 rng(q);
    for (int iter = 0; iter < 50; ++iter) {
      ThetaPoly x = random_poly(fq, rng, 4);
      ThetaPoly y = random_poly(fq, rng, 4);
      for (unsigned i : {1u, 2u}) {
        CHECK((x + y).frobenius(i) == x.frobenius(i) + y.frobenius(i));
        CHECK((x * y).frobenius(i) == x.frobenius(i) * y.frobenius(i));
        // agreement with the literal power
        uint64_t qi = 1;
        for (unsigned k = 0; k < i; ++k) qi *= q;
        CHECK(x.frobenius(i) == x.pow(qi));
      }
    }
    // Residue and rational carriers.
    for (const ThetaPoly& P : irreducibles(fq, 2)) {
      std::mt19937_64 rng2(q + 1);
      for (int iter = 0; iter < 20; ++iter) {
        Residue x = Residue::reduce(random_poly(fq, rng2, 3), P);
        Residue y = Residue::reduce(random_poly(fq, rng2, 3), P);
        CHECK((x + y).frobenius(1) == x.frobenius(1) + y.frobenius(1));
        CHECK((x * y).frobenius(1) == x.frobenius(1) * y.frobenius(1));
        CHECK(x.frobenius(1) == x.pow(q));
      }
    }
    std::mt19937_64 rng3(q + 2);
    for (int iter = 0; iter < 20; ++iter) {
      RationalFn x = RationalFn::normalize(random_poly(fq, rng3, 3),
                                           random_nonzero_poly(fq, rng3, 3));
      RationalFn y = RationalFn::normalize(random_poly(fq, rng3, 3),
                                           random_nonzero_poly(fq, rng3, 3));
      CHECK((x + y).frobenius(1) == x.frobenius(1) + y.frobenius(1));
      CHECK((x * y).frobenius(1) == x.frobenius(1) * y.frobenius(1));
    }
  }
}

TEST_CASE("monic enumeration") {
  auto f2 = make_field(2, 1);
  auto monic1 = enumerate_monic(f2, 1);
  REQUIRE(monic1.size() == 2);
  CHECK(encode(monic1[0]) == "[0,1]");
  CHECK(encode(monic1[1]) == "[1,1]");

  auto f3 = make_field(3, 1);
  auto monic0 = enumerate_monic(f3, 0);
  REQUIRE(monic0.size() == 1);
  CHECK(monic0[0].is_one());
  CHECK(enumerate_monic(f3, 2).size() == 9);

  CHECK_THROWS_AS(enumerate_monic(f3, 20), BudgetExceeded);
}

TEST_CASE("irreducibles and the necklace-count oracle") {
  auto f3 = make_field(3, 1);
  auto lin = irreducibles(f3, 1);
  REQUIRE(lin.size() == 3);
  CHECK(encode(lin[0]) == "[0,1]");
  CHECK(encode(lin[1]) == "[1,1]");
  CHECK(encode(lin[2]) == "[2,1]");

  auto quad = irreducibles(f3, 2);
  CHECK(quad.size() == 3);
  bool found = false;
  for (const auto& P : quad) found = found || encode(P) == "[1,0,1]";
  CHECK(found);

  auto f2 = make_field(2, 1);
  CHECK_FALSE(is_irreducible(parse_theta_poly(f2, "[1,0,1]")));  // (theta+1)^2

  for (uint64_t q : {2u, 3u, 4u, 5u}) {
    auto [p, e] = split_prime_power(q);
    auto f = make_field(p, e);
    for (int d = 1; d <= 4; ++d)
      CHECK(static_cast<long>(irreducibles(f, d).size()) ==
            necklace_count(static_cast<long>(q), d));
  }
}

TEST_CASE("residue inverses mod a prime") {
  auto f = make_field(3, 1);
  const ThetaPoly P = parse_theta_poly(f, "[1,0,1]");
  CHECK(encode(residue_inverse(ThetaPoly::theta(f), P)) == "[0,2]");
  CHECK(encode(residue_inverse(parse_theta_poly(f, "[1,1]"), P)) == "[2,1]");
  CHECK_THROWS_AS(residue_inverse(P, P), NotInvertible);

  for (uint64_t q : {2u, 3u}) {
    auto [p, e] = split_prime_power(q);
    auto fq = make_field(p, e);
    std::mt19937_64 rng(41 + q);
    for (int d = 1; d <= 3; ++d) {
      for (const ThetaPoly& prime : irreducibles(fq, d)) {
        for (int iter = 0; iter < 10; ++iter) {
          ThetaPoly a = random_nonzero_poly(fq, rng, d - 1);
          Residue inv = residue_inverse(a, prime);
          CHECK(Residue::reduce(a, prime) * inv == Residue::one(prime));
        }
      }
    }
  }
}

TEST_CASE("rational normalization is canonical") {
  auto f = make_field(3, 1);
  RationalFn a = ratfn_normalize(parse_theta_poly(f, "[0,2,1]"), ThetaPoly::theta(f));
  CHECK(encode(a) == "[2,1]/[1]");  // (theta^2 - theta)/theta = theta - 1

  RationalFn b = ratfn_normalize(ThetaPoly::one(f), parse_theta_poly(f, "[0,2]"));
  CHECK(encode(b) == "[2]/[0,1]");  // 1/(2 theta) = 2/theta

  RationalFn z = ratfn_normalize(ThetaPoly::zero(f), ThetaPoly::theta(f));
  CHECK(encode(z) == "[]/[1]");

  CHECK_THROWS_AS(ratfn_normalize(ThetaPoly::one(f), ThetaPoly::zero(f)), DivisionByZero);

  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    ThetaPoly num = random_poly(f, rng, 6);
    ThetaPoly den = random_nonzero_poly(f, rng, 6);
    RationalFn x = ratfn_normalize(num, den);
    CHECK(x.den().monic());
    if (!x.is_zero()) CHECK(poly_gcd(x.num(), x.den()).is_one());
    // normalizing a canonical form is the identity
    CHECK(ratfn_normalize(x.num(), x.den()) == x);
    // and the canonical form represents the same fraction
    CHECK(x.num() * den == num * x.den());
  }

  // field axioms spot check
  std::mt19937_64 rng2(6);
  for (int iter = 0; iter < 60; ++iter) {
    RationalFn x = ratfn_normalize(random_poly(f, rng2, 4), random_nonzero_poly(f, rng2, 4));
    RationalFn y = ratfn_normalize(random_poly(f, rng2, 4), random_nonzero_poly(f, rng2, 4));
    RationalFn z2 = ratfn_normalize(random_poly(f, rng2, 4), random_nonzero_poly(f, rng2, 4));
    CHECK((x + y) + z2 == x + (y + z2));
    CHECK(x * (y + z2) == x * y + x * z2);
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("canonical text encoding round-trips") {
  for (uint64_t q : {3u, 4u}) {
    auto [p, e] = split_prime_power(q);
    auto f = make_field(p, e);
    std::mt19937_64 rng(q * 31);
    for (int iter = 0; iter < 100; ++iter) {
      ThetaPoly a = random_poly(f, rng, 7);
      CHECK(parse_theta_poly(f, encode(a)) == a);
      RationalFn x = ratfn_normalize(a, random_nonzero_poly(f, rng, 5));
      CHECK(parse_rational(f, encode(x)) == x);
    }
  }
  auto f3 = make_field(3, 1);
  CHECK(encode(ThetaPoly::zero(f3)) == "[]");
  CHECK(parse_theta_poly(f3, "[]").is_zero());
  // bare integers in point coordinates are constants in F_p
  CHECK(parse_coord(f3, "4") == RationalFn::of(ThetaPoly::one(f3)));
  CHECK(parse_coord(f3, "1/[0,1]") ==
        ratfn_normalize(ThetaPoly::one(f3), ThetaPoly::theta(f3)));
  auto pt = parse_point(f3, "1,[0,1]/[1,1]");
  REQUIRE(pt.size() == 2);
  CHECK(encode(pt[1]) == "[0,1]/[1,1]");
  CHECK_THROWS_AS(parse_theta_poly(f3, "[5]"), Error);
  CHECK_THROWS_AS(parse_composition("1,0"), Error);
}
