#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hn/harmonic.hpp"
#include "hn/polynomial.hpp"
#include "hn/rational_function.hpp"

using namespace hn;

namespace {

// Deterministic pseudorandom rationals for property checks.
struct RatGen {
  std::mt19937 rng{20260824};
  Rat next() {
    std::uniform_int_distribution<long> num(-999, 999);
    std::uniform_int_distribution<long> den(1, 40);
    return rat(num(rng), den(rng));
  }
  Rat next_positive() {
    std::uniform_int_distribution<long> num(1, 999);
    std::uniform_int_distribution<long> den(1, 40);
    return rat(num(rng), den(rng));
  }
};

}  // namespace

TEST_CASE("harmonic numbers: exact values") {
  CHECK(harmonic_exact(1) == rat(1));
  CHECK(harmonic_exact(2) == rat(3, 2));
  CHECK(harmonic_exact(4) == rat(25, 12));
  CHECK_THROWS_AS(harmonic_exact(0), std::domain_error);
}

TEST_CASE("harmonic numbers: difference property and accumulator") {
  HarmonicAccumulator acc;
  Rat prev = 0;
  for (unsigned long n = 1; n <= 200; ++n) {
    Rat h = acc.advance_to(n);
    CHECK(h - prev == Rat(1, n));
    prev = h;
  }
  CHECK(acc.value() == harmonic_exact(200));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == rat(3, 4));
  CHECK(parse_rational("-1.25") == rat(-5, 4));
  CHECK(parse_rational("1e-3") == rat(1, 1000));
  CHECK(parse_rational("2.5e2") == rat(250));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("dyadic rounding is outward") {
  RatGen gen;
  for (int i = 0; i < 50; ++i) {
    Rat q = gen.next();
    Rat down = round_down_dyadic(q, 16);
    Rat up = round_up_dyadic(q, 16);
    CHECK(down <= q);
    CHECK(q <= up);
    CHECK(up - down <= rat(2, 1 << 16));
  }
}

TEST_CASE("polynomial arithmetic basics") {
  Polynomial xp1 = Polynomial::from_longs({1, 1});
  Polynomial xm1 = Polynomial::from_longs({-1, 1});
  CHECK(xp1 * xm1 == Polynomial::from_longs({-1, 0, 1}));
  Polynomial p = Polynomial::from_longs({2, 0, 5});
  CHECK(p + Polynomial::zero() == p);
  CHECK((p - p).is_zero());
  CHECK(Polynomial::zero().degree() == -1);
}

TEST_CASE("polynomial division with remainder") {
  auto [q1, r1] = poly_divrem(Polynomial::from_longs({-1, 0, 1}),
                              Polynomial::from_longs({-1, 1}));
  CHECK(q1 == Polynomial::from_longs({1, 1}));
  CHECK(r1.is_zero());

  auto [q2, r2] = poly_divrem(Polynomial::from_longs({1, 0, 1}),
                              Polynomial::from_longs({0, 1}));
  CHECK(q2 == Polynomial::from_longs({0, 1}));
  CHECK(r2 == Polynomial::constant(Rat(1)));

  CHECK_THROWS_AS(poly_divrem(q2, Polynomial::zero()), std::domain_error);
}

TEST_CASE("polynomial division: reconstruction property") {
  RatGen gen;
  for (int i = 0; i < 30; ++i) {
    std::vector<Rat> ac, bc;
    for (int k = 0; k < 9; ++k) ac.push_back(gen.next());
    for (int k = 0; k < 4; ++k) bc.push_back(gen.next());
    bc.push_back(Rat(1));  // keep divisor nonzero
    Polynomial a(ac), b(bc);
    auto [q, r] = poly_divrem(a, b);
    CHECK(b * q + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("taylor shift") {
  CHECK(poly_taylor_shift(Polynomial::from_longs({0, 0, 1}), Rat(1)) ==
        Polynomial::from_longs({1, 2, 1}));
  Polynomial p = Polynomial::from_longs({3, -2, 7, 1});
  CHECK(poly_taylor_shift(p, Rat(0)) == p);
  CHECK(poly_taylor_shift(Polynomial::from_longs({-5, 1}), Rat(5)) ==
        Polynomial::from_longs({0, 1}));
}

TEST_CASE("taylor shift round-trip property") {
  RatGen gen;
  for (int i = 0; i < 30; ++i) {
    std::vector<Rat> coeffs;
    for (int k = 0; k < 8; ++k) coeffs.push_back(gen.next());
    Polynomial p(coeffs);
    Rat a = gen.next();
    CHECK(poly_taylor_shift(poly_taylor_shift(p, a), -a) == p);
  }
}

TEST_CASE("rational function combination") {
  RationalFunction inv_x =
      RationalFunction::reciprocal_of(Rat(1), Polynomial::from_longs({0, 1}));
  RationalFunction inv_x1 =
      RationalFunction::reciprocal_of(Rat(1), Polynomial::from_longs({1, 1}));
  RationalFunction sum = ratfun_combine({{inv_x, +1}, {inv_x1, +1}});
  CHECK(sum.num() == Polynomial::from_longs({1, 2}));
  CHECK(sum.den() == Polynomial::from_longs({0, 1, 1}));

  RationalFunction zero = ratfun_combine({{inv_x, +1}, {inv_x, -1}});
  CHECK(zero.is_zero());
}

TEST_CASE("rational function evaluation") {
  RationalFunction inv_x =
      RationalFunction::reciprocal_of(Rat(1), Polynomial::from_longs({0, 1}));
  CHECK(inv_x.eval(Rat(2)) == rat(1, 2));
  RationalFunction f(Polynomial::from_longs({1, 2}),
                     Polynomial::from_longs({0, 1, 1}));
  CHECK(f.eval(Rat(1)) == rat(3, 2));
  CHECK_THROWS_AS(inv_x.eval(Rat(0)), std::domain_error);
}

TEST_CASE("canonical form of rational functions") {
  // (2x+2)/(4x+4) reduces to 1/2.
  RationalFunction f(Polynomial::from_longs({2, 2}),
                     Polynomial::from_longs({4, 4}));
  CHECK(f.num() == Polynomial::constant(Rat(1)));
  CHECK(f.den() == Polynomial::constant(Rat(2)));
  // Negative leading denominator flips.
  RationalFunction g(Polynomial::from_longs({1}),
                     Polynomial::from_longs({0, -1}));
  CHECK(g.den().leading() > 0);
}

TEST_CASE("combined fraction equals term-by-term evaluation") {
  // A moderately messy signed combination, evaluated both ways at 20 random
  // non-pole points.
  std::vector<std::pair<RationalFunction, int>> terms;
  terms.emplace_back(RationalFunction::reciprocal_of(
                         Rat(1), Polynomial::from_longs({0, 0, 1})),
                     +1);
  terms.emplace_back(RationalFunction::reciprocal_of(
                         Rat(1, 3), Polynomial::from_longs({0, 1, 1})),
                     -1);
  terms.emplace_back(
      RationalFunction(Polynomial::from_longs({3, 6}),
                       Polynomial::from_longs({0, 0, 0, 1, 2, 1})),
      -1);
  RationalFunction combined = ratfun_combine(terms);
  RatGen gen;
  int checked = 0;
  while (checked < 20) {
    Rat x = gen.next_positive();
    Rat direct = 0;
    for (const auto& [f, sign] : terms)
      direct += Rat(sign) * f.eval(x);
    CHECK(combined.eval(x) == direct);
    ++checked;
  }
}
