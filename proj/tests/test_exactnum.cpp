#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ekr/exactnum.hpp"

using namespace ekr;
using num::Integer;
using num::Rational;

namespace {

// Independent oracle: count the 1-dimensional subspaces of GF(4)^3 by
// enumerating monic vectors over hand-written GF(4) tables.
int count_lines_gf4_dim3() {
  // elements 0,1,t=2,t+1=3 with t^2 = t+1
  static const int mul[4][4] = {
      {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  std::set<std::array<int, 3>> monic;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        std::array<int, 3> v{a, b, c};
        if (a == 0 && b == 0 && c == 0) continue;
        int lead = a != 0 ? a : (b != 0 ? b : c);
        // scale by lead^{-1}; in GF(4)* the inverse of x is x^2
        int s = mul[lead][lead];
        for (auto& x : v) x = mul[s][x];
        monic.insert(v);
      }
  return static_cast<int>(monic.size());
}

// Independent oracle: Pascal-style recursion g(n,k) = g(n-1,k-1) + b^k g(n-1,k).
Integer gauss_by_pascal(int n, int k, const Integer& b) {
  if (k < 0 || k > n) return 0;
  if (k == 0 || k == n) return 1;
  return gauss_by_pascal(n - 1, k - 1, b) +
         num::ipow(b, k) * gauss_by_pascal(n - 1, k, b);
}

}  // namespace

TEST_CASE("gaussian binomial frozen values") {
  CHECK(num::gaussian_binomial(7, 0, 4) == 1);
  CHECK(count_lines_gf4_dim3() == 21);
  CHECK(num::gaussian_binomial(3, 1, 4) == 21);
  CHECK(gauss_by_pascal(5, 2, 4) == 5797);
  CHECK(num::gaussian_binomial(5, 2, 4) == 5797);
  CHECK(num::gaussian_binomial(2, 3, 4) == 0);
  CHECK_THROWS_AS(num::gaussian_binomial(3, 1, 1), DomainError);
}

TEST_CASE("gaussian binomial symmetry and Pascal rule") {
  std::mt19937 rng(20250809);
  std::uniform_int_distribution<int> nd(0, 12), bd(2, 9);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = nd(rng);
    const int k = std::uniform_int_distribution<int>(0, n)(rng);
    const Integer b = bd(rng);
    CAPTURE(n);
    CAPTURE(k);
    CHECK(num::gaussian_binomial(n, k, b) ==
          num::gaussian_binomial(n, n - k, b));
    if (n >= 1 && k >= 1)
      CHECK(num::gaussian_binomial(n, k, b) ==
            num::gaussian_binomial(n - 1, k - 1, b) +
                num::ipow(b, k) * num::gaussian_binomial(n - 1, k, b));
  }
}

TEST_CASE("rational arithmetic field axiom spot checks") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> vd(-50, 50), dd(1, 30);
  auto rnd = [&] { return Rational(Integer(vd(rng)), Integer(dd(rng))); };
  for (int trial = 0; trial < 100; ++trial) {
    const Rational a = rnd(), b = rnd(), c = rnd();
    CHECK(a + (b + c) == (a + b) + c);
    CHECK(a * (b * c) == (a * b) * c);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (a != 0) CHECK(a * (1 / a) == 1);
    const Rational sum = a + b;
    CHECK(denominator(sum) > 0);
  }
}

TEST_CASE("exact division is checked") {
  CHECK(num::exact_div(Integer(84), Integer(21)) == 4);
  CHECK_THROWS_AS(num::exact_div(Integer(85), Integer(21)), PropertyError);
  CHECK_THROWS_AS(num::exact_div(Integer(1), Integer(0)), PropertyError);
  CHECK_THROWS_AS(num::checked_div(Rational(1), Rational(0)), EvalError);
}

TEST_CASE("identity certification at exact points") {
  using num::Evaluator;
  const std::vector<Rational> pts{2, 3, 5};
  Evaluator one = [](const Rational&) { return Rational(1); };
  CHECK(num::verify_polynomial_identity(one, one, pts).holds());

  Evaluator lhs = [](const Rational& q) { return q * q - 1; };
  Evaluator rhs = [](const Rational& q) { return (q - 1) * (q + 1); };
  CHECK(num::verify_polynomial_identity(lhs, rhs, pts).holds());

  Evaluator wrong = [](const Rational& q) { return q * q; };
  const auto bad = num::verify_polynomial_identity(lhs, wrong, pts);
  CHECK_FALSE(bad.holds());
  CHECK(bad.mismatches.size() == 3);

  // Division by zero at a point is reported for that point, not swallowed.
  Evaluator pole = [](const Rational& q) {
    return num::checked_div(Rational(1), q - 2);
  };
  const auto res = num::verify_polynomial_identity(pole, one, pts);
  REQUIRE(res.failures.size() == 1);
  CHECK(res.failures[0].point_index == 0);
  CHECK_FALSE(res.holds());
}

TEST_CASE("string round trips") {
  CHECK(num::to_string(Rational(-152, 5)) == "-152/5");
  CHECK(num::rational_from_string("-152/5") == Rational(-152, 5));
  CHECK(num::rational_from_string("42") == Rational(42));
  CHECK(num::rational_from_string("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(num::rational_from_string("x/y"), DomainError);
  CHECK_THROWS_AS(num::rational_from_string("1/0"), DomainError);
  CHECK(num::floor_rat(Rational(-7, 2)) == -4);
  CHECK(num::floor_rat(Rational(7, 2)) == 3);
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> vd(-1000, 1000), dd(1, 997);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational r(Integer(vd(rng)), Integer(dd(rng)));
    CHECK(num::rational_from_string(num::to_string(r)) == r);
  }
}

TEST_CASE("gaussian binomial over the rationals matches the integer one") {
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= 6; ++k)
      CHECK(num::gaussian_binomial_rational(n, k, Rational(4)) ==
            Rational(num::gaussian_binomial(n, k, Integer(4))));
  // At a non-integer base: [3 2]_b = b^2 + b + 1.
  const Rational b(5, 2);
  CHECK(num::gaussian_binomial_rational(3, 2, b) == b * b + b + 1);
  CHECK_THROWS_AS(num::gaussian_binomial_rational(2, 1, Rational(1)),
                  EvalError);
}
