#include <doctest.h>

#include <random>

#include "recipcas/rational_function.hpp"
#include "support/random_values.hpp"

using namespace recipcas;

namespace {

Polynomial X() { return Polynomial::variable(2, 0); }
Polynomial Y() { return Polynomial::variable(2, 1); }
Polynomial C(long long n) { return Polynomial::constant(2, Rational(n)); }

}  // namespace

TEST_CASE("normalization cancels common factors") {
  const RationalFunction r(pow(X(), 2) - pow(Y(), 2), X() - Y());
  CHECK(r.is_polynomial());
  CHECK(r.num() == X() + Y());

  // Value-level identity for content reduction.
  CHECK(RationalFunction(C(2) * X(), C(4) * Y()) == RationalFunction(X(), C(2) * Y()));

  const RationalFunction reduced(X() * Y(), X() + Y());
  CHECK(reduced.num() == X() * Y());
  CHECK(reduced.den() == X() + Y());

  CHECK_THROWS_AS(RationalFunction(X(), Polynomial(2)), ZeroDenominator);
}

TEST_CASE("canonical form decides equality") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 30; ++i) {
    const RationalFunction r = testing::random_rational_function(rng, 2, 3, 6);
    const Polynomial junk = testing::random_polynomial(rng, 2, 2, 4);
    // Same value through an unreduced representation.
    const RationalFunction again(r.num() * junk, r.den() * junk);
    CHECK(again == r);
    CHECK(again.num() == r.num());
    CHECK(again.den() == r.den());
  }
}

TEST_CASE("denominator is primitive with positive leading coefficient") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 30; ++i) {
    const RationalFunction r = testing::random_nonzero_rational_function(rng, 2, 3, 6);
    const auto d = primitive_decomposition(r.den());
    CHECK(d.scale == 1);
    CHECK(r.den().leading_coefficient() > 0);
    CHECK(gcd(r.num(), r.den()).is_constant());
  }
}

TEST_CASE("field arithmetic") {
  const RationalFunction a(C(1), X());
  const RationalFunction b(C(1), Y());
  CHECK(a + b == RationalFunction(X() + Y(), X() * Y()));
  CHECK(a * b == RationalFunction(C(1), X() * Y()));
  CHECK(a - a == RationalFunction(2));
  CHECK(pow(a, -2) == RationalFunction::from_polynomial(pow(X(), 2)));
  CHECK_THROWS_AS(a / RationalFunction(2), ZeroDenominator);
  CHECK_THROWS_AS(RationalFunction(2).reciprocal(), ZeroDenominator);
}

TEST_CASE("random arithmetic keeps canonical invariants") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    const RationalFunction a = testing::random_rational_function(rng, 2, 3, 5);
    const RationalFunction b = testing::random_nonzero_rational_function(rng, 2, 3, 5);
    const RationalFunction sum = a + b;
    const RationalFunction product = a * b;
    const RationalFunction quotient = a / b;
    for (const RationalFunction* r : {&sum, &product, &quotient}) {
      if (r->is_zero()) continue;
      CHECK(gcd(r->num(), r->den()).is_constant());
      CHECK(primitive_decomposition(r->den()).scale == 1);
    }
    CHECK(quotient * b == a);
    CHECK(sum - b == a);
  }
}

TEST_CASE("sigma inverts each variable") {
  CHECK(sigma(RationalFunction(X(), Y())) == RationalFunction(Y(), X()));
  CHECK(sigma(RationalFunction(X() * Y(), X() + Y())) == RationalFunction(C(1), X() + Y()));
  CHECK(sigma(RationalFunction::constant(2, Rational(7, 3))) ==
        RationalFunction::constant(2, Rational(7, 3)));
  CHECK(sigma(RationalFunction(2)).is_zero());
}

TEST_CASE("sigma is an involution and a field map") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 60; ++i) {
    const int vars = (i % 2 == 0) ? 2 : 3;
    const RationalFunction r = testing::random_rational_function(rng, vars, 4, 8);
    CHECK(sigma(sigma(r)) == r);
    const RationalFunction s = testing::random_rational_function(rng, vars, 3, 8);
    CHECK(sigma(r * s) == sigma(r) * sigma(s));
    CHECK(sigma(r + s) == sigma(r) + sigma(s));
  }
}

TEST_CASE("printing") {
  CHECK(to_string(RationalFunction(X() + Y(), X() * Y())) == "(X + Y)/(X*Y)");
  CHECK(to_string(RationalFunction(pow(X(), 2) - pow(Y(), 2), X() - Y())) == "X + Y");
  CHECK(to_string(RationalFunction(2)) == "0");
}
