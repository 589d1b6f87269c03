#include <doctest.h>

#include <random>

#include "recipcas/recip_sum.hpp"
#include "recipcas/valuation.hpp"
#include "support/random_values.hpp"

using namespace recipcas;

namespace {

Polynomial X() { return Polynomial::variable(2, 0); }
Polynomial Y() { return Polynomial::variable(2, 1); }
Polynomial C(long long n) { return Polynomial::constant(2, Rational(n)); }

}  // namespace

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(ValuationSpec::weighted_sub(2, 4, 3), InvalidPair);
  CHECK_THROWS_AS(ValuationSpec::weighted_sub(3, 2, 1), InvalidPair);
  CHECK_THROWS_AS(ValuationSpec::weighted_sub(2, 3, 8), InvalidPair);
  CHECK_THROWS_AS(ValuationSpec::weighted_sub(2, 3, 0), InvalidPair);
  CHECK_THROWS_AS(ValuationSpec::gauss_ext(ValuationSpec::x_adic(1), 1), PreconditionViolated);
  CHECK_NOTHROW(ValuationSpec::gauss_ext(ValuationSpec::x_adic(0), 1));
}

TEST_CASE("worked values") {
  CHECK(value(ValuationSpec::x_adic(0), RationalFunction(pow(X(), 2) * Y(), X() + Y())) ==
        ValueResult::scalar(2));
  CHECK(value(ValuationSpec::order(), RationalFunction(X() * Y(), X() + Y())) ==
        ValueResult::scalar(1));

  const ValuationSpec w237 = ValuationSpec::weighted_sub(2, 3, 7);
  CHECK(value(w237, RationalFunction::from_polynomial(pow(X(), 3) - pow(Y(), 2))) ==
        ValueResult::scalar(12));
  CHECK(value(w237, theta(2, 3)) == ValueResult::scalar(0));

  const ValuationSpec gauss = ValuationSpec::gauss_ext(ValuationSpec::x_adic(0), 1);
  CHECK(value(gauss, RationalFunction::from_polynomial(pow(X(), 2) + pow(X(), 3) * Y())) ==
        ValueResult::scalar(2));

  const ValuationSpec lex = ValuationSpec::lex_composite(ValuationSpec::x_adic(0), 1);
  CHECK(value(lex, RationalFunction::from_polynomial(X() + Y())) ==
        ValueResult::finite({0, -1}));

  // v(X) = p and v(Y) = q under the weighted substitution.
  CHECK(value(w237, RationalFunction::from_polynomial(X())) == ValueResult::scalar(2));
  CHECK(value(w237, RationalFunction::from_polynomial(Y())) == ValueResult::scalar(3));
}

TEST_CASE("zero maps to the infinite marker") {
  for (const auto& spec :
       {ValuationSpec::order(), ValuationSpec::weighted_sub(1, 2, 3),
        ValuationSpec::lex_composite(ValuationSpec::x_adic(0), 1)}) {
    const ValueResult v = value(spec, RationalFunction(2));
    CHECK(v.is_infinite());
    CHECK(v.dimension() == spec.dimension());
    CHECK(ValueResult::scalar(1000) < ValueResult::infinity(1));
  }
}

TEST_CASE("weighted substitution requires two variables") {
  CHECK_THROWS_AS(
      value(ValuationSpec::weighted_sub(2, 3, 7), RationalFunction(Polynomial::variable(3, 0))),
      UnsupportedArity);
}

TEST_CASE("valuation laws on random pairs") {
  std::mt19937_64 rng(47);
  const std::vector<ValuationSpec> specs = {
      ValuationSpec::x_adic(0),
      ValuationSpec::x_adic(1),
      ValuationSpec::order(),
      ValuationSpec::weighted_sub(2, 3, 7),
      ValuationSpec::weighted_sub(1, 2, 2),
      ValuationSpec::gauss_ext(ValuationSpec::x_adic(0), 1),
      ValuationSpec::lex_composite(ValuationSpec::order(), 1),
  };
  for (const auto& spec : specs) {
    for (int i = 0; i < 40; ++i) {
      const RationalFunction r = testing::random_nonzero_rational_function(rng, 2, 3, 6);
      const RationalFunction s = testing::random_nonzero_rational_function(rng, 2, 3, 6);
      CHECK(value(spec, r * s) == value(spec, r) + value(spec, s));
      const ValueResult vr = value(spec, r);
      const ValueResult vs = value(spec, s);
      const ValueResult min = vr < vs ? vr : vs;
      const ValueResult vsum = value(spec, r + s);
      CHECK(vsum >= min);
      if (vr != vs) CHECK(vsum == min);
    }
  }
}

TEST_CASE("nested composites extend the value group") {
  const ValuationSpec nested =
      ValuationSpec::lex_composite(ValuationSpec::lex_composite(ValuationSpec::x_adic(0), 1), 2);
  CHECK(nested.dimension() == 3);
  std::mt19937_64 rng(59);
  for (int i = 0; i < 25; ++i) {
    const RationalFunction r = testing::random_nonzero_rational_function(rng, 3, 3, 5);
    const RationalFunction s = testing::random_nonzero_rational_function(rng, 3, 3, 5);
    CHECK(value(nested, r * s) == value(nested, r) + value(nested, s));
  }
}

TEST_CASE("containments in the sigma image") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 80; ++i) {
    const Polynomial f = testing::random_nonconstant_polynomial(rng, 2, 4, 7);
    const RationalFunction image = sigma_of_reciprocal(f);
    CHECK(value(ValuationSpec::x_adic(0), image) >= ValueResult::scalar(0));
    CHECK(value(ValuationSpec::x_adic(1), image) >= ValueResult::scalar(0));
    CHECK(value(ValuationSpec::order(), image) >= ValueResult::scalar(1));
  }
}

TEST_CASE("theta") {
  CHECK(theta(1, 2) == RationalFunction(pow(X(), 2) * Y(), Y() - pow(X(), 2)));
  CHECK(theta(2, 3) == RationalFunction(pow(X(), 3) * pow(Y(), 2), pow(Y(), 2) - pow(X(), 3)));
  CHECK_THROWS_AS(theta(2, 4), InvalidPair);
  CHECK_THROWS_AS(theta(3, 2), InvalidPair);

  // theta is the sigma image of the defining reciprocal.
  CHECK(theta(2, 3) ==
        sigma(RationalFunction(C(1), pow(X(), 3) - pow(Y(), 2))));
}

TEST_CASE("beta") {
  const auto b23 = beta(2, 3);
  CHECK(b23.c == 1);
  CHECK(b23.d == 1);
  CHECK(b23.beta == RationalFunction(pow(X(), 5) * Y(), pow(X(), 3) - pow(Y(), 2)));

  const auto b34 = beta(3, 4);
  CHECK(b34.c == 1);
  CHECK(b34.d == 1);
  CHECK(b34.beta == RationalFunction(pow(X(), 7) * Y(), pow(X(), 4) - pow(Y(), 3)));

  const auto b25 = beta(2, 5);
  CHECK(b25.c == 2);
  CHECK(b25.d == 1);
  CHECK(b25.beta == RationalFunction(pow(X(), 8) * Y(), pow(X(), 5) - pow(Y(), 2)));

  CHECK_THROWS_AS(beta(1, 2), InvalidPair);
  CHECK_THROWS_AS(beta(2, 4), InvalidPair);
}

TEST_CASE("value result printing") {
  CHECK(to_string(ValueResult::scalar(12)) == "12");
  CHECK(to_string(ValueResult::finite({0, -1})) == "(0, -1)");
  CHECK(to_string(ValueResult::infinity(1)) == "inf");
}
