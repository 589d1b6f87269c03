#include <doctest.h>

#include <random>

#include "recipcas/parser.hpp"
#include "support/random_values.hpp"

using namespace recipcas;

namespace {

Polynomial X() { return Polynomial::variable(2, 0); }
Polynomial Y() { return Polynomial::variable(2, 1); }
Polynomial C(long long n) { return Polynomial::constant(2, Rational(n)); }

}  // namespace

TEST_CASE("recip sums parse structurally") {
  const ParsedValue v = parse_expression("recip(X+Y) + recip(X)", 2);
  REQUIRE(std::holds_alternative<RecipSum>(v));
  CHECK(std::get<RecipSum>(v) == RecipSum(2, {X() + Y(), X()}));

  const ParsedValue product = parse_expression("recip(X)*recip(Y)", 2);
  CHECK(std::get<RecipSum>(product) == RecipSum(2, {X() * Y()}));

  const ParsedValue negated = parse_expression("-recip(X+1)", 2);
  CHECK(std::get<RecipSum>(negated) == RecipSum(2, {-X() - C(1)}));
}

TEST_CASE("polynomial text yields polynomials") {
  const ParsedValue v = parse_expression("X^2*Y - 3/4", 2);
  REQUIRE(std::holds_alternative<Polynomial>(v));
  CHECK(std::get<Polynomial>(v) == pow(X(), 2) * Y() - C(3) * Rational(1, 4));

  // Cancellation downgrades to a polynomial as well.
  const ParsedValue cancelled = parse_expression("(X^2-Y^2)/(X-Y)", 2);
  REQUIRE(std::holds_alternative<Polynomial>(cancelled));
  CHECK(std::get<Polynomial>(cancelled) == X() + Y());
}

TEST_CASE("rational functions survive") {
  const ParsedValue v = parse_expression("1/X + 1/Y", 2);
  REQUIRE(std::holds_alternative<RationalFunction>(v));
  CHECK(std::get<RationalFunction>(v) == RationalFunction(X() + Y(), X() * Y()));
}

TEST_CASE("sigma forms") {
  const ParsedValue v = parse_expression("sigma(1/(X+Y))", 2);
  REQUIRE(std::holds_alternative<RationalFunction>(v));
  CHECK(std::get<RationalFunction>(v) == RationalFunction(X() * Y(), X() + Y()));
  CHECK(std::get<Polynomial>(parse_expression("sigma(5)", 2)) == C(5));
}

TEST_CASE("errors carry positions and kinds") {
  CHECK_THROWS_AS(parse_expression("1/(X - X)", 2), ZeroDenominator);
  CHECK_THROWS_AS(parse_expression("recip(X - X)", 2), ParseError);
  CHECK_THROWS_AS(parse_expression("X +", 2), ParseError);
  CHECK_THROWS_AS(parse_expression("", 2), ParseError);
  CHECK_THROWS_AS(parse_expression("X ^ Y", 2), ParseError);
  CHECK_THROWS_AS(parse_expression("X^-1", 2), ParseError);
  CHECK_THROWS_AS(parse_expression("Z", 2), UnknownVariable);
  CHECK_THROWS_AS(parse_expression("Q + 1", 2), UnknownVariable);
  CHECK_THROWS_AS(parse_expression("X5", 4), UnknownVariable);
  CHECK_THROWS_AS(parse_expression("recip(X) + X", 2), ParseError);
  CHECK_THROWS_AS(parse_expression("recip(X)/recip(Y)", 2), ParseError);

  try {
    parse_expression("X + #", 2);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("variable aliases") {
  CHECK(std::get<Polynomial>(parse_expression("x*y", 2)) == X() * Y());
  CHECK(std::get<Polynomial>(parse_expression("X1 + X2", 2)) == X() + Y());
  const Polynomial z3 = Polynomial::variable(3, 2);
  CHECK(std::get<Polynomial>(parse_expression("z", 3)) == z3);
  // Aliases are reserved for three or fewer variables.
  CHECK_THROWS_AS(parse_expression("x", 4), UnknownVariable);
  CHECK(std::get<Polynomial>(parse_expression("X4", 4)) == Polynomial::variable(4, 3));
}

TEST_CASE("valuation spec grammar") {
  CHECK(parse_valuation_spec("order", 2).kind() == ValuationSpec::Kind::Order);
  const ValuationSpec xadic = parse_valuation_spec("xadic:2", 2);
  CHECK(xadic.kind() == ValuationSpec::Kind::XAdic);
  CHECK(xadic.var() == 1);
  const ValuationSpec wsub = parse_valuation_spec("wsub:2,3,7", 2);
  CHECK(wsub.p() == 2);
  CHECK(wsub.q() == 3);
  CHECK(wsub.h() == 7);
  const ValuationSpec gauss = parse_valuation_spec("gauss:Y:xadic:1", 2);
  CHECK(gauss.kind() == ValuationSpec::Kind::GaussExt);
  CHECK(gauss.var() == 1);
  CHECK(gauss.inner().kind() == ValuationSpec::Kind::XAdic);
  const ValuationSpec lex = parse_valuation_spec("lex:Y:order", 2);
  CHECK(lex.kind() == ValuationSpec::Kind::LexComposite);

  CHECK_THROWS_AS(parse_valuation_spec("wsub:2,3,7", 3), ParseError);
  CHECK_THROWS_AS(parse_valuation_spec("xadic:3", 2), ParseError);
  CHECK_THROWS_AS(parse_valuation_spec("nonsense", 2), ParseError);
  CHECK_THROWS_AS(parse_valuation_spec("wsub:2,3", 2), ParseError);
  CHECK_THROWS_AS(parse_valuation_spec("order extra", 2), ParseError);
}

TEST_CASE("parse of printed values round-trips") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 120; ++i) {
    const int vars = 2 + (i % 2);
    switch (i % 3) {
      case 0: {
        const Polynomial p = testing::random_polynomial(rng, vars, 4, 9, false);
        const ParsedValue v = parse_expression(to_string(p), vars);
        CHECK(std::get<Polynomial>(v) == p);
        break;
      }
      case 1: {
        const RationalFunction r = testing::random_rational_function(rng, vars, 3, 9);
        const ParsedValue v = parse_expression(to_string(r), vars);
        if (r.is_polynomial())
          CHECK(std::get<Polynomial>(v) == r.num());
        else
          CHECK(std::get<RationalFunction>(v) == r);
        break;
      }
      default: {
        std::vector<Polynomial> denoms;
        for (int k = 0; k <= i % 3; ++k)
          denoms.push_back(testing::random_polynomial(rng, vars, 3, 5));
        const RecipSum alpha(vars, denoms);
        const ParsedValue v = parse_expression(to_string(alpha), vars);
        CHECK(std::get<RecipSum>(v) == alpha);
        break;
      }
    }
  }
}
