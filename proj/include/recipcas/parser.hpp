#pragma once

#include <string>
#include <variant>

#include "recipcas/recip_sum.hpp"
#include "recipcas/valuation.hpp"

namespace recipcas {

/// Result of evaluating an expression: plain polynomial text yields a
/// Polynomial, recip(...) combinations yield a RecipSum, anything else a
/// RationalFunction.
using ParsedValue = std::variant<Polynomial, RationalFunction, RecipSum>;

/// Parses rational literals, variables X1..Xn (aliases X/Y/Z and x/y/z for
/// n <= 3), the operators + - * / ^ with parentheses, and the function forms
/// sigma(...) and recip(...).
ParsedValue parse_expression(const std::string& text, int vars);

/// Valuation spec grammar: xadic:i | order | wsub:p,q,h | gauss:VAR:SPEC |
/// lex:VAR:SPEC.
ValuationSpec parse_valuation_spec(const std::string& text, int vars);

/// The value as a canonical rational function (reciprocal sums normalize).
RationalFunction value_as_rational(const ParsedValue& v);

/// The value as a polynomial; throws when it is not one.
Polynomial value_as_polynomial(const ParsedValue& v);

std::string to_string(const ParsedValue& v);

}  // namespace recipcas
