#pragma once

#include <iosfwd>
#include <string>

#include "recipcas/polynomial.hpp"

namespace recipcas {

/// Fully reduced fraction of polynomials in canonical form: gcd(num, den) is
/// constant and den has integer coefficients, content 1 and positive leading
/// coefficient under graded lex.  Equal values have identical representations.
class RationalFunction {
 public:
  explicit RationalFunction(int vars = 1);
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction from_polynomial(Polynomial p);
  static RationalFunction constant(int vars, const Rational& value);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  int vars() const { return num_.vars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;

  RationalFunction operator-() const;
  RationalFunction reciprocal() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  bool operator==(const RationalFunction& other) const;
  bool operator!=(const RationalFunction& other) const { return !(*this == other); }

 private:
  Polynomial num_, den_;
};

RationalFunction pow(const RationalFunction& base, int exponent);

/// Image under the involution fixing constants and sending each variable to
/// its reciprocal.
RationalFunction sigma(const RationalFunction& r);
RationalFunction sigma(const Polynomial& f);

std::string to_string(const RationalFunction& r);
std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

}  // namespace recipcas
