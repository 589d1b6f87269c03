#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "recipcas/errors.hpp"
#include "recipcas/numeric.hpp"

namespace recipcas {

using Exponents = std::vector<int>;

/// Graded lexicographic order with X1 > X2 > ... > Xn, arranged so that a
/// std::map iterates from the leading term downwards.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Stored coefficients are never zero; the zero polynomial has no terms.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  explicit Polynomial(int vars = 1);
  static Polynomial constant(int vars, const Rational& value);
  static Polynomial variable(int vars, int index);
  static Polynomial monomial(int vars, Exponents exponents, const Rational& coeff);

  int vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (0 for the zero polynomial).
  Rational constant_value() const;
  Rational coeff(const Exponents& exponents) const;

  int total_degree() const;     // -1 for the zero polynomial
  int order_at_origin() const;  // smallest total degree of a term; -1 for zero
  int degree_in(int var) const;
  int trailing_degree_in(int var) const;
  Rational leading_coefficient() const;  // under graded lex; 0 for zero

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Rational& c);
  friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }
  /// Arbitrary total order; used to keep containers and outputs canonical.
  bool operator<(const Polynomial& other) const;

  /// Adds c * X^e, dropping the term if the coefficient cancels to zero.
  void add_term(const Exponents& exponents, const Rational& coeff);

 private:
  int vars_;
  TermMap terms_;
};

Polynomial pow(const Polynomial& base, int exponent);

/// Exact division: returns f / g when g divides f, nullopt otherwise.
std::optional<Polynomial> try_divide(const Polynomial& f, const Polynomial& g);

/// Greatest common divisor, normalized to integer coefficients with content 1
/// and positive leading coefficient.  gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

/// Replaces the i-th variable of f by images[i]; the images live in their own
/// variable set and must all agree on its size.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images);

struct ExponentProfile {
  std::vector<int> t;    // order of vanishing along each variable
  std::vector<int> a;    // deg - t
  std::vector<int> deg;  // per-variable degree
};
ExponentProfile exponent_profile(const Polynomial& f);

/// f = scale * primitive, where primitive has integer coefficients, content 1
/// and positive leading coefficient.  The zero polynomial yields (0, 1).
struct PrimitiveDecomposition {
  Polynomial primitive;
  Rational scale;
};
PrimitiveDecomposition primitive_decomposition(const Polynomial& f);
Polynomial normalize_primitive(const Polynomial& f);

std::string to_string(const Polynomial& f);
std::ostream& operator<<(std::ostream& os, const Polynomial& f);

/// Printable variable name (X, Y, Z when vars <= 3, else X1..Xn).
std::string variable_name(int vars, int index);

}  // namespace recipcas
