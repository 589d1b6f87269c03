#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "recipcas/rational_function.hpp"

namespace recipcas {

/// Description of a valuation on the rational function field:
///   - XAdic(i): order of vanishing along the i-th variable.
///   - Order: order of vanishing at the origin (largest power of the
///     irrelevant ideal containing the element).
///   - WeightedSub(p, q, h): two-variable valuation induced by the rewrite
///     X = s^p, Y = (s - u)^q with weights w(s) = 1, w(u) = h.
///   - GaussExt(inner, var): trivial extension assigning a polynomial in the
///     chosen variable the minimum of its coefficients' inner values.
///   - LexComposite(inner, var): value group extended by a lexicographic
///     integer slot; a polynomial sum f_k var^k maps to (inner(f_k), -k) with
///     k the largest index attaining the minimal inner value.
class ValuationSpec {
 public:
  enum class Kind { XAdic, Order, WeightedSub, GaussExt, LexComposite };

  static ValuationSpec x_adic(int var);
  static ValuationSpec order();
  static ValuationSpec weighted_sub(int p, int q, int h);
  static ValuationSpec gauss_ext(ValuationSpec inner, int var);
  static ValuationSpec lex_composite(ValuationSpec inner, int var);

  Kind kind() const { return kind_; }
  int var() const { return var_; }
  int p() const { return p_; }
  int q() const { return q_; }
  int h() const { return h_; }
  const ValuationSpec& inner() const { return *inner_; }

  /// Number of lexicographic components in the value group.
  int dimension() const;

 private:
  ValuationSpec() = default;
  Kind kind_ = Kind::Order;
  int var_ = 0;
  int p_ = 0, q_ = 0, h_ = 0;
  std::shared_ptr<const ValuationSpec> inner_;
};

/// Valuation value: a lexicographically ordered integer tuple, or the +inf
/// marker reserved for the zero element.
class ValueResult {
 public:
  static ValueResult infinity(int dimension);
  static ValueResult finite(std::vector<long long> components);
  static ValueResult scalar(long long v) { return finite({v}); }

  bool is_infinite() const { return infinite_; }
  int dimension() const { return static_cast<int>(components_.size()); }
  const std::vector<long long>& components() const;
  long long scalar_value() const;

  friend ValueResult operator+(const ValueResult& a, const ValueResult& b);
  friend ValueResult operator-(const ValueResult& a, const ValueResult& b);
  bool operator==(const ValueResult& other) const;
  bool operator!=(const ValueResult& other) const { return !(*this == other); }
  bool operator<(const ValueResult& other) const;
  bool operator<=(const ValueResult& other) const { return *this < other || *this == other; }
  bool operator>(const ValueResult& other) const { return other < *this; }
  bool operator>=(const ValueResult& other) const { return other <= *this; }

 private:
  ValueResult(bool infinite, std::vector<long long> components)
      : infinite_(infinite), components_(std::move(components)) {}
  bool infinite_;
  std::vector<long long> components_;
};

ValueResult value(const ValuationSpec& spec, const Polynomial& f);
ValueResult value(const ValuationSpec& spec, const RationalFunction& r);

/// The element X^q Y^p / (Y^p - X^q) in canonical form.
RationalFunction theta(int p, int q);

/// beta = X^(2q-c) Y^d / (X^q - Y^p) with qd - pc = 1, 0 < c < q, 0 < d < p.
struct BetaElement {
  RationalFunction beta;
  int c;
  int d;
};
BetaElement beta(int p, int q);

std::string to_string(const ValueResult& v);
std::ostream& operator<<(std::ostream& os, const ValueResult& v);

}  // namespace recipcas
