#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "recipcas/rational_function.hpp"

namespace recipcas {

/// Element of the reciprocal complement written as an explicit finite sum
/// of reciprocals: the multiset of nonzero denominators f_i in sum 1/f_i.
/// Denominators are kept unexpanded so term counts stay inspectable;
/// normalization to a canonical fraction is an explicit operation.
class RecipSum {
 public:
  explicit RecipSum(int vars);
  RecipSum(int vars, std::vector<Polynomial> denominators);

  int vars() const { return vars_; }
  const std::vector<Polynomial>& denominators() const { return denoms_; }
  std::size_t size() const { return denoms_.size(); }
  bool empty() const { return denoms_.empty(); }

  /// Multiset equality of representations; value equality is decided through
  /// recip_normalize.
  bool operator==(const RecipSum& other) const;
  bool operator!=(const RecipSum& other) const { return !(*this == other); }

 private:
  int vars_;
  std::vector<Polynomial> denoms_;  // sorted, never zero
};

/// Canonical rational function equal to sum 1/f_i.
RationalFunction recip_normalize(const RecipSum& alpha);

RecipSum recip_add(const RecipSum& alpha, const RecipSum& beta);
RecipSum recip_mul(const RecipSum& alpha, const RecipSum& beta);
RecipSum recip_neg(const RecipSum& alpha);

/// Star transform data of a nonzero polynomial f: the variable-free core
/// fstar together with the exponent vectors a(f) and t(f), so that
/// sigma(1/f) = X^(a+t) / fstar.
struct StarForm {
  Polynomial fstar;
  std::vector<int> a;
  std::vector<int> t;
};
StarForm star_transform(const Polynomial& f);

/// sigma(1/f) assembled from the star transform.
RationalFunction sigma_of_reciprocal(const Polynomial& f);

/// Unit test for a reciprocal sum: the constant residue is the sum of the
/// reciprocals of the constant denominators, and the value is a unit exactly
/// when that residue is nonzero (the nonconstant part lies in the maximal
/// ideal).
struct UnitStatus {
  bool unit;
  Rational residue;
};
UnitStatus is_unit(const RecipSum& alpha);

inline constexpr std::size_t kDefaultTermBudget = 100000;

/// Explicit reciprocal-sum inverse of a unit.  Works by recursively inverting
/// sub-units with fewer nonconstant terms; intermediate term counts can grow
/// exponentially, so the budget aborts hostile inputs.
RecipSum invert_unit(const RecipSum& alpha, std::size_t term_budget = kDefaultTermBudget);

/// The polynomial F*alpha where F is the product of all denominators, so that
/// 1/F = (1/(F*alpha)) * alpha.  Requires a nonzero value.
Polynomial cofactor_product(const RecipSum& alpha);

/// Removes the denominator at the given index (0-based).
RecipSum reduce_length_step(const RecipSum& alpha, std::size_t index);

/// Keeps exactly the denominators lying in the subring on the first j
/// variables; requires the value to lie in that subfield and checks that the
/// discarded terms sum to zero.
RecipSum restrict_to_subring(const RecipSum& alpha, int j);

/// True when an all-nonconstant reciprocal sum has normalized to a
/// nonconstant polynomial, which the graded obstruction rules out.  Exposed
/// on (sum, normal form) pairs so the check itself is testable against a
/// mocked normalizer.
bool violates_egyptian_obstruction(const RecipSum& alpha, const RationalFunction& normal_form);

/// Minimum number of reciprocal terms representing the value, searching
/// denominators whose primitive integer form has total degree and coefficient
/// height within the bounds (constant rescaling of each denominator is
/// absorbed).  Exhaustive; nullopt when no representation exists in bounds.
std::optional<int> brute_force_length(const RationalFunction& value, int degree_bound,
                                      long long coeff_height_bound, int term_bound);

std::string to_string(const RecipSum& alpha);
std::ostream& operator<<(std::ostream& os, const RecipSum& alpha);

}  // namespace recipcas
