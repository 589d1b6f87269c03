#include "recipcas/recip_sum.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <queue>
#include <ostream>
#include <utility>

namespace recipcas {

RecipSum::RecipSum(int vars) : vars_(vars) {
  if (vars < 1) throw Error("variable count must be at least 1");
}

RecipSum::RecipSum(int vars, std::vector<Polynomial> denominators)
    : vars_(vars), denoms_(std::move(denominators)) {
  if (vars < 1) throw Error("variable count must be at least 1");
  for (const auto& d : denoms_) {
    if (d.vars() != vars_) throw VariableMismatch();
    if (d.is_zero()) throw ZeroPolynomial("reciprocal of the zero polynomial");
  }
  std::sort(denoms_.begin(), denoms_.end());
}

bool RecipSum::operator==(const RecipSum& other) const {
  return vars_ == other.vars_ && denoms_ == other.denoms_;
}

namespace {

struct FractionSizeGreater {
  bool operator()(const RationalFunction& a, const RationalFunction& b) const {
    const auto weight = [](const RationalFunction& r) {
      return std::pair<int, std::size_t>(r.den().total_degree(),
                                         r.den().term_count() + r.num().term_count());
    };
    return weight(a) > weight(b);
  }
};

}  // namespace

RationalFunction recip_normalize(const RecipSum& alpha) {
  // Huffman-style pairing: always add the two smallest partial sums.  Sums
  // produced by the unit inversion telescope under this policy (collapsed
  // partial sums stay small and keep merging early) instead of accumulating
  // a huge common denominator.
  if (alpha.empty()) return RationalFunction(alpha.vars());
  const Polynomial one = Polynomial::constant(alpha.vars(), 1);
  std::priority_queue<RationalFunction, std::vector<RationalFunction>, FractionSizeGreater> queue;
  for (const auto& d : alpha.denominators()) queue.push(RationalFunction(one, d));
  while (queue.size() > 1) {
    RationalFunction a = queue.top();
    queue.pop();
    RationalFunction b = queue.top();
    queue.pop();
    queue.push(a + b);
  }
  return queue.top();
}

RecipSum recip_add(const RecipSum& alpha, const RecipSum& beta) {
  if (alpha.vars() != beta.vars()) throw VariableMismatch();
  std::vector<Polynomial> denoms = alpha.denominators();
  denoms.insert(denoms.end(), beta.denominators().begin(), beta.denominators().end());
  return RecipSum(alpha.vars(), std::move(denoms));
}

RecipSum recip_mul(const RecipSum& alpha, const RecipSum& beta) {
  if (alpha.vars() != beta.vars()) throw VariableMismatch();
  std::vector<Polynomial> denoms;
  denoms.reserve(alpha.size() * beta.size());
  for (const auto& a : alpha.denominators())
    for (const auto& b : beta.denominators()) denoms.push_back(a * b);
  return RecipSum(alpha.vars(), std::move(denoms));
}

RecipSum recip_neg(const RecipSum& alpha) {
  std::vector<Polynomial> denoms;
  denoms.reserve(alpha.size());
  for (const auto& d : alpha.denominators()) denoms.push_back(-d);
  return RecipSum(alpha.vars(), std::move(denoms));
}

StarForm star_transform(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("star transform of the zero polynomial");
  const ExponentProfile profile = exponent_profile(f);
  Polynomial fstar(f.vars());
  Exponents e(f.vars());
  for (const auto& [j, c] : f.terms()) {
    // Term of f0 = f / X^t sits at j - t; reflect it at a.
    for (int i = 0; i < f.vars(); ++i) e[i] = profile.a[i] - (j[i] - profile.t[i]);
    fstar.add_term(e, c);
  }
  return {std::move(fstar), profile.a, profile.t};
}

RationalFunction sigma_of_reciprocal(const Polynomial& f) {
  const StarForm star = star_transform(f);
  Exponents e(f.vars());
  for (int i = 0; i < f.vars(); ++i) e[i] = star.a[i] + star.t[i];
  return RationalFunction(Polynomial::monomial(f.vars(), std::move(e), 1), star.fstar);
}

UnitStatus is_unit(const RecipSum& alpha) {
  Rational residue = 0;
  for (const auto& d : alpha.denominators())
    if (d.is_constant()) residue += 1 / d.constant_value();
  return {residue != 0, residue};
}

namespace {

// Unit inversion.  After merging denominators that agree up to a constant,
// the unit is y = u + sum_i 1/x_i with distinct nonconstant x_i.  For any
// index subset A with sub-unit y_A = u + sum_{i in A} 1/x_i and complement M:
//
//   1/y = 1/y_A - sum_{i in M} (1/x_i) (1/y_A) (1/y)
//
// Starting from the pending term 1*(1/1)*(1/y) and repeatedly expanding each
// pending term c*(1/h)*(1/y) with A = the set of x_i dividing h, every
// expansion strictly grows the divisor set of h, and a term whose h is
// divisible by all x_i collapses to the single reciprocal c/(h*y) with
// h*y = u*h + sum_i h/x_i a polynomial.  Pending terms are merged by the
// primitive part of h, and sub-unit inverses are memoized per subset.

struct MergedUnit {
  Rational residue;
  std::vector<Polynomial> xs;         // merged denominators (rational scale folded in)
  std::vector<Polynomial> xs_prim;    // primitive parts, for divisibility tests
};

MergedUnit merge_unit_terms(const RecipSum& alpha) {
  MergedUnit unit;
  unit.residue = 0;
  std::map<Polynomial, Rational> groups;
  for (const auto& d : alpha.denominators()) {
    if (d.is_constant()) {
      unit.residue += 1 / d.constant_value();
      continue;
    }
    const auto pd = primitive_decomposition(d);
    groups[pd.primitive] += 1 / pd.scale;
  }
  for (const auto& [prim, c] : groups) {
    if (c == 0) continue;
    unit.xs.push_back(prim * (1 / c));
    unit.xs_prim.push_back(prim);
  }
  return unit;
}

struct InvertContext {
  const MergedUnit& unit;
  int vars;
  std::size_t budget;
  std::size_t produced = 0;
  std::map<std::uint32_t, std::vector<Polynomial>> memo;

  void charge() {
    if (++produced > budget) throw TermBudgetExceeded(budget);
  }
};

std::uint32_t divisor_mask(const InvertContext& ctx, std::uint32_t universe, const Polynomial& h) {
  std::uint32_t mask = 0;
  for (std::uint32_t rest = universe; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    if (try_divide(h, ctx.unit.xs_prim[i]).has_value()) mask |= std::uint32_t(1) << i;
  }
  return mask;
}

std::vector<Polynomial> merge_reciprocals(const std::vector<Polynomial>& denoms) {
  std::map<Polynomial, Rational> groups;
  for (const auto& d : denoms) {
    const auto pd = primitive_decomposition(d);
    groups[pd.primitive] += 1 / pd.scale;
  }
  std::vector<Polynomial> out;
  for (const auto& [prim, c] : groups)
    if (c != 0) out.push_back(prim * (1 / c));
  return out;
}

const std::vector<Polynomial>& invert_subset(InvertContext& ctx, std::uint32_t mask) {
  if (auto it = ctx.memo.find(mask); it != ctx.memo.end()) return it->second;

  std::vector<Polynomial> out;
  if (mask == 0) {
    out.push_back(Polynomial::constant(ctx.vars, ctx.unit.residue));
  } else {
    const int total = std::popcount(mask);
    std::vector<std::map<Polynomial, Rational>> layers(total + 1);
    layers[total].emplace(Polynomial::constant(ctx.vars, 1), 1);
    for (int missing_count = total; missing_count >= 1; --missing_count) {
      for (const auto& [h, coeff] : layers[missing_count]) {
        if (coeff == 0) continue;
        const std::uint32_t present = divisor_mask(ctx, mask, h);
        const std::uint32_t missing = mask & ~present;
        const auto& beta = invert_subset(ctx, present);
        for (const auto& g : beta) {
          out.push_back((h * g) * (1 / coeff));
          ctx.charge();
        }
        for (std::uint32_t rest = missing; rest != 0; rest &= rest - 1) {
          const int i = std::countr_zero(rest);
          for (const auto& g : beta) {
            const auto pd = primitive_decomposition(h * ctx.unit.xs[i] * g);
            const int child_missing = std::popcount(mask & ~divisor_mask(ctx, mask, pd.primitive));
            auto [it, inserted] = layers[child_missing].emplace(pd.primitive, 0);
            it->second -= coeff / pd.scale;
            ctx.charge();
          }
        }
      }
    }
    for (const auto& [h, coeff] : layers[0]) {
      if (coeff == 0) continue;
      Polynomial hy = h * ctx.unit.residue;
      for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
        const int i = std::countr_zero(rest);
        hy += *try_divide(h, ctx.unit.xs[i]);
      }
      out.push_back(hy * (1 / coeff));
      ctx.charge();
    }
  }

  auto merged = merge_reciprocals(out);
  std::sort(merged.begin(), merged.end());
  return ctx.memo.emplace(mask, std::move(merged)).first->second;
}

}  // namespace

RecipSum invert_unit(const RecipSum& alpha, std::size_t term_budget) {
  if (!is_unit(alpha).unit) throw NotAUnit();
  const MergedUnit unit = merge_unit_terms(alpha);
  if (unit.xs.size() > 20) throw TermBudgetExceeded(term_budget);
  InvertContext ctx{unit, alpha.vars(), term_budget};
  const std::uint32_t full = (std::uint32_t(1) << unit.xs.size()) - 1;
  std::vector<Polynomial> denoms = invert_subset(ctx, full);
  return RecipSum(alpha.vars(), std::move(denoms));
}

Polynomial cofactor_product(const RecipSum& alpha) {
  const RationalFunction value = recip_normalize(alpha);
  if (value.is_zero()) throw ZeroValue("cofactor product of a zero-valued sum");
  const auto& ds = alpha.denominators();
  const std::size_t n = ds.size();
  std::vector<Polynomial> suffix(n + 1, Polynomial::constant(alpha.vars(), 1));
  for (std::size_t i = n; i-- > 0;) suffix[i] = ds[i] * suffix[i + 1];
  Polynomial cofactor(alpha.vars());
  Polynomial prefix = Polynomial::constant(alpha.vars(), 1);
  for (std::size_t i = 0; i < n; ++i) {
    cofactor += prefix * suffix[i + 1];
    prefix = prefix * ds[i];
  }
  // prefix now holds F = prod f_i; the defining identity must close exactly.
  if (value * RationalFunction::from_polynomial(prefix) !=
      RationalFunction::from_polynomial(cofactor))
    throw InternalContradiction("cofactor identity failed");
  return cofactor;
}

RecipSum reduce_length_step(const RecipSum& alpha, std::size_t index) {
  if (index >= alpha.size()) throw std::out_of_range("denominator index out of range");
  std::vector<Polynomial> denoms = alpha.denominators();
  denoms.erase(denoms.begin() + static_cast<std::ptrdiff_t>(index));
  return RecipSum(alpha.vars(), std::move(denoms));
}

namespace {

bool involves_only_first(const Polynomial& f, int j) {
  for (int i = j; i < f.vars(); ++i)
    if (f.degree_in(i) > 0) return false;
  return true;
}

}  // namespace

RecipSum restrict_to_subring(const RecipSum& alpha, int j) {
  if (j < 0 || j > alpha.vars()) throw Error("subring variable count out of range");
  const RationalFunction value = recip_normalize(alpha);
  if (!involves_only_first(value.num(), j) || !involves_only_first(value.den(), j))
    throw PreconditionViolated("value does not lie in the subfield on the first " +
                               std::to_string(j) + " variables");
  std::vector<Polynomial> kept, discarded;
  for (const auto& d : alpha.denominators())
    (involves_only_first(d, j) ? kept : discarded).push_back(d);
  if (!recip_normalize(RecipSum(alpha.vars(), discarded)).is_zero())
    throw InternalContradiction("discarded reciprocal terms do not cancel");
  return RecipSum(alpha.vars(), std::move(kept));
}

bool violates_egyptian_obstruction(const RecipSum& alpha, const RationalFunction& normal_form) {
  for (const auto& d : alpha.denominators())
    if (d.is_constant()) return false;
  return normal_form.is_polynomial() && !normal_form.num().is_constant();
}

std::string to_string(const RecipSum& alpha) {
  if (alpha.empty()) return "0";
  std::string out;
  for (const auto& d : alpha.denominators()) {
    if (!out.empty()) out += " + ";
    out += "recip(" + to_string(d) + ")";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RecipSum& alpha) { return os << to_string(alpha); }

}  // namespace recipcas
