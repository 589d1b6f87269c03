#include "recipcas/valuation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <utility>

namespace recipcas {

namespace {

void collect_vars(const ValuationSpec& spec, std::set<int>& out) {
  switch (spec.kind()) {
    case ValuationSpec::Kind::XAdic:
      out.insert(spec.var());
      break;
    case ValuationSpec::Kind::Order:
      break;
    case ValuationSpec::Kind::WeightedSub:
      out.insert(0);
      out.insert(1);
      break;
    case ValuationSpec::Kind::GaussExt:
    case ValuationSpec::Kind::LexComposite:
      out.insert(spec.var());
      collect_vars(spec.inner(), out);
      break;
  }
}

}  // namespace

ValuationSpec ValuationSpec::x_adic(int var) {
  if (var < 0) throw Error("variable index out of range");
  ValuationSpec spec;
  spec.kind_ = Kind::XAdic;
  spec.var_ = var;
  return spec;
}

ValuationSpec ValuationSpec::order() {
  ValuationSpec spec;
  spec.kind_ = Kind::Order;
  return spec;
}

ValuationSpec ValuationSpec::weighted_sub(int p, int q, int h) {
  if (!(0 < p && p < q)) throw InvalidPair("weighted substitution requires 0 < p < q");
  if (std::gcd(p, q) != 1) throw InvalidPair("weighted substitution requires gcd(p, q) = 1");
  if (!(1 <= h && h <= p * q + 1))
    throw InvalidPair("weighted substitution requires 1 <= h <= pq + 1");
  ValuationSpec spec;
  spec.kind_ = Kind::WeightedSub;
  spec.p_ = p;
  spec.q_ = q;
  spec.h_ = h;
  return spec;
}

ValuationSpec ValuationSpec::gauss_ext(ValuationSpec inner, int var) {
  if (var < 0) throw Error("variable index out of range");
  std::set<int> used;
  collect_vars(inner, used);
  if (used.count(var))
    throw PreconditionViolated("inner valuation must act on the variables other than the extension variable");
  ValuationSpec spec;
  spec.kind_ = Kind::GaussExt;
  spec.var_ = var;
  spec.inner_ = std::make_shared<ValuationSpec>(std::move(inner));
  return spec;
}

ValuationSpec ValuationSpec::lex_composite(ValuationSpec inner, int var) {
  ValuationSpec spec = gauss_ext(std::move(inner), var);
  spec.kind_ = Kind::LexComposite;
  return spec;
}

int ValuationSpec::dimension() const {
  switch (kind_) {
    case Kind::XAdic:
    case Kind::Order:
    case Kind::WeightedSub:
      return 1;
    case Kind::GaussExt:
      return inner_->dimension();
    case Kind::LexComposite:
      return inner_->dimension() + 1;
  }
  return 1;
}

ValueResult ValueResult::infinity(int dimension) {
  return ValueResult(true, std::vector<long long>(dimension, 0));
}

ValueResult ValueResult::finite(std::vector<long long> components) {
  return ValueResult(false, std::move(components));
}

const std::vector<long long>& ValueResult::components() const {
  if (infinite_) throw Error("infinite valuation value has no components");
  return components_;
}

long long ValueResult::scalar_value() const {
  if (infinite_) throw Error("infinite valuation value has no components");
  if (components_.size() != 1) throw Error("valuation value is not a single integer");
  return components_[0];
}

ValueResult operator+(const ValueResult& a, const ValueResult& b) {
  if (a.dimension() != b.dimension()) throw Error("valuation values from different groups");
  if (a.infinite_ || b.infinite_) return ValueResult::infinity(a.dimension());
  std::vector<long long> out(a.components_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.components_[i];
  return ValueResult::finite(std::move(out));
}

ValueResult operator-(const ValueResult& a, const ValueResult& b) {
  if (a.dimension() != b.dimension()) throw Error("valuation values from different groups");
  if (b.infinite_) throw Error("cannot subtract an infinite valuation value");
  if (a.infinite_) return ValueResult::infinity(a.dimension());
  std::vector<long long> out(a.components_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.components_[i];
  return ValueResult::finite(std::move(out));
}

bool ValueResult::operator==(const ValueResult& other) const {
  if (infinite_ != other.infinite_) return false;
  if (infinite_) return dimension() == other.dimension();
  return components_ == other.components_;
}

bool ValueResult::operator<(const ValueResult& other) const {
  if (infinite_) return false;
  if (other.infinite_) return true;
  return std::lexicographical_compare(components_.begin(), components_.end(),
                                      other.components_.begin(), other.components_.end());
}

namespace {

std::map<int, Polynomial> coefficients_in_var(const Polynomial& f, int var) {
  std::map<int, Polynomial> out;
  for (const auto& [e, c] : f.terms()) {
    Exponents stripped = e;
    const int k = stripped[var];
    stripped[var] = 0;
    auto [it, inserted] = out.try_emplace(k, Polynomial(f.vars()));
    it->second.add_term(stripped, c);
  }
  return out;
}

long long weighted_sub_value(const ValuationSpec& spec, const Polynomial& f) {
  if (f.vars() != 2)
    throw UnsupportedArity("weighted substitution valuations are defined for two variables");
  // X -> s^p, Y -> (s - u)^q over fresh variables (s, u).
  const Polynomial s = Polynomial::variable(2, 0);
  const Polynomial u = Polynomial::variable(2, 1);
  const std::vector<Polynomial> images = {pow(s, spec.p()), pow(s - u, spec.q())};
  const Polynomial rewritten = substitute(f, images);
  long long best = 0;
  bool first = true;
  for (const auto& [e, c] : rewritten.terms()) {
    const long long w = e[0] + static_cast<long long>(spec.h()) * e[1];
    if (first || w < best) best = w;
    first = false;
  }
  return best;
}

}  // namespace

ValueResult value(const ValuationSpec& spec, const Polynomial& f) {
  if (f.is_zero()) return ValueResult::infinity(spec.dimension());
  switch (spec.kind()) {
    case ValuationSpec::Kind::XAdic:
      if (spec.var() >= f.vars()) throw Error("variable index out of range");
      return ValueResult::scalar(f.trailing_degree_in(spec.var()));
    case ValuationSpec::Kind::Order:
      return ValueResult::scalar(f.order_at_origin());
    case ValuationSpec::Kind::WeightedSub:
      return ValueResult::scalar(weighted_sub_value(spec, f));
    case ValuationSpec::Kind::GaussExt: {
      if (spec.var() >= f.vars()) throw Error("variable index out of range");
      ValueResult best = ValueResult::infinity(spec.dimension());
      for (const auto& [k, coeff] : coefficients_in_var(f, spec.var())) {
        const ValueResult v = value(spec.inner(), coeff);
        if (v < best) best = v;
      }
      return best;
    }
    case ValuationSpec::Kind::LexComposite: {
      if (spec.var() >= f.vars()) throw Error("variable index out of range");
      // Largest variable power attaining the minimal inner value.
      ValueResult best = ValueResult::infinity(spec.inner().dimension());
      int best_k = 0;
      for (const auto& [k, coeff] : coefficients_in_var(f, spec.var())) {
        const ValueResult v = value(spec.inner(), coeff);
        if (v <= best) {
          best = v;
          best_k = k;
        }
      }
      std::vector<long long> out = best.components();
      out.push_back(-static_cast<long long>(best_k));
      return ValueResult::finite(std::move(out));
    }
  }
  throw Error("unhandled valuation kind");
}

ValueResult value(const ValuationSpec& spec, const RationalFunction& r) {
  if (r.is_zero()) return ValueResult::infinity(spec.dimension());
  return value(spec, r.num()) - value(spec, r.den());
}

RationalFunction theta(int p, int q) {
  if (!(0 < p && p < q)) throw InvalidPair("theta requires 0 < p < q");
  if (std::gcd(p, q) != 1) throw InvalidPair("theta requires gcd(p, q) = 1");
  const Polynomial x = Polynomial::variable(2, 0);
  const Polynomial y = Polynomial::variable(2, 1);
  return RationalFunction(pow(x, q) * pow(y, p), pow(y, p) - pow(x, q));
}

BetaElement beta(int p, int q) {
  if (!(1 < p && p < q)) throw InvalidPair("beta requires 1 < p < q");
  if (std::gcd(p, q) != 1) throw InvalidPair("beta requires gcd(p, q) = 1");
  // Unique d with qd = 1 (mod p), 0 < d < p; then c = (qd - 1) / p < q.
  int d = 0;
  for (int candidate = 1; candidate < p; ++candidate)
    if ((q * candidate) % p == 1) {
      d = candidate;
      break;
    }
  const int c = (q * d - 1) / p;
  const Polynomial x = Polynomial::variable(2, 0);
  const Polynomial y = Polynomial::variable(2, 1);
  RationalFunction b(pow(x, 2 * q - c) * pow(y, d), pow(x, q) - pow(y, p));
  return {std::move(b), c, d};
}

std::string to_string(const ValueResult& v) {
  if (v.is_infinite()) return "inf";
  const auto& c = v.components();
  if (c.size() == 1) return std::to_string(c[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(c[i]);
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const ValueResult& v) { return os << to_string(v); }

}  // namespace recipcas
