#include "recipcas/rational_function.hpp"

#include <ostream>
#include <utility>

namespace recipcas {

namespace {

// Exact division that must succeed by the reduction invariants; a failure
// means a gcd returned a non-divisor.
Polynomial exact_div(const Polynomial& f, const Polynomial& g) {
  auto q = try_divide(f, g);
  if (!q) throw InternalContradiction("reduction divisor does not divide: gcd(" +
                                      to_string(f) + ", ...) gave " + to_string(g));
  return *q;
}

}  // namespace

RationalFunction::RationalFunction(int vars)
    : num_(vars), den_(Polynomial::constant(vars, 1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.vars() != den_.vars()) throw VariableMismatch();
  if (den_.is_zero()) throw ZeroDenominator();
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.vars(), 1);
    return;
  }
  const Polynomial g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *try_divide(num_, g);
    den_ = *try_divide(den_, g);
  }
  auto decomposition = primitive_decomposition(den_);
  den_ = std::move(decomposition.primitive);
  num_ = num_ * (1 / decomposition.scale);
}

RationalFunction RationalFunction::from_polynomial(Polynomial p) {
  RationalFunction r(p.vars());
  r.num_ = std::move(p);
  return r;
}

RationalFunction RationalFunction::constant(int vars, const Rational& value) {
  return from_polynomial(Polynomial::constant(vars, value));
}

Rational RationalFunction::constant_value() const {
  return num_.constant_value() / den_.constant_value();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out(vars());
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

RationalFunction RationalFunction::reciprocal() const {
  if (is_zero()) throw ZeroDenominator("reciprocal of zero");
  // Already coprime; only the canonical denominator scaling is needed.
  auto decomposition = primitive_decomposition(num_);
  RationalFunction out(vars());
  out.num_ = den_ * (1 / decomposition.scale);
  out.den_ = std::move(decomposition.primitive);
  return out;
}

// Fraction arithmetic on reduced inputs keeps the gcd work on the shared
// denominator part: with g = gcd(b, d), a/b + c/d has denominator b(d/g)
// and its numerator is coprime to b/g and d/g, so only gcd(num, g) can
// cancel.  Products cancel across num/den pairs the same way.  Quotients of
// primitive polynomials stay primitive, so the canonical scaling survives
// these paths without renormalization.

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.vars() != b.vars()) throw VariableMismatch();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RationalFunction out(a.vars());
  const Polynomial g = gcd(a.den_, b.den_);
  if (g.is_constant()) {
    out.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    if (out.num_.is_zero()) return RationalFunction(a.vars());
    out.den_ = a.den_ * b.den_;
    return out;
  }
  const Polynomial a_red = exact_div(a.den_, g);
  const Polynomial b_red = exact_div(b.den_, g);
  Polynomial num = a.num_ * b_red + b.num_ * a_red;
  if (num.is_zero()) return RationalFunction(a.vars());
  Polynomial den = a.den_ * b_red;
  const Polynomial h = gcd(num, g);
  if (!h.is_constant()) {
    num = exact_div(num, h);
    den = exact_div(den, h);
  }
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  return out;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.vars() != b.vars()) throw VariableMismatch();
  if (a.is_zero() || b.is_zero()) return RationalFunction(a.vars());
  const Polynomial g1 = gcd(a.num_, b.den_);
  const Polynomial g2 = gcd(b.num_, a.den_);
  RationalFunction out(a.vars());
  const Polynomial an = g1.is_constant() ? a.num_ : exact_div(a.num_, g1);
  const Polynomial bn = g2.is_constant() ? b.num_ : exact_div(b.num_, g2);
  const Polynomial ad = g2.is_constant() ? a.den_ : exact_div(a.den_, g2);
  const Polynomial bd = g1.is_constant() ? b.den_ : exact_div(b.den_, g1);
  out.num_ = an * bn;
  out.den_ = ad * bd;
  return out;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw ZeroDenominator();
  return a * b.reciprocal();
}

bool RationalFunction::operator==(const RationalFunction& other) const {
  return num_ == other.num_ && den_ == other.den_;
}

RationalFunction pow(const RationalFunction& base, int exponent) {
  if (exponent < 0) return pow(base.reciprocal(), -exponent);
  RationalFunction result = RationalFunction::constant(base.vars(), 1);
  RationalFunction square = base;
  int e = exponent;
  while (e > 0) {
    if (e & 1) result = result * square;
    e >>= 1;
    if (e > 0) square = square * square;
  }
  return result;
}

RationalFunction sigma(const Polynomial& f) {
  if (f.is_zero()) return RationalFunction(f.vars());
  Exponents deg(f.vars());
  for (int i = 0; i < f.vars(); ++i) deg[i] = f.degree_in(i);
  Polynomial reversed(f.vars());
  Exponents e(f.vars());
  for (const auto& [j, c] : f.terms()) {
    for (int i = 0; i < f.vars(); ++i) e[i] = deg[i] - j[i];
    reversed.add_term(e, c);
  }
  return RationalFunction(std::move(reversed), Polynomial::monomial(f.vars(), deg, 1));
}

RationalFunction sigma(const RationalFunction& r) {
  if (r.is_zero()) return r;
  return sigma(r.num()) / sigma(r.den());
}

std::string to_string(const RationalFunction& r) {
  // A constant canonical denominator is always exactly 1.
  if (r.is_polynomial()) return to_string(r.num());
  return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) {
  return os << to_string(r);
}

}  // namespace recipcas
