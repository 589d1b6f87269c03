#include "recipcas/polynomial.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace recipcas {

namespace {

int sum_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

void check_same_vars(const Polynomial& a, const Polynomial& b) {
  if (a.vars() != b.vars()) throw VariableMismatch();
}

}  // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int da = sum_of(a), db = sum_of(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(int vars) : vars_(vars) {
  if (vars < 1) throw Error("variable count must be at least 1");
}

Polynomial Polynomial::constant(int vars, const Rational& value) {
  Polynomial p(vars);
  if (value != 0) p.terms_.emplace(Exponents(vars, 0), value);
  return p;
}

Polynomial Polynomial::variable(int vars, int index) {
  if (index < 0 || index >= vars) throw Error("variable index out of range");
  Exponents e(vars, 0);
  e[index] = 1;
  return monomial(vars, std::move(e), 1);
}

Polynomial Polynomial::monomial(int vars, Exponents exponents, const Rational& coeff) {
  if (static_cast<int>(exponents.size()) != vars)
    throw VariableMismatch("exponent vector length does not match variable count");
  for (int e : exponents)
    if (e < 0) throw Error("negative exponent in monomial");
  Polynomial p(vars);
  if (coeff != 0) p.terms_.emplace(std::move(exponents), coeff);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && sum_of(terms_.begin()->first) == 0;
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw Error("polynomial is not constant");
  return terms_.begin()->second;
}

Rational Polynomial::coeff(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return sum_of(terms_.begin()->first);
}

int Polynomial::order_at_origin() const {
  if (terms_.empty()) return -1;
  int best = sum_of(terms_.begin()->first);
  for (const auto& [e, c] : terms_) best = std::min(best, sum_of(e));
  return best;
}

int Polynomial::degree_in(int var) const {
  if (var < 0 || var >= vars_) throw Error("variable index out of range");
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, e[var]);
  return best;
}

int Polynomial::trailing_degree_in(int var) const {
  if (var < 0 || var >= vars_) throw Error("variable index out of range");
  if (terms_.empty()) return -1;
  int best = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) best = std::min(best, e[var]);
  return best;
}

Rational Polynomial::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

void Polynomial::add_term(const Exponents& exponents, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_vars(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_vars(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_vars(a, b);
  Polynomial out(a.vars());
  Exponents e(a.vars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.vars(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial operator*(const Polynomial& a, const Rational& c) {
  Polynomial out(a.vars());
  if (c == 0) return out;
  for (const auto& [e, coeff] : a.terms_) out.terms_.emplace(e, coeff * c);
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return vars_ == other.vars_ && terms_ == other.terms_;
}

bool Polynomial::operator<(const Polynomial& other) const {
  if (vars_ != other.vars_) return vars_ < other.vars_;
  auto ita = terms_.begin(), itb = other.terms_.begin();
  GrlexGreater leading_first;
  for (; ita != terms_.end() && itb != other.terms_.end(); ++ita, ++itb) {
    if (ita->first != itb->first) return leading_first(itb->first, ita->first);
    if (ita->second != itb->second) return ita->second < itb->second;
  }
  return terms_.size() < other.terms_.size();
}

Polynomial pow(const Polynomial& base, int exponent) {
  if (exponent < 0) throw Error("polynomial power requires a nonnegative exponent");
  Polynomial result = Polynomial::constant(base.vars(), 1);
  Polynomial square = base;
  int e = exponent;
  while (e > 0) {
    if (e & 1) result = result * square;
    e >>= 1;
    if (e > 0) square = square * square;
  }
  return result;
}

std::optional<Polynomial> try_divide(const Polynomial& f, const Polynomial& g) {
  if (f.vars() != g.vars()) throw VariableMismatch();
  if (g.is_zero()) return f.is_zero() ? std::optional<Polynomial>(f) : std::nullopt;
  Polynomial quotient(f.vars());
  Polynomial remainder = f;
  const auto& glead = *g.terms().begin();
  while (!remainder.is_zero()) {
    const auto& rlead = *remainder.terms().begin();
    Exponents e(f.vars());
    for (int i = 0; i < f.vars(); ++i) {
      e[i] = rlead.first[i] - glead.first[i];
      if (e[i] < 0) return std::nullopt;  // leading term survives into the remainder
    }
    Polynomial t = Polynomial::monomial(f.vars(), std::move(e), rlead.second / glead.second);
    quotient += t;
    remainder -= t * g;
  }
  return quotient;
}

PrimitiveDecomposition primitive_decomposition(const Polynomial& f) {
  if (f.is_zero()) return {f, 1};
  Integer den_lcm = 1;
  for (const auto& [e, c] : f.terms()) den_lcm = lcm(den_lcm, denominator(c));
  Integer num_gcd = 0;
  for (const auto& [e, c] : f.terms()) num_gcd = gcd(num_gcd, Integer(numerator(c) * (den_lcm / denominator(c))));
  Rational scale(num_gcd, den_lcm);
  if (f.leading_coefficient() < 0) scale = -scale;
  Polynomial primitive = f * (1 / scale);
  return {std::move(primitive), std::move(scale)};
}

Polynomial normalize_primitive(const Polynomial& f) { return primitive_decomposition(f).primitive; }

namespace {

// Helpers for the recursive primitive-PRS gcd.  Coefficients "with respect to
// a variable" stay in the full ambient ring with that variable zeroed out.

int lowest_active_var(const Polynomial& f, const Polynomial& g) {
  for (int v = 0; v < f.vars(); ++v)
    if (f.degree_in(v) > 0 || g.degree_in(v) > 0) return v;
  return -1;
}

std::map<int, Polynomial> coefficients_in(const Polynomial& f, int var) {
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

Polynomial shift_in(const Polynomial& f, int var, int amount) {
  Polynomial out(f.vars());
  for (const auto& [e, c] : f.terms()) {
    Exponents shifted = e;
    shifted[var] += amount;
    out.add_term(shifted, c);
  }
  return out;
}

Polynomial leading_coefficient_in(const Polynomial& f, int var) {
  const int d = f.degree_in(var);
  Polynomial out(f.vars());
  for (const auto& [e, c] : f.terms()) {
    if (e[var] != d) continue;
    Exponents stripped = e;
    stripped[var] = 0;
    out.add_term(stripped, c);
  }
  return out;
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, int var) {
  const Polynomial lead_b = leading_coefficient_in(b, var);
  const int deg_b = b.degree_in(var);
  Polynomial r = a;
  while (!r.is_zero() && r.degree_in(var) >= deg_b) {
    const int shift = r.degree_in(var) - deg_b;
    const Polynomial lead_r = leading_coefficient_in(r, var);
    r = r * lead_b - shift_in(b * lead_r, var, shift);
    // The remainder is only needed up to a constant; keep the integers small.
    r = normalize_primitive(r);
  }
  return r;
}

Polynomial content_in(const Polynomial& f, int var) {
  Polynomial content(f.vars());
  for (const auto& [k, c] : coefficients_in(f, var)) {
    content = gcd(content, c);
    if (content.is_constant()) break;
  }
  return content;
}

Polynomial primitive_part_in(const Polynomial& f, int var) {
  const Polynomial c = content_in(f, var);
  return normalize_primitive(*try_divide(f, c));
}

// Both inputs nonzero with integer coefficients, content 1, positive lc.
Polynomial gcd_recursive(const Polynomial& f, const Polynomial& g) {
  const int var = lowest_active_var(f, g);
  if (var < 0) return Polynomial::constant(f.vars(), 1);
  if (f.degree_in(var) == 0 || g.degree_in(var) == 0) {
    // One operand is free of the pivot variable, so it divides only the
    // content of the other with respect to that variable.
    const Polynomial& flat = f.degree_in(var) == 0 ? f : g;
    const Polynomial& full = f.degree_in(var) == 0 ? g : f;
    return gcd(flat, content_in(full, var));
  }
  const Polynomial cf = content_in(f, var);
  const Polynomial cg = content_in(g, var);
  const Polynomial c = gcd(cf, cg);
  Polynomial a = normalize_primitive(*try_divide(f, cf));
  Polynomial b = normalize_primitive(*try_divide(g, cg));
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (true) {
    Polynomial r = pseudo_remainder(a, b, var);
    if (r.is_zero()) return normalize_primitive(c * primitive_part_in(b, var));
    if (r.degree_in(var) == 0) return c;
    a = std::move(b);
    b = primitive_part_in(r, var);
  }
}

}  // namespace

namespace {

// Coprimality certificate: restrict both polynomials to a random rational
// line (one fresh parameter t) with coefficients reduced mod a word-sized
// prime.  When the restriction preserves both total degrees, every factor's
// degree is preserved too, so a common factor would survive into the
// univariate images; univariate images with gcd 1 therefore prove the
// inputs coprime.  An inconclusive answer falls back to the full gcd.

constexpr std::uint64_t kLinePrime = (std::uint64_t(1) << 61) - 1;

std::uint64_t line_mul(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kLinePrime);
}

std::uint64_t line_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s >= kLinePrime ? s - kLinePrime : s;
}

std::uint64_t line_mod(const Integer& n) {
  Integer m = n % kLinePrime;
  if (m < 0) m += kLinePrime;
  return m.convert_to<std::uint64_t>();
}

std::uint64_t line_rational_mod(const Rational& r, bool& ok) {
  const std::uint64_t d = line_mod(denominator(r));
  if (d == 0) {
    ok = false;
    return 0;
  }
  // Fermat inverse.
  std::uint64_t inv = 1, base = d, e = kLinePrime - 2;
  while (e > 0) {
    if (e & 1) inv = line_mul(inv, base);
    base = line_mul(base, base);
    e >>= 1;
  }
  return line_mul(line_mod(numerator(r)), inv);
}

// Dense univariate image of f along X_i = a_i t + b_i; empty on failure.
std::vector<std::uint64_t> line_image(const Polynomial& f, const std::vector<std::uint64_t>& a,
                                      const std::vector<std::uint64_t>& b, bool& ok) {
  const int degree = f.total_degree();
  std::vector<std::uint64_t> image(degree + 1, 0);
  std::vector<std::uint64_t> term, next;
  for (const auto& [e, c] : f.terms()) {
    term.assign(1, line_rational_mod(c, ok));
    if (!ok) return {};
    for (int i = 0; i < f.vars(); ++i) {
      for (int k = 0; k < e[i]; ++k) {
        next.assign(term.size() + 1, 0);
        for (std::size_t j = 0; j < term.size(); ++j) {
          next[j] = line_add(next[j], line_mul(term[j], b[i]));
          next[j + 1] = line_add(next[j + 1], line_mul(term[j], a[i]));
        }
        term.swap(next);
      }
    }
    for (std::size_t j = 0; j < term.size(); ++j) image[j] = line_add(image[j], term[j]);
  }
  while (!image.empty() && image.back() == 0) image.pop_back();
  if (static_cast<int>(image.size()) != degree + 1) {
    ok = false;  // degree dropped; the certificate does not apply
    return {};
  }
  return image;
}

bool certainly_coprime(const Polynomial& f, const Polynomial& g) {
  static thread_local std::mt19937_64 rng(0x715b3ac5c0f1d2e3ull);
  std::uniform_int_distribution<std::uint64_t> dist(1, kLinePrime - 2);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<std::uint64_t> a(f.vars()), b(f.vars());
    for (int i = 0; i < f.vars(); ++i) {
      a[i] = dist(rng);
      b[i] = dist(rng);
    }
    bool ok = true;
    std::vector<std::uint64_t> u = line_image(f, a, b, ok);
    if (!ok) continue;
    std::vector<std::uint64_t> v = line_image(g, a, b, ok);
    if (!ok) continue;
    // Euclid over F_p.
    while (!v.empty()) {
      while (!u.empty() && u.back() == 0) u.pop_back();
      if (u.size() < v.size()) u.swap(v);
      if (v.empty()) break;
      // u -= (lead u / lead v) t^(du-dv) v
      std::uint64_t lead = v.back(), inv = 1, base = lead, e = kLinePrime - 2;
      while (e > 0) {
        if (e & 1) inv = line_mul(inv, base);
        base = line_mul(base, base);
        e >>= 1;
      }
      const std::uint64_t factor = line_mul(u.back(), inv);
      const std::size_t shift = u.size() - v.size();
      for (std::size_t j = 0; j < v.size(); ++j) {
        const std::uint64_t sub = line_mul(factor, v[j]);
        u[j + shift] = line_add(u[j + shift], kLinePrime - sub);
      }
      while (!u.empty() && u.back() == 0) u.pop_back();
      u.swap(v);
    }
    return u.size() == 1;  // gcd of the images is a nonzero constant
  }
  return false;
}

}  // namespace

namespace {

// Modular fast path for the bivariate gcd: evaluate Y at random points mod p,
// take univariate gcds, interpolate, lift symmetrically to the integers and
// certify the candidate exactly (trial division plus the coprimality
// certificate on the cofactors).  Any hiccup falls back to the pseudo
// remainder sequence, so results never depend on the modular arithmetic.

using ModPoly = std::vector<std::uint64_t>;  // dense univariate, ascending

std::uint64_t line_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t out = 1;
  while (e > 0) {
    if (e & 1) out = line_mul(out, base);
    base = line_mul(base, base);
    e >>= 1;
  }
  return out;
}

std::uint64_t line_inv(std::uint64_t a) { return line_pow(a, kLinePrime - 2); }

std::uint64_t line_sub(std::uint64_t a, std::uint64_t b) { return line_add(a, kLinePrime - b); }

void mod_trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ModPoly mod_gcd_univariate(ModPoly u, ModPoly v) {
  mod_trim(u);
  mod_trim(v);
  while (!v.empty()) {
    if (u.size() < v.size()) u.swap(v);
    if (v.empty()) break;
    const std::uint64_t factor = line_mul(u.back(), line_inv(v.back()));
    const std::size_t shift = u.size() - v.size();
    for (std::size_t j = 0; j < v.size(); ++j)
      u[j + shift] = line_sub(u[j + shift], line_mul(factor, v[j]));
    mod_trim(u);
    u.swap(v);
  }
  if (!u.empty() && u.back() != 1) {
    const std::uint64_t inv = line_inv(u.back());
    for (auto& c : u) c = line_mul(c, inv);
  }
  return u;
}

std::uint64_t mod_eval(const ModPoly& p, std::uint64_t x) {
  std::uint64_t out = 0;
  for (std::size_t i = p.size(); i-- > 0;) out = line_add(line_mul(out, x), p[i]);
  return out;
}

// f as a dense X-coefficient table of dense Y-polynomials, mod p.
std::vector<ModPoly> mod_table(const Polynomial& f, bool& ok) {
  std::vector<ModPoly> table(f.degree_in(0) + 1);
  for (const auto& [e, c] : f.terms()) {
    auto& col = table[e[0]];
    if (static_cast<int>(col.size()) <= e[1]) col.resize(e[1] + 1, 0);
    col[e[1]] = line_rational_mod(c, ok);
    if (!ok) return {};
  }
  return table;
}

std::optional<Polynomial> gcd_bivariate_modular(const Polynomial& f_in, const Polynomial& g_in) {
  if (f_in.degree_in(0) == 0 || g_in.degree_in(0) == 0) return std::nullopt;

  // Split off the content with respect to the interpolation variable; the
  // evaluated images only see the primitive parts.
  const Polynomial cont_f = content_in(f_in, 0);
  const Polynomial cont_g = content_in(g_in, 0);
  const Polynomial cont = gcd(cont_f, cont_g);
  const Polynomial f = cont_f.is_constant() ? f_in : *try_divide(f_in, cont_f);
  const Polynomial g = cont_g.is_constant() ? g_in : *try_divide(g_in, cont_g);

  bool ok = true;
  const std::vector<ModPoly> fcols = mod_table(f, ok);
  const std::vector<ModPoly> gcols = mod_table(g, ok);
  if (!ok) return std::nullopt;
  const ModPoly& flead = fcols.back();
  const ModPoly& glead = gcols.back();

  // Scale factor for the leading coefficient: the gcd of the leading
  // X-coefficients, needed only modulo p.
  const ModPoly gamma = mod_gcd_univariate(flead, glead);
  const int dy_bound = static_cast<int>(gamma.size()) - 1 +
                       std::min(f.degree_in(1), g.degree_in(1));

  static thread_local std::mt19937_64 rng(0x2545f4914f6cdd1dull);
  std::uniform_int_distribution<std::uint64_t> dist(1, kLinePrime - 2);

  int min_degree = INT_MAX;
  std::vector<std::uint64_t> points;
  std::vector<ModPoly> images;  // scaled gcd image per point, dense in X
  int misses = 0;
  while (static_cast<int>(points.size()) < dy_bound + 1) {
    if (++misses > 16 * (dy_bound + 2)) return std::nullopt;
    const std::uint64_t y = dist(rng);
    if (mod_eval(flead, y) == 0 || mod_eval(glead, y) == 0) continue;
    bool seen = false;
    for (std::uint64_t used : points) seen = seen || used == y;
    if (seen) continue;
    ModPoly fu(fcols.size()), gu(gcols.size());
    for (std::size_t i = 0; i < fcols.size(); ++i) fu[i] = mod_eval(fcols[i], y);
    for (std::size_t i = 0; i < gcols.size(); ++i) gu[i] = mod_eval(gcols[i], y);
    ModPoly h = mod_gcd_univariate(std::move(fu), std::move(gu));
    const int d = static_cast<int>(h.size()) - 1;
    if (d > min_degree) continue;  // unlucky point
    if (d < min_degree) {
      min_degree = d;
      points.clear();
      images.clear();
    }
    // A constant image at a good point pins the primitive gcd to 1.
    if (min_degree == 0) return cont;
    const std::uint64_t scale = mod_eval(gamma, y);
    for (auto& c : h) c = line_mul(c, scale);
    points.push_back(y);
    images.push_back(std::move(h));
  }

  // Newton interpolation of each X-coefficient over the evaluation points.
  const std::size_t npts = points.size();
  std::vector<ModPoly> divided(npts, ModPoly(min_degree + 1, 0));
  for (std::size_t i = 0; i < npts; ++i) {
    ModPoly current = images[i];
    current.resize(min_degree + 1, 0);
    for (std::size_t j = 0; j < i; ++j) {
      // current = (current - divided[j]) / (y_i - y_j)
      const std::uint64_t inv = line_inv(line_sub(points[i], points[j]));
      for (int k = 0; k <= min_degree; ++k)
        current[k] = line_mul(line_sub(current[k], divided[j][k]), inv);
    }
    divided[i] = std::move(current);
  }
  // Accumulate sum_j divided[j] * prod_{l<j} (Y - y_l) as Y-polynomials.
  std::vector<ModPoly> coeffs(min_degree + 1, ModPoly{});  // per X-power, dense in Y
  ModPoly basis{1};
  for (std::size_t j = 0; j < npts; ++j) {
    for (int k = 0; k <= min_degree; ++k) {
      if (divided[j][k] == 0) continue;
      auto& acc = coeffs[k];
      if (acc.size() < basis.size()) acc.resize(basis.size(), 0);
      for (std::size_t l = 0; l < basis.size(); ++l)
        acc[l] = line_add(acc[l], line_mul(divided[j][k], basis[l]));
    }
    // basis *= (Y - y_j)
    basis.insert(basis.begin(), 0);
    for (std::size_t l = 0; l + 1 < basis.size(); ++l)
      basis[l] = line_sub(basis[l], line_mul(basis[l + 1], points[j]));
  }

  // Symmetric lift to the integers.
  Polynomial candidate(f.vars());
  const Integer half = Integer(kLinePrime) / 2;
  for (int i = 0; i <= min_degree; ++i) {
    for (std::size_t j = 0; j < coeffs[i].size(); ++j) {
      if (coeffs[i][j] == 0) continue;
      Integer c(coeffs[i][j]);
      if (c > half) c -= Integer(kLinePrime);
      candidate.add_term({i, static_cast<int>(j)}, Rational(c));
    }
  }
  if (candidate.is_zero()) return std::nullopt;
  candidate = normalize_primitive(candidate);

  const auto fq = try_divide(f, candidate);
  if (!fq.has_value()) return std::nullopt;
  const auto gq = try_divide(g, candidate);
  if (!gq.has_value()) return std::nullopt;
  if (!fq->is_constant() && !gq->is_constant() && !certainly_coprime(*fq, *gq))
    return std::nullopt;
  return normalize_primitive(cont * candidate);
}

}  // namespace

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  if (f.vars() != g.vars()) throw VariableMismatch();
  if (f.is_zero()) return normalize_primitive(g);
  if (g.is_zero()) return normalize_primitive(f);
  const Polynomial fp = normalize_primitive(f);
  const Polynomial gp = normalize_primitive(g);
  if (fp.is_constant() || gp.is_constant()) return Polynomial::constant(f.vars(), 1);
  // Divisibility is common in this workload and the attempt fails fast.
  if (fp.total_degree() >= gp.total_degree() && try_divide(fp, gp).has_value()) return gp;
  if (gp.total_degree() >= fp.total_degree() && try_divide(gp, fp).has_value()) return fp;
  if (certainly_coprime(fp, gp)) return Polynomial::constant(f.vars(), 1);
  if (f.vars() == 2) {
    if (auto fast = gcd_bivariate_modular(fp, gp)) return *fast;
  }
  return gcd_recursive(fp, gp);
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
  if (static_cast<int>(images.size()) != f.vars())
    throw VariableMismatch("expected one image per variable");
  if (images.empty()) throw VariableMismatch("expected one image per variable");
  const int out_vars = images.front().vars();
  for (const auto& img : images)
    if (img.vars() != out_vars) throw VariableMismatch("images live in different variable sets");

  // Cache image powers; exponents stay small at desk scale.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](int i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(out_vars, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };

  Polynomial out(out_vars);
  for (const auto& [e, c] : f.terms()) {
    Polynomial term = Polynomial::constant(out_vars, c);
    for (int i = 0; i < f.vars(); ++i)
      if (e[i] > 0) term = term * power(i, e[i]);
    out += term;
  }
  return out;
}

ExponentProfile exponent_profile(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("exponent profile of the zero polynomial");
  ExponentProfile profile;
  profile.t.resize(f.vars());
  profile.a.resize(f.vars());
  profile.deg.resize(f.vars());
  for (int i = 0; i < f.vars(); ++i) {
    profile.t[i] = f.trailing_degree_in(i);
    profile.deg[i] = f.degree_in(i);
    profile.a[i] = profile.deg[i] - profile.t[i];
  }
  return profile;
}

std::string variable_name(int vars, int index) {
  static const char* kShort[] = {"X", "Y", "Z"};
  if (vars <= 3) return kShort[index];
  return "X" + std::to_string(index + 1);
}

namespace {

std::string monomial_string(int vars, const Exponents& e) {
  std::string out;
  for (int i = 0; i < vars; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += variable_name(vars, i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = negative ? Rational(-c) : c;
    const std::string mono = monomial_string(f.vars(), e);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << to_string(f); }

}  // namespace recipcas
