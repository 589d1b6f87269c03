#include "recipcas/certificates.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

namespace recipcas {

namespace {

std::string to_string(bool b) { return b ? "true" : "false"; }

Polynomial var_x() { return Polynomial::variable(2, 0); }
Polynomial var_y() { return Polynomial::variable(2, 1); }

void require_theta_pair(int p, int q) {
  if (!(0 < p && p < q) || std::gcd(p, q) != 1)
    throw InvalidPair("expected coprime integers with 0 < p < q");
}

}  // namespace

void CertificateReport::add_parameter(const std::string& label, const std::string& text) {
  parameters.emplace_back(label, text);
}

void CertificateReport::add_parameter(const std::string& label, long long n) {
  parameters.emplace_back(label, std::to_string(n));
}

void CertificateReport::add_witness(const std::string& label, const std::string& text) {
  witnesses.emplace_back(label, text);
}

void CertificateReport::fail(const std::string& label, const std::string& expected,
                             const std::string& actual) {
  failures.push_back({label, expected, actual});
  passed = false;
}

CertificateReport check_non_ufd() {
  CertificateReport report;
  report.name = "non_ufd";

  const Polynomial x = var_x(), y = var_y();
  const RationalFunction s = sigma(RationalFunction(Polynomial::constant(2, 1), x + y));
  const RationalFunction t = RationalFunction::from_polynomial(x) - s;
  const RationalFunction u = RationalFunction::from_polynomial(y) - s;

  report.expect_equal("s = sigma(1/(X+Y))", RationalFunction(x * y, x + y), s);
  report.expect_equal("t = X - s", RationalFunction(x * x, x + y), t);
  report.expect_equal("u = Y - s", RationalFunction(y * y, x + y), u);
  report.expect_equal("s^2 = t*u", s * s, t * u);

  const ValuationSpec order = ValuationSpec::order();
  report.expect_equal("order value of s", ValueResult::scalar(1), value(order, s));
  report.expect_equal("order value of t", ValueResult::scalar(1), value(order, t));
  report.expect_equal("order value of u", ValueResult::scalar(1), value(order, u));
  return report;
}

CertificateReport check_beta_integrality(int p, int q) {
  if (!(1 < p && p < q) || std::gcd(p, q) != 1)
    throw InvalidPair("expected coprime integers with 1 < p < q");
  CertificateReport report;
  report.name = "beta_integrality";
  report.add_parameter("p", p);
  report.add_parameter("q", q);

  const auto [b, c, d] = beta(p, q);
  report.add_witness("beta", to_string(b));
  report.add_witness("c", std::to_string(c));
  report.add_witness("d", std::to_string(d));
  report.expect_equal("qd - pc = 1", 1LL, static_cast<long long>(q) * d - static_cast<long long>(p) * c);

  // beta^p = theta'^d (theta' + X^q)^(p-d) X with theta' = sigma(1/(Y^p - X^q)),
  // the mirror of theta with denominator X^q - Y^p.
  const Polynomial x = var_x(), y = var_y();
  const RationalFunction theta_mirror(pow(x, q) * pow(y, p), pow(x, q) - pow(y, p));
  const RationalFunction xq = RationalFunction::from_polynomial(pow(x, q));
  const RationalFunction rhs = pow(theta_mirror, d) * pow(theta_mirror + xq, p - d) *
                               RationalFunction::from_polynomial(x);
  report.expect_equal("beta^p = theta'^d (theta' + X^q)^(p-d) X", rhs, pow(b, p));

  const ValuationSpec v = ValuationSpec::weighted_sub(p, q, p * q + 1);
  report.expect_equal("v(beta) = 1", ValueResult::scalar(1), value(v, b));
  return report;
}

CertificateReport check_theta_values(int p, int q, int h) {
  require_theta_pair(p, q);
  if (!(1 <= h && h <= p * q + 1)) throw InvalidPair("expected 1 <= h <= pq + 1");
  CertificateReport report;
  report.name = "theta_values";
  report.add_parameter("p", p);
  report.add_parameter("q", q);
  report.add_parameter("h", h);

  const ValuationSpec v = ValuationSpec::weighted_sub(p, q, h);
  const Polynomial binomial = pow(var_x(), q) - pow(var_y(), p);
  report.expect_equal("v(X^q - Y^p) = h + pq - 1",
                      ValueResult::scalar(h + static_cast<long long>(p) * q - 1),
                      value(v, binomial));
  const RationalFunction th = theta(p, q);
  report.add_witness("theta", to_string(th));
  report.expect_equal("v(theta) = pq + 1 - h",
                      ValueResult::scalar(static_cast<long long>(p) * q + 1 - h), value(v, th));
  return report;
}

CertificateReport check_udiv_equivalence(int p, int q, const Polynomial& g) {
  require_theta_pair(p, q);
  if (g.vars() != 2) throw UnsupportedArity("divisibility certificate works in two variables");
  CertificateReport report;
  report.name = "udiv_equivalence";
  report.add_parameter("p", p);
  report.add_parameter("q", q);
  report.add_parameter("g", to_string(g));

  const Polynomial binomial = pow(var_x(), q) - pow(var_y(), p);
  const bool divides = try_divide(g, binomial).has_value();

  // Root-free surrogate: s - t divides g(s^p, t^q) iff g(s^p, s^q) vanishes.
  const Polynomial s = Polynomial::variable(1, 0);
  const bool vanishes = substitute(g, {pow(s, p), pow(s, q)}).is_zero();

  report.add_witness("X^q - Y^p divides g", to_string(divides));
  report.add_witness("g(s^p, s^q) = 0", to_string(vanishes));
  if (divides != vanishes)
    report.fail("divisibility agrees with substitution", to_string(divides), to_string(vanishes));
  return report;
}

CertificateReport check_prime_separation(const std::vector<std::pair<int, int>>& pairs) {
  CertificateReport report;
  report.name = "prime_separation";
  std::set<std::pair<int, int>> seen;
  std::string shown;
  for (const auto& [p, q] : pairs) {
    require_theta_pair(p, q);
    if (!seen.insert({p, q}).second) throw InvalidPair("pairs must be pairwise distinct");
    if (!shown.empty()) shown += " ";
    shown += "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
  report.add_parameter("pairs", shown);

  for (const auto& [p, q] : pairs) {
    const ValuationSpec v = ValuationSpec::weighted_sub(p, q, p * q + 1);
    for (const auto& [r, s] : pairs) {
      const ValueResult observed = value(v, theta(r, s));
      const long long expected =
          (p == r && q == s) ? 0
                             : std::max(static_cast<long long>(q) * r, static_cast<long long>(p) * s);
      const std::string label = "v_{" + std::to_string(p) + "," + std::to_string(q) +
                                "}(theta_{" + std::to_string(r) + "," + std::to_string(s) + "})";
      report.expect_equal(label, ValueResult::scalar(expected), observed);
    }
  }
  return report;
}

CertificateReport check_finite_conductor_witness(int q) {
  if (q < 2) throw InvalidPair("expected q >= 2");
  CertificateReport report;
  report.name = "finite_conductor_witness";
  report.add_parameter("q", q);

  const Polynomial x = var_x(), y = var_y();
  const RationalFunction th = theta(1, q);
  report.add_witness("theta", to_string(th));
  const RationalFunction lhs = RationalFunction::from_polynomial(y) * th;
  const RationalFunction rhs =
      RationalFunction::from_polynomial(pow(x, q)) * (th + RationalFunction::from_polynomial(y));
  report.expect_equal("Y*theta = X^q*(theta + Y)", lhs, rhs);

  const ValuationSpec v = ValuationSpec::weighted_sub(1, q, q + 1);
  report.expect_equal("v(theta) = 0", ValueResult::scalar(0), value(v, th));
  return report;
}

CertificateReport check_overring_growth(int r, const std::vector<std::pair<int, int>>& pairs) {
  if (r <= 1) throw PreconditionViolated("expected r > 1");
  CertificateReport report;
  report.name = "overring_growth";
  report.add_parameter("r", r);
  std::string shown;
  for (const auto& [p, q] : pairs) {
    if (!(1 < p && p < q) || std::gcd(p, q) != 1)
      throw InvalidPair("expected coprime integers with 1 < p < q");
    if (p >= r) throw PreconditionViolated("expected r > p for every pair");
    if (!shown.empty()) shown += " ";
    shown += "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
  report.add_parameter("pairs", shown);

  const ValuationSpec v = ValuationSpec::weighted_sub(r, r + 1, r * r + r + 1);
  const long long bound = 2LL * r + 1;
  for (const auto& [p, q] : pairs) {
    const ValueResult observed = value(v, beta(p, q).beta);
    const std::string label =
        "v(beta_{" + std::to_string(p) + "," + std::to_string(q) + "}) >= " + std::to_string(bound);
    if (!observed.is_infinite() && observed.scalar_value() >= bound)
      report.add_witness(label, to_string(observed));
    else
      report.fail(label, ">= " + std::to_string(bound), to_string(observed));
  }
  report.expect_equal("v(beta_{r,r+1}) = 1", ValueResult::scalar(1), value(v, beta(r, r + 1).beta));
  return report;
}

CertificateReport check_gdomain_identity(const RationalFunction& sample) {
  if (sample.is_zero()) throw ZeroValue("expected a nonzero sample");
  CertificateReport report;
  report.name = "gdomain_identity";
  report.add_parameter("sample", to_string(sample));

  // Rebuild the numerator monomial-by-monomial inside R[g], g = prod X_i,
  // via X_i = g * (1 / prod_{j != i} X_j), then multiply by 1/den.
  const int n = sample.vars();
  Polynomial g = Polynomial::constant(n, 1);
  for (int i = 0; i < n; ++i) g = g * Polynomial::variable(n, i);

  RationalFunction rebuilt(n);
  for (const auto& [e, c] : sample.num().terms()) {
    int total = 0;
    Polynomial recip_den = Polynomial::constant(n, 1);
    for (int i = 0; i < n; ++i) {
      total += e[i];
      for (int j = 0; j < n; ++j)
        if (j != i) recip_den = recip_den * pow(Polynomial::variable(n, j), e[i]);
    }
    const RecipSum monomial_recip(n, {recip_den});
    rebuilt = rebuilt + RationalFunction::from_polynomial(pow(g, total)) *
                            recip_normalize(monomial_recip) * RationalFunction::constant(n, c);
  }
  rebuilt = rebuilt * recip_normalize(RecipSum(n, {sample.den()}));
  report.add_witness("g", to_string(g));
  report.expect_equal("monomial rebuild through g-multiples", sample, rebuilt);
  return report;
}

CertificateReport check_irreducibility_witness(const RecipSum& alpha) {
  const RationalFunction normal = recip_normalize(alpha);
  if (normal.is_zero()) throw ZeroValue("expected a sum with nonzero value");
  CertificateReport report;
  report.name = "irreducibility_witness";
  report.add_parameter("alpha", to_string(alpha));

  const RationalFunction image = sigma(normal);
  const ValueResult w = value(ValuationSpec::order(), image);
  report.add_witness("sigma image", to_string(image));
  report.add_witness("order value", to_string(w));
  if (w.is_infinite() || w.scalar_value() < 0) {
    report.fail("order value in the overring", ">= 0", to_string(w));
    return report;
  }
  const long long v = w.scalar_value();
  report.add_witness("verdict", v == 0 ? "unit" : (v == 1 ? "irreducible" : "no verdict"));
  return report;
}

namespace {

Polynomial random_nonconstant_polynomial(std::mt19937_64& rng, int vars, int max_degree,
                                         int height) {
  std::uniform_int_distribution<int> term_count(1, 4);
  std::uniform_int_distribution<int> exponent(0, max_degree);
  std::uniform_int_distribution<int> coefficient(-height, height);
  while (true) {
    Polynomial p(vars);
    const int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
      Exponents e(vars, 0);
      int budget = max_degree;
      for (int i = 0; i < vars; ++i) {
        std::uniform_int_distribution<int> part(0, budget);
        e[i] = part(rng);
        budget -= e[i];
      }
      int c = coefficient(rng);
      if (c == 0) c = 1;
      p.add_term(e, Rational(c));
    }
    if (!p.is_zero() && !p.is_constant()) return p;
  }
}

}  // namespace

CertificateReport check_egyptian_obstruction(int trials, std::uint64_t seed) {
  if (trials < 1) throw PreconditionViolated("expected at least one trial");
  CertificateReport report;
  report.name = "egyptian_obstruction";
  report.add_parameter("trials", trials);
  report.seed = seed;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> vars_dist(2, 3);
  std::uniform_int_distribution<int> count_dist(1, 4);
  int checked = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const int vars = vars_dist(rng);
    const int count = count_dist(rng);
    std::vector<Polynomial> denoms;
    denoms.reserve(count);
    for (int i = 0; i < count; ++i)
      denoms.push_back(random_nonconstant_polynomial(rng, vars, 3, 5));
    const RecipSum alpha(vars, std::move(denoms));
    if (violates_egyptian_obstruction(alpha, recip_normalize(alpha))) {
      report.fail("trial " + std::to_string(trial), "value not a nonconstant polynomial",
                  to_string(recip_normalize(alpha)));
      continue;
    }
    ++checked;
  }
  report.add_witness("trials without a nonconstant polynomial value", std::to_string(checked));
  return report;
}

std::vector<CertificateReport> run_all_certificates(std::uint64_t seed) {
  const Polynomial x = var_x(), y = var_y();
  std::vector<CertificateReport> reports;
  reports.push_back(check_beta_integrality(2, 3));
  reports.push_back(check_egyptian_obstruction(500, seed));
  reports.push_back(check_finite_conductor_witness(2));
  reports.push_back(check_gdomain_identity(RationalFunction(x, y)));
  reports.push_back(check_irreducibility_witness(RecipSum(2, {x + y})));
  reports.push_back(check_non_ufd());
  reports.push_back(check_overring_growth(4, {{2, 3}, {3, 5}}));
  reports.push_back(check_prime_separation({{1, 2}, {2, 3}, {3, 4}, {2, 5}, {3, 5}}));
  reports.push_back(check_theta_values(2, 3, 7));
  reports.push_back(check_udiv_equivalence(2, 3, (pow(x, 3) - pow(y, 2)) * (x + y)));
  // Reports merge in deterministic name order.
  std::sort(reports.begin(), reports.end(),
            [](const CertificateReport& a, const CertificateReport& b) { return a.name < b.name; });
  return reports;
}

std::string report_to_text(const CertificateReport& report) {
  std::ostringstream os;
  os << "name:       " << report.name << "\n";
  os << "parameters:";
  if (report.parameters.empty()) os << " (none)";
  for (const auto& [label, text] : report.parameters) os << " " << label << "=" << text;
  os << "\n";
  os << "passed:     " << (report.passed ? "true" : "false") << "\n";
  os << "seed:       " << report.seed << "\n";
  os << "witnesses:";
  if (report.witnesses.empty()) os << "  (none)";
  os << "\n";
  for (const auto& [label, text] : report.witnesses) os << "  " << label << " = " << text << "\n";
  os << "failures:";
  if (report.failures.empty()) os << "   (none)";
  os << "\n";
  for (const auto& f : report.failures)
    os << "  " << f.label << ": expected " << f.expected << ", actual " << f.actual << "\n";
  return os.str();
}

namespace {

nlohmann::json report_json(const CertificateReport& report) {
  nlohmann::json parameters = nlohmann::json::array();
  for (const auto& [label, text] : report.parameters)
    parameters.push_back({{"label", label}, {"value", text}});
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& [label, text] : report.witnesses)
    witnesses.push_back({{"label", label}, {"value", text}});
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"label", f.label}, {"expected", f.expected}, {"actual", f.actual}});
  return nlohmann::json{{"name", report.name},     {"parameters", parameters},
                        {"passed", report.passed}, {"witnesses", witnesses},
                        {"failures", failures},    {"seed", report.seed}};
}

}  // namespace

std::string report_to_json(const CertificateReport& report) { return report_json(report).dump(2); }

std::string reports_to_json(const std::vector<CertificateReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) out.push_back(report_json(r));
  return out.dump(2);
}

}  // namespace recipcas
