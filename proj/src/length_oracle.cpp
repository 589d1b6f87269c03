#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "recipcas/recip_sum.hpp"

namespace recipcas {

namespace {

// The exhaustive search enumerates candidate denominators (primitive integer
// polynomials within the degree/height bounds) and, for each candidate set,
// decides whether the target is a rational-linear combination of their
// reciprocals; the coefficients absorb constant rescalings of denominators.
// A modular fingerprint (evaluations at random points mod p) filters sets
// before the exact linear solve.  An exact representation forces the
// fingerprint rank condition, so the filter never rejects a true
// representation; spurious hits are discarded by the exact solve.

constexpr std::uint64_t kPrime = (std::uint64_t(1) << 61) - 1;

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b) { return mod_add(a, kPrime - b); }

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  while (exp > 0) {
    if (exp & 1) out = mod_mul(out, base);
    base = mod_mul(base, base);
    exp >>= 1;
  }
  return out;
}

std::uint64_t mod_inv(std::uint64_t a) { return mod_pow(a, kPrime - 2); }

std::uint64_t integer_mod(const Integer& n) {
  Integer m = n % kPrime;
  if (m < 0) m += kPrime;
  return m.convert_to<std::uint64_t>();
}

std::uint64_t rational_mod(const Rational& r) {
  return mod_mul(integer_mod(numerator(r)), mod_inv(integer_mod(denominator(r))));
}

using Point = std::vector<std::uint64_t>;

std::uint64_t eval_mod(const Polynomial& f, const Point& point) {
  std::vector<std::vector<std::uint64_t>> powers(f.vars());
  for (int i = 0; i < f.vars(); ++i) {
    const int d = std::max(0, f.degree_in(i));
    powers[i].resize(d + 1);
    powers[i][0] = 1;
    for (int e = 1; e <= d; ++e) powers[i][e] = mod_mul(powers[i][e - 1], point[i]);
  }
  std::uint64_t out = 0;
  for (const auto& [e, c] : f.terms()) {
    std::uint64_t term = rational_mod(c);
    for (int i = 0; i < f.vars(); ++i)
      if (e[i] > 0) term = mod_mul(term, powers[i][e[i]]);
    out = mod_add(out, term);
  }
  return out;
}

void monomials_up_to(int vars, int degree, int var, Exponents& current,
                     std::vector<Exponents>& out) {
  if (var == vars) {
    out.push_back(current);
    return;
  }
  for (int e = 0; e <= degree; ++e) {
    current[var] = e;
    monomials_up_to(vars, degree - e, var + 1, current, out);
  }
  current[var] = 0;
}

std::vector<Polynomial> enumerate_candidates(int vars, int degree_bound, long long height) {
  std::vector<Exponents> monomials;
  Exponents scratch(vars, 0);
  monomials_up_to(vars, degree_bound, 0, scratch, monomials);
  std::sort(monomials.begin(), monomials.end(), GrlexGreater{});
  const std::size_t m = monomials.size();

  double estimate = 0;
  for (std::size_t lead = 0; lead < m; ++lead)
    estimate += static_cast<double>(height) *
                std::pow(2.0 * static_cast<double>(height) + 1.0,
                         static_cast<double>(m - lead - 1));
  if (estimate > 4e6) throw Error("length search bounds produce too many candidate denominators");

  std::vector<Polynomial> out;
  for (std::size_t lead = 0; lead < m && height > 0; ++lead) {
    // Positive coefficient on the graded-lex leading monomial, free tail.
    std::vector<long long> tail(m - lead - 1, -height);
    for (long long lead_value = 1; lead_value <= height; ++lead_value) {
      std::fill(tail.begin(), tail.end(), -height);
      while (true) {
        long long content = lead_value;
        for (long long c : tail) content = std::gcd(content, std::abs(c));
        if (content == 1) {
          Polynomial p(vars);
          p.add_term(monomials[lead], Rational(lead_value));
          for (std::size_t i = 0; i < tail.size(); ++i)
            if (tail[i] != 0) p.add_term(monomials[lead + 1 + i], Rational(tail[i]));
          out.push_back(std::move(p));
        }
        std::size_t pos = tail.size();
        while (pos > 0 && tail[pos - 1] == height) tail[--pos] = -height;
        if (pos == 0) break;
        ++tail[pos - 1];
      }
    }
  }
  return out;
}

std::uint64_t det_mod(std::vector<std::vector<std::uint64_t>> mat) {
  const std::size_t n = mat.size();
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && mat[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(mat[pivot], mat[c]);
      det = mod_sub(0, det);
    }
    det = mod_mul(det, mat[c][c]);
    const std::uint64_t inv = mod_inv(mat[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (mat[r][c] == 0) continue;
      const std::uint64_t factor = mod_mul(mat[r][c], inv);
      for (std::size_t cc = c; cc < n; ++cc)
        mat[r][cc] = mod_sub(mat[r][cc], mod_mul(factor, mat[c][cc]));
    }
  }
  return det;
}

// mu[k] = (-1)^k det of the column matrix with row k removed, so that
// dot(mu, x) equals det([columns | x]).
std::vector<std::uint64_t> cofactor_vector(
    const std::vector<const std::vector<std::uint64_t>*>& columns, int rows) {
  const int cols = static_cast<int>(columns.size());
  std::vector<std::uint64_t> mu(rows);
  for (int skip = 0; skip < rows; ++skip) {
    std::vector<std::vector<std::uint64_t>> minor;
    minor.reserve(rows - 1);
    for (int r = 0; r < rows; ++r) {
      if (r == skip) continue;
      std::vector<std::uint64_t> row(cols);
      for (int c = 0; c < cols; ++c) row[c] = (*columns[c])[r];
      minor.push_back(std::move(row));
    }
    const std::uint64_t det = det_mod(std::move(minor));
    mu[skip] = (skip % 2 == 0) ? det : mod_sub(0, det);
  }
  return mu;
}

bool all_zero(const std::vector<std::uint64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
}

std::uint64_t dot_prefix(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                         int n) {
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i) out = mod_add(out, mod_mul(a[i], b[i]));
  return out;
}

bool exactly_representable(const RationalFunction& target,
                           const std::vector<Polynomial>& candidates,
                           const std::vector<std::size_t>& indices) {
  const int vars = target.vars();
  Polynomial product = Polynomial::constant(vars, 1);
  for (std::size_t i : indices) product = product * candidates[i];
  if (!try_divide(product, target.den()).has_value()) return false;

  // Solve q * sum_i c_i G_i = p * F coefficient-wise, with G_i = F / f_i.
  const std::size_t t = indices.size();
  std::vector<Polynomial> columns;
  columns.reserve(t);
  for (std::size_t i : indices)
    columns.push_back(target.den() * *try_divide(product, candidates[i]));
  const Polynomial rhs = target.num() * product;

  std::map<Exponents, std::size_t, GrlexGreater> row_of;
  for (const auto& col : columns)
    for (const auto& [e, c] : col.terms()) row_of.try_emplace(e, 0);
  for (const auto& [e, c] : rhs.terms()) row_of.try_emplace(e, 0);
  std::size_t next = 0;
  for (auto& [e, idx] : row_of) idx = next++;

  const std::size_t rows = row_of.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(t + 1, 0));
  for (std::size_t c = 0; c < t; ++c)
    for (const auto& [e, v] : columns[c].terms()) a[row_of[e]][c] = v;
  for (const auto& [e, v] : rhs.terms()) a[row_of[e]][t] = v;

  std::vector<int> pivot_row_of_col(t, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < t && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const Rational inv = 1 / a[rank][col];
    for (std::size_t c = col; c <= t; ++c) a[rank][c] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t c = col; c <= t; ++c) a[r][c] -= factor * a[rank][c];
    }
    pivot_row_of_col[col] = static_cast<int>(rank);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (a[r][t] != 0) return false;

  std::vector<Rational> solution(t, 0);
  std::vector<std::vector<Rational>> kernel;
  for (std::size_t col = 0; col < t; ++col) {
    if (pivot_row_of_col[col] >= 0) {
      solution[col] = a[pivot_row_of_col[col]][t];
    } else {
      std::vector<Rational> k(t, 0);
      k[col] = 1;
      for (std::size_t pc = 0; pc < t; ++pc)
        if (pivot_row_of_col[pc] >= 0) k[pc] = -a[pivot_row_of_col[pc]][col];
      kernel.push_back(std::move(k));
    }
  }

  // A representation realizing this length needs every coefficient nonzero;
  // nudge along the kernel if the particular solution has zeros.
  auto zero_count = [](const std::vector<Rational>& v) {
    return std::count_if(v.begin(), v.end(), [](const Rational& c) { return c == 0; });
  };
  for (const auto& k : kernel) {
    if (zero_count(solution) == 0) break;
    for (long long lambda = 1; lambda <= static_cast<long long>(t) + 1; ++lambda) {
      std::vector<Rational> trial = solution;
      for (std::size_t i = 0; i < t; ++i) trial[i] += Rational(lambda) * k[i];
      if (zero_count(trial) < zero_count(solution)) {
        solution = std::move(trial);
        if (zero_count(solution) == 0) break;
      }
    }
  }
  if (zero_count(solution) != 0) return false;

  RationalFunction sum(vars);
  for (std::size_t i = 0; i < t; ++i)
    sum = sum + RationalFunction(Polynomial::constant(vars, solution[i]),
                                 candidates[indices[i]]);
  return sum == target;
}

struct FingerprintSearch {
  const RationalFunction& target;
  const std::vector<Polynomial>& candidates;
  std::vector<std::vector<std::vector<std::uint64_t>>> recip_values;  // [2][N][pts]
  std::vector<std::vector<std::uint64_t>> target_values;              // [2][pts]

  bool search(int t) {
    std::vector<std::size_t> prefix;
    return descend(t, 0, prefix);
  }

  bool descend(int t, std::size_t start, std::vector<std::size_t>& prefix) {
    if (static_cast<int>(prefix.size()) == t - 1) {
      const int rows = t + 1;
      std::vector<std::vector<std::uint64_t>> mu(2);
      for (int s = 0; s < 2; ++s) {
        std::vector<const std::vector<std::uint64_t>*> cols;
        cols.push_back(&target_values[s]);
        for (std::size_t i : prefix) cols.push_back(&recip_values[s][i]);
        mu[s] = cofactor_vector(cols, rows);
      }
      const bool use0 = !all_zero(mu[0]);
      const bool use1 = !all_zero(mu[1]);
      for (std::size_t x = start; x < candidates.size(); ++x) {
        if (use0 && dot_prefix(mu[0], recip_values[0][x], rows) != 0) continue;
        if (use1 && dot_prefix(mu[1], recip_values[1][x], rows) != 0) continue;
        std::vector<std::size_t> indices = prefix;
        indices.push_back(x);
        if (exactly_representable(target, candidates, indices)) return true;
      }
      return false;
    }
    for (std::size_t i = start; i < candidates.size(); ++i) {
      prefix.push_back(i);
      if (descend(t, i + 1, prefix)) return true;
      prefix.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<int> brute_force_length(const RationalFunction& value, int degree_bound,
                                      long long coeff_height_bound, int term_bound) {
  if (degree_bound < 0 || coeff_height_bound < 0 || term_bound < 0)
    throw Error("length search bounds must be nonnegative");
  if (value.is_zero()) return 0;
  if (term_bound == 0) return std::nullopt;

  const int vars = value.vars();
  std::vector<Polynomial> candidates =
      enumerate_candidates(vars, degree_bound, coeff_height_bound);
  if (candidates.empty()) return std::nullopt;

  const int max_points = term_bound + 1;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  std::uniform_int_distribution<std::uint64_t> dist(2, kPrime - 2);

  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<std::vector<Point>> point_sets(2, std::vector<Point>(max_points));
    for (auto& set : point_sets)
      for (auto& point : set) {
        point.resize(vars);
        for (auto& coord : point) coord = dist(rng);
      }
    bool valid = true;
    std::vector<std::vector<std::vector<std::uint64_t>>> recips(
        2, std::vector<std::vector<std::uint64_t>>(candidates.size()));
    std::vector<std::vector<std::uint64_t>> targets(2);
    for (int s = 0; s < 2 && valid; ++s) {
      targets[s].resize(max_points);
      for (int k = 0; k < max_points && valid; ++k) {
        const std::uint64_t den = eval_mod(value.den(), point_sets[s][k]);
        if (den == 0) {
          valid = false;
          break;
        }
        targets[s][k] = mod_mul(eval_mod(value.num(), point_sets[s][k]), mod_inv(den));
      }
      for (std::size_t i = 0; i < candidates.size() && valid; ++i) {
        recips[s][i].resize(max_points);
        for (int k = 0; k < max_points; ++k) {
          const std::uint64_t v = eval_mod(candidates[i], point_sets[s][k]);
          if (v == 0) {
            valid = false;
            break;
          }
          recips[s][i][k] = mod_inv(v);
        }
      }
    }
    if (!valid) continue;
    FingerprintSearch search{value, candidates, std::move(recips), std::move(targets)};
    for (int t = 1; t <= term_bound; ++t)
      if (search.search(t)) return t;
    return std::nullopt;
  }
  throw Error("failed to find usable evaluation points for the length search");
}

}  // namespace recipcas
