#pragma once

#include <random>

#include "recipcas/rational_function.hpp"

namespace recipcas::testing {

inline Polynomial random_polynomial(std::mt19937_64& rng, int vars, int max_degree,
                                    long long height, bool nonzero = true) {
  std::uniform_int_distribution<int> term_count(1, 5);
  std::uniform_int_distribution<long long> coefficient(-height, height);
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
      p.add_term(e, Rational(coefficient(rng)));
    }
    if (!nonzero || !p.is_zero()) return p;
  }
}

inline Polynomial random_nonconstant_polynomial(std::mt19937_64& rng, int vars, int max_degree,
                                                long long height) {
  while (true) {
    Polynomial p = random_polynomial(rng, vars, max_degree, height);
    if (!p.is_constant()) return p;
  }
}

inline RationalFunction random_rational_function(std::mt19937_64& rng, int vars, int max_degree,
                                                 long long height) {
  const Polynomial num = random_polynomial(rng, vars, max_degree, height, false);
  Polynomial den = random_polynomial(rng, vars, max_degree, height);
  return RationalFunction(num, den);
}

inline RationalFunction random_nonzero_rational_function(std::mt19937_64& rng, int vars,
                                                         int max_degree, long long height) {
  while (true) {
    RationalFunction r = random_rational_function(rng, vars, max_degree, height);
    if (!r.is_zero()) return r;
  }
}

}  // namespace recipcas::testing
