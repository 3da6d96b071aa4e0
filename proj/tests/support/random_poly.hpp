#pragma once

#include <random>

#include "tautring/taut_poly.hpp"

namespace tautring::testing {

struct PolyShape {
  int max_index = 4;
  int max_exponent = 2;
  int max_factors = 3;
  int max_terms = 5;
};

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

inline Generator random_generator(std::mt19937& rng, int max_index) {
  std::uniform_int_distribution<int> idx(1, max_index);
  std::bernoulli_distribution is_p(0.5);
  return is_p(rng) ? Generator::p(idx(rng)) : Generator::q(idx(rng));
}

inline Monomial random_monomial(std::mt19937& rng, const PolyShape& shape = {}) {
  std::uniform_int_distribution<int> factors(0, shape.max_factors);
  std::uniform_int_distribution<int> expo(1, shape.max_exponent);
  Monomial m;
  for (int i = factors(rng); i > 0; --i) m = m.times(random_generator(rng, shape.max_index), expo(rng));
  return m;
}

inline TautPoly random_poly(std::mt19937& rng, const PolyShape& shape = {}) {
  std::uniform_int_distribution<int> terms(0, shape.max_terms);
  TautPoly f;
  for (int i = terms(rng); i > 0; --i) f.add_term(random_monomial(rng, shape), random_rational(rng));
  return f;
}

}  // namespace tautring::testing
