#pragma once

#include <random>

#include "cdelab/ratfunc.hpp"

namespace cdelab::testing {

inline Cyclo random_cyclo(std::mt19937& rng, int order, int bound = 5) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> c(euler_phi(order));
  for (auto& x : c) x = Rational(coeff(rng), den(rng));
  return Cyclo::from_coefficients(order, c);
}

inline Poly random_poly(std::mt19937& rng, int order, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Cyclo> c(deg(rng) + 1);
  for (auto& x : c) x = random_cyclo(rng, order, 3);
  return Poly(std::move(c));
}

// Random element of K; R-integral when integral is true.
inline RatFunc random_ratfunc(std::mt19937& rng, int order, bool integral) {
  Poly den = random_poly(rng, order, 2);
  while (den.is_zero() || (integral && den.at_zero().is_zero())) den = random_poly(rng, order, 2);
  if (!integral && std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
    den = den * Poly::variable();
  }
  return RatFunc(random_poly(rng, order, 3), den);
}

}  // namespace cdelab::testing
