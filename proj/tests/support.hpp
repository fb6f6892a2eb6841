#pragma once

// Random generators shared by the property tests.

#include <random>
#include <vector>

#include "equideg/cyclo.hpp"

namespace equideg::testing {

inline cyclo::Rational random_rational(std::mt19937_64& rng, int range = 9, int max_den = 5) {
  std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
  cyclo::Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline cyclo::Cyc random_cyclotomic(std::mt19937_64& rng, int order, int range = 9, int max_den = 5) {
  std::vector<cyclo::Rational> c(static_cast<std::size_t>(cyclo::euler_phi(order)));
  for (auto& q : c) q = random_rational(rng, range, max_den);
  return cyclo::Cyc::from_coeffs(order, c);
}

}  // namespace equideg::testing
