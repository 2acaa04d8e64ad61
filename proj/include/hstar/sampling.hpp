#pragma once

// Random interlacing sequences with nonnegative coefficients and random
// monotone index maps, shared by the property tests and the verify battery.
//
// Members share a common product h of linear factors and each carries one extra
// factor (a z + b); sorting the extra roots -b/a in increasing order (constants
// first, as a root at -infinity) makes f_i interlace f_j for i <= j.

#include <algorithm>
#include <random>
#include <vector>

#include "hstar/poly.hpp"

namespace hstar::sampling {

struct LinearFactor {
  int a = 0;  // coefficient of z
  int b = 0;  // constant term
};

/// -b1/a1 < -b2/a2, treating a == 0 as -infinity.
inline bool root_less(const LinearFactor& x, const LinearFactor& y) {
  if (x.a == 0) return y.a != 0;
  if (y.a == 0) return false;
  return -x.b * y.a < -y.b * x.a;
}

inline LinearFactor random_factor(std::mt19937_64& rng, int max_coeff) {
  std::uniform_int_distribution<int> c(0, max_coeff);
  LinearFactor f;
  do {
    f = {c(rng), c(rng)};
  } while (f.a == 0 && f.b == 0);
  return f;
}

inline IntPolynomial as_poly(const LinearFactor& f) { return IntPolynomial{f.b, f.a}; }

/// Length <= max_len, degree <= max_degree, factor coefficients in [0, max_coeff].
inline std::vector<IntPolynomial> random_interlacing_sequence(std::mt19937_64& rng, int max_len = 4,
                                                              int max_degree = 4, int max_coeff = 5) {
  std::uniform_int_distribution<int> len(1, max_len), common(0, max_degree - 1);
  std::bernoulli_distribution zero_member(0.1);
  const int length = len(rng);
  IntPolynomial h{1};
  for (int k = common(rng); k-- > 0;) h *= as_poly(random_factor(rng, max_coeff));
  std::vector<LinearFactor> extra;
  for (int i = 0; i < length; ++i) extra.push_back(random_factor(rng, max_coeff));
  std::sort(extra.begin(), extra.end(), root_less);
  std::vector<IntPolynomial> fs;
  for (const auto& e : extra) fs.push_back(zero_member(rng) ? IntPolynomial{} : h * as_poly(e));
  return fs;
}

/// Weakly increasing map on [0, size) with values in [0, max_value].
inline std::vector<std::size_t> random_monotone(std::mt19937_64& rng, std::size_t size, std::size_t max_value) {
  std::uniform_int_distribution<std::size_t> v(0, max_value);
  std::vector<std::size_t> phi(size);
  for (auto& x : phi) x = v(rng);
  std::sort(phi.begin(), phi.end());
  return phi;
}

}  // namespace hstar::sampling
