#pragma once

#include <random>

#include "seif/linalg.hpp"

namespace seif::testing {

// Well-conditioned random real base change.
inline Mat random_base_change(int n, std::mt19937& rng, double max_cond = 20.0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    MatR c = MatR::Identity(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c(i, j) += 0.6 * u(rng);
    Eigen::JacobiSVD<MatR> svd(c);
    auto s = svd.singularValues();
    if (s(0) / s(n - 1) < max_cond) return c.cast<Cx>();
  }
}

inline Mat random_real(int r, int c, std::mt19937& rng, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  MatR m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = u(rng);
  return m.cast<Cx>();
}

inline Mat jordan_block(int n) {
  Mat j = Mat::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) j(k + 1, k) = 1;
  return j;
}

}  // namespace seif::testing
