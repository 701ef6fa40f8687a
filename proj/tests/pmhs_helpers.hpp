#pragma once

#include <random>

#include "seif/hodge.hpp"

namespace seif::testing {

// Spectral pairs predicted from a ladder spec, without building anything.
inline SpectralPairs spec_pairs(const std::vector<LadderSpec>& spec, int m) {
  SpectralPairs out;
  for (const auto& e : spec) {
    Frac ang = frac_mod1(e.angle);
    int th = ang == Frac(0) ? 1 : 0;
    Frac beta = ang == Frac(0) ? Frac(1) : Frac(1) - ang;
    int l = e.p + e.q - m - th;
    Frac alpha = Frac(m - e.p - 1) + beta;
    for (int j = 0; j <= l; ++j) out[{alpha + j, m + l - 2 * j}] += e.dim;
  }
  return out;
}

// Random valid spec with total dimension <= max_dim.
inline std::vector<LadderSpec> random_spec(std::mt19937& rng, int m, int max_dim) {
  std::vector<Frac> angles = {Frac(0), Frac(1, 2), Frac(1, 3), Frac(1, 4), Frac(1, 6), Frac(2, 5)};
  std::uniform_int_distribution<int> pick(0, int(angles.size()) - 1), ll(0, 3), coin(0, 1), shift(-2, 2);
  std::vector<LadderSpec> spec;
  int used = 0;
  for (int tries = 0; tries < 30 && used < max_dim; ++tries) {
    Frac ang = angles[pick(rng)];
    int th = ang == Frac(0) ? 1 : 0;
    int l = ll(rng);
    bool real = ang == Frac(0) || ang == Frac(1, 2);
    double lam = ang == Frac(0) ? 1.0 : -1.0;
    if (real && coin(rng) && (l + m + th) % 2 == 0 && sign_pow(m + 1) * lam * sign_pow(l) > 0) {
      if (used + l + 1 > max_dim) continue;
      int p = (m + th + l) / 2;
      spec.push_back({p, p, ang, 1});
      used += l + 1;
    } else {
      if (used + 2 * (l + 1) > max_dim) continue;
      int total = m + th + l;
      int p = total / 2 + shift(rng);
      int q = total - p;
      if (real && p == q) continue;
      spec.push_back({p, q, ang, 1});
      spec.push_back({q, p, frac_mod1(-ang), 1});
      used += 2 * (l + 1);
    }
  }
  return spec;
}

}  // namespace seif::testing
