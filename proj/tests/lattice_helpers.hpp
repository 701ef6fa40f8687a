#pragma once

#include "seif/flbundle.hpp"

namespace seif::testing {

// tau-side lattice with generators d_tau^{-(m-p)} es(A, alpha-1) for A in the
// Deligne pieces of a split structure whose Hodge numbers satisfy p <= m.
inline LatticeBasis lattice_of(const SteenbrinkPMHS& p, const HodgeData& h) {
  auto d = deligne_splitting(p, h);
  LatticeBasis b;
  for (const auto& [pq, sp] : d.i)
    for (const auto& g : h.parts.groups) {
      Subspace piece = sp.apply(g.projector);
      if (piece.is_zero()) continue;
      Frac alpha = beta_of(g.lambda);
      for (int c = 0; c < piece.dim(); ++c) {
        ElementarySection s{piece.basis().col(c), alpha - 1};
        for (int k = 0; k < p.weight - pq.first; ++k) s = d_tau_inverse(s, h.parts.n);
        b.generators.push_back({s});
      }
    }
  return b;
}

}  // namespace seif::testing
