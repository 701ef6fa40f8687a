#pragma once

#include <map>

#include "seif/subspace.hpp"

namespace seif {

struct EigenGroup {
  Eigenvalue lambda;
  int mult = 0;
  Subspace space;  // generalized eigenspace H_lambda
  Mat projector;   // spectral projector onto H_lambda along the other groups
};

// M = Ms * Mu = Mu * Ms, N = log Mu.
struct AutomorphismParts {
  Mat m, ms, mu, n;
  std::vector<EigenGroup> groups;

  const EigenGroup* find(const Eigenvalue& l, double tol) const;
  // Sum of generalized eigenspaces satisfying pred, with its projector.
  Mat projector_where(bool (*pred)(const Eigenvalue&)) const;
  Mat projector_one() const;       // onto H_1
  Mat projector_not_one() const;   // onto H_{!=1}
  Subspace space_one() const;
  Subspace space_not_one() const;
};

// Multiplicative Jordan decomposition. Eigenvalues are clustered with a
// kernel-rank test so that numerically split defective eigenvalues are
// merged; clusters within cluster_tol of the unit circle are snapped onto it.
// Throws SingularMatrix, NonSquare, ClusterAmbiguity.
AutomorphismParts jordan_parts(const Mat& m, const Tolerances& tol = {});

// Number of Jordan blocks of each size of the nilpotent n restricted to the
// n-invariant subspace v: result[l] = #blocks of size l.
std::map<int, int> jordan_block_counts(const Mat& n, const Subspace& v, double tol = 1e-9);

// Coordinates of the restriction of a to an invariant subspace with
// orthonormal basis q: q^* a q.
Mat restrict_to(const Mat& a, const Subspace& v);

}  // namespace seif
