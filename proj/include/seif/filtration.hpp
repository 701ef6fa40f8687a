#pragma once

#include <map>

#include "seif/subspace.hpp"

namespace seif {

// Increasing filtration W_l: zero below the first key, `top` above the last.
struct IncFiltration {
  std::map<int, Subspace> steps;
  Subspace top;

  Subspace at(int l) const;
  int lo() const { return steps.empty() ? 0 : steps.begin()->first; }
  int hi() const { return steps.empty() ? 0 : steps.rbegin()->first; }
};

// Decreasing filtration F^p: `top` below the first key, zero above the last.
struct DecFiltration {
  std::map<int, Subspace> steps;
  Subspace top;

  Subspace at(int p) const;
  int lo() const { return steps.empty() ? 0 : steps.begin()->first; }
  int hi() const { return steps.empty() ? 0 : steps.rbegin()->first; }
  DecFiltration apply(const Mat& a) const;
  DecFiltration shifted(int s) const;  // G^p = F^{p+s}
  DecFiltration conj() const;
  bool equals(const DecFiltration& o, double tol) const;
};

// Weight filtration of a nilpotent n on an n-invariant domain, centered at
// `center`: W_{center+l} = sum_{j >= max(0,-l)} ker n^{l+1+j} cap im n^j.
IncFiltration weight_filtration(const Mat& n, const Subspace& domain, int center, double tol = 1e-9);

// dim Gr_l = dim W_l - dim W_{l-1}.
int graded_dim(const IncFiltration& w, int l);

}  // namespace seif
