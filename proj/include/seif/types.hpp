#pragma once

#include <string>
#include <utility>
#include <vector>

#include "seif/linalg.hpp"

namespace seif {

// Irreducible isometric triples.
//   Tr1:   Tr(lambda,1,n,eps),   lambda = +-1
//   Tr2S1: Tr(lambda,2,n,m,eps), lambda on the unit circle
//   Tr2R:  Tr(lambda,2,n,m),     lambda real, |lambda| > 1
//   Tr4:   Tr(lambda,4,n,m),     lambda non-real, |lambda| > 1
enum class TrKind { Tr1, Tr2S1, Tr2R, Tr4 };

struct IsoType {
  TrKind kind = TrKind::Tr1;
  Eigenvalue lambda;
  int n = 1;
  int m = 0;  // parity 0/1; for Tr1 it is n-1 mod 2
  int eps = 1;

  static IsoType tr1(const Eigenvalue& l, int n, int eps);
  static IsoType tr2s1(const Eigenvalue& l, int n, int m, int eps);
  static IsoType tr2r(const Eigenvalue& l, int n, int m);
  static IsoType tr4(const Eigenvalue& l, int n, int m);
  int dim() const;
  std::string to_string() const;
};

// Irreducible Seifert form pairs.
//   S1:       Seif(lambda,1,n,eps), lambda = +-1
//   S2Pm:     Seif(lambda,2,n),     lambda = +-1
//   S2Circle: Seif(lambda,2,n,zeta), lambda on the circle, zeta = eps * zeta0
//   S2Real:   Seif(lambda,2,n),     lambda real, |lambda| > 1
//   S4:       Seif(lambda,4,n)
enum class SeifKind { S1, S2Pm, S2Circle, S2Real, S4 };

struct SeifType {
  SeifKind kind = SeifKind::S1;
  Eigenvalue lambda;
  int n = 1;
  int eps = 1;  // S1 sign; for S2Circle the sign of zeta relative to zeta0

  static SeifType s1(const Eigenvalue& l, int n, int eps);
  static SeifType s2pm(const Eigenvalue& l, int n);
  static SeifType s2circle(const Eigenvalue& l, int n, int eps);
  // Builds from a zeta value; picks the sign with zeta = +-zeta0.
  static SeifType s2circle_zeta(const Eigenvalue& l, int n, Cx zeta, double tol = 1e-6);
  static SeifType s2real(const Eigenvalue& l, int n);
  static SeifType s4(const Eigenvalue& l, int n);
  Eigenvalue zeta() const;  // S2Circle only
  int dim() const;
  std::string to_string() const;
};

// zeta0 = ((conj(lambda)+1)/|lambda+1|) * i^{n+1}.
Eigenvalue zeta0(const Eigenvalue& lambda, int n);

template <class T>
using Decomposition = std::vector<std::pair<T, int>>;

// Canonical forms: circle types with Im lambda > 0, |lambda| > 1 for
// hyperbolic types, and the reductions at lambda = +-1.
Decomposition<IsoType> canonicalize(const IsoType& t);
SeifType canonicalize(const SeifType& t);

// Sorts by printed form and merges multiplicities.
Decomposition<IsoType> normalize(const Decomposition<IsoType>& d);
Decomposition<SeifType> normalize(const Decomposition<SeifType>& d);

std::string to_string(const Decomposition<IsoType>& d);
std::string to_string(const Decomposition<SeifType>& d);

}  // namespace seif
