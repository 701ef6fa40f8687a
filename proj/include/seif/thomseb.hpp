#pragma once

#include <optional>
#include <string>

#include "seif/flbundle.hpp"
#include "seif/forms.hpp"

namespace seif {

// Seifert data of an isolated singularity in m+1 variables. The lattice tier
// is the Seifert form L on the Milnor lattice, exact when it is rational. The
// Hodge tier is a (signed)
// Steenbrink PMHS on the dual space H^infty, whose L^nor must be (L^hnor)^vee.
// The FL tier is a z-side lattice of elementary sections on H^infty.
struct TEZPData {
  SeifertForm l;
  int m = 0;
  std::optional<SteenbrinkPMHS> hodge;
  std::optional<LatticeBasis> fl;

  int mu() const { return l.dim(); }
  // (-1)^{(m+1)(m+2)/2} L.
  SeifertForm l_hnor() const;
  // Gram (L^hnor)^{-T} on the dual lattice.
  SeifertForm l_nor() const;
  // L(Ma,b) = (-1)^{m+1} L(b,a).
  Mat monodromy() const;
  std::optional<MatrixQ> monodromy_exact() const;
  // (-1)^{m+1} M, the monodromy of L^hnor.
  Mat m_hnor() const;
};

// Checks the tier invariants: L nondegenerate, and when present, the Hodge
// tier's L^nor equal to l_nor() and its weight equal to m. Throws BadInput.
void validate_tezp(const TEZPData& t, double tol = 1e-9);

struct TensorSeifert {
  MatrixQ l;       // (-1)^{(m+1)(n+1)} Lf (x) Lg
  MatrixQ l_hnor;  // Lf^hnor (x) Lg^hnor
  int m = 0;       // m + n + 1
};
// mf, ng >= -1; a factor with m = -1 and L = (1) is the identity.
TensorSeifert tensor_seifert(const MatrixQ& lf, int mf, const MatrixQ& lg, int ng);

// The factor g = x^2 in one variable: L = (-1), m = 0, with Hodge tier
// (M = -1, F^0 = H, F^1 = 0) and FL tier generated by FL(es(1,-1/2)).
TEZPData x_squared();

// f + x_{m+1}^2: L -> (-1)^m L, M -> -M. The Hodge tier goes through the
// square-root Tate twist, the FL tier through the tensor with x_squared().
TEZPData suspend(const TEZPData& t, const Tolerances& tol = {});

// Thom-Sebastiani sum. The FL tier is the termwise product of generators,
// es(A,a) es(B,b) = es(A (x) B, a+b) for N = Nf (x) 1 + 1 (x) Ng. When both
// carry Hodge data the sum gets the structure from ts_hodge. Throws
// TierMismatch if exactly one factor has an FL tier.
TEZPData tensor_tezp(const TEZPData& a, const TEZPData& b, const Tolerances& tol = {});

// A twisted Hodge filtration G(F) together with its eigenvalue groups.
struct SectorFiltration {
  DecFiltration gf;
  AutomorphismParts parts;
  int m = 0;
};
SectorFiltration sector_filtration(const SteenbrinkPMHS& p, const Tolerances& tol = {});

// G(F^p) H_alpha(f+g) = sum over beta + gamma in {alpha, alpha+1} and
// q + r = p - 1 + (beta + gamma - alpha) of G(F^q) H_beta(f) (x) G(F^r) H_gamma(g),
// on the Kronecker space. Throws SectorMismatch if a filtration is not the
// sum of its eigenvalue components or an eigenvalue is off the unit circle.
DecFiltration ts_hodge(const SectorFiltration& f, const SectorFiltration& g, double tol = 1e-9);

// Structure on the sum: M = Mf (x) Mg, L^nor = Lf^nor (x) Lg^nor,
// S = -L^nor nu, F = G^{-1} ts_hodge, weight mf + mg + 1.
SteenbrinkPMHS tensor_pmhs(const SteenbrinkPMHS& a, const SteenbrinkPMHS& b, bool is_signed,
                           const Tolerances& tol = {});

// PMHS with given L^nor: M = (-1)^{m+1} times the monodromy of L^nor,
// S = -L^nor nu.
SteenbrinkPMHS pmhs_from_lnor(const Mat& lnor, int m, const DecFiltration& f, bool is_signed,
                              const Tolerances& tol = {});

// Lattice and Hodge tiers from a PMHS: L^hnor = (L^nor)^vee.
TEZPData tezp_from_pmhs(const SteenbrinkPMHS& p, const Tolerances& tol = {});

// Rank-2 lattice of Lefschetz thimbles of x + 1/x, with its unsigned PMHS.
TEZPData p1_mirror();
// Rank-2 sublattice Ml_1 of T_pqr with its signed PMHS. Throws
// HyperbolicityViolation unless 1/p + 1/q + 1/r < 1.
TEZPData t_pqr(int p, int q, int r);
// "p1-mirror", "x2" or "t-pqr:p,q,r". Throws BadInput.
TEZPData fixture(const std::string& name);

}  // namespace seif
