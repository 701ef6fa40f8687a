#pragma once

#include "seif/gamma.hpp"
#include "seif/hodge.hpp"

namespace seif {

// L^nor(a,b) = -S(a, nu^{-1} b) with nu = 1/(M-1) on H_{!=1} and
// -N/(M-1) on H_1.
struct NormalizedSeifert {
  Mat lnor;
  Mat nu;
  Mat nu_inv;
};
// nu^{-1} = (M-1) on H_{!=1} and -(M-1)/N on H_1.
Mat nu_inverse(const Mat& m, const AutomorphismParts& parts);
NormalizedSeifert normalized_seifert(const SteenbrinkPMHS& p, const AutomorphismParts& parts, double tol = 1e-9);
NormalizedSeifert normalized_seifert(const SteenbrinkPMHS& p, const Tolerances& tol = {});

// kappa * L e^{-N/2} as a Gram matrix, where n is the nilpotent part of the
// monodromy of L. Throws BadSquareRoot unless kappa^2 = lambda.
Mat lsym(const Mat& l, const Mat& n, Cx lambda, Cx kappa, double tol = 1e-9);
// Q^T lsym conj(Q) for an orthonormal basis Q of H_lambda.
Mat lherm(const Mat& l, const Mat& n, const Subspace& h_lambda, Cx lambda, Cx kappa, double tol = 1e-9);

// Relations between S, L^nor and G: S from L^nor on both summands, isotropy
// of G(F) and positivity of L^nor on I^{pq}_0 and G(I^{pq}_0).
Report verify_seifert_identities(const SteenbrinkPMHS& p, const Tolerances& tol = {});

// Isotypic decomposition of (H, L^nor) read off the ladders. Throws NotSplit.
Decomposition<SeifType> classify_pmhs_seifert(const SteenbrinkPMHS& p, const Tolerances& tol = {});

// Weight m+1 structure on the same space with monodromy -M and the same L^nor.
SteenbrinkPMHS sqrt_tate_twist(const SteenbrinkPMHS& p, const Tolerances& tol = {});
// F^{p+1} := F^p, weight m+2.
SteenbrinkPMHS tate_twist(const SteenbrinkPMHS& p);

// Checks of the twist: spectral shift by (1/2,1), equal L^nor, and that the
// double twist is the Tate twist.
Report twist_report(const SteenbrinkPMHS& p, const Tolerances& tol = {});

}  // namespace seif
