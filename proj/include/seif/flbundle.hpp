#pragma once

#include <map>

#include "seif/twist.hpp"

namespace seif {

// es(A,alpha)(tau) = exp(log tau (alpha - N/2 pi i)) A, with A a flat
// multivalued section in H_lambda, lambda = exp(-2 pi i alpha).
struct ElementarySection {
  Vec a;
  Frac alpha;
};

// Value in flat coordinates on the branch log_tau.
Vec evaluate(const ElementarySection& s, const Mat& n, Cx log_tau);

// d/dtau es(A,b) = es((b - N/2 pi i) A, b - 1).
ElementarySection d_tau(const ElementarySection& s, const Mat& n);
// Inverse of d_tau on exponents > -1. Throws ExponentOutOfRange.
ElementarySection d_tau_inverse(const ElementarySection& s, const Mat& n);

// FL(es(A, alpha-1)) = es(G^{(alpha)} A, alpha). The input carries alpha-1.
// Throws ExponentOutOfRange unless alpha > 0.
ElementarySection fl_elementary(const ElementarySection& s, const Mat& n);

// int_0^{infinity z} exp(-tau/z) es(A,alpha-1)(tau) dtau, by the trapezoid
// rule in u = log(tau/z) with step halving. Throws QuadratureNonconvergence.
Vec quadrature_fl(const ElementarySection& s, const Mat& n, Cx z, double tol = 1e-10);

// P(a,b) = L(a, gamma_{-pi} b)/(2 pi i)^{m+1} for a at w and b at -w, with
// L = L^nor and bundle monodromy M. The second slot is evaluated on the
// branch log w + pi i.
struct FlatPairing {
  Mat lnor;
  Mat n;  // nilpotent part of M
  int m = 0;
};
Cx pairing_P(const FlatPairing& f, const ElementarySection& s1, const ElementarySection& s2, Cx log_w);
// z^{a+b} e^{pi i b} L(A, e^{-N/2} B)/(2 pi i)^{m+1}. Throws IncompatibleExponents
// unless a+b is an integer.
Cx pairing_P_closed(const FlatPairing& f, const ElementarySection& s1, const ElementarySection& s2, Cx log_w);
// z-power of the closed form, a+b.
Frac pairing_power(const ElementarySection& s1, const ElementarySection& s2);

// The three equivalent data: (H, M, S, m), (H, L, m), (bundle, P, m).
struct TripleData {
  Mat m, s;
  int weight = 0;
};
struct SeifertData {
  Mat l;
  int weight = 0;
};
struct BundleData {
  Mat monodromy;  // (-1)^{m+1} times the monodromy of L
  Mat p;          // P(a,b) = a^T p b with b transported by gamma_pi
  int weight = 0;
};
// Throws ParityMismatch if S does not have the required symmetries.
SeifertData seifert_from_triple_data(const TripleData& t, const Tolerances& tol = {});
TripleData triple_from_seifert_data(const SeifertData& l, const Tolerances& tol = {});
BundleData bundle_from_seifert(const SeifertData& l);
SeifertData seifert_from_bundle(const BundleData& b);
// P(b,a) for a at z and b at -z: b^T p M^{-1} a.
Cx bundle_pairing_reversed(const BundleData& b, const Vec& b_at_minus_z, const Vec& a_at_z);

// Finite sums of elementary sections, the generators of a lattice over
// C{{d_tau^{-1}}} (tau side) or C{z} (z side).
using Section = std::vector<ElementarySection>;
struct LatticeBasis {
  std::vector<Section> generators;
  bool z_side = false;
};

// Gr_V^beta of the lattice truncated at exponent cutoff, as a subspace of
// H_lambda coordinates. Throws TruncationInsufficient if beta >= cutoff.
Subspace gr_v(const LatticeBasis& b, const Mat& n, const Frac& beta, const Frac& cutoff);

// F^p H_lambda = es(., alpha-1)^{-1}(d_tau^{m-p} Gr_V^{m-p+alpha-1}) on every
// eigenvalue group.
DecFiltration hodge_from_lattice(const LatticeBasis& b, const AutomorphismParts& parts, int m, int cutoff);
// G^{(alpha)} F^p = es(., alpha)^{-1}(z^{-(m-p)} Gr_V^{m-p+alpha} FL) from the
// z-side lattice.
DecFiltration twisted_hodge_from_lattice(const LatticeBasis& fl, const AutomorphismParts& parts, int m, int cutoff);
// FL of a tau-side lattice, termwise.
LatticeBasis fl_lattice(const LatticeBasis& b, const Mat& n);

// Pairing matrix of z-side generators by powers of z: result[k] is the
// coefficient matrix of z^k.
std::map<Frac, Mat> lattice_pairing(const FlatPairing& f, const LatticeBasis& fl);

}  // namespace seif
