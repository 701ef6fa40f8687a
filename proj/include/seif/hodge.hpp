#pragma once

#include <map>
#include <tuple>

#include "seif/classify.hpp"
#include "seif/filtration.hpp"

namespace seif {

// Steenbrink polarized mixed Hodge structure on H = C^d with the standard
// real structure. S is (-1)^m-symmetric on H_{!=1} and (-1)^{m+1} on H_1;
// W is the weight filtration of N centered at m on H_{!=1}, at m+1 on H_1.
struct SteenbrinkPMHS {
  Mat m;
  Mat s;
  int weight = 0;
  bool is_signed = false;
  DecFiltration f;
  int dim() const { return int(m.rows()); }
};

// theta(lambda) = 1 for lambda = 1, else 0.
inline int theta(const Eigenvalue& l) { return l.is_one() ? 1 : 0; }
// beta in (0,1] with exp(-2 pi i beta) = lambda.
Frac beta_of(const Eigenvalue& l);
Eigenvalue lambda_of_beta(const Frac& beta);

struct HodgeData {
  AutomorphismParts parts;
  IncFiltration w;
  Mat p_one, p_not_one;
};
HodgeData hodge_data(const SteenbrinkPMHS& p, const Tolerances& tol = {});

// Pieces of (S, N) on Gr^W centered at m, restricted to an invariant domain.
struct GradedData {
  IncFiltration w;
  std::map<int, Mat> lift;       // l -> lift basis of Gr_{m+l}
  std::map<int, Mat> form;       // l -> Gram of S_l(a,b) = S(a, N^l b) on the lift
  std::map<int, Mat> primitive;  // l -> lift basis of P_{m+l}
  bool nondegenerate = true;
  bool symmetric = true;
  bool orthogonal = true;
  bool weight_orthogonal = true;
};
GradedData graded_data(const Mat& s, const Mat& n, int m, const Subspace& domain, double tol = 1e-9);

// Deligne splitting I^{p,q} and primitive parts per eigenvalue.
struct DeligneSplitting {
  std::map<std::pair<int, int>, Subspace> i;
  // (p, q, group index) -> (I^{pq}_0)_lambda
  std::map<std::tuple<int, int, int>, Subspace> i0;
};
DeligneSplitting deligne_splitting(const SteenbrinkPMHS& p, const HodgeData& h, double tol = 1e-9);
bool is_split(const DeligneSplitting& d, double tol = 1e-9);

// (alpha, k) -> multiplicity.
using SpectralPairs = std::map<std::pair<Frac, int>, int>;
SpectralPairs spectral_pairs(const SteenbrinkPMHS& p, const Tolerances& tol = {});
SpectralPairs spectral_pairs(const SteenbrinkPMHS& p, const HodgeData& h, double tol = 1e-9);
std::string to_string(const SpectralPairs& spp);

struct Ladder {
  int p = 0, q = 0, l = 0, mult = 0;
  Eigenvalue lambda;
  Frac alpha;     // first spectral number, at weight m + l
  bool single = false;
  Frac distance() const;  // 2 alpha + l + 1 - m
  int weight_m = 0;
  int group = -1;  // index into AutomorphismParts::groups
};
std::vector<Ladder> ladders(const SteenbrinkPMHS& p, const HodgeData& h, const DeligneSplitting& d);
std::vector<Ladder> ladders(const SteenbrinkPMHS& p, const Tolerances& tol = {});
// The spectral pairs produced by the ladders, for cross-checking.
SpectralPairs ladder_pairs(const std::vector<Ladder>& ls);

struct CheckItem {
  std::string name;
  bool pass = true;
  double residual = 0;
  std::string detail;
};
struct Report {
  std::vector<CheckItem> items;
  bool ok() const;
  std::string to_string() const;
};
Report check_pmhs(const SteenbrinkPMHS& p, const Tolerances& tol = {});

struct LadderSpec {
  int p = 0, q = 0;
  Frac angle;  // lambda = exp(2 pi i angle)
  int dim = 1;
};
// Split PMHS with dim (I^{pq}_0)_lambda prescribed. The spec must be closed
// under (p,q,lambda) -> (q,p,conj lambda). seed != 0 applies a random real
// base change.
SteenbrinkPMHS make_split_pmhs(const std::vector<LadderSpec>& spec, int m, bool is_signed, unsigned seed = 0);

// Isotypic decomposition of (H_{!=1}, M, S) + (H_1, M, S) read off the
// ladders of a split PMHS.
Decomposition<IsoType> pmhs_isometric_decomposition(const SteenbrinkPMHS& p, const Tolerances& tol = {});

SteenbrinkPMHS transform(const SteenbrinkPMHS& p, const Mat& c);

}  // namespace seif
