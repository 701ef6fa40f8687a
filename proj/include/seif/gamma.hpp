#pragma once

#include <vector>

#include "seif/jordan.hpp"

namespace seif {

// Gamma^{(k)}(x) for k = 0..kmax and x > 0, from Gamma(x) and the
// polygamma values through complete Bell polynomials.
std::vector<double> gamma_derivatives(double x, int kmax);

// Gamma(x id + a) = sum_k Gamma^{(k)}(x)/k! a^k for nilpotent a.
Mat gamma_operator(double x, const Mat& a);

// alpha in (0,1] with exp(-2 pi i alpha) = lambda. Throws EigenvalueOffCircle.
double alpha_value(const Eigenvalue& lambda, double tol = 1e-9);

// G = sum over eigenvalue groups of Gamma(alpha id - N/2 pi i).
struct GammaAutomorphism {
  Mat g;
  std::vector<double> alpha;  // per group of the parts it was built from
  std::vector<Mat> blocks;    // G restricted to each group, as a full matrix
};
GammaAutomorphism gamma_automorphism(const AutomorphismParts& parts, double tol = 1e-9);

// G^{(alpha)} = Gamma(alpha id - N/2 pi i) on the whole space, ignoring the
// eigenvalue decomposition.
Mat gamma_block(double alpha, const Mat& n);

}  // namespace seif
