#include "seif/gamma.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>

namespace seif {

std::vector<double> gamma_derivatives(double x, int kmax) {
  if (!(x > 0)) throw Error(ErrorCode::ExponentOutOfRange, "Gamma derivatives need x > 0");
  // psi[j] = psi^{(j)}(x); B_{n+1} = sum_j C(n,j) B_{n-j} psi[j].
  std::vector<double> psi(std::max(kmax, 1));
  for (int j = 0; j < kmax; ++j) psi[j] = boost::math::polygamma(j, x);
  std::vector<double> bell(kmax + 1, 0.0);
  bell[0] = 1.0;
  for (int n = 0; n < kmax; ++n) {
    double s = 0, binom = 1;
    for (int j = 0; j <= n; ++j) {
      s += binom * bell[n - j] * psi[j];
      binom = binom * (n - j) / (j + 1);
    }
    bell[n + 1] = s;
  }
  double g = boost::math::tgamma(x);
  for (auto& b : bell) b *= g;
  return bell;
}

Mat gamma_operator(double x, const Mat& a) {
  int d = int(a.rows());
  auto der = gamma_derivatives(x, d);
  std::vector<Cx> c(d + 1);
  double fact = 1;
  for (int k = 0; k <= d; ++k) {
    if (k > 0) fact *= k;
    c[k] = der[k] / fact;
  }
  return nilpotent_series(a, c);
}

double alpha_value(const Eigenvalue& lambda, double tol) {
  if (!lambda.on_circle(tol)) throw Error(ErrorCode::EigenvalueOffCircle, "eigenvalue " + lambda.to_string() + " is not on the unit circle");
  if (lambda.angle) {
    Frac th = frac_mod1(*lambda.angle);
    return th == Frac(0) ? 1.0 : 1.0 - frac_to_double(th);
  }
  double th = std::arg(lambda.value) / (2 * kPi);
  if (th < 0) th += 1;
  double a = 1.0 - th;
  return a <= 0 ? 1.0 : a;
}

Mat gamma_block(double alpha, const Mat& n) { return gamma_operator(alpha, -n / kTwoPiI); }

GammaAutomorphism gamma_automorphism(const AutomorphismParts& parts, double tol) {
  int d = int(parts.m.rows());
  GammaAutomorphism out;
  out.g = Mat::Zero(d, d);
  for (const auto& grp : parts.groups) {
    double a = alpha_value(grp.lambda, tol);
    Mat b = gamma_block(a, parts.n) * grp.projector;
    out.alpha.push_back(a);
    out.blocks.push_back(b);
    out.g += b;
  }
  return out;
}

}  // namespace seif
