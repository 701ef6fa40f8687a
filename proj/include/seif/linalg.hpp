#pragma once

#include <boost/rational.hpp>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "seif/error.hpp"
#include "seif/rational.hpp"

namespace seif {

using Cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using MatR = Eigen::MatrixXd;
using Frac = boost::rational<long long>;

constexpr double kPi = 3.14159265358979323846;
inline const Cx kI{0.0, 1.0};
inline const Cx kTwoPiI{0.0, 2.0 * kPi};

struct Tolerances {
  double tol = 1e-9;
  double cluster_tol = 1e-6;
  // Default tolerances, with tol overridden by SEIFERT_TOL when set.
  static Tolerances from_env();
};

double frac_to_double(const Frac& f);
std::string frac_string(const Frac& f);
Frac frac_mod1(const Frac& f);

// i^k for integer k, exact.
Cx ipow(long long k);
int sign_pow(long long k);  // (-1)^k

double mat_scale(const Mat& a);  // max(1, max |a_ij|)
double max_abs(const Mat& a);
bool is_real(const Mat& a, double tol);
Mat mat_pow(const Mat& a, int k);
Mat kron(const Mat& a, const Mat& b);

// Singular-value rank with threshold tol * max(1, sigma_max).
int numeric_rank(const Mat& a, double tol);
// Orthonormal basis of ker a (columns).
Mat null_space(const Mat& a, double tol);
// Orthonormal basis of the column span of a.
Mat column_span(const Mat& a, double tol);

// exp and log for nilpotent / unipotent arguments via finite series.
Mat nilpotent_exp(const Mat& n);
Mat unipotent_log(const Mat& u);
// sum_k c_k n^k for nilpotent n; coefficients beyond the nilpotency order are ignored.
Mat nilpotent_series(const Mat& n, const std::vector<Cx>& coeffs);
// (M - eps)/N := eps * sum_{k>=1} N^(k-1)/k!, on a space where M = eps*exp(N).
Mat expm1_over(const Mat& n);

// Inertia of a real symmetric or a hermitian matrix. Eigenvalues with
// |mu| <= tol * max(1, ||S||) count as zero.
Inertia signature(const Mat& s, double tol);
Inertia hermitian_signature(const Mat& h, double tol);

// Reduced representation of lambda: numeric value and, for roots of unity of
// order <= 200, an exact angle theta in [0,1) with lambda = exp(2 pi i theta).
struct Eigenvalue {
  Cx value;
  std::optional<Frac> angle;

  static Eigenvalue from_angle(const Frac& theta);
  static Eigenvalue from_value(Cx v, double tol = 1e-9);
  bool on_circle(double tol = 1e-9) const;
  bool is_one() const;
  bool is_minus_one() const;
  bool is_real(double tol = 1e-9) const;
  Eigenvalue conj() const;
  Eigenvalue inverse() const;
  Eigenvalue neg() const;
  bool same(const Eigenvalue& o, double tol) const;
  std::string to_string() const;
};

}  // namespace seif
