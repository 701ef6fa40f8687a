#include "seif/subspace.hpp"

namespace seif {

Subspace Subspace::zero(int n) {
  Subspace s;
  s.n_ = n;
  s.q_ = Mat::Zero(n, 0);
  return s;
}

Subspace Subspace::full(int n) {
  Subspace s;
  s.n_ = n;
  s.q_ = Mat::Identity(n, n);
  return s;
}

Subspace Subspace::span(const Mat& vectors, double tol) {
  Subspace s;
  s.n_ = int(vectors.rows());
  s.q_ = vectors.cols() ? column_span(vectors, tol) : Mat::Zero(s.n_, 0);
  return s;
}

Subspace Subspace::kernel(const Mat& a, double tol) {
  Subspace s;
  s.n_ = int(a.cols());
  s.q_ = null_space(a, tol);
  return s;
}

Subspace Subspace::sum(const Subspace& o, double tol) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  Mat both(n_, dim() + o.dim());
  both << q_, o.q_;
  return span(both, tol);
}

Subspace Subspace::intersect(const Subspace& o, double tol) const {
  if (is_zero() || o.is_zero()) return zero(n_);
  Mat both(n_, dim() + o.dim());
  both << q_, -o.q_;
  Mat k = null_space(both, tol);
  return span(q_ * k.topRows(dim()), tol);
}

Subspace Subspace::apply(const Mat& a, double tol) const {
  if (is_zero()) return zero(int(a.rows()));
  return span(a * q_, tol);
}

Subspace Subspace::preimage(const Mat& a, const Subspace& target, double tol) const {
  if (is_zero()) return *this;
  Mat rest = Mat::Identity(target.ambient(), target.ambient()) - target.projector();
  Mat k = null_space(rest * a * q_, tol);
  return span(q_ * k, tol);
}

Subspace Subspace::complement(const Subspace& sub, double tol) const {
  if (sub.is_zero() || is_zero()) return *this;
  Mat k = null_space(sub.q_.adjoint() * q_, tol);
  return span(q_ * k, tol);
}

Subspace Subspace::conj() const {
  Subspace s = *this;
  s.q_ = q_.conjugate();
  return s;
}

bool Subspace::contains(const Subspace& o, double tol) const {
  if (o.is_zero()) return true;
  if (o.dim() > dim()) return false;
  Mat r = o.q_ - q_ * (q_.adjoint() * o.q_);
  return max_abs(r) <= 10 * tol;
}

bool Subspace::contains_vector(const Vec& v, double tol) const {
  Vec r = v - q_ * (q_.adjoint() * v);
  return r.cwiseAbs().maxCoeff() <= 10 * tol * std::max(1.0, v.cwiseAbs().maxCoeff());
}

bool Subspace::equals(const Subspace& o, double tol) const { return dim() == o.dim() && contains(o, tol); }

Mat Subspace::real_basis(double tol) const {
  if (is_zero()) return Mat::Zero(n_, 0);
  MatR both(n_, 2 * dim());
  both << q_.real(), q_.imag();
  Eigen::JacobiSVD<MatR> svd(both, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  double thr = tol * std::max(1.0, sv(0));
  int r = 0;
  while (r < sv.size() && sv(r) > thr) ++r;
  if (r != dim()) throw Error(ErrorCode::BadInput, "subspace is not defined over R");
  return Mat(svd.matrixU().leftCols(r).cast<Cx>());
}

}  // namespace seif
