#pragma once

#include "seif/linalg.hpp"

namespace seif {

// Linear subspace of C^n stored as an orthonormal column basis.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(int n);
  static Subspace full(int n);
  static Subspace span(const Mat& vectors, double tol = 1e-9);
  static Subspace kernel(const Mat& a, double tol = 1e-9);
  static Subspace image(const Mat& a, double tol = 1e-9) { return span(a, tol); }

  int ambient() const { return n_; }
  int dim() const { return int(q_.cols()); }
  const Mat& basis() const { return q_; }
  Mat projector() const { return q_ * q_.adjoint(); }

  Subspace sum(const Subspace& o, double tol = 1e-9) const;
  Subspace intersect(const Subspace& o, double tol = 1e-9) const;
  Subspace apply(const Mat& a, double tol = 1e-9) const;
  // {v in this : a v in target}.
  Subspace preimage(const Mat& a, const Subspace& target, double tol = 1e-9) const;
  // Orthogonal complement of sub inside this (sub need not be contained).
  Subspace complement(const Subspace& sub, double tol = 1e-9) const;
  Subspace conj() const;

  bool contains(const Subspace& o, double tol = 1e-9) const;
  bool contains_vector(const Vec& v, double tol = 1e-9) const;
  bool equals(const Subspace& o, double tol = 1e-9) const;
  bool is_zero() const { return dim() == 0; }
  // For conj-stable subspaces: a real orthonormal basis of the same span.
  Mat real_basis(double tol = 1e-9) const;

 private:
  int n_ = 0;
  Mat q_;
};

}  // namespace seif
