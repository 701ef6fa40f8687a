#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace seif {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p/q", integers and finite decimals ("0.25", "-1e-3") exactly.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

// Dense matrix over Q. Row-major storage; sizes are small.
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}
  MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows);

  static MatrixQ identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

  MatrixQ transpose() const;
  MatrixQ operator+(const MatrixQ& b) const;
  MatrixQ operator-(const MatrixQ& b) const;
  MatrixQ operator*(const MatrixQ& b) const;
  MatrixQ operator*(const Rational& s) const;
  MatrixQ operator-() const { return *this * Rational(-1); }
  bool operator==(const MatrixQ& b) const;
  bool operator!=(const MatrixQ& b) const { return !(*this == b); }

  Rational determinant() const;
  int rank() const;
  // Throws SingularMatrix.
  MatrixQ inverse() const;
  bool is_zero() const;

  Eigen::MatrixXcd to_complex() const;
  Eigen::MatrixXd to_real() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

MatrixQ kron(const MatrixQ& a, const MatrixQ& b);

// Sylvester inertia (n_plus, n_zero, n_minus) of a symmetric rational matrix,
// by congruence diagonalization. Exact.
struct Inertia {
  int plus = 0;
  int zero = 0;
  int minus = 0;
  bool operator==(const Inertia&) const = default;
};
Inertia exact_signature(const MatrixQ& s);

}  // namespace seif
