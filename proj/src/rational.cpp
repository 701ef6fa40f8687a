#include "seif/rational.hpp"

#include <cctype>

#include "seif/error.hpp"

namespace seif {

namespace {

BigInt pow10(int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

Rational parse_decimal(std::string s) {
  int exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    exp10 = std::stoi(s.substr(epos + 1));
    s = s.substr(0, epos);
  }
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  auto dot = s.find('.');
  std::string digits = s;
  if (dot != std::string::npos) {
    exp10 -= int(s.size() - dot - 1);
    digits = s.substr(0, dot) + s.substr(dot + 1);
  }
  if (digits.empty()) throw Error(ErrorCode::BadInput, "empty number");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw Error(ErrorCode::BadInput, "bad number '" + s + "'");
  // Leading zeros would make the parser read octal.
  auto nz = digits.find_first_not_of('0');
  digits = nz == std::string::npos ? "0" : digits.substr(nz);
  Rational r{BigInt(digits)};
  if (exp10 > 0) r *= Rational(pow10(exp10));
  if (exp10 < 0) r /= Rational(pow10(-exp10));
  return neg ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  auto slash = t.find('/');
  if (slash == std::string::npos) return parse_decimal(t);
  Rational num = parse_decimal(t.substr(0, slash));
  Rational den = parse_decimal(t.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::BadInput, "zero denominator in '" + text + "'");
  return num / den;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

MatrixQ::MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = int(rows.size());
  cols_ = rows_ ? int(rows.begin()->size()) : 0;
  for (const auto& r : rows) {
    if (int(r.size()) != cols_) throw Error(ErrorCode::BadInput, "ragged matrix");
    for (const auto& x : r) a_.push_back(x);
  }
}

MatrixQ MatrixQ::identity(int n) {
  MatrixQ r(n, n);
  for (int i = 0; i < n; ++i) r(i, i) = 1;
  return r;
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

MatrixQ MatrixQ::operator+(const MatrixQ& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(ErrorCode::BadInput, "size mismatch");
  MatrixQ r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += b.a_[k];
  return r;
}

MatrixQ MatrixQ::operator-(const MatrixQ& b) const { return *this + (-b); }

MatrixQ MatrixQ::operator*(const MatrixQ& b) const {
  if (cols_ != b.rows_) throw Error(ErrorCode::BadInput, "size mismatch");
  MatrixQ r(rows_, b.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
    }
  return r;
}

MatrixQ MatrixQ::operator*(const Rational& s) const {
  MatrixQ r = *this;
  for (auto& x : r.a_) x *= s;
  return r;
}

bool MatrixQ::operator==(const MatrixQ& b) const {
  return rows_ == b.rows_ && cols_ == b.cols_ && a_ == b.a_;
}

bool MatrixQ::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

Rational MatrixQ::determinant() const {
  if (rows_ != cols_) throw Error(ErrorCode::NonSquare, "determinant of non-square matrix");
  MatrixQ a = *this;
  Rational det = 1;
  int n = rows_;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      det = -det;
    }
    det *= a(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

int MatrixQ::rank() const {
  MatrixQ a = *this;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int piv = -1;
    for (int i = r; i < rows_; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < cols_; ++j) std::swap(a(r, j), a(piv, j));
    for (int i = r + 1; i < rows_; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (int j = c; j < cols_; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

MatrixQ MatrixQ::inverse() const {
  if (rows_ != cols_) throw Error(ErrorCode::NonSquare, "inverse of non-square matrix");
  int n = rows_;
  MatrixQ a = *this;
  MatrixQ inv = identity(n);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
    for (int j = 0; j < n; ++j) {
      std::swap(a(k, j), a(piv, j));
      std::swap(inv(k, j), inv(piv, j));
    }
    Rational p = a(k, k);
    for (int j = 0; j < n; ++j) {
      a(k, j) /= p;
      inv(k, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rational f = a(i, k);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

Eigen::MatrixXcd MatrixQ::to_complex() const { return to_real().cast<std::complex<double>>(); }

Eigen::MatrixXd MatrixQ::to_real() const {
  Eigen::MatrixXd r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(i, j) = to_double((*this)(i, j));
  return r;
}

MatrixQ kron(const MatrixQ& a, const MatrixQ& b) {
  MatrixQ r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return r;
}

Inertia exact_signature(const MatrixQ& s) {
  if (s.rows() != s.cols()) throw Error(ErrorCode::NonSquare, "signature of non-square matrix");
  if (s != s.transpose()) throw Error(ErrorCode::WrongSymmetry, "matrix is not symmetric");
  MatrixQ a = s;
  int n = a.rows();
  Inertia out;
  auto swap_idx = [&](int i, int j) {
    for (int c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (int r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) {
      // All remaining diagonal entries vanish; use e_i + e_j for a nonzero a_ij.
      int pi = -1, pj = -1;
      for (int i = k; i < n && pi < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) {
        out.zero += n - k;
        break;
      }
      for (int c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      for (int r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      piv = pi;
    }
    swap_idx(k, piv);
    Rational p = a(k, k);
    (p > 0 ? out.plus : out.minus)++;
    // Schur complement keeps the trailing block symmetric.
    for (int i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / p;
      for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
    for (int i = k + 1; i < n; ++i) a(i, k) = a(k, i) = 0;
  }
  return out;
}

}  // namespace seif
