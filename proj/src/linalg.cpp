#include "seif/linalg.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace seif {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::ClusterAmbiguity: return "ClusterAmbiguity";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::WrongSymmetry: return "WrongSymmetry";
    case ErrorCode::NotIsometry: return "NotIsometry";
    case ErrorCode::InconsistentParity: return "InconsistentParity";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::EigenvalueCondition: return "EigenvalueCondition";
    case ErrorCode::NotSplit: return "NotSplit";
    case ErrorCode::InconsistentSpec: return "InconsistentSpec";
    case ErrorCode::NotQuasiUnipotent: return "NotQuasiUnipotent";
    case ErrorCode::IncompatibleExponents: return "IncompatibleExponents";
    case ErrorCode::QuadratureNonconvergence: return "QuadratureNonconvergence";
    case ErrorCode::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::HyperbolicityViolation: return "HyperbolicityViolation";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::EigenvalueOffCircle: return "EigenvalueOffCircle";
    case ErrorCode::SingularNu: return "SingularNu";
    case ErrorCode::BadSquareRoot: return "BadSquareRoot";
    case ErrorCode::ExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorCode::TierMismatch: return "TierMismatch";
    case ErrorCode::SectorMismatch: return "SectorMismatch";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Error";
}

Tolerances Tolerances::from_env() {
  Tolerances t;
  if (const char* env = std::getenv("SEIFERT_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0) t.tol = v;
  }
  return t;
}

double frac_to_double(const Frac& f) { return double(f.numerator()) / double(f.denominator()); }

std::string frac_string(const Frac& f) {
  std::ostringstream os;
  os << f.numerator();
  if (f.denominator() != 1) os << "/" << f.denominator();
  return os.str();
}

Frac frac_mod1(const Frac& f) {
  long long n = f.numerator(), d = f.denominator();
  long long r = ((n % d) + d) % d;
  return Frac(r, d);
}

Cx ipow(long long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

int sign_pow(long long k) { return (k % 2 == 0) ? 1 : -1; }

double max_abs(const Mat& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }
double mat_scale(const Mat& a) { return std::max(1.0, max_abs(a)); }

bool is_real(const Mat& a, double tol) { return a.size() == 0 || a.imag().cwiseAbs().maxCoeff() <= tol * mat_scale(a); }

Mat mat_pow(const Mat& a, int k) {
  Mat r = Mat::Identity(a.rows(), a.cols());
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

namespace {

struct Svd {
  Eigen::VectorXd s;
  Mat u, v;
  int rank = 0;
};

Svd svd(const Mat& a, double tol) {
  Svd out;
  if (a.rows() == 0 || a.cols() == 0) {
    out.u = Mat::Identity(a.rows(), a.rows());
    out.v = Mat::Identity(a.cols(), a.cols());
    return out;
  }
  Eigen::JacobiSVD<Mat> j(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  out.s = j.singularValues();
  out.u = j.matrixU();
  out.v = j.matrixV();
  double thr = tol * std::max(1.0, out.s.size() ? out.s(0) : 0.0);
  for (int i = 0; i < out.s.size(); ++i)
    if (out.s(i) > thr) ++out.rank;
  return out;
}

}  // namespace

int numeric_rank(const Mat& a, double tol) { return svd(a, tol).rank; }

Mat null_space(const Mat& a, double tol) {
  Svd s = svd(a, tol);
  return s.v.rightCols(a.cols() - s.rank);
}

Mat column_span(const Mat& a, double tol) {
  Svd s = svd(a, tol);
  return s.u.leftCols(s.rank);
}

Mat nilpotent_series(const Mat& n, const std::vector<Cx>& coeffs) {
  Mat r = Mat::Zero(n.rows(), n.cols());
  Mat p = Mat::Identity(n.rows(), n.cols());
  for (std::size_t k = 0; k < coeffs.size() && k <= std::size_t(n.rows()); ++k) {
    r += coeffs[k] * p;
    p = p * n;
  }
  return r;
}

Mat nilpotent_exp(const Mat& n) {
  std::vector<Cx> c(n.rows() + 1);
  double f = 1;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k > 0) f *= double(k);
    c[k] = 1.0 / f;
  }
  return nilpotent_series(n, c);
}

Mat unipotent_log(const Mat& u) {
  Mat x = u - Mat::Identity(u.rows(), u.cols());
  std::vector<Cx> c(u.rows() + 1);
  c[0] = 0;
  for (std::size_t k = 1; k < c.size(); ++k) c[k] = (k % 2 ? 1.0 : -1.0) / double(k);
  return nilpotent_series(x, c);
}

Mat expm1_over(const Mat& n) {
  std::vector<Cx> c(n.rows() + 1);
  double f = 1;
  for (std::size_t k = 0; k < c.size(); ++k) {
    f *= double(k + 1);
    c[k] = 1.0 / f;
  }
  return nilpotent_series(n, c);
}

namespace {

Inertia count(const Eigen::VectorXd& ev, double thr) {
  Inertia r;
  for (int i = 0; i < ev.size(); ++i) {
    if (ev(i) > thr) ++r.plus;
    else if (ev(i) < -thr) ++r.minus;
    else ++r.zero;
  }
  return r;
}

}  // namespace

Inertia signature(const Mat& s, double tol) {
  if (s.rows() != s.cols()) throw Error(ErrorCode::NonSquare, "signature of non-square matrix");
  double sc = mat_scale(s);
  if (!is_real(s, tol)) throw Error(ErrorCode::WrongSymmetry, "form is not real");
  MatR r = s.real();
  if ((r - r.transpose()).cwiseAbs().maxCoeff() > tol * sc) throw Error(ErrorCode::WrongSymmetry, "form is not symmetric");
  if (r.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<MatR> es(0.5 * (r + r.transpose()));
  return count(es.eigenvalues(), tol * sc);
}

Inertia hermitian_signature(const Mat& h, double tol) {
  if (h.rows() != h.cols()) throw Error(ErrorCode::NonSquare, "signature of non-square matrix");
  double sc = mat_scale(h);
  if (max_abs(h - h.adjoint()) > tol * sc) throw Error(ErrorCode::WrongSymmetry, "form is not hermitian");
  if (h.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (h + h.adjoint()));
  return count(es.eigenvalues(), tol * sc);
}

Eigenvalue Eigenvalue::from_angle(const Frac& theta) {
  Frac t = frac_mod1(theta);
  Eigenvalue e;
  e.angle = t;
  // Exact values at the quarter points keep downstream arithmetic clean.
  if (t == Frac(0)) e.value = 1;
  else if (t == Frac(1, 2)) e.value = -1;
  else if (t == Frac(1, 4)) e.value = kI;
  else if (t == Frac(3, 4)) e.value = -kI;
  else e.value = std::exp(kTwoPiI * frac_to_double(t));
  return e;
}

Eigenvalue Eigenvalue::from_value(Cx v, double tol) {
  Eigenvalue e;
  e.value = v;
  if (std::abs(std::abs(v) - 1.0) <= tol) {
    double th = std::arg(v) / (2 * kPi);
    if (th < 0) th += 1;
    for (long long q = 1; q <= 200; ++q) {
      long long p = std::llround(th * double(q));
      if (std::abs(th - double(p) / double(q)) <= tol) return from_angle(Frac(p, q));
    }
  }
  return e;
}

bool Eigenvalue::on_circle(double tol) const { return angle.has_value() || std::abs(std::abs(value) - 1.0) <= tol; }
bool Eigenvalue::is_one() const { return angle && *angle == Frac(0); }
bool Eigenvalue::is_minus_one() const { return angle && *angle == Frac(1, 2); }
bool Eigenvalue::is_real(double tol) const {
  if (angle) return *angle == Frac(0) || *angle == Frac(1, 2);
  return std::abs(value.imag()) <= tol;
}

Eigenvalue Eigenvalue::conj() const {
  if (angle) return from_angle(-*angle);
  return {std::conj(value), std::nullopt};
}

Eigenvalue Eigenvalue::inverse() const {
  if (angle) return from_angle(-*angle);
  return {1.0 / value, std::nullopt};
}

Eigenvalue Eigenvalue::neg() const {
  if (angle) return from_angle(*angle + Frac(1, 2));
  return {-value, std::nullopt};
}

bool Eigenvalue::same(const Eigenvalue& o, double tol) const {
  if (angle && o.angle) return *angle == *o.angle;
  return std::abs(value - o.value) <= tol * std::max(1.0, std::abs(value));
}

std::string Eigenvalue::to_string() const {
  if (angle) {
    if (*angle == Frac(0)) return "1";
    if (*angle == Frac(1, 2)) return "-1";
    if (*angle == Frac(1, 4)) return "i";
    if (*angle == Frac(3, 4)) return "-i";
    return "e(" + frac_string(*angle) + ")";
  }
  auto fmt = [](double x) {
    std::ostringstream os;
    double r = std::round(x);
    if (std::abs(x - r) < 1e-9) os << (long long)r;
    else os.precision(12), os << x;
    return os.str();
  };
  if (std::abs(value.imag()) < 1e-12) return fmt(value.real());
  std::string im = fmt(std::abs(value.imag()));
  return fmt(value.real()) + (value.imag() < 0 ? "-" : "+") + (im == "1" ? "" : im) + "i";
}

}  // namespace seif
