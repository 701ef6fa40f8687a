#include "seif/forms.hpp"

namespace seif {

SeifertForm SeifertForm::from_exact(const MatrixQ& g) {
  if (g.rows() != g.cols()) throw Error(ErrorCode::NonSquare, "Gram matrix must be square");
  SeifertForm l;
  l.exact = g;
  l.gram = g.to_complex();
  return l;
}

SeifertForm SeifertForm::from_numeric(const Mat& g) {
  if (g.rows() != g.cols()) throw Error(ErrorCode::NonSquare, "Gram matrix must be square");
  SeifertForm l;
  l.gram = g;
  return l;
}

SeifertForm SeifertForm::scaled(int sign) const {
  SeifertForm l;
  l.gram = double(sign) * gram;
  if (exact) l.exact = *exact * Rational(sign);
  return l;
}

void validate_seifert(const SeifertForm& l, double tol) {
  if (l.gram.rows() != l.gram.cols()) throw Error(ErrorCode::NonSquare, "Gram matrix must be square");
  if (l.exact) {
    if (l.exact->determinant() == 0) throw Error(ErrorCode::SingularMatrix, "Seifert form is degenerate");
    return;
  }
  if (!is_real(l.gram, tol)) throw Error(ErrorCode::BadInput, "Seifert form must be real");
  if (numeric_rank(l.gram, tol) < l.dim()) throw Error(ErrorCode::SingularMatrix, "Seifert form is degenerate");
}

void validate_triple(const IsometricTriple& t, double tol) {
  if (t.s.rows() != t.s.cols() || t.m.rows() != t.m.cols() || t.s.rows() != t.m.rows())
    throw Error(ErrorCode::NonSquare, "triple matrices must be square of equal size");
  double sc = mat_scale(t.s) * mat_scale(t.m) * mat_scale(t.m);
  if (numeric_rank(t.s, tol) < t.dim()) throw Error(ErrorCode::DegenerateForm, "S is degenerate");
  if (max_abs(t.s.transpose() - double(sign_pow(t.sym)) * t.s) > tol * mat_scale(t.s))
    throw Error(ErrorCode::WrongSymmetry, "S has the wrong symmetry");
  if (max_abs(t.m.transpose() * t.s * t.m - t.s) > tol * sc) throw Error(ErrorCode::NotIsometry, "M is not an isometry of S");
}

Mat monodromy_of(const SeifertForm& l) {
  if (l.exact) return monodromy_exact(*l.exact).to_complex();
  Eigen::PartialPivLU<Mat> lu(l.gram.transpose());
  return lu.solve(l.gram);
}

MatrixQ monodromy_exact(const MatrixQ& g) { return g.transpose().inverse() * g; }

namespace {

RestrictedForm restrict_form(const Mat& g, const Subspace& v) {
  RestrictedForm r;
  r.basis = v.real_basis();
  r.gram = r.basis.transpose() * g * r.basis;
  return r;
}

// Coordinates of an operator preserving span(b), b real orthonormal.
Mat coords(const Mat& op, const Mat& b) { return b.transpose() * op * b; }

}  // namespace

DerivedForms derived_forms(const SeifertForm& l, const Tolerances& tol) {
  validate_seifert(l, tol.tol);
  DerivedForms d;
  const Mat& g = l.gram;
  d.i_s = g + g.transpose();
  d.i_a = g.transpose() - g;
  Mat m = monodromy_of(l);
  d.parts = jordan_parts(m, tol);
  int n = l.dim();
  Subspace not_m1 = Subspace::zero(n), not_1 = Subspace::zero(n), h1 = Subspace::zero(n), hm1 = Subspace::zero(n);
  for (const auto& grp : d.parts.groups) {
    if (!grp.lambda.is_minus_one()) not_m1 = not_m1.sum(grp.space);
    if (!grp.lambda.is_one()) not_1 = not_1.sum(grp.space);
    if (grp.lambda.is_one()) h1 = grp.space;
    if (grp.lambda.is_minus_one()) hm1 = grp.space;
  }
  Mat id = Mat::Identity(n, n);
  {
    RestrictedForm r = restrict_form(g, not_m1);
    Mat x = coords(m + id, r.basis);
    r.gram = r.basis.transpose() * g * r.basis * x.inverse();
    d.i_s2 = r;
  }
  {
    RestrictedForm r = restrict_form(g, not_1);
    Mat x = coords(m - id, r.basis);
    r.gram = r.basis.transpose() * g * r.basis * x.inverse();
    d.i_a2 = r;
  }
  {
    RestrictedForm r = restrict_form(g, h1);
    Mat nv = coords(d.parts.n, r.basis);
    r.gram = r.basis.transpose() * g * r.basis * expm1_over(nv).inverse();
    d.i_s3 = r;
  }
  {
    RestrictedForm r = restrict_form(g, hm1);
    Mat nv = coords(d.parts.n, r.basis);
    // On H_{-1}: (M+1)/N = -(e^N - 1)/N.
    r.gram = -(r.basis.transpose() * g * r.basis * expm1_over(nv).inverse());
    d.i_a3 = r;
  }
  return d;
}

SeifertForm seifert_from_triple(const IsometricTriple& t, int variant, const Tolerances& tol) {
  if (variant < 1 || variant > 3) throw Error(ErrorCode::InvalidIndex, "variant must be 1, 2 or 3");
  validate_triple(t, tol.tol);
  int n = t.dim();
  double delta = sign_pow(t.sym);
  Mat id = Mat::Identity(n, n);
  auto parts = jordan_parts(t.m, tol);
  for (const auto& g : parts.groups) {
    bool is_minus_delta = delta > 0 ? g.lambda.is_minus_one() : g.lambda.is_one();
    bool is_delta = delta > 0 ? g.lambda.is_one() : g.lambda.is_minus_one();
    if (variant < 3 && is_minus_delta) throw Error(ErrorCode::EigenvalueCondition, "M has eigenvalue -(-1)^sym");
    if (variant == 3 && !is_delta) throw Error(ErrorCode::EigenvalueCondition, "M must be unipotent up to the sign (-1)^sym");
  }
  Mat gram;
  if (variant == 1) gram = (t.m + delta * id).inverse().transpose() * t.s;
  else if (variant == 2) gram = t.s * (t.m + delta * id);
  else gram = delta * t.s * expm1_over(parts.n);
  if (is_real(t.s, tol.tol) && is_real(t.m, tol.tol)) gram = gram.real().cast<Cx>();
  return SeifertForm::from_numeric(gram);
}

DualPair dual_pair(const SeifertForm& l) {
  validate_seifert(l, 1e-9);
  DualPair d;
  if (l.exact) {
    MatrixQ gi = l.exact->transpose().inverse();
    d.dual = SeifertForm::from_exact(gi);
  } else {
    d.dual = SeifertForm::from_numeric(l.gram.transpose().inverse());
  }
  d.m_dual = monodromy_of(l).inverse().transpose();
  d.iso = l.gram.transpose();
  return d;
}

Mat intersection_form(const SeifertForm& l, int m) { return -l.gram + double(sign_pow(m + 1)) * l.gram.transpose(); }

std::optional<MatrixQ> intersection_form_exact(const SeifertForm& l, int m) {
  if (!l.exact) return std::nullopt;
  return -*l.exact + l.exact->transpose() * Rational(sign_pow(m + 1));
}

IsometricTriple transform(const IsometricTriple& t, const Mat& c) {
  IsometricTriple r;
  r.s = c.transpose() * t.s * c;
  r.m = c.inverse() * t.m * c;
  r.sym = t.sym;
  return r;
}

SeifertForm transform(const SeifertForm& l, const Mat& c) { return SeifertForm::from_numeric(c.transpose() * l.gram * c); }

}  // namespace seif
