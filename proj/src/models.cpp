#include "seif/classify.hpp"

namespace seif {

Mat permuted_identity(int n) {
  Mat e = Mat::Zero(n, n);
  for (int j = 0; j < n; ++j) e(j, n - 1 - j) = double(sign_pow(j));
  return e;
}

Mat shift_matrix(int n) {
  Mat j = Mat::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) j(k + 1, k) = 1;
  return j;
}

namespace {

Mat block_diag(const std::vector<Mat>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += int(b.rows());
  Mat r = Mat::Zero(n, n);
  int at = 0;
  for (const auto& b : blocks) {
    r.block(at, at, b.rows(), b.cols()) = b;
    at += int(b.rows());
  }
  return r;
}

// Hyperbolic pairing block [[0,E],[s E,0]].
Mat pairing_block(int n, double s) {
  Mat e = permuted_identity(n);
  Mat r = Mat::Zero(2 * n, 2 * n);
  r.topRightCorner(n, n) = e;
  r.bottomLeftCorner(n, n) = s * e;
  return r;
}

// Columns: the real vectors (x + conj x) and i(x - conj x) for the first half
// of a basis whose second half is the conjugate of the first.
Mat realification(int half) {
  Mat id = Mat::Identity(half, half);
  Mat t = Mat::Zero(2 * half, 2 * half);
  t.topLeftCorner(half, half) = id;
  t.bottomLeftCorner(half, half) = id;
  t.topRightCorner(half, half) = kI * id;
  t.bottomRightCorner(half, half) = -kI * id;
  return t;
}

IsometricTriple realify(const Mat& s_c, const Mat& m_c, int sym, int half) {
  Mat t = realification(half);
  IsometricTriple r;
  r.s = t.transpose() * s_c * t;
  r.m = t.inverse() * m_c * t;
  r.sym = sym;
  if (!is_real(r.s, 1e-9) || !is_real(r.m, 1e-9)) throw Error(ErrorCode::InconsistentParity, "model has no real form");
  r.s = r.s.real().cast<Cx>();
  r.m = r.m.real().cast<Cx>();
  return r;
}

}  // namespace

IsometricTriple model_triple(const IsoType& t) {
  int n = t.n;
  if (n < 1) throw Error(ErrorCode::BadInput, "block size must be positive");
  Mat ej = nilpotent_exp(shift_matrix(n));
  Cx l = t.lambda.value;
  switch (t.kind) {
    case TrKind::Tr1: {
      if (!(t.lambda.is_one() || t.lambda.is_minus_one())) throw Error(ErrorCode::BadInput, "Tr(lambda,1,...) needs lambda = +-1");
      IsometricTriple r;
      r.m = l.real() * ej;
      r.s = double(t.eps) * permuted_identity(n);
      r.sym = (n - 1) % 2;
      return r;
    }
    case TrKind::Tr2S1: {
      if (!t.lambda.on_circle()) throw Error(ErrorCode::BadInput, "Tr(lambda,2,n,m,eps) needs |lambda| = 1");
      int k = n + t.m + 1;
      Mat s_c = ipow(k) * double(t.eps) * pairing_block(n, sign_pow(k));
      Mat m_c = block_diag({l * ej, std::conj(l) * ej});
      return realify(s_c, m_c, t.m, n);
    }
    case TrKind::Tr2R: {
      if (!t.lambda.is_real() || std::abs(std::abs(l) - 1.0) < 1e-12) throw Error(ErrorCode::BadInput, "Tr(lambda,2,n,m) needs real lambda != +-1");
      IsometricTriple r;
      r.m = block_diag({l.real() * ej, (1.0 / l.real()) * ej});
      r.s = pairing_block(n, sign_pow(n + t.m + 1));
      r.sym = t.m;
      return r;
    }
    case TrKind::Tr4: {
      if (t.lambda.is_real() || std::abs(std::abs(l) - 1.0) < 1e-12) throw Error(ErrorCode::BadInput, "Tr(lambda,4,n,m) needs non-real lambda off the circle");
      Mat blk = pairing_block(n, sign_pow(n + t.m + 1));
      Mat s_c = block_diag({blk, blk});
      Mat m_c = block_diag({l * ej, (1.0 / l) * ej, std::conj(l) * ej, std::conj(1.0 / l) * ej});
      return realify(s_c, m_c, t.m, 2 * n);
    }
  }
  throw Error(ErrorCode::BadInput, "unknown type");
}

SeifOrigin seif_origin(const SeifType& t) {
  switch (t.kind) {
    case SeifKind::S1:
      if (t.lambda.is_one()) return {IsoType::tr1(t.lambda, t.n, t.eps), 0};
      return {IsoType::tr1(t.lambda, t.n, -t.eps), 1};
    case SeifKind::S2Pm:
      if (t.lambda.is_one()) return {IsoType::tr2s1(t.lambda, t.n, 0, 1), 0};
      return {IsoType::tr2s1(t.lambda, t.n, 1, 1), 1};
    case SeifKind::S2Circle: return {IsoType::tr2s1(t.lambda, t.n, 0, t.eps), 0};
    case SeifKind::S2Real: return {IsoType::tr2r(t.lambda, t.n, 0), 0};
    case SeifKind::S4: return {IsoType::tr4(t.lambda, t.n, 0), 0};
  }
  throw Error(ErrorCode::BadInput, "unknown type");
}

SeifertForm model_seifert(const SeifType& t) {
  if (t.kind == SeifKind::S1 && (t.lambda.is_one() ? t.n % 2 == 0 : t.n % 2 == 1))
    throw Error(ErrorCode::InconsistentParity, "Seif(1,1,n,eps) needs n odd, Seif(-1,1,n,eps) needs n even");
  if (t.kind == SeifKind::S2Pm && (t.lambda.is_one() ? t.n % 2 == 1 : t.n % 2 == 0))
    throw Error(ErrorCode::InconsistentParity, "Seif(1,2,n) needs n even, Seif(-1,2,n) needs n odd");
  SeifOrigin o = seif_origin(t);
  return seifert_from_triple(model_triple(o.triple), 1);
}

SignatureRow seif_signature_table(const SeifType& t) {
  int n = t.n;
  auto mod4 = [](int x) { return ((x % 4) + 4) % 4; };
  switch (t.kind) {
    case SeifKind::S1:
      if (t.lambda.is_one()) {
        auto tr = IsoType::tr1(t.lambda, n, t.eps);
        if (mod4(n) == mod4(t.eps)) return {{(n + 1) / 2, 0, (n - 1) / 2}, tr};
        return {{(n - 1) / 2, 0, (n + 1) / 2}, tr};
      }
      if (mod4(n - 1) == mod4(t.eps)) return {{n / 2, 1, (n - 2) / 2}, std::nullopt};
      return {{(n - 2) / 2, 1, n / 2}, std::nullopt};
    case SeifKind::S2Pm:
      if (t.lambda.is_one()) return {{n, 0, n}, IsoType::tr2s1(t.lambda, n, 0, 1)};
      return {{n - 1, 2, n - 1}, std::nullopt};
    case SeifKind::S2Circle:
      if (n % 2 == 0) return {{n, 0, n}, IsoType::tr2s1(t.lambda, n, 0, t.eps)};
      if (t.eps > 0) return {{n - 1, 0, n + 1}, IsoType::tr2s1(t.lambda, n, 0, 1)};
      return {{n + 1, 0, n - 1}, IsoType::tr2s1(t.lambda, n, 0, -1)};
    case SeifKind::S2Real: return {{n, 0, n}, IsoType::tr2r(t.lambda, n, 0)};
    case SeifKind::S4: return {{2 * n, 0, 2 * n}, IsoType::tr4(t.lambda, n, 0)};
  }
  throw Error(ErrorCode::BadInput, "unknown type");
}

}  // namespace seif
