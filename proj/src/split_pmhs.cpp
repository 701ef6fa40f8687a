#include <random>

#include "seif/hodge.hpp"

namespace seif {

namespace {

struct Piece {
  Mat s, m;
  std::vector<std::pair<Vec, int>> hodge;  // basis vector (block coords) and its Hodge index
};

Mat realification(int half) {
  Mat id = Mat::Identity(half, half);
  Mat t = Mat::Zero(2 * half, 2 * half);
  t.topLeftCorner(half, half) = id;
  t.bottomLeftCorner(half, half) = id;
  t.topRightCorner(half, half) = kI * id;
  t.bottomRightCorner(half, half) = -kI * id;
  return t;
}

Piece single_ladder(int p, const Eigenvalue& lambda, int l, bool is_signed) {
  int n = l + 1;
  Piece pc;
  double s = is_signed ? sign_pow(l) : 1.0;
  pc.s = s * permuted_identity(n);
  pc.m = lambda.value.real() * nilpotent_exp(shift_matrix(n));
  for (int k = 0; k < n; ++k) pc.hodge.push_back({Vec::Unit(n, k), p - k});
  return pc;
}

Piece ladder_pair(int p, int q, const Eigenvalue& lambda, int mp, int l, bool is_signed) {
  int n = l + 1;
  Cx s1 = (is_signed ? double(sign_pow(l)) : 1.0) * ipow(-(2 * p - mp - l));
  Mat e = permuted_identity(n);
  Mat sc = Mat::Zero(2 * n, 2 * n);
  sc.topRightCorner(n, n) = s1 * e;
  sc.bottomLeftCorner(n, n) = double(sign_pow(mp)) * s1 * e.transpose();
  Mat ej = nilpotent_exp(shift_matrix(n));
  Mat mc = Mat::Zero(2 * n, 2 * n);
  mc.topLeftCorner(n, n) = lambda.value * ej;
  mc.bottomRightCorner(n, n) = std::conj(lambda.value) * ej;
  Mat t = realification(n);
  Mat ti = t.inverse();
  Piece pc;
  pc.s = t.transpose() * sc * t;
  pc.m = ti * mc * t;
  if (!is_real(pc.s, 1e-12) || !is_real(pc.m, 1e-12)) throw Error(ErrorCode::InconsistentSpec, "ladder pair has no real form");
  pc.s = pc.s.real().cast<Cx>();
  pc.m = pc.m.real().cast<Cx>();
  for (int k = 0; k < n; ++k) {
    pc.hodge.push_back({ti.col(k), p - k});
    pc.hodge.push_back({ti.col(n + k), q - k});
  }
  return pc;
}

}  // namespace

SteenbrinkPMHS make_split_pmhs(const std::vector<LadderSpec>& spec, int m, bool is_signed, unsigned seed) {
  std::map<std::tuple<int, int, Frac>, int> dims;
  for (const auto& e : spec) {
    if (e.dim < 0) throw Error(ErrorCode::InconsistentSpec, "negative multiplicity");
    if (e.dim) dims[{e.p, e.q, frac_mod1(e.angle)}] += e.dim;
  }
  std::vector<Piece> pieces;
  std::map<std::tuple<int, int, Frac>, bool> done;
  for (const auto& [key, d] : dims) {
    if (done[key]) continue;
    auto [p, q, ang] = key;
    Eigenvalue lambda = Eigenvalue::from_angle(ang);
    int mp = m + theta(lambda);
    int l = p + q - mp;
    if (l < 0) throw Error(ErrorCode::InconsistentSpec, "p+q below the weight at (" + std::to_string(p) + "," + std::to_string(q) + ")");
    auto partner = std::make_tuple(q, p, frac_mod1(-ang));
    auto it = dims.find(partner);
    if (it == dims.end() || it->second != d) throw Error(ErrorCode::InconsistentSpec, "spec is not closed under conjugation");
    done[key] = done[partner] = true;
    if (partner == key) {
      if (sign_pow(m + 1) * lambda.value.real() * sign_pow(l) < 0)
        throw Error(ErrorCode::InconsistentSpec, "single ladder with (-1)^{m+1} lambda != (-1)^l");
      for (int c = 0; c < d; ++c) pieces.push_back(single_ladder(p, lambda, l, is_signed));
    } else {
      for (int c = 0; c < d; ++c) pieces.push_back(ladder_pair(p, q, lambda, mp, l, is_signed));
    }
  }
  int n = 0;
  for (const auto& pc : pieces) n += int(pc.s.rows());
  SteenbrinkPMHS out;
  out.weight = m;
  out.is_signed = is_signed;
  out.s = Mat::Zero(n, n);
  out.m = Mat::Zero(n, n);
  std::vector<std::pair<Vec, int>> hv;
  int at = 0, lo = 1 << 30, hi = -(1 << 30);
  for (const auto& pc : pieces) {
    int k = int(pc.s.rows());
    out.s.block(at, at, k, k) = pc.s;
    out.m.block(at, at, k, k) = pc.m;
    for (const auto& [v, idx] : pc.hodge) {
      Vec g = Vec::Zero(n);
      g.segment(at, k) = v;
      hv.push_back({g, idx});
      lo = std::min(lo, idx);
      hi = std::max(hi, idx);
    }
    at += k;
  }
  out.f.top = Subspace::full(n);
  for (int r = lo; r <= hi; ++r) {
    std::vector<Vec> cols;
    for (const auto& [v, idx] : hv)
      if (idx >= r) cols.push_back(v);
    Mat b(n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) b.col(j) = cols[j];
    out.f.steps[r] = Subspace::span(b);
  }
  if (seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
      MatR c = MatR::Identity(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c(i, j) += 0.5 * u(rng);
      Eigen::JacobiSVD<MatR> svd(c);
      if (svd.singularValues()(0) / svd.singularValues()(n - 1) < 10) return transform(out, c.cast<Cx>());
    }
  }
  return out;
}

Decomposition<IsoType> pmhs_isometric_decomposition(const SteenbrinkPMHS& p, const Tolerances& tol) {
  auto h = hodge_data(p, tol);
  auto d = deligne_splitting(p, h, tol.tol);
  if (!is_split(d, tol.tol)) throw Error(ErrorCode::NotSplit, "the mixed Hodge structure is not split over R");
  int m = p.weight;
  Decomposition<IsoType> out;
  for (const auto& lad : ladders(p, h, d)) {
    int th = theta(lad.lambda);
    int n = lad.l + 1;
    int ceil_alpha = m - lad.p;
    int flip = (p.is_signed && n % 2 == 0) ? -1 : 1;
    if (lad.single) {
      int eps = sign_pow(ceil_alpha - (m - th - lad.l) / 2) * flip;
      out.push_back({IsoType::tr1(lad.lambda, n, eps), lad.mult});
      continue;
    }
    bool first = lad.lambda.is_real() ? lad.p > lad.q : (*lad.lambda.angle < Frac(1, 2));
    if (!first) continue;
    int r = (m + th) & 1;
    int eps = sign_pow(ceil_alpha - 1 - (m - th + r) / 2) * flip;
    out.push_back({IsoType::tr2s1(lad.lambda, n, r, eps), lad.mult});
  }
  return normalize(out);
}

}  // namespace seif
