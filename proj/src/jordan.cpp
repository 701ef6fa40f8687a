#include "seif/jordan.hpp"

#include <algorithm>
#include <numeric>

namespace seif {

namespace {

struct Node {
  std::vector<int> members;
  int left = -1, right = -1;
};

Cx centroid(const Eigen::VectorXcd& ev, const std::vector<int>& idx) {
  Cx c = 0;
  for (int i : idx) c += ev(i);
  return c / double(idx.size());
}

// Invariance defect of the span of the k smallest right singular vectors of
// (M - c)^k, relative to |M|. Small for a genuine generalized eigenspace.
double invariance_defect(const Mat& m, Cx c, int k) {
  int n = int(m.rows());
  Mat p = mat_pow(m - c * Mat::Identity(n, n), k);
  Eigen::JacobiSVD<Mat> svd(p, Eigen::ComputeFullV);
  Mat v = svd.matrixV().rightCols(k);
  Mat r = m * v - v * (v.adjoint() * m * v);
  return r.norm() / std::max(1.0, m.norm());
}

}  // namespace

AutomorphismParts jordan_parts(const Mat& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NonSquare, "automorphism must be square");
  int n = int(m.rows());
  AutomorphismParts out;
  out.m = m;
  if (n == 0) {
    out.ms = out.mu = out.n = m;
    return out;
  }
  if (numeric_rank(m, tol.tol) < n) throw Error(ErrorCode::SingularMatrix, "automorphism is not invertible");
  bool real = is_real(m, tol.tol);

  Eigen::ComplexEigenSolver<Mat> ces(m, false);
  Eigen::VectorXcd ev = ces.eigenvalues();

  // Single-linkage dendrogram over the eigenvalue estimates.
  std::vector<Node> nodes;
  std::vector<int> active;
  for (int i = 0; i < n; ++i) {
    nodes.push_back({{i}, -1, -1});
    active.push_back(i);
  }
  auto dist = [&](int a, int b) {
    double d = 1e300;
    for (int i : nodes[a].members)
      for (int j : nodes[b].members) d = std::min(d, std::abs(ev(i) - ev(j)));
    return d;
  };
  while (active.size() > 1) {
    double best = 1e300;
    int bi = 0, bj = 1;
    for (std::size_t i = 0; i < active.size(); ++i)
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        double d = dist(active[i], active[j]);
        if (d < best) best = d, bi = int(i), bj = int(j);
      }
    Node merged;
    merged.members = nodes[active[bi]].members;
    merged.members.insert(merged.members.end(), nodes[active[bj]].members.begin(), nodes[active[bj]].members.end());
    merged.left = active[bi];
    merged.right = active[bj];
    nodes.push_back(merged);
    active.erase(active.begin() + bj);
    active[bi] = int(nodes.size()) - 1;
  }

  // Top-down: accept the largest subtrees that pass the kernel test.
  std::vector<std::vector<int>> clusters;
  std::vector<int> stack{active[0]};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    const Node& nd = nodes[id];
    int k = int(nd.members.size());
    if (k == 1) {
      clusters.push_back(nd.members);
      continue;
    }
    Cx c = centroid(ev, nd.members);
    double spread = 0;
    for (int i : nd.members) spread = std::max(spread, std::abs(ev(i) - c));
    // A k-fold eigenvalue splits by about (backward error)^(1/k).
    double bound = std::max(tol.cluster_tol, std::pow(tol.tol, 1.0 / k)) * std::max(1.0, std::abs(c));
    bool accept = spread < tol.cluster_tol;
    if (!accept && spread <= bound) {
      if (invariance_defect(m, c, k) > 1e-7)
        throw Error(ErrorCode::ClusterAmbiguity, "eigenvalues near " + Eigenvalue::from_value(c).to_string() +
                                                     " are neither separated nor a single cluster");
      accept = true;
    }
    if (accept) {
      clusters.push_back(nd.members);
    } else {
      stack.push_back(nd.left);
      stack.push_back(nd.right);
    }
  }

  struct Cl {
    Cx c;
    int k;
  };
  std::vector<Cl> cls;
  for (const auto& cl : clusters) {
    Cx c = centroid(ev, cl);
    if (std::abs(std::abs(c) - 1.0) < tol.cluster_tol) c /= std::abs(c);
    if (real && std::abs(c.imag()) < tol.cluster_tol) c = c.real();
    cls.push_back({c, int(cl.size())});
  }

  // Exact conjugate symmetry for real input.
  std::vector<bool> done(cls.size(), false);
  std::vector<EigenGroup> groups;
  auto make_space = [&](Cx c, int k) {
    Mat p = mat_pow(m - c * Mat::Identity(n, n), k);
    Eigen::JacobiSVD<Mat> svd(p, Eigen::ComputeFullV);
    Mat basis = svd.matrixV().rightCols(k);
    if (real && c.imag() == 0.0) {
      Subspace s = Subspace::span(basis, 1e-6);
      if (s.dim() == k) {
        try {
          return Subspace::span(s.real_basis(1e-6), 1e-6);
        } catch (const Error&) {
        }
      }
    }
    return Subspace::span(basis, 1e-12);
  };
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (done[i]) continue;
    done[i] = true;
    EigenGroup g;
    g.mult = cls[i].k;
    g.lambda = Eigenvalue::from_value(cls[i].c, tol.cluster_tol);
    if (real && cls[i].c.imag() != 0.0) {
      int partner = -1;
      double best = 1e300;
      for (std::size_t j = 0; j < cls.size(); ++j) {
        if (done[j] || cls[j].k != cls[i].k) continue;
        double d = std::abs(cls[j].c - std::conj(cls[i].c));
        if (d < best) best = d, partner = int(j);
      }
      if (partner < 0 || best > 1e-3 * std::max(1.0, std::abs(cls[i].c)))
        throw Error(ErrorCode::ClusterAmbiguity, "conjugate eigenvalue cluster not found");
      done[partner] = true;
      if (cls[i].c.imag() < 0) g.lambda = g.lambda.conj();
      g.space = make_space(g.lambda.value, g.mult);
      EigenGroup h;
      h.mult = g.mult;
      h.lambda = g.lambda.conj();
      h.space = g.space.conj();
      groups.push_back(g);
      groups.push_back(h);
    } else {
      g.space = make_space(g.lambda.value, g.mult);
      groups.push_back(g);
    }
  }
  for (auto& g : groups)
    if (g.space.dim() != g.mult) throw Error(ErrorCode::ClusterAmbiguity, "generalized eigenspace has wrong dimension");

  Mat b(n, n);
  int col = 0;
  for (const auto& g : groups) {
    b.middleCols(col, g.mult) = g.space.basis();
    col += g.mult;
  }
  Eigen::PartialPivLU<Mat> lu(b);
  Mat binv = lu.inverse();
  Mat a = binv * m * b;
  Mat ms_c = Mat::Zero(n, n), mu_c = Mat::Zero(n, n), n_c = Mat::Zero(n, n);
  col = 0;
  double off = 0;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    auto& g = groups[gi];
    int k = g.mult;
    for (int i = 0; i < n; ++i)
      for (int j = col; j < col + k; ++j)
        if (i < col || i >= col + k) off = std::max(off, std::abs(a(i, j)));
    Mat blk = a.block(col, col, k, k) / g.lambda.value;
    ms_c.block(col, col, k, k) = g.lambda.value * Mat::Identity(k, k);
    mu_c.block(col, col, k, k) = blk;
    n_c.block(col, col, k, k) = unipotent_log(blk);
    Mat e = Mat::Zero(n, n);
    e.block(col, col, k, k) = Mat::Identity(k, k);
    g.projector = b * e * binv;
    col += k;
  }
  if (off > 1e-6 * mat_scale(m))
    throw Error(ErrorCode::ClusterAmbiguity, "generalized eigenspaces are not invariant");
  out.ms = b * ms_c * binv;
  out.mu = b * mu_c * binv;
  out.n = b * n_c * binv;
  if (real) {
    out.ms = out.ms.real().cast<Cx>();
    out.mu = out.mu.real().cast<Cx>();
    out.n = out.n.real().cast<Cx>();
    for (auto& g : groups)
      if (g.lambda.is_real(0)) g.projector = g.projector.real().cast<Cx>();
  }
  out.groups = std::move(groups);
  return out;
}

const EigenGroup* AutomorphismParts::find(const Eigenvalue& l, double tol) const {
  for (const auto& g : groups)
    if (g.lambda.same(l, tol)) return &g;
  return nullptr;
}

Mat AutomorphismParts::projector_where(bool (*pred)(const Eigenvalue&)) const {
  int n = int(m.rows());
  Mat p = Mat::Zero(n, n);
  for (const auto& g : groups)
    if (pred(g.lambda)) p += g.projector;
  if (is_real(m, 1e-9)) p = p.real().cast<Cx>();
  return p;
}

Mat AutomorphismParts::projector_one() const {
  return projector_where([](const Eigenvalue& e) { return e.is_one(); });
}

Mat AutomorphismParts::projector_not_one() const {
  return projector_where([](const Eigenvalue& e) { return !e.is_one(); });
}

Subspace AutomorphismParts::space_one() const {
  for (const auto& g : groups)
    if (g.lambda.is_one()) return g.space;
  return Subspace::zero(int(m.rows()));
}

Subspace AutomorphismParts::space_not_one() const {
  Subspace s = Subspace::zero(int(m.rows()));
  for (const auto& g : groups)
    if (!g.lambda.is_one()) s = s.sum(g.space);
  return s;
}

std::map<int, int> jordan_block_counts(const Mat& n, const Subspace& v, double tol) {
  std::map<int, int> out;
  int d = v.dim();
  if (d == 0) return out;
  std::vector<int> r(d + 2, 0);
  Mat p = v.basis();
  r[0] = d;
  for (int k = 1; k <= d + 1; ++k) {
    p = n * p;
    r[k] = numeric_rank(p, tol);
  }
  for (int l = 1; l <= d; ++l) {
    int c = r[l - 1] - 2 * r[l] + (l + 1 <= d + 1 ? r[l + 1] : 0);
    if (c < 0) throw Error(ErrorCode::ClusterAmbiguity, "inconsistent nilpotent ranks");
    if (c > 0) out[l] = c;
  }
  return out;
}

Mat restrict_to(const Mat& a, const Subspace& v) { return v.basis().adjoint() * a * v.basis(); }

}  // namespace seif
