#include "seif/classify.hpp"

#include "seif/filtration.hpp"

namespace seif {

namespace {

// Lifts of the primitive part of the length-n chains in v:
// W_{n-1} cap ker N^n, with W centered at 0.
Subspace chain_tops(const Mat& n_op, const Subspace& v, const IncFiltration& w, int n, double tol) {
  Mat p = mat_pow(n_op, n);
  return w.at(n - 1).intersect(v.preimage(p, Subspace::zero(v.ambient()), tol), tol);
}

}  // namespace

Decomposition<IsoType> classify_triple(const IsometricTriple& t, const Tolerances& tol) {
  validate_triple(t, tol.tol);
  auto parts = jordan_parts(t.m, tol);
  const Mat& n_op = parts.n;
  Decomposition<IsoType> out;
  int m = t.sym;
  for (const auto& g : parts.groups) {
    const Eigenvalue& l = g.lambda;
    auto counts = jordan_block_counts(n_op, g.space, tol.tol);
    bool circle = l.on_circle(tol.cluster_tol);
    bool pm = l.is_one() || l.is_minus_one();
    if (!circle) {
      if (std::abs(l.value) < 1.0) continue;
      bool real = l.is_real(0.0);
      if (!real && l.value.imag() < 0) continue;
      for (auto [len, c] : counts) out.push_back({real ? IsoType::tr2r(l, len, m) : IsoType::tr4(l, len, m), c});
      continue;
    }
    if (!pm && (l.angle ? *l.angle > Frac(1, 2) : l.value.imag() < 0)) continue;
    auto w = weight_filtration(n_op, g.space, 0, tol.tol);
    for (auto [len, c] : counts) {
      int k = len + m + 1;
      if (pm && k % 2) {
        if (c % 2) throw Error(ErrorCode::InconsistentParity, "odd number of chains paired by a skew form");
        out.push_back({IsoType::tr2s1(l, len, m, 1), c / 2});
        continue;
      }
      Subspace tops = chain_tops(n_op, g.space, w, len, tol.tol);
      Mat q = pm ? tops.real_basis(tol.tol) : tops.basis();
      Mat sn = t.s * mat_pow(n_op, len - 1);
      Inertia in;
      if (pm) {
        Mat r = (q.transpose() * sn * q).real().cast<Cx>();
        in = signature(0.5 * (r + r.transpose()), 1e-7);
      } else {
        Mat h = ipow(-k) * (q.transpose() * sn * q.conjugate());
        in = hermitian_signature(0.5 * (h + h.adjoint()), 1e-7);
      }
      if (in.plus + in.minus != c)
        throw Error(ErrorCode::ClusterAmbiguity, "chain form rank does not match the block count");
      for (int e : {1, -1}) {
        int cnt = e > 0 ? in.plus : in.minus;
        if (!cnt) continue;
        out.push_back({pm ? IsoType::tr1(l, len, e) : IsoType::tr2s1(l, len, m, e), cnt});
      }
    }
  }
  return normalize(out);
}

namespace {

IsometricTriple restricted_triple(const Mat& m, const Mat& s, const Mat& basis, int sym) {
  IsometricTriple r;
  r.m = basis.transpose() * m * basis;
  r.s = basis.transpose() * s * basis;
  r.sym = sym;
  r.m = r.m.real().cast<Cx>();
  r.s = r.s.real().cast<Cx>();
  if (sym == 0) r.s = 0.5 * (r.s + r.s.transpose());
  else r.s = 0.5 * (r.s - r.s.transpose());
  return r;
}

}  // namespace

Decomposition<SeifType> classify_seifert(const SeifertForm& l, const Tolerances& tol) {
  validate_seifert(l, tol.tol);
  Mat m = monodromy_of(l);
  auto parts = jordan_parts(m, tol);
  int n = l.dim();
  Subspace not_m1 = Subspace::zero(n), hm1 = Subspace::zero(n);
  for (const auto& g : parts.groups) {
    if (g.lambda.is_minus_one()) hm1 = g.space;
    else not_m1 = not_m1.sum(g.space);
  }
  Mat g = l.gram;
  Decomposition<SeifType> out;
  if (not_m1.dim()) {
    Mat b = not_m1.real_basis(tol.tol);
    IsometricTriple t = restricted_triple(m, g + g.transpose(), b, 0);
    for (const auto& [tr, c] : classify_triple(t, tol)) {
      switch (tr.kind) {
        case TrKind::Tr1: out.push_back({SeifType::s1(tr.lambda, tr.n, tr.eps), c}); break;
        case TrKind::Tr2S1:
          if (tr.lambda.is_one()) out.push_back({SeifType::s2pm(tr.lambda, tr.n), c});
          else out.push_back({SeifType::s2circle(tr.lambda, tr.n, tr.eps), c});
          break;
        case TrKind::Tr2R: out.push_back({SeifType::s2real(tr.lambda, tr.n), c}); break;
        case TrKind::Tr4: out.push_back({SeifType::s4(tr.lambda, tr.n), c}); break;
      }
    }
  }
  if (hm1.dim()) {
    Mat b = hm1.real_basis(tol.tol);
    IsometricTriple t = restricted_triple(m, g.transpose() - g, b, 1);
    for (const auto& [tr, c] : classify_triple(t, tol)) {
      if (tr.kind == TrKind::Tr1) out.push_back({SeifType::s1(tr.lambda, tr.n, -tr.eps), c});
      else out.push_back({SeifType::s2pm(tr.lambda, tr.n), c});
    }
  }
  return normalize(out);
}

}  // namespace seif
