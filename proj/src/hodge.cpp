#include "seif/hodge.hpp"

#include <sstream>

namespace seif {

Frac beta_of(const Eigenvalue& l) {
  if (!l.angle) throw Error(ErrorCode::NotQuasiUnipotent, "eigenvalue " + l.to_string() + " is not a root of unity");
  return *l.angle == Frac(0) ? Frac(1) : Frac(1) - *l.angle;
}

Eigenvalue lambda_of_beta(const Frac& beta) { return Eigenvalue::from_angle(-beta); }

namespace {

IncFiltration sum_filtrations(const IncFiltration& a, const IncFiltration& b, int amb, double tol) {
  IncFiltration w;
  w.top = a.top.sum(b.top, tol);
  int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  if (a.steps.empty()) lo = b.lo(), hi = b.hi();
  if (b.steps.empty()) lo = a.lo(), hi = a.hi();
  for (int l = lo; l <= hi; ++l) w.steps[l] = a.at(l).sum(b.at(l), tol);
  if (w.steps.empty()) w.top = Subspace::zero(amb).sum(w.top, tol);
  return w;
}

Subspace fp(const DecFiltration& f, int p) { return f.at(p); }

}  // namespace

HodgeData hodge_data(const SteenbrinkPMHS& p, const Tolerances& tol) {
  HodgeData h;
  h.parts = jordan_parts(p.m, tol);
  h.p_one = h.parts.projector_one();
  h.p_not_one = h.parts.projector_not_one();
  auto w1 = weight_filtration(h.parts.n, h.parts.space_one(), p.weight + 1, tol.tol);
  auto w0 = weight_filtration(h.parts.n, h.parts.space_not_one(), p.weight, tol.tol);
  h.w = sum_filtrations(w0, w1, p.dim(), tol.tol);
  return h;
}

GradedData graded_data(const Mat& s, const Mat& n, int m, const Subspace& domain, double tol) {
  GradedData g;
  g.w = weight_filtration(n, domain, m, tol);
  int d = domain.dim();
  int amb = domain.ambient();
  double sc = mat_scale(s);
  for (int l = -d; l <= d; ++l) {
    Subspace lift = g.w.at(m + l).complement(g.w.at(m + l - 1), tol);
    if (lift.is_zero()) continue;
    g.lift[l] = lift.basis();
  }
  for (int l = 0; l <= d; ++l) {
    if (!g.lift.count(l)) continue;
    Mat q = g.lift[l];
    Mat form = q.transpose() * s * mat_pow(n, l) * q;
    g.form[l] = form;
    if (numeric_rank(form, tol) < form.rows()) g.nondegenerate = false;
    if (max_abs(form.transpose() - double(sign_pow(m + l)) * form) > 1e3 * tol * sc) g.symmetric = false;
    Subspace a = g.w.at(m + l).preimage(mat_pow(n, l + 1), g.w.at(m - l - 3), tol);
    Subspace prim = a.complement(g.w.at(m + l - 1), tol);
    if (!prim.is_zero()) g.primitive[l] = prim.basis();
  }
  // S_l(N^i P_{m+l+2i}, N^j P_{m+l+2j}) = 0 for i != j.
  for (int l = 0; l <= d; ++l)
    for (int i = 0; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j) {
        if (!g.primitive.count(l + 2 * i) || !g.primitive.count(l + 2 * j)) continue;
        Mat x = mat_pow(n, i) * g.primitive[l + 2 * i];
        Mat y = mat_pow(n, j) * g.primitive[l + 2 * j];
        if (max_abs(x.transpose() * s * mat_pow(n, l) * y) > 1e3 * tol * sc * mat_scale(n)) g.orthogonal = false;
      }
  for (int k = m - d - 1; k <= m + d + 1; ++k)
    for (int l = m - d - 1; k + l < 2 * m; ++l) {
      Subspace a = g.w.at(k), b = g.w.at(l);
      if (a.is_zero() || b.is_zero()) continue;
      if (max_abs(a.basis().transpose() * s * b.basis()) > 1e3 * tol * sc) g.weight_orthogonal = false;
    }
  (void)amb;
  return g;
}

DeligneSplitting deligne_splitting(const SteenbrinkPMHS& p, const HodgeData& h, double tol) {
  DeligneSplitting out;
  DecFiltration fb = p.f.conj();
  int a = p.f.lo() - 1, b = p.f.hi() + 1;
  int wlo = h.w.lo() - 1, whi = h.w.hi() + 1;
  int total = 0;
  for (int pp = a; pp <= b; ++pp)
    for (int q = a; q <= b; ++q) {
      int k = pp + q;
      if (k < wlo || k > whi) continue;
      Subspace wk = h.w.at(k);
      Subspace left = fp(p.f, pp).intersect(wk, tol);
      if (left.is_zero()) continue;
      Subspace right = fp(fb, q).intersect(wk, tol);
      for (int j = 1; k - j - 1 >= wlo; ++j) right = right.sum(fp(fb, q - j).intersect(h.w.at(k - j - 1), tol), tol);
      Subspace ipq = left.intersect(right, tol);
      if (ipq.is_zero()) continue;
      out.i[{pp, q}] = ipq;
      total += ipq.dim();
      for (std::size_t gi = 0; gi < h.parts.groups.size(); ++gi) {
        const auto& g = h.parts.groups[gi];
        Subspace part = ipq.apply(g.projector, tol).intersect(g.space, tol);
        int e = k - p.weight - theta(g.lambda) + 1;
        if (part.is_zero() || e <= 0) continue;
        Subspace ker = part.preimage(mat_pow(h.parts.n, e), Subspace::zero(p.dim()), tol);
        if (!ker.is_zero()) out.i0[{pp, q, int(gi)}] = ker;
      }
    }
  if (total != p.dim()) throw Error(ErrorCode::BadInput, "Deligne splitting does not span H; not a mixed Hodge structure");
  return out;
}

bool is_split(const DeligneSplitting& d, double tol) {
  for (const auto& [pq, s] : d.i) {
    auto it = d.i.find({pq.second, pq.first});
    if (it == d.i.end() || !it->second.equals(s.conj(), tol)) return false;
  }
  return true;
}

SpectralPairs spectral_pairs(const SteenbrinkPMHS& p, const Tolerances& tol) { return spectral_pairs(p, hodge_data(p, tol), tol.tol); }

SpectralPairs spectral_pairs(const SteenbrinkPMHS& p, const HodgeData& h, double tol) {
  SpectralPairs out;
  int a = p.f.lo() - 1, b = p.f.hi() + 1;
  for (const auto& g : h.parts.groups) {
    Frac beta = beta_of(g.lambda);
    int th = theta(g.lambda);
    for (int w = h.w.lo(); w <= h.w.hi() + 1; ++w) {
      Subspace ww = h.w.at(w).apply(g.projector, tol).intersect(g.space, tol);
      Subspace wl = h.w.at(w - 1).apply(g.projector, tol).intersect(g.space, tol);
      if (ww.dim() == wl.dim()) continue;
      for (int pp = a; pp <= b; ++pp) {
        Subspace f0 = p.f.at(pp).apply(g.projector, tol).intersect(g.space, tol);
        Subspace f1 = p.f.at(pp + 1).apply(g.projector, tol).intersect(g.space, tol);
        int d = f0.intersect(ww, tol).sum(wl, tol).dim() - f1.intersect(ww, tol).sum(wl, tol).dim();
        if (d > 0) out[{Frac(p.weight - pp - 1) + beta, w - th}] += d;
      }
    }
  }
  return out;
}

std::string to_string(const SpectralPairs& spp) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [ak, mult] : spp) {
    if (!first) os << " ";
    first = false;
    os << "(" << frac_string(ak.first) << "," << ak.second << ")";
    if (mult > 1) os << "x" << mult;
  }
  return os.str();
}

Frac Ladder::distance() const { return alpha * 2 + Frac(l + 1 - weight_m); }

std::vector<Ladder> ladders(const SteenbrinkPMHS& p, const HodgeData& h, const DeligneSplitting& d) {
  std::vector<Ladder> out;
  for (const auto& [key, sp] : d.i0) {
    auto [pp, q, gi] = key;
    const auto& g = h.parts.groups[gi];
    Ladder l;
    l.p = pp;
    l.q = q;
    l.lambda = g.lambda;
    l.l = pp + q - p.weight - theta(g.lambda);
    l.alpha = Frac(p.weight - pp - 1) + beta_of(g.lambda);
    l.mult = sp.dim();
    l.single = pp == q && g.lambda.is_real();
    l.weight_m = p.weight;
    l.group = gi;
    out.push_back(l);
  }
  return out;
}

std::vector<Ladder> ladders(const SteenbrinkPMHS& p, const Tolerances& tol) {
  auto h = hodge_data(p, tol);
  return ladders(p, h, deligne_splitting(p, h, tol.tol));
}

SpectralPairs ladder_pairs(const std::vector<Ladder>& ls) {
  SpectralPairs out;
  for (const auto& l : ls)
    for (int j = 0; j <= l.l; ++j) out[{l.alpha + j, l.weight_m + l.l - 2 * j}] += l.mult;
  return out;
}

bool Report::ok() const {
  for (const auto& i : items)
    if (!i.pass) return false;
  return true;
}

std::string Report::to_string() const {
  std::ostringstream os;
  for (const auto& i : items) {
    os << (i.pass ? "PASS " : "FAIL ") << i.name;
    if (i.residual > 0) os << " (residual " << i.residual << ")";
    if (!i.detail.empty()) os << ": " << i.detail;
    os << "\n";
  }
  return os.str();
}

namespace {

void add(Report& r, const std::string& name, double residual, double thr, const std::string& detail = "") {
  r.items.push_back({name, residual <= thr, residual, detail});
}

}  // namespace

Report check_pmhs(const SteenbrinkPMHS& p, const Tolerances& tol) {
  Report r;
  const double t = tol.tol;
  int n = p.dim();
  const Mat& s = p.s;
  double ss = mat_scale(s), sm = mat_scale(p.m);
  r.items.push_back({"S nondegenerate", numeric_rank(s, t) == n, 0, ""});
  add(r, "M is an isometry of S", max_abs(p.m.transpose() * s * p.m - s) / (ss * sm * sm), t);
  HodgeData h;
  try {
    h = hodge_data(p, tol);
  } catch (const Error& e) {
    r.items.push_back({"Jordan decomposition", false, 0, e.what()});
    return r;
  }
  const Mat& nn = h.parts.n;
  double sn = mat_scale(nn);
  Mat a0 = h.p_not_one, a1 = h.p_one;
  add(r, "symmetry on H_{!=1}", max_abs(a0.transpose() * (s - double(sign_pow(p.weight)) * s.transpose()) * a0) / ss, t);
  add(r, "symmetry on H_1", max_abs(a1.transpose() * (s - double(sign_pow(p.weight + 1)) * s.transpose()) * a1) / ss, t);
  add(r, "N is an infinitesimal isometry", max_abs(nn.transpose() * s + s * nn) / (ss * sn), t);

  double stab = 0, griff = 0;
  for (int pp = p.f.lo(); pp <= p.f.hi(); ++pp) {
    Subspace fpp = p.f.at(pp);
    if (fpp.is_zero()) continue;
    Mat q = fpp.basis();
    Mat proj = fpp.projector();
    stab = std::max(stab, max_abs(h.parts.ms * q - proj * h.parts.ms * q) / sm);
    Mat prev = p.f.at(pp - 1).projector();
    griff = std::max(griff, max_abs(nn * q - prev * nn * q) / sn);
  }
  add(r, "F is stable under M_s", stab, 1e3 * t);
  add(r, "N F^p in F^{p-1}", griff, 1e3 * t);

  bool opposed = true;
  DecFiltration fb = p.f.conj();
  std::string bad;
  for (int k = h.w.lo(); k <= h.w.hi(); ++k) {
    Subspace wk = h.w.at(k), wl = h.w.at(k - 1);
    if (wk.dim() == wl.dim()) continue;
    for (int pp = p.f.lo() - 1; pp <= p.f.hi() + 1; ++pp) {
      Subspace a = p.f.at(pp).intersect(wk, t).sum(wl, t);
      Subspace b = fb.at(k + 1 - pp).intersect(wk, t).sum(wl, t);
      if (a.sum(b, t).dim() != wk.dim() || a.intersect(b, t).dim() != wl.dim()) {
        opposed = false;
        bad = "Gr_" + std::to_string(k) + " at p=" + std::to_string(pp);
      }
    }
  }
  r.items.push_back({"Hodge decomposition on Gr^W", opposed, 0, bad});

  double iso = 0;
  for (int pp = p.f.lo() - 1; pp <= p.f.hi() + 1; ++pp) {
    Subspace x0 = p.f.at(pp).apply(a0, t), y0 = p.f.at(p.weight + 1 - pp).apply(a0, t);
    if (!x0.is_zero() && !y0.is_zero()) iso = std::max(iso, max_abs(x0.basis().transpose() * s * y0.basis()) / ss);
    Subspace x1 = p.f.at(pp).apply(a1, t), y1 = p.f.at(p.weight + 2 - pp).apply(a1, t);
    if (!x1.is_zero() && !y1.is_zero()) iso = std::max(iso, max_abs(x1.basis().transpose() * s * y1.basis()) / ss);
  }
  add(r, "isotropy of F", iso, 1e3 * t);

  try {
    auto d = deligne_splitting(p, h, t);
    bool pos = true;
    std::string where;
    double worst = 0;
    for (const auto& l : ladders(p, h, d)) {
      const Subspace& sp = d.i0.at({l.p, l.q, l.group});
      int mp = p.weight + theta(l.lambda);
      Mat q = sp.basis();
      Mat nl = mat_pow(p.is_signed ? Mat(-nn) : nn, l.l);
      Mat hm = ipow(2 * l.p - mp - l.l) * (q.transpose() * s * nl * q.conjugate());
      double herm = max_abs(hm - hm.adjoint()) / mat_scale(hm);
      Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (hm + hm.adjoint()));
      double mn = es.eigenvalues().minCoeff() / mat_scale(hm);
      worst = std::max(worst, herm);
      if (herm > 1e-6 || mn <= 1e-7) {
        pos = false;
        where = "I^{" + std::to_string(l.p) + "," + std::to_string(l.q) + "}_0 at lambda=" + l.lambda.to_string();
      }
    }
    r.items.push_back({"positivity on primitive parts", pos, worst, where});
    r.items.push_back({"Deligne splitting spans H", true, 0, ""});
  } catch (const Error& e) {
    r.items.push_back({"Deligne splitting spans H", false, 0, e.what()});
  }
  return r;
}

SteenbrinkPMHS transform(const SteenbrinkPMHS& p, const Mat& c) {
  SteenbrinkPMHS r = p;
  Mat ci = c.inverse();
  r.m = ci * p.m * c;
  r.s = c.transpose() * p.s * c;
  r.f = p.f.apply(ci);
  return r;
}

}  // namespace seif
