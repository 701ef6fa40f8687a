#include "seif/twist.hpp"

#include "seif/classify.hpp"

namespace seif {

namespace {

void add(Report& r, const std::string& name, double residual, double thr, const std::string& detail = "") {
  r.items.push_back({name, residual <= thr, residual, detail});
}

// Hermitian and positive definite up to tolerance; returns the antihermitian residual.
bool positive_definite(const Mat& h, double& residual) {
  double sc = mat_scale(h);
  residual = max_abs(h - h.adjoint()) / sc;
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (h + h.adjoint()));
  return residual < 1e-6 && es.eigenvalues().minCoeff() / sc > 1e-7;
}

bool small_alpha(const Eigenvalue& l) {
  if (l.angle) return beta_of(l) <= Frac(1, 2);
  return alpha_value(l) <= 0.5 + 1e-12;
}

std::string ladder_name(const Ladder& l) {
  return "I^{" + std::to_string(l.p) + "," + std::to_string(l.q) + "}_0 at lambda=" + l.lambda.to_string();
}

}  // namespace

Mat nu_inverse(const Mat& m, const AutomorphismParts& parts) {
  int d = int(m.rows());
  return (m - Mat::Identity(d, d)) * parts.projector_not_one() - expm1_over(parts.n) * parts.projector_one();
}

NormalizedSeifert normalized_seifert(const SteenbrinkPMHS& p, const AutomorphismParts& parts, double tol) {
  NormalizedSeifert out;
  out.nu_inv = nu_inverse(p.m, parts);
  if (numeric_rank(out.nu_inv, tol) < p.dim()) throw Error(ErrorCode::SingularNu, "nu is not invertible");
  out.nu = out.nu_inv.inverse();
  out.lnor = -p.s * out.nu_inv;
  return out;
}

NormalizedSeifert normalized_seifert(const SteenbrinkPMHS& p, const Tolerances& tol) {
  return normalized_seifert(p, jordan_parts(p.m, tol), tol.tol);
}

Mat lsym(const Mat& l, const Mat& n, Cx lambda, Cx kappa, double tol) {
  if (std::abs(kappa * kappa - lambda) > tol * std::max(1.0, std::abs(lambda)))
    throw Error(ErrorCode::BadSquareRoot, "kappa^2 differs from lambda");
  return kappa * l * nilpotent_exp(-0.5 * n);
}

Mat lherm(const Mat& l, const Mat& n, const Subspace& h_lambda, Cx lambda, Cx kappa, double tol) {
  Mat q = h_lambda.basis();
  return q.transpose() * lsym(l, n, lambda, kappa, tol) * q.conjugate();
}

Report verify_seifert_identities(const SteenbrinkPMHS& p, const Tolerances& tol) {
  Report r;
  const double t = tol.tol;
  HodgeData h = hodge_data(p, tol);
  const auto& parts = h.parts;
  auto gam = gamma_automorphism(parts, t);
  auto ns = normalized_seifert(p, parts, t);
  const Mat& g = gam.g;
  const Mat& ln = ns.lnor;
  Mat e = nilpotent_exp(-0.5 * parts.n);
  double gn = std::max(1.0, g.operatorNorm());
  double ls = mat_scale(ln) * gn * gn;
  double ss = mat_scale(p.s);

  double r_not_one = 0, r_one = 0;
  for (std::size_t i = 0; i < parts.groups.size(); ++i) {
    const auto& grp = parts.groups[i];
    Mat qa = grp.space.basis();
    if (grp.lambda.is_one()) {
      Mat rhs = (g * qa).transpose() * ln * e * g * qa;
      r_one = std::max(r_one, max_abs(qa.transpose() * p.s * qa - rhs) / ss);
      continue;
    }
    const EigenGroup* cg = parts.find(grp.lambda.conj(), tol.cluster_tol);
    if (!cg) throw Error(ErrorCode::BadInput, "eigenvalues are not closed under conjugation");
    Mat qb = cg->space.basis();
    Cx c = -1.0 / kTwoPiI * std::exp(-kI * kPi * gam.alpha[i]);
    Mat rhs = c * ((g * qa).transpose() * ln * e * g * qb);
    r_not_one = std::max(r_not_one, max_abs(qa.transpose() * p.s * qb - rhs) / ss);
  }
  add(r, "S from L^nor and G on H_{!=1}", r_not_one, t);
  add(r, "S from L^nor and G on H_1", r_one, t);

  // Isotropy of G(F) for the L^sym pairings.
  double iso0 = 0, iso1 = 0;
  for (std::size_t i = 0; i < parts.groups.size(); ++i) {
    const auto& grp = parts.groups[i];
    bool one = grp.lambda.is_one();
    const EigenGroup* cg = one ? &grp : parts.find(grp.lambda.conj(), tol.cluster_tol);
    int shift = one ? p.weight + 2 : p.weight + 1;
    for (int pp = p.f.lo() - 1; pp <= p.f.hi() + 1; ++pp) {
      Subspace x = p.f.at(pp).apply(grp.projector, t).apply(g, t);
      Subspace y = p.f.at(shift - pp).apply(cg->projector, t).apply(g, t);
      if (x.is_zero() || y.is_zero()) continue;
      double v = max_abs(x.basis().transpose() * ln * e * y.basis()) / ls;
      (one ? iso1 : iso0) = std::max(one ? iso1 : iso0, v);
    }
  }
  add(r, "G(F) isotropic for L^sym on H_{!=1}", iso0, t);
  add(r, "G(F) isotropic for L^sym on H_1", iso1, t);

  try {
    auto d = deligne_splitting(p, h, t);
    bool pos = true, gpos = true;
    double worst = 0;
    std::string where, gwhere;
    for (const auto& lad : ladders(p, h, d)) {
      Mat q = d.i0.at({lad.p, lad.q, lad.group}).basis();
      Frac dist = lad.distance();
      Cx c = std::exp(kI * kPi * frac_to_double(dist) / 2.0);
      if (p.is_signed && (lad.l + 1) % 2 == 0) c = -c;
      Mat nl = mat_pow(parts.n, lad.l);
      double res;
      if (!positive_definite(std::conj(c) * (q.transpose() * ln * nl * q.conjugate()), res)) {
        pos = false;
        where = ladder_name(lad);
      }
      worst = std::max(worst, res);
      Mat gq = g * q;
      if (!positive_definite(std::conj(c) * (gq.transpose() * ln * nl * gq.conjugate()), res)) {
        gpos = false;
        gwhere = ladder_name(lad);
      }
      worst = std::max(worst, res);
    }
    r.items.push_back({"L^nor positivity on I^{pq}_0", pos, worst, where});
    r.items.push_back({"L^nor positivity on G(I^{pq}_0)", gpos, worst, gwhere});

    if (max_abs(parts.n) <= t * mat_scale(p.m)) {
      bool hp = true;
      std::string hw;
      for (const auto& lad : ladders(p, h, d)) {
        const Subspace& sp = d.i0.at({lad.p, lad.q, lad.group});
        Cx lam = lad.lambda.value * double(sign_pow(p.weight + 1));
        Cx kappa = std::exp(-kI * kPi * (frac_to_double(lad.alpha) - (p.weight - 1) / 2.0));
        double res;
        if (!positive_definite(lherm(ln, parts.n, sp, lam, kappa, 1e-7), res)) {
          hp = false;
          hw = ladder_name(lad);
        }
      }
      r.items.push_back({"pure hermitian positivity of L^herm", hp, 0, hw});
    }
  } catch (const Error& e) {
    r.items.push_back({"L^nor positivity on I^{pq}_0", false, 0, e.what()});
  }
  return r;
}

Decomposition<SeifType> classify_pmhs_seifert(const SteenbrinkPMHS& p, const Tolerances& tol) {
  auto h = hodge_data(p, tol);
  auto d = deligne_splitting(p, h, tol.tol);
  if (!is_split(d, tol.tol)) throw Error(ErrorCode::NotSplit, "the mixed Hodge structure is not split over R");
  int m = p.weight;
  Decomposition<SeifType> out;
  for (const auto& lad : ladders(p, h, d)) {
    int n = lad.l + 1;
    int flip = (p.is_signed && n % 2 == 0) ? -1 : 1;
    Eigenvalue lam = sign_pow(m + 1) > 0 ? lad.lambda : lad.lambda.neg();
    Frac dist = lad.distance();
    if (!lad.lambda.is_real()) {
      if (*lad.lambda.angle > Frac(1, 2)) continue;
      Cx zeta = double(flip) * Eigenvalue::from_angle(dist / 4).value;
      out.push_back({canonicalize(SeifType::s2circle_zeta(lam, n, zeta)), lad.mult});
      continue;
    }
    if (!lad.single && lad.p < lad.q) continue;
    if (dist.denominator() != 1) throw Error(ErrorCode::BadInput, "non-integral distance at a real eigenvalue");
    long long dd = dist.numerator();
    if (dd % 2 != 0) {
      out.push_back({SeifType::s2pm(lam, n), lad.mult});
    } else {
      int eps = sign_pow(dd / 2) * flip;
      out.push_back({SeifType::s1(lam, n, eps), lad.mult * (lad.single ? 1 : 2)});
    }
  }
  return normalize(out);
}

SteenbrinkPMHS sqrt_tate_twist(const SteenbrinkPMHS& p, const Tolerances& tol) {
  const double t = tol.tol;
  int d = p.dim();
  auto parts = jordan_parts(p.m, tol);
  auto ns = normalized_seifert(p, parts, t);
  SteenbrinkPMHS out;
  out.m = -p.m;
  out.weight = p.weight + 1;
  out.is_signed = p.is_signed;
  auto parts_t = jordan_parts(out.m, tol);
  Mat nu_t = nu_inverse(out.m, parts_t).inverse();
  out.s = -ns.lnor * nu_t;
  Mat tr = gamma_automorphism(parts_t, t).g.inverse() * gamma_automorphism(parts, t).g;
  out.f.top = Subspace::full(d);
  for (int r = p.f.lo(); r <= p.f.hi() + 1; ++r) {
    Subspace acc = Subspace::zero(d);
    for (const auto& grp : parts.groups) {
      int delta = small_alpha(grp.lambda) ? 1 : 0;
      acc = acc.sum(p.f.at(r - delta).apply(grp.projector, t).apply(tr, t), t);
    }
    out.f.steps[r] = acc;
  }
  return out;
}

SteenbrinkPMHS tate_twist(const SteenbrinkPMHS& p) {
  SteenbrinkPMHS out = p;
  out.weight = p.weight + 2;
  out.f = p.f.shifted(-1);
  return out;
}

Report twist_report(const SteenbrinkPMHS& p, const Tolerances& tol) {
  Report r;
  const double t = tol.tol;
  auto tw = sqrt_tate_twist(p, tol);
  auto rep = check_pmhs(tw, tol);
  r.items.push_back({"twisted structure is a PMHS", rep.ok(), 0, rep.ok() ? "" : rep.to_string()});

  SpectralPairs expect;
  for (const auto& [ak, mult] : spectral_pairs(p, tol)) expect[{ak.first + Frac(1, 2), ak.second + 1}] = mult;
  auto got = spectral_pairs(tw, tol);
  r.items.push_back({"spectral pairs shift by (1/2,1)", got == expect, 0, got == expect ? "" : to_string(got)});

  Mat l0 = normalized_seifert(p, tol).lnor, l1 = normalized_seifert(tw, tol).lnor;
  add(r, "same L^nor", max_abs(l0 - l1) / mat_scale(l0), t);

  auto tw2 = sqrt_tate_twist(tw, tol);
  auto tt = tate_twist(p);
  double res = std::max(max_abs(tw2.m - p.m) / mat_scale(p.m), max_abs(tw2.s - p.s) / mat_scale(p.s));
  add(r, "double twist keeps M and S", res, 1e3 * t);
  bool feq = tw2.f.equals(tt.f, 1e3 * t);
  r.items.push_back({"double twist F^{p+1} = F^p", feq, 0, ""});
  auto w0 = hodge_data(p, tol).w, w2 = hodge_data(tw2, tol).w;
  bool weq = tw2.weight == p.weight + 2;
  for (int l = w0.lo() - 1; l <= w0.hi() + 1; ++l) weq = weq && w2.at(l + 2).equals(w0.at(l), 1e3 * t);
  r.items.push_back({"double twist W_{l+2} = W_l", weq, 0, ""});
  return r;
}

}  // namespace seif
