#include "seif/flbundle.hpp"

#include <cmath>

namespace seif {

namespace {

Cx two_pi_i_pow(int k) { return std::pow(kTwoPiI, k); }

}  // namespace

Vec evaluate(const ElementarySection& s, const Mat& n, Cx log_tau) {
  return std::exp(log_tau * frac_to_double(s.alpha)) * (nilpotent_exp(-log_tau / kTwoPiI * n) * s.a);
}

ElementarySection d_tau(const ElementarySection& s, const Mat& n) {
  int d = int(n.rows());
  Mat op = frac_to_double(s.alpha) * Mat::Identity(d, d) - n / kTwoPiI;
  return {op * s.a, s.alpha - 1};
}

ElementarySection d_tau_inverse(const ElementarySection& s, const Mat& n) {
  if (s.alpha == Frac(-1)) throw Error(ErrorCode::ExponentOutOfRange, "d_tau^{-1} is not defined on C^{-1}");
  int d = int(n.rows());
  Mat op = frac_to_double(s.alpha + 1) * Mat::Identity(d, d) - n / kTwoPiI;
  return {op.inverse() * s.a, s.alpha + 1};
}

ElementarySection fl_elementary(const ElementarySection& s, const Mat& n) {
  Frac alpha = s.alpha + 1;
  if (alpha <= Frac(0)) throw Error(ErrorCode::ExponentOutOfRange, "Fourier-Laplace needs alpha > 0, got " + frac_string(alpha));
  return {gamma_block(frac_to_double(alpha), n) * s.a, alpha};
}

Vec quadrature_fl(const ElementarySection& s, const Mat& n, Cx z, double tol) {
  double alpha = frac_to_double(s.alpha + 1);
  if (alpha <= 0) throw Error(ErrorCode::ExponentOutOfRange, "Fourier-Laplace needs alpha > 0");
  int d = int(n.rows());
  Cx lz = std::log(z);
  double lo = -75.0 / alpha, hi = 5.5;
  // I_k = int exp(-e^u) e^{alpha u} (-(log z + u)/2 pi i)^k du.
  auto integrals = [&](double h) {
    std::vector<Cx> acc(d, Cx(0));
    int steps = int(std::ceil((hi - lo) / h));
    for (int j = 0; j <= steps; ++j) {
      double u = lo + j * h;
      double w = (j == 0 || j == steps) ? 0.5 : 1.0;
      double base = std::exp(-std::exp(u) + alpha * u) * w * h;
      Cx x = -(lz + u) / kTwoPiI, pw = 1;
      for (int k = 0; k < d; ++k) {
        acc[k] += base * pw;
        pw *= x;
      }
    }
    return acc;
  };
  auto assemble = [&](const std::vector<Cx>& ik) {
    Vec out = Vec::Zero(d);
    Vec nk = s.a;
    double fact = 1;
    for (int k = 0; k < d; ++k) {
      if (k > 0) fact *= k;
      out += ik[k] / fact * nk;
      nk = n * nk;
    }
    return Vec(std::exp(alpha * lz) * out);
  };
  double h = 0.25;
  Vec prev = assemble(integrals(h));
  for (int it = 0; it < 10; ++it) {
    h /= 2;
    Vec cur = assemble(integrals(h));
    if ((cur - prev).cwiseAbs().maxCoeff() <= tol * std::max(1.0, cur.cwiseAbs().maxCoeff())) return cur;
    prev = cur;
  }
  throw Error(ErrorCode::QuadratureNonconvergence, "trapezoid rule did not settle");
}

Cx pairing_P(const FlatPairing& f, const ElementarySection& s1, const ElementarySection& s2, Cx log_w) {
  Vec a = evaluate(s1, f.n, log_w);
  Vec b = evaluate(s2, f.n, log_w + kI * kPi);
  return (a.transpose() * f.lnor * b)(0, 0) / two_pi_i_pow(f.m + 1);
}

Frac pairing_power(const ElementarySection& s1, const ElementarySection& s2) { return s1.alpha + s2.alpha; }

Cx pairing_P_closed(const FlatPairing& f, const ElementarySection& s1, const ElementarySection& s2, Cx log_w) {
  Frac pw = pairing_power(s1, s2);
  if (pw.denominator() != 1) throw Error(ErrorCode::IncompatibleExponents, "exponents do not add up to an integer");
  Cx c = std::exp(kI * kPi * frac_to_double(s2.alpha)) *
         (s1.a.transpose() * f.lnor * nilpotent_exp(-0.5 * f.n) * s2.a)(0, 0) / two_pi_i_pow(f.m + 1);
  return std::exp(log_w * double(pw.numerator())) * c;
}

SeifertData seifert_from_triple_data(const TripleData& t, const Tolerances& tol) {
  SteenbrinkPMHS p;
  p.m = t.m;
  p.s = t.s;
  p.weight = t.weight;
  auto parts = jordan_parts(t.m, tol);
  for (const auto& g : parts.groups)
    if (!g.lambda.on_circle(tol.cluster_tol))
      throw Error(ErrorCode::EigenvalueOffCircle, "eigenvalue " + g.lambda.to_string() + " is not on the unit circle");
  double ss = mat_scale(t.s);
  Mat a0 = parts.projector_not_one(), a1 = parts.projector_one();
  double r0 = max_abs(a0.transpose() * (t.s - double(sign_pow(t.weight)) * t.s.transpose()) * a0) / ss;
  double r1 = max_abs(a1.transpose() * (t.s - double(sign_pow(t.weight + 1)) * t.s.transpose()) * a1) / ss;
  double inv = max_abs(t.m.transpose() * t.s * t.m - t.s) / ss;
  if (r0 > 1e3 * tol.tol || r1 > 1e3 * tol.tol || inv > 1e3 * tol.tol)
    throw Error(ErrorCode::ParityMismatch, "S must be (-1)^m-symmetric on H_{!=1}, (-1)^{m+1}-symmetric on H_1 and M-invariant");
  return {normalized_seifert(p, parts, tol.tol).lnor, t.weight};
}

TripleData triple_from_seifert_data(const SeifertData& l, const Tolerances& tol) {
  Mat mn = monodromy_of(SeifertForm::from_numeric(l.l));
  Mat m = double(sign_pow(l.weight + 1)) * mn;
  auto parts = jordan_parts(m, tol);
  Mat nu = nu_inverse(m, parts).inverse();
  return {m, -l.l * nu, l.weight};
}

BundleData bundle_from_seifert(const SeifertData& l) {
  Mat mono = double(sign_pow(l.weight + 1)) * monodromy_of(SeifertForm::from_numeric(l.l));
  return {mono, l.l / two_pi_i_pow(l.weight + 1), l.weight};
}

SeifertData seifert_from_bundle(const BundleData& b) { return {b.p * two_pi_i_pow(b.weight + 1), b.weight}; }

Cx bundle_pairing_reversed(const BundleData& b, const Vec& b_at_minus_z, const Vec& a_at_z) {
  return (b_at_minus_z.transpose() * b.p * b.monodromy.inverse() * a_at_z)(0, 0);
}

}  // namespace seif
