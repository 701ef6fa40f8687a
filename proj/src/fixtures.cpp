#include <cstdio>
#include <numeric>

#include "seif/forms.hpp"
#include "seif/thomseb.hpp"

namespace seif {

namespace {

// F^top = a real coordinate line moved by N, F^{top-1} = H.
DecFiltration line_filtration(const Mat& lnor, int m, int top) {
  Mat mono = double(sign_pow(m + 1)) * monodromy_of(SeifertForm::from_numeric(lnor));
  Mat n = jordan_parts(mono).n;
  int k = n.col(0).norm() >= n.col(1).norm() ? 0 : 1;
  Vec e = Vec::Zero(2);
  e(k) = 1;
  DecFiltration f;
  f.top = Subspace::full(2);
  f.steps[top - 1] = Subspace::full(2);
  f.steps[top] = Subspace::span(e);
  f.steps[top + 1] = Subspace::zero(2);
  return f;
}

}  // namespace

TEZPData p1_mirror() {
  TEZPData t;
  t.l = SeifertForm::from_exact(MatrixQ{{-1, 0}, {-2, -1}});
  t.m = 0;
  Mat lnor = t.l_nor().gram;
  t.hodge = pmhs_from_lnor(lnor, 0, line_filtration(lnor, 0, 1), false);
  return t;
}

TEZPData t_pqr(int p, int q, int r) {
  if (p <= 0 || q <= 0 || r <= 0) throw Error(ErrorCode::BadInput, "p, q, r must be positive");
  Rational kappa = Rational(1, p) + Rational(1, q) + Rational(1, r);
  if (kappa >= 1) throw Error(ErrorCode::HyperbolicityViolation, "1/p+1/q+1/r = " + to_string(kappa) + " is not below 1");
  long long chi = std::lcm(std::lcm((long long)p, (long long)q), (long long)r);
  TEZPData t;
  t.l = SeifertForm::from_exact(MatrixQ{{0, Rational(-chi)}, {Rational(chi), Rational(chi * chi) * (kappa - 1) / 2}});
  t.m = 2;
  Mat lnor = t.l_nor().gram;
  t.hodge = pmhs_from_lnor(lnor, 2, line_filtration(lnor, 2, 2), true);
  return t;
}

TEZPData fixture(const std::string& name) {
  if (name == "p1-mirror") return p1_mirror();
  if (name == "x2") return x_squared();
  const std::string pre = "t-pqr:";
  if (name.rfind(pre, 0) == 0) {
    int p = 0, q = 0, r = 0;
    char c1 = 0, c2 = 0;
    std::string rest = name.substr(pre.size());
    int used = 0;
    if (std::sscanf(rest.c_str(), "%d%c%d%c%d%n", &p, &c1, &q, &c2, &r, &used) == 5 && c1 == ',' && c2 == ',' &&
        used == int(rest.size()))
      return t_pqr(p, q, r);
    throw Error(ErrorCode::BadInput, "expected t-pqr:p,q,r, got " + name);
  }
  throw Error(ErrorCode::BadInput, "unknown fixture " + name);
}

}  // namespace seif
