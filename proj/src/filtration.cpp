#include "seif/filtration.hpp"

namespace seif {

Subspace IncFiltration::at(int l) const {
  if (steps.empty() || l > hi()) return top;
  if (l < lo()) return Subspace::zero(top.ambient());
  return steps.at(l);
}

Subspace DecFiltration::at(int p) const {
  if (steps.empty() || p < lo()) return top;
  if (p > hi()) return Subspace::zero(top.ambient());
  return steps.at(p);
}

DecFiltration DecFiltration::apply(const Mat& a) const {
  DecFiltration r;
  r.top = top.apply(a);
  for (const auto& [p, s] : steps) r.steps[p] = s.apply(a);
  return r;
}

DecFiltration DecFiltration::shifted(int s) const {
  DecFiltration r;
  r.top = top;
  for (const auto& [p, v] : steps) r.steps[p - s] = v;
  return r;
}

DecFiltration DecFiltration::conj() const {
  DecFiltration r;
  r.top = top.conj();
  for (const auto& [p, v] : steps) r.steps[p] = v.conj();
  return r;
}

bool DecFiltration::equals(const DecFiltration& o, double tol) const {
  int a = std::min(lo(), o.lo()) - 1, b = std::max(hi(), o.hi()) + 1;
  for (int p = a; p <= b; ++p)
    if (!at(p).equals(o.at(p), tol)) return false;
  return true;
}

IncFiltration weight_filtration(const Mat& n, const Subspace& domain, int center, double tol) {
  IncFiltration w;
  w.top = domain;
  int d = domain.dim();
  int amb = domain.ambient();
  std::vector<Subspace> ker(2 * d + 3), im(d + 2);
  Mat p = Mat::Identity(amb, amb);
  for (int k = 0; k < int(ker.size()); ++k) {
    ker[k] = domain.preimage(p, Subspace::zero(amb), tol);
    if (k < int(im.size())) im[k] = domain.apply(p, tol);
    p = p * n;
  }
  for (int l = -d; l <= d; ++l) {
    Subspace s = Subspace::zero(amb);
    for (int j = std::max(0, -l); j <= d; ++j) {
      int k = l + 1 + j;
      if (k <= 0) continue;
      s = s.sum(ker[std::min(k, int(ker.size()) - 1)].intersect(im[j], tol), tol);
    }
    w.steps[center + l] = s;
  }
  return w;
}

int graded_dim(const IncFiltration& w, int l) { return w.at(l).dim() - w.at(l - 1).dim(); }

}  // namespace seif
