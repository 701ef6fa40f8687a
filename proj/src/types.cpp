#include "seif/types.hpp"

#include <algorithm>
#include <map>

namespace seif {

namespace {

bool lower_half(const Eigenvalue& l) {
  if (l.angle) return *l.angle > Frac(1, 2);
  return l.value.imag() < 0;
}

std::string sgn(int e) { return e > 0 ? "1" : "-1"; }

Eigenvalue hyperbolic_rep(const Eigenvalue& l) {
  Eigenvalue r = l;
  if (std::abs(r.value) < 1) r = r.inverse();
  if (r.value.imag() < 0) r = r.conj();
  if (std::abs(r.value.imag()) < 1e-12) r.value = r.value.real();
  return r;
}

}  // namespace

IsoType IsoType::tr1(const Eigenvalue& l, int n, int eps) { return {TrKind::Tr1, l, n, (n - 1) % 2, eps}; }
IsoType IsoType::tr2s1(const Eigenvalue& l, int n, int m, int eps) { return {TrKind::Tr2S1, l, n, m & 1, eps}; }
IsoType IsoType::tr2r(const Eigenvalue& l, int n, int m) { return {TrKind::Tr2R, l, n, m & 1, 1}; }
IsoType IsoType::tr4(const Eigenvalue& l, int n, int m) { return {TrKind::Tr4, l, n, m & 1, 1}; }

int IsoType::dim() const {
  switch (kind) {
    case TrKind::Tr1: return n;
    case TrKind::Tr2S1:
    case TrKind::Tr2R: return 2 * n;
    case TrKind::Tr4: return 4 * n;
  }
  return 0;
}

std::string IsoType::to_string() const {
  std::string l = lambda.to_string(), ns = std::to_string(n), ms = std::to_string(m);
  switch (kind) {
    case TrKind::Tr1: return "Tr(" + l + ",1," + ns + "," + sgn(eps) + ")";
    case TrKind::Tr2S1: return "Tr(" + l + ",2," + ns + "," + ms + "," + sgn(eps) + ")";
    case TrKind::Tr2R: return "Tr(" + l + ",2," + ns + "," + ms + ")";
    case TrKind::Tr4: return "Tr(" + l + ",4," + ns + "," + ms + ")";
  }
  return "";
}

Eigenvalue zeta0(const Eigenvalue& lambda, int n) {
  if (lambda.angle) {
    Frac th = *lambda.angle;
    if (th > Frac(1, 2)) th -= 1;
    return Eigenvalue::from_angle(-th / 2 + Frac(n + 1, 4));
  }
  Cx z = (std::conj(lambda.value) + 1.0) / std::abs(lambda.value + 1.0) * ipow(n + 1);
  return Eigenvalue::from_value(z);
}

SeifType SeifType::s1(const Eigenvalue& l, int n, int eps) { return {SeifKind::S1, l, n, eps}; }
SeifType SeifType::s2pm(const Eigenvalue& l, int n) { return {SeifKind::S2Pm, l, n, 1}; }
SeifType SeifType::s2circle(const Eigenvalue& l, int n, int eps) { return {SeifKind::S2Circle, l, n, eps}; }
SeifType SeifType::s2real(const Eigenvalue& l, int n) { return {SeifKind::S2Real, l, n, 1}; }
SeifType SeifType::s4(const Eigenvalue& l, int n) { return {SeifKind::S4, l, n, 1}; }

SeifType SeifType::s2circle_zeta(const Eigenvalue& l, int n, Cx zeta, double tol) {
  Cx z0 = zeta0(l, n).value;
  if (std::abs(zeta - z0) < tol) return s2circle(l, n, 1);
  if (std::abs(zeta + z0) < tol) return s2circle(l, n, -1);
  throw Error(ErrorCode::InconsistentParity, "zeta is not +-zeta0");
}

Eigenvalue SeifType::zeta() const {
  Eigenvalue z = zeta0(lambda, n);
  return eps > 0 ? z : z.neg();
}

int SeifType::dim() const {
  switch (kind) {
    case SeifKind::S1: return n;
    case SeifKind::S2Pm:
    case SeifKind::S2Circle:
    case SeifKind::S2Real: return 2 * n;
    case SeifKind::S4: return 4 * n;
  }
  return 0;
}

std::string SeifType::to_string() const {
  std::string l = lambda.to_string(), ns = std::to_string(n);
  switch (kind) {
    case SeifKind::S1: return "Seif(" + l + ",1," + ns + "," + sgn(eps) + ")";
    case SeifKind::S2Pm:
    case SeifKind::S2Real: return "Seif(" + l + ",2," + ns + ")";
    case SeifKind::S2Circle: return "Seif(" + l + ",2," + ns + "," + zeta().to_string() + ")";
    case SeifKind::S4: return "Seif(" + l + ",4," + ns + ")";
  }
  return "";
}

Decomposition<IsoType> canonicalize(const IsoType& t0) {
  IsoType t = t0;
  switch (t.kind) {
    case TrKind::Tr1:
      t.m = (t.n - 1) % 2;
      return {{t, 1}};
    case TrKind::Tr2S1: {
      if (lower_half(t.lambda)) {
        t.lambda = t.lambda.conj();
        t.eps *= sign_pow(t.n + t.m + 1);
      }
      if (t.lambda.is_one() || t.lambda.is_minus_one()) {
        int k = t.n + t.m + 1;
        if (k % 2) {
          t.eps = 1;
          return {{t, 1}};
        }
        return {{IsoType::tr1(t.lambda, t.n, sign_pow(k / 2) * t.eps), 2}};
      }
      return {{t, 1}};
    }
    case TrKind::Tr2R:
    case TrKind::Tr4:
      t.lambda = hyperbolic_rep(t.lambda);
      return {{t, 1}};
  }
  return {{t, 1}};
}

SeifType canonicalize(const SeifType& t0) {
  SeifType t = t0;
  if (t.kind == SeifKind::S2Circle && lower_half(t.lambda)) {
    t.lambda = t.lambda.conj();
    t.eps *= sign_pow(t.n + 1);
  }
  if (t.kind == SeifKind::S2Real || t.kind == SeifKind::S4) t.lambda = hyperbolic_rep(t.lambda);
  return t;
}

namespace {

template <class T>
Decomposition<T> normalize_impl(const Decomposition<T>& d) {
  std::map<std::string, std::pair<T, int>> acc;
  for (const auto& [t, k] : d) {
    auto key = t.to_string();
    auto it = acc.find(key);
    if (it == acc.end()) acc.emplace(key, std::make_pair(t, k));
    else it->second.second += k;
  }
  Decomposition<T> out;
  for (auto& [key, v] : acc)
    if (v.second) out.push_back(v);
  return out;
}

template <class T>
std::string join(const Decomposition<T>& d) {
  std::string s;
  for (const auto& [t, k] : d) {
    if (!s.empty()) s += " + ";
    s += t.to_string() + " x" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

Decomposition<IsoType> normalize(const Decomposition<IsoType>& d) {
  Decomposition<IsoType> all;
  for (const auto& [t, k] : d)
    for (const auto& [c, j] : canonicalize(t)) all.push_back({c, k * j});
  return normalize_impl(all);
}

Decomposition<SeifType> normalize(const Decomposition<SeifType>& d) {
  Decomposition<SeifType> all;
  for (const auto& [t, k] : d) all.push_back({canonicalize(t), k});
  return normalize_impl(all);
}

std::string to_string(const Decomposition<IsoType>& d) { return join(d); }
std::string to_string(const Decomposition<SeifType>& d) { return join(d); }

}  // namespace seif
