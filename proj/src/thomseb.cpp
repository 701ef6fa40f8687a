#include "seif/thomseb.hpp"

#include "seif/forms.hpp"

namespace seif {

namespace {

int hnor_sign(int m) { return sign_pow((long long)(m + 1) * (m + 2) / 2); }

bool has_nilpotent(const SteenbrinkPMHS& p, const Tolerances& tol) {
  return max_abs(jordan_parts(p.m, tol).n) > tol.tol * mat_scale(p.m);
}

Subspace kron_span(const Subspace& a, const Subspace& b, double tol) {
  int amb = a.ambient() * b.ambient();
  if (a.is_zero() || b.is_zero()) return Subspace::zero(amb);
  return Subspace::span(kron(a.basis(), b.basis()), tol);
}

struct Sector {
  Frac beta;
  std::map<int, Subspace> pieces;  // q -> P_beta G(F^q), for q in [lo-1, hi]
};

std::vector<Sector> sectors(const SectorFiltration& s, double tol) {
  const auto& f = s.gf;
  int d = int(s.parts.m.rows());
  if (f.top.ambient() != d) throw Error(ErrorCode::SectorMismatch, "filtration and monodromy live on different spaces");
  std::vector<Sector> out;
  for (const auto& g : s.parts.groups) {
    Sector sec;
    try {
      sec.beta = beta_of(g.lambda);
    } catch (const Error&) {
      throw Error(ErrorCode::SectorMismatch, "eigenvalue " + g.lambda.to_string() + " is not a root of unity");
    }
    for (int q = f.lo() - 1; q <= f.hi(); ++q) sec.pieces[q] = f.at(q).apply(g.projector, tol);
    out.push_back(sec);
  }
  for (int q = f.lo() - 1; q <= f.hi(); ++q) {
    int total = 0;
    for (const auto& sec : out) total += sec.pieces.at(q).dim();
    if (total != f.at(q).dim())
      throw Error(ErrorCode::SectorMismatch, "G(F^" + std::to_string(q) + ") is not the sum of its eigenvalue components");
  }
  return out;
}

Subspace piece_at(const Sector& s, const DecFiltration& f, int q, int d) {
  if (q < f.lo() - 1) return s.pieces.at(f.lo() - 1);
  if (q > f.hi()) return Subspace::zero(d);
  return s.pieces.at(q);
}

LatticeBasis tensor_fl(const LatticeBasis& a, const LatticeBasis& b) {
  if (!a.z_side || !b.z_side) throw Error(ErrorCode::TierMismatch, "FL tiers must be z-side lattices");
  LatticeBasis out;
  out.z_side = true;
  for (const auto& ga : a.generators)
    for (const auto& gb : b.generators) {
      std::map<Frac, Vec> terms;
      for (const auto& s : ga)
        for (const auto& t : gb) {
          Vec v = kron(Mat(s.a), Mat(t.a));
          auto [it, fresh] = terms.emplace(s.alpha + t.alpha, v);
          if (!fresh) it->second += v;
        }
      Section sec;
      for (const auto& [e, v] : terms) sec.push_back({v, e});
      out.generators.push_back(sec);
    }
  return out;
}

}  // namespace

SeifertForm TEZPData::l_hnor() const { return l.scaled(hnor_sign(m)); }

SeifertForm TEZPData::l_nor() const { return dual_pair(l_hnor()).dual; }

Mat TEZPData::monodromy() const { return double(sign_pow(m + 1)) * monodromy_of(l); }

std::optional<MatrixQ> TEZPData::monodromy_exact() const {
  if (!l.exact) return std::nullopt;
  return seif::monodromy_exact(*l.exact) * Rational(sign_pow(m + 1));
}

Mat TEZPData::m_hnor() const { return monodromy_of(l); }

void validate_tezp(const TEZPData& t, double tol) {
  if (t.mu() == 0) throw Error(ErrorCode::BadInput, "Seifert form must be nonempty");
  try {
    validate_seifert(t.l, tol);
  } catch (const Error& e) {
    throw Error(ErrorCode::BadInput, e.what());
  }
  if (t.hodge) {
    const auto& h = *t.hodge;
    if (h.dim() != t.mu()) throw Error(ErrorCode::BadInput, "Hodge tier has the wrong dimension");
    if (h.weight != t.m) throw Error(ErrorCode::BadInput, "Hodge tier has the wrong weight");
    Mat lnor = normalized_seifert(h, Tolerances{tol}).lnor;
    Mat expect = t.l_nor().gram;
    if (max_abs(lnor - expect) > 1e3 * tol * mat_scale(expect)) throw Error(ErrorCode::BadInput, "Hodge tier does not match L^nor");
  }
  if (t.fl) {
    if (!t.fl->z_side) throw Error(ErrorCode::BadInput, "FL tier must be a z-side lattice");
    for (const auto& g : t.fl->generators)
      for (const auto& s : g)
        if (s.a.size() != t.mu()) throw Error(ErrorCode::BadInput, "FL generator has the wrong dimension");
  }
}

TensorSeifert tensor_seifert(const MatrixQ& lf, int mf, const MatrixQ& lg, int ng) {
  TensorSeifert r;
  r.m = mf + ng + 1;
  r.l = kron(lf, lg) * Rational(sign_pow((long long)(mf + 1) * (ng + 1)));
  r.l_hnor = kron(lf * Rational(hnor_sign(mf)), lg * Rational(hnor_sign(ng)));
  return r;
}

TEZPData x_squared() {
  TEZPData t;
  t.l = SeifertForm::from_exact(MatrixQ{{Rational(-1)}});
  t.m = 0;
  DecFiltration f;
  f.top = Subspace::full(1);
  f.steps[0] = Subspace::full(1);
  f.steps[1] = Subspace::zero(1);
  t.hodge = pmhs_from_lnor(t.l_nor().gram, 0, f, false);
  LatticeBasis fl;
  fl.z_side = true;
  fl.generators.push_back({fl_elementary({Vec::Ones(1), Frac(-1, 2)}, Mat::Zero(1, 1))});
  t.fl = fl;
  return t;
}

TEZPData suspend(const TEZPData& t, const Tolerances& tol) {
  TEZPData out;
  out.l = t.l.scaled(sign_pow(t.m));
  out.m = t.m + 1;
  if (t.hodge) out.hodge = sqrt_tate_twist(*t.hodge, tol);
  if (t.fl) out.fl = tensor_fl(*t.fl, *x_squared().fl);
  return out;
}

TEZPData tensor_tezp(const TEZPData& a, const TEZPData& b, const Tolerances& tol) {
  if (a.fl.has_value() != b.fl.has_value()) throw Error(ErrorCode::TierMismatch, "only one factor carries an FL lattice");
  TEZPData out;
  out.m = a.m + b.m + 1;
  if (a.l.exact && b.l.exact) {
    out.l = SeifertForm::from_exact(tensor_seifert(*a.l.exact, a.m, *b.l.exact, b.m).l);
  } else {
    out.l = SeifertForm::from_numeric(double(sign_pow((long long)(a.m + 1) * (b.m + 1))) * kron(a.l.gram, b.l.gram));
  }
  if (a.hodge && b.hodge) {
    // Only factors with N != 0 carry a sign.
    bool sa = a.hodge->is_signed && has_nilpotent(*a.hodge, tol);
    bool sb = b.hodge->is_signed && has_nilpotent(*b.hodge, tol);
    out.hodge = tensor_pmhs(*a.hodge, *b.hodge, sa || sb, tol);
  }
  if (a.fl) out.fl = tensor_fl(*a.fl, *b.fl);
  return out;
}

SectorFiltration sector_filtration(const SteenbrinkPMHS& p, const Tolerances& tol) {
  SectorFiltration s;
  s.parts = jordan_parts(p.m, tol);
  s.gf = p.f.apply(gamma_automorphism(s.parts, tol.tol).g);
  s.m = p.weight;
  return s;
}

DecFiltration ts_hodge(const SectorFiltration& f, const SectorFiltration& g, double tol) {
  auto sf = sectors(f, tol), sg = sectors(g, tol);
  int df = int(f.parts.m.rows()), dg = int(g.parts.m.rows());
  int d = df * dg;
  DecFiltration out;
  out.top = Subspace::full(d);
  int lo = f.gf.lo() + g.gf.lo() - 2, hi = f.gf.hi() + g.gf.hi() + 2;
  for (int p = lo; p <= hi; ++p) {
    Subspace acc = Subspace::zero(d);
    for (const auto& a : sf)
      for (const auto& b : sg) {
        int e = a.beta + b.beta > Frac(1) ? 1 : 0;
        int c = p - 1 + e;
        for (int q = f.gf.lo() - 1; q <= f.gf.hi(); ++q) {
          Subspace u = piece_at(a, f.gf, q, df), v = piece_at(b, g.gf, c - q, dg);
          if (u.is_zero() || v.is_zero()) continue;
          acc = acc.sum(kron_span(u, v, tol), tol);
        }
      }
    out.steps[p] = acc;
  }
  return out;
}

SteenbrinkPMHS tensor_pmhs(const SteenbrinkPMHS& a, const SteenbrinkPMHS& b, bool is_signed, const Tolerances& tol) {
  SteenbrinkPMHS out;
  out.m = kron(a.m, b.m);
  out.weight = a.weight + b.weight + 1;
  out.is_signed = is_signed;
  auto parts = jordan_parts(out.m, tol);
  Mat lnor = kron(normalized_seifert(a, tol).lnor, normalized_seifert(b, tol).lnor);
  out.s = -lnor * nu_inverse(out.m, parts).inverse();
  auto gf = ts_hodge(sector_filtration(a, tol), sector_filtration(b, tol), tol.tol);
  out.f = gf.apply(gamma_automorphism(parts, tol.tol).g.inverse());
  return out;
}

SteenbrinkPMHS pmhs_from_lnor(const Mat& lnor, int m, const DecFiltration& f, bool is_signed, const Tolerances& tol) {
  SteenbrinkPMHS p;
  p.m = double(sign_pow(m + 1)) * monodromy_of(SeifertForm::from_numeric(lnor));
  auto parts = jordan_parts(p.m, tol);
  p.s = -lnor * nu_inverse(p.m, parts).inverse();
  p.weight = m;
  p.is_signed = is_signed;
  p.f = f;
  return p;
}

TEZPData tezp_from_pmhs(const SteenbrinkPMHS& p, const Tolerances& tol) {
  TEZPData t;
  t.m = p.weight;
  Mat lhnor = normalized_seifert(p, tol).lnor.transpose().inverse();
  t.l = SeifertForm::from_numeric(double(hnor_sign(p.weight)) * lhnor);
  t.hodge = p;
  return t;
}

}  // namespace seif
