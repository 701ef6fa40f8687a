#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "lattice_helpers.hpp"
#include "pmhs_helpers.hpp"
#include "seif/flbundle.hpp"

using namespace seif;
using namespace seif::testing;

namespace {

constexpr double kEuler = 0.57721566490153286061;

Vec unit(int d, int k) {
  Vec v = Vec::Zero(d);
  v(k) = 1;
  return v;
}

}  // namespace

TEST_CASE("Fourier-Laplace of elementary sections") {
  Mat n0 = Mat::Zero(1, 1);
  auto s = fl_elementary({unit(1, 0), Frac(0)}, n0);
  CHECK(s.alpha == Frac(1));
  CHECK(std::abs(s.a(0) - 1.0) < 1e-14);
  auto h = fl_elementary({unit(1, 0), Frac(-1, 2)}, n0);
  CHECK(std::abs(h.a(0) - std::sqrt(kPi)) < 1e-13);
  Mat n = jordan_block(2);
  auto j = fl_elementary({unit(2, 0), Frac(0)}, n);
  Vec expect = unit(2, 0) + (kEuler / kTwoPiI) * (n * unit(2, 0));
  CHECK((j.a - expect).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_THROWS_AS(fl_elementary({unit(1, 0), Frac(-1)}, n0), Error);

  CHECK((quadrature_fl({unit(1, 0), Frac(0)}, n0, Cx(1)) - unit(1, 0)).cwiseAbs().maxCoeff() < 1e-9);
  CHECK(std::abs(quadrature_fl({unit(1, 0), Frac(-1, 2)}, n0, Cx(1))(0) - std::sqrt(kPi)) < 1e-9);
  Vec q2 = quadrature_fl({unit(2, 0), Frac(0)}, n, Cx(2));
  CHECK((q2 - evaluate(j, n, std::log(Cx(2)))).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("quadrature agrees with the closed form on the grid") {
  for (Frac a : {Frac(1, 6), Frac(1, 3), Frac(1, 2), Frac(2, 3), Frac(1)})
    for (int d = 1; d <= 3; ++d) {
      Mat n = jordan_block(d);
      Vec v = Vec::Ones(d);
      ElementarySection s{v, a - 1};
      auto fl = fl_elementary(s, n);
      for (Cx z : {Cx(1), Cx(0, 2), Cx(-1, 1)}) {
        Vec closed = evaluate(fl, n, std::log(z));
        Vec quad = quadrature_fl(s, n, z);
        CHECK((closed - quad).cwiseAbs().maxCoeff() / std::max(1.0, closed.cwiseAbs().maxCoeff()) < 1e-6);
      }
    }
}

TEST_CASE("d_tau bookkeeping") {
  Mat n = jordan_block(3);
  ElementarySection s{Vec::Ones(3), Frac(1, 3)};
  auto t = d_tau(s, n);
  CHECK(t.alpha == Frac(-2, 3));
  auto back = d_tau_inverse(t, n);
  CHECK(back.alpha == s.alpha);
  CHECK((back.a - s.a).cwiseAbs().maxCoeff() < 1e-13);
  // Derivative of the evaluated section, by a central difference in tau.
  Cx tau(0.7, 0.4), h(1e-5, 0);
  Vec fd = (evaluate(s, n, std::log(tau + h)) - evaluate(s, n, std::log(tau - h))) / (2.0 * h);
  CHECK((fd - evaluate(t, n, std::log(tau))).cwiseAbs().maxCoeff() < 1e-7);
  CHECK_THROWS_AS(d_tau_inverse({Vec::Ones(3), Frac(-1)}, n), Error);
}

TEST_CASE("flat pairing identities on fixtures") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 12; ++trial) {
    int m = trial % 3;
    auto spec = random_spec(rng, m, 8);
    if (spec.empty()) continue;
    auto p = make_split_pmhs(spec, m, trial % 2, 400 + trial);
    auto parts = jordan_parts(p.m);
    FlatPairing fp{normalized_seifert(p, parts).lnor, parts.n, m};
    Cx z(0.8, 0.5);
    Cx lz = std::log(z);
    for (const auto& g : parts.groups) {
      Frac alpha = beta_of(g.lambda);
      const EigenGroup* cg = parts.find(g.lambda.conj(), 1e-6);
      REQUIRE(cg);
      Frac alpha2 = g.lambda.is_one() ? Frac(1) : Frac(1) - alpha;
      Mat qa = g.space.basis(), qb = cg->space.basis();
      Mat ga = gamma_block(frac_to_double(alpha), parts.n), gb = gamma_block(frac_to_double(alpha2), parts.n);
      for (int i = 0; i < qa.cols(); ++i)
        for (int j = 0; j < qb.cols(); ++j) {
          ElementarySection s1{ga * qa.col(i), alpha}, s2{gb * qb.col(j), alpha2};
          Cx direct = pairing_P(fp, s1, s2, lz);
          Cx closed = pairing_P_closed(fp, s1, s2, lz);
          Cx sab = (qa.col(i).transpose() * p.s * qb.col(j))(0, 0);
          Cx expect = g.lambda.is_one() ? -z * z / std::pow(kTwoPiI, m + 1) * sab : z / std::pow(kTwoPiI, m) * sab;
          double sc = std::max(1.0, std::abs(expect));
          CHECK(std::abs(direct - closed) / sc < 1e-9);
          CHECK(std::abs(direct - expect) / sc < 1e-9);
          // Reversed order: the first slot at -z, the second continued to z.
          Cx rev = pairing_P(fp, s2, s1, lz + kI * kPi);
          CHECK(std::abs(rev - double(sign_pow(m + 1)) * direct) / sc < 1e-9);
        }
    }
  }
  FlatPairing f1{Mat::Identity(1, 1), Mat::Zero(1, 1), 0};
  CHECK_THROWS_AS(pairing_P_closed(f1, {unit(1, 0), Frac(1, 3)}, {unit(1, 0), Frac(1, 3)}, Cx(0)), Error);
}

TEST_CASE("equivalence of triple, Seifert and bundle data") {
  SeifertData one{Mat::Identity(1, 1), 1};
  auto b = bundle_from_seifert(one);
  CHECK(std::abs(b.p(0, 0) - 1.0 / std::pow(kTwoPiI, 2)) < 1e-15);
  CHECK(max_abs(seifert_from_bundle(b).l - one.l) < 1e-14);

  Mat g(2, 2);
  g << 1, 0, 2, 1;
  for (int m = 0; m < 3; ++m) {
    SeifertData l{g, m};
    auto t = triple_from_seifert_data(l);
    auto back = seifert_from_triple_data(t);
    CHECK(max_abs(back.l - g) < 1e-12);
    auto bd = bundle_from_seifert(l);
    CHECK(max_abs(seifert_from_bundle(bd).l - g) < 1e-12);
    // P takes values in i^{m+1} R.
    Mat scaled = bd.p / ipow(m + 1);
    CHECK(max_abs(scaled.imag().cast<Cx>()) < 1e-15);
    Vec a(2), c(2);
    a << 0.3, -1.2;
    c << 0.7, 0.4;
    Cx pab = (a.transpose() * bd.p * c)(0, 0);
    CHECK(std::abs(bundle_pairing_reversed(bd, c, a) - double(sign_pow(m + 1)) * pab) < 1e-14);
  }

  std::mt19937 rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    int m = trial % 3;
    auto spec = random_spec(rng, m, 8);
    if (spec.empty()) continue;
    auto p = make_split_pmhs(spec, m, false, 500 + trial);
    TripleData t{p.m, p.s, m};
    auto l = seifert_from_triple_data(t);
    auto t2 = triple_from_seifert_data(l);
    CHECK(max_abs(t2.m - p.m) / mat_scale(p.m) < 1e-9);
    CHECK(max_abs(t2.s - p.s) / mat_scale(p.s) < 1e-9);
    // Wrong parity of S.
    TripleData bad{p.m, p.s, m + 1};
    CHECK_THROWS_AS(seifert_from_triple_data(bad), Error);
  }
}

TEST_CASE("Hodge filtration from a lattice") {
  Mat n0 = Mat::Zero(1, 1);
  auto parts = jordan_parts(Mat::Identity(1, 1));
  LatticeBasis b;
  b.generators.push_back({{unit(1, 0), Frac(0)}});
  auto f = hodge_from_lattice(b, parts, 0, 3);
  CHECK(f.at(0).dim() == 1);
  CHECK(f.at(1).dim() == 0);

  std::vector<std::vector<LadderSpec>> specs = {
      {{2, 0, Frac(1, 3), 1}, {0, 2, Frac(2, 3), 1}, {2, 1, Frac(1, 4), 1}, {1, 2, Frac(3, 4), 1}, {1, 1, Frac(1, 2), 1}, {2, 2, Frac(0), 1}},
      {{1, 0, Frac(1, 3), 1}, {0, 1, Frac(2, 3), 1}, {1, 1, Frac(0), 1}, {1, 1, Frac(1, 5), 1}, {1, 1, Frac(4, 5), 1}},
      {{2, 2, Frac(1, 6), 1}, {2, 2, Frac(5, 6), 1}, {2, 1, Frac(0), 1}, {1, 2, Frac(0), 1}},
  };
  std::vector<int> ms = {2, 1, 2};
  for (std::size_t k = 0; k < specs.size(); ++k) {
    int m = ms[k];
    auto p = make_split_pmhs(specs[k], m, false, 600 + unsigned(k));
    REQUIRE(check_pmhs(p).ok());
    auto h = hodge_data(p);
    auto lat = lattice_of(p, h);
    auto fst = hodge_from_lattice(lat, h.parts, m, 8);
    CHECK(fst.equals(p.f, 1e-8));
    auto fl = fl_lattice(lat, h.parts.n);
    auto gf = twisted_hodge_from_lattice(fl, h.parts, m, 8);
    auto g = gamma_automorphism(h.parts).g;
    CHECK(gf.equals(p.f.apply(g), 1e-8));
    FlatPairing fp{normalized_seifert(p, h.parts).lnor, h.parts.n, m};
    auto pw = lattice_pairing(fp, fl);
    int gens = int(lat.generators.size());
    for (const auto& [e, c] : pw) {
      if (e == Frac(m + 1)) {
        CHECK(numeric_rank(c, 1e-9) == gens);
      } else {
        CHECK(max_abs(c) < 1e-9);
      }
    }
  }
  CHECK_THROWS_AS(hodge_from_lattice(b, parts, 0, 0), Error);
}
