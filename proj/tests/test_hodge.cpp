#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "pmhs_helpers.hpp"
#include "seif/hodge.hpp"

using namespace seif;
using namespace seif::testing;

namespace {

Decomposition<IsoType> triple_oracle(const SteenbrinkPMHS& p) {
  auto parts = jordan_parts(p.m);
  Decomposition<IsoType> all;
  for (int part = 0; part < 2; ++part) {
    Subspace v = part ? parts.space_one() : parts.space_not_one();
    if (v.is_zero()) continue;
    Mat b = v.real_basis();
    IsometricTriple t;
    t.m = (b.transpose() * p.m * b).real().cast<Cx>();
    t.s = (b.transpose() * p.s * b).real().cast<Cx>();
    t.sym = (p.weight + part) & 1;
    for (auto& x : classify_triple(t)) all.push_back(x);
  }
  return normalize(all);
}

}  // namespace

TEST_CASE("weight filtration of a nilpotent") {
  for (int n = 1; n <= 5; ++n) {
    Mat j = jordan_block(n);
    auto w = weight_filtration(j, Subspace::full(n), 0);
    for (int l = -n; l <= n; ++l) {
      CHECK(w.at(l - 2).contains(w.at(l).apply(j)));
      CHECK(graded_dim(w, l) == ((l - (n - 1)) % 2 == 0 && std::abs(l) <= n - 1 ? 1 : 0));
    }
  }
  // Two blocks of sizes 3 and 1 centered at 2.
  Mat n = Mat::Zero(4, 4);
  n.block(0, 0, 3, 3) = jordan_block(3);
  auto w = weight_filtration(n, Subspace::full(4), 2);
  CHECK(graded_dim(w, 4) == 1);
  CHECK(graded_dim(w, 2) == 2);
  CHECK(graded_dim(w, 0) == 1);
}

TEST_CASE("one-dimensional structures") {
  SteenbrinkPMHS p;
  p.m = Mat::Identity(1, 1);
  p.s = Mat::Identity(1, 1);
  p.weight = 0;
  p.f.top = Subspace::full(1);
  p.f.steps[0] = Subspace::full(1);
  CHECK(to_string(spectral_pairs(p)) == "(0,0)");
  auto r = check_pmhs(p);
  CHECK_FALSE(r.ok());
  bool sym_failed = false;
  for (auto& i : r.items)
    if (i.name == "symmetry on H_1") sym_failed = !i.pass;
  CHECK(sym_failed);
  CHECK_THROWS_AS(make_split_pmhs({{0, 0, Frac(0), 1}}, 0, false), Error);
  auto q = make_split_pmhs({{0, 0, Frac(0), 1}}, -1, false);
  CHECK(check_pmhs(q).ok());
  CHECK(to_string(spectral_pairs(q)) == "(-1,-1)");
  auto h = make_split_pmhs({{0, 0, Frac(1, 2), 1}}, 0, false);
  CHECK(check_pmhs(h).ok());
  CHECK(to_string(spectral_pairs(h)) == "(-1/2,0)");
}

TEST_CASE("single ladder of length two at -1, weight 1") {
  auto p = make_split_pmhs({{1, 1, Frac(1, 2), 1}}, 1, false);
  CHECK(check_pmhs(p).ok());
  CHECK(to_string(spectral_pairs(p)) == "(-1/2,2) (1/2,0)");
  auto ls = ladders(p);
  REQUIRE(ls.size() == 1);
  CHECK(ls[0].single);
  CHECK(ls[0].distance() == Frac(0));
  CHECK(to_string(pmhs_isometric_decomposition(p)) == "Tr(-1,1,2,1) x1");
  auto s = make_split_pmhs({{1, 1, Frac(1, 2), 1}}, 1, true);
  CHECK(check_pmhs(s).ok());
  auto u = s;
  u.is_signed = false;
  CHECK_FALSE(check_pmhs(u).ok());
  CHECK(to_string(pmhs_isometric_decomposition(s)) == "Tr(-1,1,2,-1) x1");
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(make_split_pmhs({{2, 0, Frac(1, 3), 1}}, 0, false), Error);
  CHECK_THROWS_AS(make_split_pmhs({{1, 1, Frac(1, 3), 1}}, 0, false), Error);
  CHECK_THROWS_AS(make_split_pmhs({{0, 0, Frac(1, 2), 1}}, 1, false), Error);
  CHECK_NOTHROW(make_split_pmhs({{2, 0, Frac(1, 3), 1}, {0, 2, Frac(2, 3), 1}}, 1, false));
}

TEST_CASE("random split fixtures are valid PMHS with the predicted invariants") {
  std::mt19937 rng(99);
  int built = 0;
  for (int trial = 0; trial < 40; ++trial) {
    int m = trial % 3;
    auto spec = random_spec(rng, m, 10);
    if (spec.empty()) continue;
    bool sgn = trial % 2;
    auto p = make_split_pmhs(spec, m, sgn, 1000 + trial);
    ++built;
    auto rep = check_pmhs(p);
    INFO(rep.to_string());
    CHECK(rep.ok());
    auto spp = spectral_pairs(p);
    CHECK(spp == spec_pairs(spec, m));
    auto h = hodge_data(p);
    auto d = deligne_splitting(p, h);
    CHECK(is_split(d));
    CHECK(ladder_pairs(ladders(p, h, d)) == spp);
    // Symmetry (alpha,k) -> (m-1-alpha, 2m-k).
    for (auto& [ak, mult] : spp) {
      auto it = spp.find({Frac(m - 1) - ak.first, 2 * m - ak.second});
      CHECK((it != spp.end() && it->second == mult));
    }
    CHECK(to_string(pmhs_isometric_decomposition(p)) == to_string(triple_oracle(p)));
    auto g1 = graded_data(p.s, h.parts.n, m, h.parts.space_not_one());
    auto g2 = graded_data(p.s, h.parts.n, m + 1, h.parts.space_one());
    for (auto* g : {&g1, &g2}) {
      CHECK(g->nondegenerate);
      CHECK(g->symmetric);
      CHECK(g->orthogonal);
      CHECK(g->weight_orthogonal);
    }
  }
  CHECK(built > 30);
}

TEST_CASE("a non-split structure is detected") {
  auto p = make_split_pmhs({{2, 0, Frac(1, 3), 1}, {0, 2, Frac(2, 3), 1}}, 1, false);
  auto h = hodge_data(p);
  auto q = p;
  q.f = p.f.apply(nilpotent_exp(Cx(0, 0.7) * h.parts.n));
  auto hq = hodge_data(q);
  CHECK_FALSE(is_split(deligne_splitting(q, hq)));
  CHECK_THROWS_AS(pmhs_isometric_decomposition(q), Error);
  CHECK(spectral_pairs(q) == spectral_pairs(p));
}
