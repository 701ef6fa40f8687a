#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "seif/forms.hpp"

using namespace seif;
using namespace seif::testing;

namespace {

Mat from(std::initializer_list<std::initializer_list<double>> rows) {
  Mat m(rows.size(), rows.begin()->size());
  int i = 0;
  for (auto& r : rows) {
    int j = 0;
    for (double x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

// Random nondegenerate Seifert form avoiding eigenvalue -1 when asked.
SeifertForm random_seifert(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> u(-3, 3);
  for (;;) {
    MatrixQ g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = u(rng);
    if (g.determinant() != 0) return SeifertForm::from_exact(g);
  }
}

}  // namespace

TEST_CASE("monodromy and intersection form of the worked example") {
  auto l = SeifertForm::from_exact(MatrixQ{{1, 0}, {2, 1}});
  CHECK(monodromy_exact(*l.exact) == MatrixQ{{-3, -2}, {2, 1}});
  CHECK(*intersection_form_exact(l, 1) == MatrixQ{{0, 2}, {-2, 0}});
  auto one = SeifertForm::from_exact(MatrixQ{{1}});
  CHECK(*intersection_form_exact(one, 0) == MatrixQ{{-2}});
  auto d = derived_forms(l);
  CHECK(max_abs(d.i_a - from({{0, 2}, {-2, 0}})) < 1e-12);
  CHECK(d.i_s2.dim() == 0);
  CHECK(d.i_a3.dim() == 2);
}

TEST_CASE("intersection form equals (M-1)^T G for the singularity monodromy") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    auto l = random_seifert(1 + trial % 5, rng);
    for (int m = 0; m < 3; ++m) {
      Mat msing = double(sign_pow(m + 1)) * monodromy_of(l);
      Mat id = Mat::Identity(l.dim(), l.dim());
      CHECK(max_abs(intersection_form(l, m) - (msing - id).transpose() * l.gram) < 1e-9 * mat_scale(l.gram) * mat_scale(msing));
    }
  }
}

TEST_CASE("derived forms recover the triple that built the Seifert form") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    auto l = random_seifert(2 + trial % 4, rng);
    auto d = derived_forms(l);
    Mat m = monodromy_of(l);
    // I_s and I_a are M-invariant with the right symmetry.
    CHECK(max_abs(m.transpose() * d.i_s * m - d.i_s) < 1e-8 * mat_scale(d.i_s) * mat_scale(m) * mat_scale(m));
    CHECK(max_abs(d.i_a + d.i_a.transpose()) < 1e-12);
    // L from (H_{!=-1}, M, I_s) via variant 1 gives back L there.
    if (d.i_s2.dim() == l.dim()) {
      IsometricTriple t{d.i_s, m, 0};
      auto back = seifert_from_triple(t, 1);
      CHECK(max_abs(back.gram - l.gram) < 1e-8 * mat_scale(l.gram));
      auto l2 = seifert_from_triple(t, 2);
      auto d2 = derived_forms(l2);
      CHECK(max_abs(d2.i_s2.basis.transpose() * t.s * d2.i_s2.basis - d2.i_s2.gram) < 1e-7 * mat_scale(t.s));
    }
    if (d.i_a2.dim() == l.dim()) {
      IsometricTriple t{d.i_a, m, 1};
      auto back = seifert_from_triple(t, 1);
      CHECK(max_abs(back.gram - l.gram) < 1e-8 * mat_scale(l.gram));
    }
  }
}

TEST_CASE("variant 3 on unipotent triples round-trips through I_s3") {
  // S = E (symmetric for n odd), M = exp(J) is an isometry of E.
  for (int n : {1, 3, 5}) {
    Mat e = Mat::Zero(n, n);
    for (int j = 0; j < n; ++j) e(j, n - 1 - j) = double(sign_pow(j));
    IsometricTriple t{e, nilpotent_exp(jordan_block(n)), 0};
    auto l = seifert_from_triple(t, 3);
    auto d = derived_forms(l);
    REQUIRE(d.i_s3.dim() == n);
    Mat b = d.i_s3.basis;
    CHECK(max_abs(b.transpose() * e * b - d.i_s3.gram) < 1e-9);
  }
}

TEST_CASE("seifert_from_triple rejects bad input") {
  IsometricTriple t{from({{1}}), from({{-1}}), 0};
  CHECK_THROWS_AS(seifert_from_triple(t, 1), Error);
  CHECK_THROWS_AS(seifert_from_triple(t, 4), Error);
  IsometricTriple bad{from({{0, 1}, {1, 0}}), from({{2, 0}, {0, 2}}), 0};
  CHECK_THROWS_AS(seifert_from_triple(bad, 1), Error);
}

TEST_CASE("dual pair") {
  auto l = SeifertForm::from_exact(MatrixQ{{2, 0}, {0, 3}});
  auto d = dual_pair(l);
  CHECK(*d.dual.exact == (MatrixQ{{Rational(1, 2), 0}, {0, Rational(1, 3)}}));
  std::mt19937 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    auto lr = random_seifert(1 + trial % 5, rng);
    auto dp = dual_pair(lr);
    Mat m = monodromy_of(lr);
    double sc = mat_scale(m) * mat_scale(lr.gram) * mat_scale(dp.dual.gram);
    // iso is an isometry onto the dual and intertwines the monodromies.
    CHECK(max_abs(dp.iso.transpose() * dp.dual.gram * dp.iso - lr.gram) < 1e-9 * sc);
    CHECK(max_abs(dp.iso * m - dp.m_dual * dp.iso) < 1e-9 * sc);
    CHECK(max_abs(monodromy_of(dp.dual) - dp.m_dual) < 1e-9 * sc);
    // L^lin M^dual = M L^lin, with L^lin = G^{-T}.
    Mat llin = lr.gram.transpose().inverse();
    CHECK(max_abs(llin * dp.m_dual - m * llin) < 1e-9 * sc);
  }
}
