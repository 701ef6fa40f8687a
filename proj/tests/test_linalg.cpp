#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "seif/jordan.hpp"

using namespace seif;
using namespace seif::testing;

TEST_CASE("rational parsing and exact matrices") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  MatrixQ g{{1, 0}, {2, 1}};
  MatrixQ m = g.transpose().inverse() * g;
  CHECK(m == MatrixQ{{-3, -2}, {2, 1}});
  CHECK(g.determinant() == 1);
  CHECK_THROWS_AS((MatrixQ{{1, 2}, {2, 4}}).inverse(), Error);
}

TEST_CASE("exact signature by congruence") {
  CHECK(exact_signature(MatrixQ{{0, 1}, {1, 0}}) == Inertia{1, 0, 1});
  CHECK(exact_signature(MatrixQ{{1, 0, 0}, {0, 0, 0}, {0, 0, -3}}) == Inertia{1, 1, 1});
  CHECK(exact_signature(MatrixQ{{2, 1}, {1, 2}}) == Inertia{2, 0, 0});
  // Oracle: numeric eigenvalue count on random integer symmetric matrices.
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> u(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + trial % 6;
    MatrixQ s(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) s(i, j) = s(j, i) = u(rng) * (trial % 3 == 0 && j > i + 1 ? 0 : 1);
    CHECK(exact_signature(s) == signature(s.to_complex(), 1e-9));
  }
}

TEST_CASE("signature of the hyperbolic plane and hermitian forms") {
  Mat s(2, 2);
  s << 0, 1, 1, 0;
  CHECK(signature(s, 1e-9) == Inertia{1, 0, 1});
  Mat h(2, 2);
  h << 0, kI, -kI, 0;
  CHECK(hermitian_signature(h, 1e-9) == Inertia{1, 0, 1});
  Mat a(2, 2);
  a << 0, 1, -1, 0;
  CHECK_THROWS_AS(signature(a, 1e-9), Error);
}

TEST_CASE("subspace algebra") {
  Mat v(3, 2);
  v << 1, 0, 0, 1, 0, 0;
  Subspace a = Subspace::span(v);
  Mat w(3, 2);
  w << 0, 0, 1, 0, 0, 1;
  Subspace b = Subspace::span(w);
  CHECK(a.intersect(b).dim() == 1);
  CHECK(a.sum(b).dim() == 3);
  Subspace x = a.intersect(b);
  Vec e2 = Vec::Zero(3);
  e2(1) = 1;
  CHECK(x.contains_vector(e2));
  CHECK(a.complement(x).dim() == 1);
  Mat n = jordan_block(3);
  CHECK(Subspace::kernel(n).dim() == 1);
  CHECK(Subspace::full(3).preimage(n, Subspace::kernel(n)).dim() == 2);
}

TEST_CASE("jordan parts of the worked example") {
  Mat m(2, 2);
  m << -3, -2, 2, 1;
  auto p = jordan_parts(m);
  REQUIRE(p.groups.size() == 1);
  CHECK(p.groups[0].lambda.is_minus_one());
  Mat n_expected(2, 2);
  n_expected << 2, 2, -2, -2;
  CHECK(max_abs(p.n - n_expected) < 1e-10);
  CHECK(max_abs(p.ms + Mat::Identity(2, 2)) < 1e-10);
  CHECK(jordan_block_counts(p.n, p.groups[0].space) == std::map<int, int>{{2, 1}});
}

TEST_CASE("jordan parts recover conjugated Jordan structures") {
  std::mt19937 rng(7);
  // blocks: (lambda, size)
  std::vector<std::pair<Cx, int>> blocks = {{Cx(1, 0), 3}, {Cx(1, 0), 1}, {Cx(-1, 0), 2}, {Cx(2, 0), 2}, {Cx(0.5, 0), 2}};
  int n = 0;
  for (auto& b : blocks) n += b.second;
  Mat j = Mat::Zero(n, n);
  int at = 0;
  for (auto& b : blocks) {
    j.block(at, at, b.second, b.second) = b.first * nilpotent_exp(jordan_block(b.second));
    at += b.second;
  }
  for (int trial = 0; trial < 20; ++trial) {
    Mat c = random_base_change(n, rng);
    Mat m = c * j * c.inverse();
    auto p = jordan_parts(m);
    CHECK(p.groups.size() == 4);
    CHECK(max_abs(p.ms * p.mu - m) < 1e-9);
    CHECK(max_abs(p.ms * p.mu - p.mu * p.ms) < 1e-9);
    CHECK(max_abs(mat_pow(p.n, n)) < 1e-9);
    auto one = p.space_one();
    CHECK(jordan_block_counts(p.n, one) == std::map<int, int>{{1, 1}, {3, 1}});
  }
}

TEST_CASE("complex eigenvalues come in exact conjugate pairs") {
  std::mt19937 rng(11);
  Mat r(2, 2);
  double t = 2 * kPi / 3;
  r << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  Mat big = Mat::Zero(8, 8);
  // Two 2x2 rotation blocks coupled into a unipotent chain of length 2.
  big.block(0, 0, 2, 2) = r;
  big.block(2, 2, 2, 2) = r;
  big.block(2, 0, 2, 2) = r;
  Mat e(4, 4);
  e << 2, 1, 0, 0, 0, 2, 0, 0, 0, 0, 3, 1, 0, 0, -1, 3;
  big.block(4, 4, 4, 4) = e;
  Mat c = random_base_change(8, rng);
  auto p = jordan_parts(c * big * c.inverse());
  int circle = 0;
  for (auto& g : p.groups)
    if (g.lambda.angle) {
      ++circle;
      CHECK(g.mult == 2);
      CHECK(jordan_block_counts(p.n, g.space).count(2) == 1);
    }
  CHECK(circle == 2);
  CHECK(is_real(p.n, 1e-12));
}

TEST_CASE("random invertible matrices") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + trial % 8;
    Mat m = random_real(n, n, rng, -2, 2);
    if (std::abs(m.determinant()) < 1e-3) continue;
    auto p = jordan_parts(m);
    CHECK(max_abs(p.ms * p.mu - m) < 1e-8 * mat_scale(m));
    CHECK(max_abs(p.ms * p.mu - p.mu * p.ms) < 1e-8 * mat_scale(m));
  }
}

TEST_CASE("singular input is rejected") {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = 1;
  CHECK_THROWS_AS(jordan_parts(m), Error);
}

TEST_CASE("eigenvalue tags") {
  auto e = Eigenvalue::from_value(std::exp(kTwoPiI / 3.0));
  REQUIRE(e.angle);
  CHECK(*e.angle == Frac(1, 3));
  CHECK(e.conj().to_string() == "e(2/3)");
  CHECK(Eigenvalue::from_value(Cx(2, 1)).to_string() == "2+i");
  CHECK(Eigenvalue::from_angle(Frac(1, 2)).to_string() == "-1");
}
