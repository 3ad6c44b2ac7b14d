#include <cmath>
#include <random>

#include <doctest.h>

#include "generators.hpp"
#include "lie2herm/lie2herm.hpp"

using namespace lie2herm;

TEST_CASE("gram_schmidt: pinned 3-dimensional example") {
  const auto basis = gram_schmidt({Vec{{1.0, 1.0, 0.0}}, Vec{{1.0, 0.0, 1.0}}},
                                  Mat::Identity(3, 3));
  REQUIRE(basis.size() == 2);
  const double r = std::sqrt(2.0) / 2.0;
  CHECK((basis[0] - Vec{{r, r, 0.0}}).cwiseAbs().maxCoeff() <= 1e-15);
  const Vec expected1 = Vec{{1.0, -1.0, 2.0}} / std::sqrt(6.0);
  CHECK((basis[1] - expected1).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("gram_schmidt: pairwise orthonormal under random SPD metrics") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(trial % 4);
    Mat A(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A(i, j) = gauss(rng);
    const Mat G = A.transpose() * A / n + Mat::Identity(n, n);
    std::vector<Vec> vecs;
    for (int v = 0; v < n; ++v) {
      Vec x(n);
      for (int i = 0; i < n; ++i) x[i] = gauss(rng);
      vecs.push_back(std::move(x));
    }
    const auto basis = gram_schmidt(vecs, G);
    REQUIRE(basis.size() == vecs.size());
    for (size_t i = 0; i < basis.size(); ++i)
      for (size_t j = 0; j < basis.size(); ++j) {
        const double expected = i == j ? 1.0 : 0.0;
        CHECK(std::abs(inner(basis[i], basis[j], G) - expected) <= 1e-9);
      }
  }
}

TEST_CASE("gram_schmidt: dependent input throws") {
  CHECK_THROWS_AS(gram_schmidt({Vec{{1.0, 2.0}}, Vec{{2.0, 4.0}}}, Mat::Identity(2, 2)),
                  DependentInputError);
  CHECK_THROWS_AS(gram_schmidt({Vec{{0.0, 0.0}}}, Mat::Identity(2, 2)),
                  DependentInputError);
}

TEST_CASE("orthonormal_span drops dependent vectors") {
  const auto basis = orthonormal_span(
      {Vec{{1.0, 0.0, 0.0}}, Vec{{2.0, 0.0, 0.0}}, Vec{{1.0, 1.0, 0.0}}},
      Mat::Identity(3, 3), 1e-9);
  CHECK(basis.size() == 2);
  for (const Vec& v : basis) CHECK(std::abs(v.norm() - 1.0) <= 1e-12);
}

TEST_CASE("KForm: index order carries the permutation sign") {
  KForm w(4, 2);
  w.set({0, 1}, 2.5);
  CHECK(w.get({0, 1}) == 2.5);
  CHECK(w.get({1, 0}) == -2.5);
  CHECK(w.get({0, 0}) == 0.0);
  CHECK_THROWS_AS(w.set({1, 1}, 1.0), Error);

  KForm c(4, 3);
  c.set({2, 0, 1}, 3.0); // even permutation of (0,1,2)
  CHECK(c.get({0, 1, 2}) == 3.0);
  CHECK(c.get({1, 0, 2}) == -3.0);
}

TEST_CASE("KForm: degree outside 2..4 is rejected") {
  CHECK_THROWS_AS(KForm(4, 1), Error);
  CHECK_THROWS_AS(KForm(4, 5), Error);
}

TEST_CASE("KForm: evaluate agrees with full multilinear expansion") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int n = 5;
  KForm w(n, 3);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) w.set({i, j, k}, gauss(rng));

  for (int trial = 0; trial < 5; ++trial) {
    Vec x(n), y(n), z(n);
    for (int i = 0; i < n; ++i) x[i] = gauss(rng), y[i] = gauss(rng), z[i] = gauss(rng);
    double brute = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) brute += x[i] * y[j] * z[k] * w.get({i, j, k});
    CHECK(std::abs(w.evaluate({x, y, z}) - brute) <= 1e-12);
  }
}

TEST_CASE("KForm: evaluating on basis vectors reads components back") {
  KForm w(4, 2);
  w.set({1, 3}, -0.75);
  CHECK(w.evaluate({Vec::Unit(4, 1), Vec::Unit(4, 3)}) == -0.75);
  CHECK(w.evaluate({Vec::Unit(4, 3), Vec::Unit(4, 1)}) == 0.75);
  CHECK(w.evaluate({Vec::Unit(4, 0), Vec::Unit(4, 2)}) == 0.0);
}

TEST_CASE("KForm: canonical storage enumerates increasing tuples") {
  const KForm w(5, 3);
  CHECK(w.tuples().size() == 10); // C(5,3)
  CHECK(w.values().size() == 10);
  for (const auto& t : w.tuples()) {
    CHECK(t[0] < t[1]);
    CHECK(t[1] < t[2]);
    CHECK(t[3] == -1); // padding beyond the degree
  }
}

TEST_CASE("Tensor max_abs") {
  Tensor3 t(3);
  t(0, 1, 2) = -4.5;
  t(2, 2, 2) = 3.0;
  CHECK(t.max_abs() == 4.5);
  Tensor4 q(2);
  q(1, 0, 1, 0) = -0.25;
  CHECK(q.max_abs() == 0.25);
}

TEST_CASE("random_orthogonal produces orthogonal matrices") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const Mat Q = lie2herm::testing::random_orthogonal(5, rng);
    CHECK((Q.transpose() * Q - Mat::Identity(5, 5)).cwiseAbs().maxCoeff() <= 1e-12);
  }
}
