// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>

#include "eqdecomp/error.hpp"
#include "eqdecomp/fixtures.hpp"
#include "eqdecomp/spectra.hpp"
#include "helpers.hpp"

using namespace eqdecomp;
using testing::multiset;

TEST_CASE("eigenvalues of small matrices") {
  CHECK(multiset_equal(eigenvalues(DenseMatrix::from_rows({{0, 2}, {2, 3}})), multiset({4, -1}), 1e-12));
  CHECK(multiset_equal(eigenvalues(DenseMatrix::identity(5)), multiset({1, 1, 1, 1, 1}), 1e-12));
  CHECK(multiset_equal(eigenvalues(DenseMatrix::from_rows({{7}})), multiset({7}), 0.0));
  // rotation: ±i
  const auto rot = eigenvalues(DenseMatrix::from_rows({{0, -1}, {1, 0}}));
  CHECK(oracle::same_multiset(rot.values, {Complex(0, 1), Complex(0, -1)}, 1e-12));
  // Jordan block: defective but still solvable
  CHECK(multiset_equal(eigenvalues(DenseMatrix::from_rows({{2, 1}, {0, 2}})), multiset({2, 2}), 1e-7));
}

TEST_CASE("eigenvalues of the ten-vertex example block") {
  const auto d = decompose(build_matrix(fixtures::trigraph10().graph, MatrixKind::Adjacency),
                           fixtures::trigraph10().automorphism);
  CHECK(multiset_equal(eigenvalues(d.blocks[0]), multiset({1.87939, -0.347296, -1.53209}), 1e-5));
}

TEST_CASE("eigenvalues agree with the characteristic polynomial") {
  std::mt19937_64 rng(7);
  for (std::size_t trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto m = oracle::random_complex_matrix(n, rng);
    CHECK(oracle::same_multiset(eigenvalues(m).values, oracle::charpoly_eigenvalues(m), 1e-9));
  }
}

TEST_CASE("eigenvalues of larger structured matrices") {
  // companion matrix of (x-1)(x-2)...(x-8)
  std::vector<double> poly{1};
  for (int root = 1; root <= 8; ++root) {
    std::vector<double> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= root * poly[i];
    }
    poly = next;
  }
  DenseMatrix companion(8, 8);
  for (std::size_t i = 1; i < 8; ++i) companion(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < 8; ++i) companion(i, 7) = -poly[i];
  CHECK(multiset_equal(eigenvalues(companion), multiset({1, 2, 3, 4, 5, 6, 7, 8}), 1e-6));

  // permutation matrix of a 12-cycle: the 12th roots of unity
  DenseMatrix shift(12, 12);
  for (std::size_t i = 0; i < 12; ++i) shift((i + 1) % 12, i) = 1.0;
  std::vector<Complex> roots;
  for (int j = 0; j < 12; ++j) roots.push_back(std::polar(1.0, 2 * M_PI * j / 12));
  CHECK(oracle::same_multiset(eigenvalues(shift).values, roots, 1e-10));

  CHECK(multiset_equal(eigenvalues(DenseMatrix(6, 6)), multiset({0, 0, 0, 0, 0, 0}), 0.0));
}

namespace {

// S = lower-triangular ones and its exact inverse, for dense similarity transforms.
DenseMatrix similar(const DenseMatrix& t) {
  const std::size_t n = t.rows();
  DenseMatrix s(n, n), s_inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) s(i, j) = 1.0;
    s_inv(i, i) = 1.0;
    if (i > 0) s_inv(i, i - 1) = -1.0;
  }
  return s * t * s_inv;
}

}  // namespace

TEST_CASE("defective eigenvalues are recovered from their cluster") {
  // Jordan block J3(2) plus a simple eigenvalue, hidden by a dense similarity
  const auto a = similar(DenseMatrix::from_rows({{2, 1, 0, 0}, {0, 2, 1, 0}, {0, 0, 2, 0}, {0, 0, 0, -1}}));
  CHECK(multiset_equal(eigenvalues(a), multiset({2, 2, 2, -1}), 1e-10));
}

TEST_CASE("close but distinct eigenvalues stay distinct") {
  const auto a = similar(DenseMatrix::from_rows(
      {{1, 1, 0, 0}, {0, 1.0001, 1, 0}, {0, 0, 1.0002, 1}, {0, 0, 0, 5}}));
  const auto s = eigenvalues(a);
  CHECK(multiset_equal(s, multiset({1, 1.0001, 1.0002, 5}), 1e-9));
  CHECK(count_simple(s) == 4);

  // symmetric: two close double eigenvalues must not be averaged together
  DenseMatrix q = DenseMatrix::identity(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) q(i, j) -= 0.5;  // Householder reflector, q = q^T = q^-1
  DenseMatrix d(4, 4);
  d(0, 0) = d(1, 1) = 0.9876;
  d(2, 2) = d(3, 3) = 0.9877;
  CHECK(multiset_equal(eigenvalues(q * d * q), multiset({0.9876, 0.9876, 0.9877, 0.9877}), 1e-12));
}

TEST_CASE("reducible matrices split into irreducible blocks") {
  const auto t = DenseMatrix::from_rows({{3, 1, 4, 1}, {0, 5, 9, 2}, {0, 0, 6, 5}, {0, 0, 0, 3}});
  CHECK(eigenvalues(t).values.size() == 4);
  CHECK(multiset_equal(eigenvalues(t), multiset({3, 5, 6, 3}), 0.0));
  // two coupled 2-cycles feeding a sink
  const auto m = DenseMatrix::from_rows({{0, 2, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 3}, {0, 0, 3, 0}});
  CHECK(multiset_equal(eigenvalues(m), multiset({std::sqrt(2.0), -std::sqrt(2.0), 3, -3}), 1e-12));
}

TEST_CASE("near-nilpotent directed adjacency converges") {
  const auto a = DenseMatrix::from_rows({
      {0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 1},
      {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
      {0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 1},
      {0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 1},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
      {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0},
      {0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0},
      {1, 0, 1, 1, 0, 1, 0, 1, 1, 0, 0, 1, 0, 1, 0},
      {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
      {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}});
  const auto s = eigenvalues(a);
  REQUIRE(s.size() == 15);
  Complex sum = 0.0, trace = 0.0;
  for (const auto& z : s.values) sum += z;
  for (std::size_t i = 0; i < 15; ++i) trace += a(i, i);
  CHECK(std::abs(sum - trace) < 1e-9);
}

TEST_CASE("eigenvalue errors") {
  CHECK_THROWS_AS(eigenvalues(DenseMatrix(0, 0)), Error);
  CHECK_THROWS_AS(eigenvalues(DenseMatrix(2, 3)), Error);
  auto bad = DenseMatrix::identity(2);
  bad(0, 1) = std::nan("");
  CHECK_THROWS_AS(eigenvalues(bad), Error);
}

TEST_CASE("multiset equality") {
  CHECK(multiset_equal(eigenvalues(build_matrix(fixtures::figure1().graph, MatrixKind::Adjacency).entries()),
                       multiset({4, -1, 1, 1, 0, -1, -2, -2}), 1e-8));
  CHECK(multiset_equal(multiset({0}), multiset({1e-13}), 1e-10));
  CHECK_FALSE(multiset_equal(multiset({1, 1}), multiset({1}), 1e-10));
  CHECK_FALSE(multiset_equal(multiset({1, 1}), multiset({1, 2}), 1e-10));
  // greedy pairing would fail here; a matching succeeds
  CHECK(multiset_equal(multiset({0.0, 0.9}), multiset({0.5, 1.2}), 0.55));
}

TEST_CASE("simple eigenvalue counts") {
  const auto fig = fixtures::figure1();
  CHECK(count_simple(eigenvalues(build_matrix(fig.graph, MatrixKind::Laplacian).entries())) == 4);
  CHECK(count_simple(eigenvalues(build_matrix(fig.graph, MatrixKind::Adjacency).entries())) == 2);
  CHECK(count_simple(multiset({3, 3, 3})) == 0);
  CHECK(count_simple(multiset({1, 1 + 1e-9, 2})) == 1);
}

TEST_CASE("simple eigenvalue bounds") {
  const auto find = [](const std::vector<SimpleEigBound>& bounds, BoundKind kind) {
    for (const auto& b : bounds)
      if (b.kind == kind) return b.bound;
    return std::size_t{0};
  };
  const auto odd = count_bounds(fixtures::k_sun(7).automorphism, 14);
  CHECK(find(odd, BoundKind::UniformOdd) == 2);
  CHECK(find(odd, BoundKind::CycleCount) == 2);
  const auto even = count_bounds(fixtures::k_sun(6).automorphism, 12);
  CHECK(find(even, BoundKind::UniformEven) == 4);
  const auto tree = count_bounds(fixtures::sharpness_tree(8, 3).automorphism, 8);
  CHECK(find(tree, BoundKind::BasicOdd) == 4);
  const auto basic_even = count_bounds(parse_permutation("(3 4)(5 6)", 6), 6);
  CHECK(find(basic_even, BoundKind::BasicEven) == 6);
  CHECK(find(basic_even, BoundKind::CycleCount) == 6);
  CHECK_THROWS_AS(count_bounds(Permutation::identity(3), 4), Error);
}

TEST_CASE("certified subset and spectral bounds") {
  const auto net = fixtures::local_symmetry_network();
  const auto l = build_matrix(net.graph, MatrixKind::Laplacian);
  const auto partial = certified_eigen_subset(l, net.automorphisms);
  CHECK(oracle::contained_multiset(partial.values, testing::values_of(l.entries()), 1e-7));
  const auto report = spectral_bounds(partial, MatrixKind::Laplacian);
  REQUIRE(report.gap_upper_bound.has_value());
  CHECK(*report.gap_upper_bound == doctest::Approx(0.523).epsilon(0.002));

  const auto paper = spectral_bounds(multiset(fixtures::network_laplacian_partial()), MatrixKind::Laplacian);
  CHECK(*paper.gap_upper_bound == doctest::Approx(0.523));
  CHECK(spectral_bounds(multiset(fixtures::network_adjacency_partial()), MatrixKind::Adjacency).radius_lower_bound ==
        doctest::Approx(2.481));
  CHECK_FALSE(spectral_bounds(multiset({0}), MatrixKind::Laplacian).gap_upper_bound.has_value());
  CHECK_FALSE(spectral_bounds(multiset({1}), MatrixKind::Adjacency).gap_upper_bound.has_value());
  CHECK_THROWS_AS(spectral_bounds(SpectrumMultiset{}, MatrixKind::Laplacian), Error);

  const std::vector<Permutation> not_auto{parse_permutation("(1 21)", 21)};
  CHECK_THROWS_AS(certified_eigen_subset(l, not_auto), DomainError);
}
