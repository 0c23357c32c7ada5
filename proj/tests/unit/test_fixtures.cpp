// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "eqdecomp/error.hpp"
#include "eqdecomp/fixtures.hpp"
#include "eqdecomp/orbits.hpp"
#include "helpers.hpp"

using namespace eqdecomp;
using testing::multiset;

TEST_CASE("figure 1") {
  const auto fig = fixtures::figure1();
  CHECK(fig.graph.order() == 8);
  CHECK(is_automorphism(fig.graph, fig.automorphism));
  const auto degrees = weighted_degrees(fig.graph);
  for (Vertex v = 0; v < 8; ++v) CHECK(degrees[v] == (v % 2 == 0 ? 2.0 : 5.0));
  const double s6 = std::sqrt(6.0);
  CHECK(multiset_equal(eigenvalues(build_matrix(fig.graph, MatrixKind::Laplacian).entries()),
                       multiset({0, 4 - s6, 4 - s6, 2, 4, 6, 4 + s6, 4 + s6}), 1e-8));
}

TEST_CASE("k-sun") {
  const auto sun = fixtures::k_sun(3);
  CHECK(sun.graph.order() == 6);
  CHECK(sun.graph.edge_count() == 6);
  for (std::size_t k = 3; k <= 9; ++k) {
    const auto f = fixtures::k_sun(k);
    CHECK(is_automorphism(f.graph, f.automorphism));
    CHECK(orbit_structure(f.automorphism).kind_name() == "Uniform(" + std::to_string(k) + ")");
  }
  CHECK_THROWS_AS(fixtures::k_sun(2), DomainError);
}

TEST_CASE("directed ladder") {
  for (std::size_t k = 2; k <= 6; ++k) {
    const auto f = fixtures::directed_ladder(k);
    CHECK(f.graph.directed());
    CHECK(is_automorphism(f.graph, f.automorphism));
    const auto d = decompose(build_matrix(f.graph, MatrixKind::Adjacency), f.automorphism);
    for (std::size_t j = 1; j < k; ++j) {
      const Complex w = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(k));
      CHECK(max_abs_difference(d.blocks[j - 1], DenseMatrix::from_rows({{w, 1}, {1, w}})) < 1e-12);
    }
  }
  const auto a3 = eigenvalues(build_matrix(fixtures::directed_ladder(3).graph, MatrixKind::Adjacency).entries());
  CHECK(count_simple(a3) == 6);
  const auto a4 = eigenvalues(build_matrix(fixtures::directed_ladder(4).graph, MatrixKind::Adjacency).entries());
  CHECK(count_simple(a4) == 6);
  CHECK_THROWS_AS(fixtures::directed_ladder(1), DomainError);
}

TEST_CASE("ten-vertex basic example") {
  const auto tri = fixtures::trigraph10();
  CHECK(is_automorphism(tri.graph, tri.automorphism));
  const auto s = orbit_structure(tri.automorphism);
  CHECK(s.kind_name() == "Basic(3)");
  CHECK(s.fixed_vertices.size() == 1);
  const auto d = decompose(build_matrix(tri.graph, MatrixKind::Adjacency), tri.automorphism);
  CHECK(multiset_equal(eigenvalues(d.divisor_block), multiset({3, 1, -2, -2}), 1e-8));
}

TEST_CASE("sharpness tree") {
  const auto t = fixtures::sharpness_tree(8, 3);
  CHECK(t.graph.order() == 8);
  CHECK(t.graph.edge_count() == 7);
  CHECK(orbit_structure(t.automorphism).kind_name() == "Basic(5)");
  CHECK(is_automorphism(t.graph, t.automorphism));
  CHECK_THROWS_AS(fixtures::sharpness_tree(9, 3), DomainError);
  CHECK_THROWS_AS(fixtures::sharpness_tree(8, 2), DomainError);
  CHECK_THROWS_AS(fixtures::sharpness_tree(8, 7), DomainError);
}

TEST_CASE("network blocks carry their stated spectra") {
  const auto blocks = fixtures::network_blocks();
  REQUIRE(blocks.size() == 5);
  CHECK(multiset_equal(eigenvalues(blocks[0].matrix), multiset(blocks[0].stated_spectrum), 1e-3));
  for (const auto& b : blocks) {
    if (b.matrix.rows() == 1) {
      CHECK(b.matrix == DenseMatrix::from_rows({{0}}));
      CHECK(b.stated_spectrum == std::vector<double>{0});
    }
    if (b.matrix.rows() == 2) {
      CHECK(b.matrix == DenseMatrix::identity(2));
      CHECK(multiset_equal(multiset(b.stated_spectrum), multiset({-1, 1}), 0.0));
    }
  }
}

TEST_CASE("local-symmetry network") {
  const auto net = fixtures::local_symmetry_network();
  CHECK(net.graph.order() == 21);
  REQUIRE(net.automorphisms.size() == 3);
  for (const auto& phi : net.automorphisms) CHECK(is_automorphism(net.graph, phi));
  const auto partial = certified_eigen_subset(build_matrix(net.graph, MatrixKind::Adjacency), net.automorphisms);
  const std::vector<double> stated = fixtures::network_adjacency_partial();
  CHECK(multiset_equal(partial, multiset(stated), 1e-3));
}

TEST_CASE("planted instances") {
  const auto a = fixtures::planted_random(1, 12, 3, 0, 0.4);
  CHECK(orbit_structure(a.automorphism).kind_name() == "Uniform(3)");
  CHECK(is_automorphism(a.graph, a.automorphism));
  const auto b = fixtures::planted_random(2, 13, 3, 1, 0.4);
  CHECK(orbit_structure(b.automorphism).kind_name() == "Basic(3)");
  CHECK(is_automorphism(b.graph, b.automorphism));

  fixtures::PlantedOptions options;
  options.directedness = Directedness::Directed;
  options.weighted = true;
  const auto c1 = fixtures::planted_random(99, 20, 4, 4, 0.3, options);
  const auto c2 = fixtures::planted_random(99, 20, 4, 4, 0.3, options);
  CHECK(c1.graph == c2.graph);
  CHECK(c1.automorphism == c2.automorphism);
  CHECK(is_automorphism(c1.graph, c1.automorphism));
  const auto c3 = fixtures::planted_random(100, 20, 4, 4, 0.3, options);
  CHECK_FALSE((c3.graph == c1.graph && c3.automorphism == c1.automorphism));

  CHECK_THROWS_AS(fixtures::planted_random(1, 10, 3, 0, 0.5), DomainError);
  CHECK_THROWS_AS(fixtures::planted_random(1, 9, 1, 0, 0.5), DomainError);
  CHECK_THROWS_AS(fixtures::planted_random(1, 9, 3, 0, 1.5), DomainError);
}
