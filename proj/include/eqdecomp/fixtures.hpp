// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqdecomp/dense_matrix.hpp"
#include "eqdecomp/graph.hpp"
#include "eqdecomp/permutation.hpp"

namespace eqdecomp::fixtures {

struct Fixture {
  Graph graph;
  Permutation automorphism;
};

/// 8-vertex simple graph whose adjacency matrix, labelled by the powers of
/// the transversal {1, 2} of (1 3 5 7)(2 4 6 8), is block circulant with
/// A0 = [[0,1],[1,0]], A1 = [[0,0],[1,1]], A2 = [[0,0],[0,1]], A3 = [[0,1],[0,1]].
Fixture figure1();

/// Cycle 2-4-...-2k with a pendant odd vertex on each even vertex;
/// automorphism (1 3 ... 2k-1)(2 4 ... 2k). Requires k >= 3.
Fixture k_sun(std::size_t k);

/// Directed "ladder" on 2k vertices: arcs 2i-1 -> 2i+1 and 2i -> 2i+2
/// (indices mod 2k) along the rails, rungs 2i <-> 2i-1 in both directions.
/// Automorphism (1 3 ... 2k-1)(2 4 ... 2k). Requires k >= 2.
Fixture directed_ladder(std::size_t k);

/// Three triangles hanging off vertex 1 and joined in a ring, with the basic
/// automorphism (1)(2 5 8)(3 6 9)(4 7 10).
Fixture trigraph10();

/// Path 1-2-...-N with n-N leaves attached to vertex N, and the basic
/// automorphism (N+1 ... n). Requires n even, N odd, N < n-2.
Fixture sharpness_tree(std::size_t n, std::size_t path_length);

/// A published block from the 86-vertex network example: the matrix as
/// printed and the spectrum stated for it.
struct LabeledBlock {
  std::string label;
  DenseMatrix matrix;
  std::vector<double> stated_spectrum;
};

std::vector<LabeledBlock> network_blocks();
/// Published certified subsets of σ(A) and σ(L) for the 86-vertex network.
std::vector<double> network_adjacency_partial();
std::vector<double> network_laplacian_partial();

/// A 21-vertex network carrying the three local symmetries
/// (1 2)(3 4)(5 6)(7 8), (9 11 13)(10 12 14) and (15 16 17) around a small
/// core. Its first gadget reproduces the published block B_{1,1}.
struct LocalSymmetryNetwork {
  Graph graph;
  std::vector<Permutation> automorphisms;
};
LocalSymmetryNetwork local_symmetry_network();

struct PlantedOptions {
  Directedness directedness = Directedness::Undirected;
  bool weighted = false;
};

struct PlantedInstance {
  Graph graph;
  Permutation automorphism;
  std::uint64_t seed = 0;
};

/// Random graph with a planted automorphism of p fixed points and (n-p)/k
/// orbits of size k. Vertex labels are shuffled; each orbit of vertex pairs
/// under the automorphism becomes an edge orbit with probability `density`
/// (weights uniform in 1..9 when weighted). Deterministic in `seed`.
/// Throws DomainError if k < 2, (n-p) is not a positive multiple of k, or
/// density is outside [0, 1].
PlantedInstance planted_random(std::uint64_t seed, std::size_t n, std::size_t k, std::size_t p_fixed,
                               double density, PlantedOptions options = {});

}  // namespace eqdecomp::fixtures
