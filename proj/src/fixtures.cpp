// SPDX-License-Identifier: Apache-2.0

#include "eqdecomp/fixtures.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "eqdecomp/error.hpp"

namespace eqdecomp::fixtures {

namespace {

// Builds an unweighted graph from 1-based endpoint pairs.
Graph from_labels(std::size_t n, Directedness dir, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back(Edge{u - 1, v - 1, 1.0});
  return Graph(n, dir, std::move(edges));
}

Permutation from_label_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles) {
  std::vector<std::vector<Vertex>> zero_based;
  for (const auto& cycle : cycles) {
    auto& out = zero_based.emplace_back();
    for (std::size_t v : cycle) out.push_back(v - 1);
  }
  return Permutation::from_cycles(n, zero_based);
}

// (1 3 ... 2k-1)(2 4 ... 2k)
Permutation two_rail_rotation(std::size_t k) {
  std::vector<std::size_t> odd, even;
  for (std::size_t i = 1; i <= k; ++i) {
    odd.push_back(2 * i - 1);
    even.push_back(2 * i);
  }
  return from_label_cycles(2 * k, {odd, even});
}

}  // namespace

Fixture figure1() {
  const Graph g = from_labels(8, Directedness::Undirected,
                              {{1, 2}, {3, 4}, {5, 6}, {7, 8},                   // A0
                               {2, 3}, {2, 4}, {4, 5}, {4, 6}, {6, 7}, {6, 8},   // A1 and its images
                               {8, 1}, {8, 2},
                               {2, 6}, {4, 8}});                                 // A2
  return {g, from_label_cycles(8, {{1, 3, 5, 7}, {2, 4, 6, 8}})};
}

Fixture k_sun(std::size_t k) {
  if (k < 3) throw DomainError("k-sun needs k >= 3");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i <= k; ++i) {
    pairs.emplace_back(2 * i - 1, 2 * i);
    pairs.emplace_back(2 * i, i == k ? 2 : 2 * i + 2);
  }
  return {from_labels(2 * k, Directedness::Undirected, pairs), two_rail_rotation(k)};
}

Fixture directed_ladder(std::size_t k) {
  if (k < 2) throw DomainError("directed ladder needs k >= 2");
  const std::size_t n = 2 * k;
  const auto wrap = [n](std::size_t v) { return v > n ? v - n : v; };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i <= k; ++i) {
    pairs.emplace_back(2 * i - 1, wrap(2 * i + 1));
    pairs.emplace_back(2 * i, wrap(2 * i + 2));
    pairs.emplace_back(2 * i, 2 * i - 1);
    pairs.emplace_back(2 * i - 1, 2 * i);
  }
  return {from_labels(n, Directedness::Directed, pairs), two_rail_rotation(k)};
}

Fixture trigraph10() {
  const Graph g = from_labels(10, Directedness::Undirected,
                              {{1, 2}, {2, 3}, {3, 4}, {4, 2},
                               {1, 5}, {5, 6}, {6, 7}, {7, 5},
                               {1, 8}, {8, 9}, {9, 10}, {10, 8},
                               {4, 6}, {7, 9}, {10, 3}});
  return {g, from_label_cycles(10, {{2, 5, 8}, {3, 6, 9}, {4, 7, 10}})};
}

Fixture sharpness_tree(std::size_t n, std::size_t path_length) {
  const std::size_t big_n = path_length;
  if (n % 2 != 0 || big_n % 2 != 1 || big_n + 2 >= n)
    throw DomainError("sharpness tree needs n even, N odd and N < n - 2 (got n=" + std::to_string(n) +
                      ", N=" + std::to_string(big_n) + ")");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i < big_n; ++i) pairs.emplace_back(i, i + 1);
  std::vector<std::size_t> leaves;
  for (std::size_t v = big_n + 1; v <= n; ++v) {
    pairs.emplace_back(big_n, v);
    leaves.push_back(v);
  }
  return {from_labels(n, Directedness::Undirected, pairs), from_label_cycles(n, {leaves})};
}

std::vector<LabeledBlock> network_blocks() {
  const DenseMatrix identity2 = DenseMatrix::identity(2);
  const DenseMatrix zero1(1, 1);
  return {
      {"B_{1,1}",
       DenseMatrix::from_rows({{-1, 1, 0, 0}, {1, -1, 1, 1}, {0, 1, 0, 0}, {0, 1, 0, 0}}),
       {1.170, 0.0, -0.689, -2.481}},
      {"B_{1,2}", identity2, {-1.0, 1.0}},
      {"B_{2,2}", identity2, {-1.0, 1.0}},
      {"B_{1,3}", zero1, {0.0}},
      {"B_{2,3}", zero1, {0.0}},
  };
}

std::vector<double> network_adjacency_partial() {
  return {-2.481, -0.689, -1.0, -1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.170};
}

std::vector<double> network_laplacian_partial() {
  return {0.523, 1.0, 1.0, 1.0, 1.0, 1.0, 3.0, 3.0, 3.552, 5.925};
}

LocalSymmetryNetwork local_symmetry_network() {
  const Graph g = from_labels(21, Directedness::Undirected,
                              {// gadget swapped by (1 2)(3 4)(5 6)(7 8)
                               {1, 2}, {3, 4}, {1, 3}, {2, 4}, {3, 5}, {4, 6}, {3, 7}, {4, 8},
                               // hexagon rotated by (9 11 13)(10 12 14)
                               {9, 10}, {10, 11}, {11, 12}, {12, 13}, {13, 14}, {14, 9},
                               // core
                               {18, 1}, {18, 2}, {19, 9}, {19, 11}, {19, 13},
                               {20, 15}, {20, 16}, {20, 17},
                               {18, 19}, {19, 20}, {21, 18}, {21, 20}});
  return {g,
          {from_label_cycles(21, {{1, 2}, {3, 4}, {5, 6}, {7, 8}}),
           from_label_cycles(21, {{9, 11, 13}, {10, 12, 14}}),
           from_label_cycles(21, {{15, 16, 17}})}};
}

PlantedInstance planted_random(std::uint64_t seed, std::size_t n, std::size_t k, std::size_t p_fixed,
                               double density, PlantedOptions options) {
  if (k < 2) throw DomainError("planted instance needs orbit size k >= 2");
  if (p_fixed >= n || (n - p_fixed) % k != 0)
    throw DomainError("infeasible planted instance: n - p = " + std::to_string(n - std::min(n, p_fixed)) +
                      " is not a positive multiple of k = " + std::to_string(k));
  if (!(density >= 0.0 && density <= 1.0)) throw DomainError("density must lie in [0, 1]");

  // Raw engine output only, so streams are identical across standard libraries.
  std::mt19937_64 rng(seed);
  const auto uniform01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const auto below = [&rng](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };

  std::vector<Vertex> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = i;
  for (std::size_t i = n - 1; i > 0; --i) std::swap(label[i], label[below(i + 1)]);

  // Slot p + o*k + l holds position l of orbit o; slots < p are fixed.
  std::vector<Vertex> images(n);
  for (std::size_t slot = 0; slot < n; ++slot) {
    std::size_t next = slot;
    if (slot >= p_fixed) {
      const std::size_t offset = (slot - p_fixed) % k;
      next = slot - offset + (offset + 1) % k;
    }
    images[label[slot]] = label[next];
  }
  const Permutation phi(std::move(images));

  const bool directed = options.directedness == Directedness::Directed;
  const auto normalize = [directed](Vertex u, Vertex v) {
    return (!directed && u > v) ? std::pair{v, u} : std::pair{u, v};
  };
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = directed ? 0 : u + 1; v < n; ++v) {
      if (u == v) continue;
      // Only the lexicographically smallest pair of each orbit draws.
      std::vector<std::pair<Vertex, Vertex>> orbit;
      bool representative = true;
      Vertex a = u;
      Vertex b = v;
      for (std::size_t t = 0; t < k; ++t) {
        const auto pair = normalize(a, b);
        if (pair < std::pair{u, v}) {
          representative = false;
          break;
        }
        orbit.push_back(pair);
        a = phi(a);
        b = phi(b);
      }
      if (!representative) continue;
      if (uniform01() >= density) continue;
      const double w = options.weighted ? static_cast<double>(1 + below(9)) : 1.0;
      for (const auto& [x, y] : orbit) edges.push_back(Edge{x, y, w});
    }
  return {Graph(n, options.directedness, std::move(edges), options.weighted), phi, seed};
}

}  // namespace eqdecomp::fixtures
