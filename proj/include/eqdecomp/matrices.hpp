// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <string_view>

#include "eqdecomp/dense_matrix.hpp"
#include "eqdecomp/graph.hpp"
#include "eqdecomp/permutation.hpp"

namespace eqdecomp {

enum class MatrixKind {
  Adjacency,
  WeightedAdjacency,
  Laplacian,
  SignlessLaplacian,
  NormalizedLaplacian,
  Distance,
  Custom,
};

/// CLI spelling: adjacency, weighted, laplacian, signless, normalized,
/// distance, custom.
std::string_view to_string(MatrixKind kind);
std::optional<MatrixKind> parse_matrix_kind(std::string_view name);

/// A square matrix tagged with the graph it was built from. Custom matrices
/// carry no source graph.
class CompatibleMatrix {
 public:
  CompatibleMatrix(MatrixKind kind, DenseMatrix entries, std::shared_ptr<const Graph> source);
  static CompatibleMatrix custom(DenseMatrix entries);

  MatrixKind kind() const noexcept { return kind_; }
  const DenseMatrix& entries() const noexcept { return entries_; }
  const Graph* source() const noexcept { return source_.get(); }
  std::size_t dimension() const noexcept { return entries_.rows(); }

 private:
  MatrixKind kind_;
  DenseMatrix entries_;
  std::shared_ptr<const Graph> source_;
};

/// Builds one of the automorphism-compatible matrices of a graph.
///
/// - Adjacency: 0/1 entries, weights ignored.
/// - WeightedAdjacency: a_ij = w(i, j).
/// - Laplacian / SignlessLaplacian: D ∓ A with A the weighted adjacency and
///   D the weighted degrees (a loop counts twice). Undirected graphs only.
/// - NormalizedLaplacian: I - D^{-1/2} A D^{-1/2}; every degree must be > 0.
/// - Distance: BFS path lengths, ignoring weights; the graph must be
///   (strongly) connected.
///
/// Throws DomainError when a precondition fails.
CompatibleMatrix build_matrix(const Graph& g, MatrixKind kind);

/// Weighted degree of each vertex (row sums of the weighted adjacency, loops
/// counted twice for undirected graphs).
std::vector<double> weighted_degrees(const Graph& g);

/// True iff m(φ(i), φ(j)) == m(i, j) for all i, j, or within `tolerance`
/// when it is positive.
bool is_compatible(const DenseMatrix& m, const Permutation& phi, double tolerance = 0.0);
bool is_compatible(const CompatibleMatrix& m, const Permutation& phi, double tolerance = 0.0);

}  // namespace eqdecomp
