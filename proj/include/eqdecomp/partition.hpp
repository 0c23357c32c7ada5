// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "eqdecomp/dense_matrix.hpp"
#include "eqdecomp/matrices.hpp"
#include "eqdecomp/permutation.hpp"

namespace eqdecomp {

/// Cells V_1..V_k covering {0..n-1}; no cell is empty. The order of cells,
/// and of vertices within a cell, is preserved as given.
class VertexPartition {
 public:
  VertexPartition(std::size_t n, std::vector<std::vector<Vertex>> cells);

  std::size_t size() const noexcept { return n_; }
  std::size_t cell_count() const noexcept { return cells_.size(); }
  const std::vector<std::vector<Vertex>>& cells() const noexcept { return cells_; }

 private:
  std::size_t n_;
  std::vector<std::vector<Vertex>> cells_;
};

struct DivisorMatrix {
  DenseMatrix entries;
  VertexPartition partition;
};

/// Exact (0) for integer-valued matrices, 1e-9 otherwise.
double default_equitable_tolerance(const DenseMatrix& m);

/// True iff every row sum of m into cell V_j is the same for all rows s in
/// cell V_i. `tolerance` defaults to default_equitable_tolerance(m).
bool is_equitable(const DenseMatrix& m, const VertexPartition& partition,
                  std::optional<double> tolerance = std::nullopt);
bool is_equitable(const CompatibleMatrix& m, const VertexPartition& partition,
                  std::optional<double> tolerance = std::nullopt);

/// Orbits of φ as cells: fixed vertices first (ascending, as singletons),
/// then the nontrivial orbits by minimum element, each listed v, φ(v), ...
VertexPartition orbit_partition(const Permutation& phi);

/// The k x k matrix of constant row sums d_ij. Entry (i, j) is the row sum of
/// the first vertex of V_i into V_j, accumulated in the cell's listed order.
/// Throws DomainError if the partition is not equitable.
DivisorMatrix divisor_matrix(const CompatibleMatrix& m, const VertexPartition& partition,
                             std::optional<double> tolerance = std::nullopt);
DivisorMatrix divisor_matrix(const DenseMatrix& m, const VertexPartition& partition,
                             std::optional<double> tolerance = std::nullopt);

}  // namespace eqdecomp
