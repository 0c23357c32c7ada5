// SPDX-License-Identifier: Apache-2.0

#include "eqdecomp/partition.hpp"

#include <cmath>
#include <string>

#include "eqdecomp/error.hpp"

namespace eqdecomp {

namespace {

void require_matching(const DenseMatrix& m, const VertexPartition& partition) {
  if (!m.is_square() || m.rows() != partition.size())
    throw Error("partition covers " + std::to_string(partition.size()) + " vertices but the matrix is " +
                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

Complex row_sum(const DenseMatrix& m, Vertex s, const std::vector<Vertex>& cell) {
  Complex sum{};
  for (Vertex t : cell) sum += m(s, t);
  return sum;
}

}  // namespace

VertexPartition::VertexPartition(std::size_t n, std::vector<std::vector<Vertex>> cells)
    : n_(n), cells_(std::move(cells)) {
  std::vector<bool> seen(n_, false);
  std::size_t covered = 0;
  for (const auto& cell : cells_) {
    if (cell.empty()) throw Error("partition has an empty cell");
    for (Vertex v : cell) {
      if (v >= n_) throw Error("partition vertex " + std::to_string(v + 1) + " out of range 1.." + std::to_string(n_));
      if (seen[v]) throw Error("vertex " + std::to_string(v + 1) + " appears in more than one cell");
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != n_) throw Error("partition does not cover every vertex");
}

double default_equitable_tolerance(const DenseMatrix& m) { return m.is_integer_valued() ? 0.0 : 1e-9; }

bool is_equitable(const DenseMatrix& m, const VertexPartition& partition, std::optional<double> tolerance) {
  require_matching(m, partition);
  const double tol = tolerance.value_or(default_equitable_tolerance(m));
  for (const auto& source_cell : partition.cells())
    for (const auto& target_cell : partition.cells()) {
      const Complex reference = row_sum(m, source_cell.front(), target_cell);
      for (std::size_t a = 1; a < source_cell.size(); ++a) {
        const Complex sum = row_sum(m, source_cell[a], target_cell);
        if (tol > 0.0 ? std::abs(sum - reference) > tol : sum != reference) return false;
      }
    }
  return true;
}

bool is_equitable(const CompatibleMatrix& m, const VertexPartition& partition, std::optional<double> tolerance) {
  return is_equitable(m.entries(), partition, tolerance);
}

VertexPartition orbit_partition(const Permutation& phi) {
  std::vector<std::vector<Vertex>> cells;
  for (const auto& cycle : phi.cycles())
    if (cycle.size() == 1) cells.push_back(cycle);
  for (const auto& cycle : phi.cycles())
    if (cycle.size() > 1) cells.push_back(cycle);
  return VertexPartition(phi.size(), std::move(cells));
}

DivisorMatrix divisor_matrix(const DenseMatrix& m, const VertexPartition& partition, std::optional<double> tolerance) {
  if (!is_equitable(m, partition, tolerance)) throw DomainError("partition is not equitable for this matrix");
  const auto& cells = partition.cells();
  DenseMatrix d(cells.size(), cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = 0; j < cells.size(); ++j) d(i, j) = row_sum(m, cells[i].front(), cells[j]);
  return DivisorMatrix{std::move(d), partition};
}

DivisorMatrix divisor_matrix(const CompatibleMatrix& m, const VertexPartition& partition,
                             std::optional<double> tolerance) {
  return divisor_matrix(m.entries(), partition, tolerance);
}

}  // namespace eqdecomp
