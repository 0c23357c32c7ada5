// SPDX-License-Identifier: Apache-2.0

#include "eqdecomp/matrices.hpp"

#include <array>
#include <cmath>
#include <deque>
#include <limits>
#include <string>
#include <utility>

#include "eqdecomp/error.hpp"

namespace eqdecomp {

namespace {

constexpr std::array<std::pair<MatrixKind, std::string_view>, 7> kKindNames{{
    {MatrixKind::Adjacency, "adjacency"},
    {MatrixKind::WeightedAdjacency, "weighted"},
    {MatrixKind::Laplacian, "laplacian"},
    {MatrixKind::SignlessLaplacian, "signless"},
    {MatrixKind::NormalizedLaplacian, "normalized"},
    {MatrixKind::Distance, "distance"},
    {MatrixKind::Custom, "custom"},
}};

DenseMatrix adjacency(const Graph& g, bool use_weights) {
  DenseMatrix a(g.order(), g.order());
  for (const auto& e : g.edges()) {
    const double w = use_weights ? e.weight : 1.0;
    a(e.from, e.to) = w;
    if (!g.directed()) a(e.to, e.from) = w;
  }
  return a;
}

void require_undirected(const Graph& g, MatrixKind kind) {
  if (g.directed())
    throw DomainError(std::string(to_string(kind)) + " matrix is only defined for undirected graphs");
}

DenseMatrix distance_matrix(const Graph& g) {
  const std::size_t n = g.order();
  const auto adj = g.out_neighbours();
  constexpr std::size_t unreached = std::numeric_limits<std::size_t>::max();
  DenseMatrix d(n, n);
  std::vector<std::size_t> dist(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), unreached);
    dist[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : adj[u]) {
        if (dist[v] != unreached) continue;
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
    for (Vertex t = 0; t < n; ++t) {
      if (dist[t] == unreached)
        throw DomainError(std::string("distance matrix requires a ") +
                          (g.directed() ? "strongly connected" : "connected") + " graph: vertex " +
                          std::to_string(t + 1) + " is unreachable from vertex " + std::to_string(s + 1));
      d(s, t) = static_cast<double>(dist[t]);
    }
  }
  return d;
}

}  // namespace

std::string_view to_string(MatrixKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "custom";
}

std::optional<MatrixKind> parse_matrix_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  return std::nullopt;
}

CompatibleMatrix::CompatibleMatrix(MatrixKind kind, DenseMatrix entries, std::shared_ptr<const Graph> source)
    : kind_(kind), entries_(std::move(entries)), source_(std::move(source)) {
  if (!entries_.is_square()) throw Error("matrix must be square");
  if (source_ && source_->order() != entries_.rows())
    throw Error("matrix dimension does not match the graph's vertex count");
}

CompatibleMatrix CompatibleMatrix::custom(DenseMatrix entries) {
  return CompatibleMatrix(MatrixKind::Custom, std::move(entries), nullptr);
}

std::vector<double> weighted_degrees(const Graph& g) {
  std::vector<double> deg(g.order(), 0.0);
  for (const auto& e : g.edges()) {
    deg[e.from] += e.weight;
    if (!g.directed()) deg[e.to] += e.weight;
  }
  return deg;
}

CompatibleMatrix build_matrix(const Graph& g, MatrixKind kind) {
  auto source = std::make_shared<const Graph>(g);
  const std::size_t n = g.order();
  switch (kind) {
    case MatrixKind::Adjacency:
      return CompatibleMatrix(kind, adjacency(g, false), source);
    case MatrixKind::WeightedAdjacency:
      return CompatibleMatrix(kind, adjacency(g, true), source);
    case MatrixKind::Laplacian:
    case MatrixKind::SignlessLaplacian: {
      require_undirected(g, kind);
      DenseMatrix m = adjacency(g, true);
      const double sign = kind == MatrixKind::Laplacian ? -1.0 : 1.0;
      m *= sign;
      const auto deg = weighted_degrees(g);
      for (std::size_t i = 0; i < n; ++i) m(i, i) += deg[i];
      return CompatibleMatrix(kind, std::move(m), source);
    }
    case MatrixKind::NormalizedLaplacian: {
      require_undirected(g, kind);
      const auto deg = weighted_degrees(g);
      std::vector<double> inv_sqrt(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (!(deg[i] > 0.0))
          throw DomainError("normalized Laplacian requires positive degrees: vertex " + std::to_string(i + 1) +
                            " has degree " + std::to_string(deg[i]));
        inv_sqrt[i] = 1.0 / std::sqrt(deg[i]);
      }
      DenseMatrix m = DenseMatrix::identity(n);
      for (const auto& e : g.edges()) {
        // the endpoint product commutes exactly, so orbit-mapped edges get identical entries
        const double scaled = e.weight * (inv_sqrt[e.from] * inv_sqrt[e.to]);
        m(e.from, e.to) -= scaled;
        if (e.from != e.to) m(e.to, e.from) -= scaled;
      }
      return CompatibleMatrix(kind, std::move(m), source);
    }
    case MatrixKind::Distance:
      return CompatibleMatrix(kind, distance_matrix(g), source);
    case MatrixKind::Custom:
      break;
  }
  throw Error("custom matrices are not built from a graph");
}

bool is_compatible(const DenseMatrix& m, const Permutation& phi, double tolerance) {
  if (!m.is_square() || m.rows() != phi.size())
    throw Error("matrix dimension " + std::to_string(m.rows()) + " does not match permutation size " +
                std::to_string(phi.size()));
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Complex a = m(i, j);
      const Complex b = m(phi(i), phi(j));
      if (tolerance > 0.0 ? std::abs(a - b) > tolerance : a != b) return false;
    }
  return true;
}

bool is_compatible(const CompatibleMatrix& m, const Permutation& phi, double tolerance) {
  return is_compatible(m.entries(), phi, tolerance);
}

}  // namespace eqdecomp
