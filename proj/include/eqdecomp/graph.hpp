// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace eqdecomp {

/// Zero-based vertex index. Files and reports use 1-based labels; the
/// conversion happens only at the I/O boundary.
using Vertex = std::size_t;

enum class Directedness { Undirected, Directed };

struct Edge {
  Vertex from = 0;
  Vertex to = 0;
  double weight = 1.0;
};

/// Simple (optionally weighted, optionally directed) graph on vertices
/// 0..order-1. Loops are allowed; parallel edges are not.
///
/// Undirected edges are stored once with from <= to. Edges are kept sorted,
/// so two graphs built from the same edge set compare equal.
class Graph {
 public:
  Graph() = default;
  /// Normalizes and validates the edge list. Duplicate edges with the same
  /// weight collapse; duplicates with different weights throw ParseError.
  Graph(std::size_t order, Directedness directedness, std::vector<Edge> edges, bool weighted = false);

  std::size_t order() const noexcept { return order_; }
  bool directed() const noexcept { return directedness_ == Directedness::Directed; }
  Directedness directedness() const noexcept { return directedness_; }
  bool weighted() const noexcept { return weighted_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_edge(Vertex u, Vertex v) const;
  /// Weighted adjacency entry a_uv: the edge weight, or 0 when absent.
  /// Unweighted graphs report 1 for every edge.
  double weight(Vertex u, Vertex v) const;

  /// Out-neighbour lists (both directions for undirected graphs).
  std::vector<std::vector<Vertex>> out_neighbours() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  const Edge* find(Vertex u, Vertex v) const;

  std::size_t order_ = 0;
  Directedness directedness_ = Directedness::Undirected;
  bool weighted_ = false;
  std::vector<Edge> edges_;
};

/// Parses the edge-list text format:
///   n=<int> <directed|undirected> [weighted]
///   <i> <j> [<weight>]
/// with 1-based vertices and `#` comments.
Graph parse_graph(std::string_view text);

/// Serializes in the same format parse_graph reads. Weights are written with
/// enough digits to round-trip.
std::string to_graph_text(const Graph& g);

}  // namespace eqdecomp
