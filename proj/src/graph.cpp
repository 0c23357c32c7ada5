// SPDX-License-Identifier: Apache-2.0

#include "eqdecomp/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <string>

#include "eqdecomp/error.hpp"

namespace eqdecomp {

namespace {

bool edge_less(const Edge& a, const Edge& b) {
  return a.from != b.from ? a.from < b.from : a.to < b.to;
}

std::string label(Vertex v) { return std::to_string(v + 1); }

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

template <typename T>
bool parse_number(std::string_view token, T& out) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

Graph::Graph(std::size_t order, Directedness directedness, std::vector<Edge> edges, bool weighted)
    : order_(order), directedness_(directedness), weighted_(weighted), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.from >= order_ || e.to >= order_)
      throw ParseError("edge (" + label(e.from) + ", " + label(e.to) + ") has an endpoint outside 1.." +
                       std::to_string(order_));
    if (!weighted_) e.weight = 1.0;
    if (!std::isfinite(e.weight))
      throw ParseError("edge (" + label(e.from) + ", " + label(e.to) + ") has a non-finite weight");
    if (directedness_ == Directedness::Undirected && e.from > e.to) std::swap(e.from, e.to);
  }
  std::stable_sort(edges_.begin(), edges_.end(), edge_less);
  std::vector<Edge> unique;
  unique.reserve(edges_.size());
  for (const auto& e : edges_) {
    if (!unique.empty() && unique.back().from == e.from && unique.back().to == e.to) {
      if (unique.back().weight != e.weight)
        throw ParseError("duplicate edge (" + label(e.from) + ", " + label(e.to) + ") with conflicting weights");
      continue;
    }
    unique.push_back(e);
  }
  edges_ = std::move(unique);
}

const Edge* Graph::find(Vertex u, Vertex v) const {
  if (directedness_ == Directedness::Undirected && u > v) std::swap(u, v);
  const Edge key{u, v, 0.0};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key, edge_less);
  if (it != edges_.end() && it->from == u && it->to == v) return &*it;
  return nullptr;
}

bool Graph::has_edge(Vertex u, Vertex v) const { return find(u, v) != nullptr; }

double Graph::weight(Vertex u, Vertex v) const {
  const Edge* e = find(u, v);
  return e ? e->weight : 0.0;
}

std::vector<std::vector<Vertex>> Graph::out_neighbours() const {
  std::vector<std::vector<Vertex>> adj(order_);
  for (const auto& e : edges_) {
    adj[e.from].push_back(e.to);
    if (!directed() && e.from != e.to) adj[e.to].push_back(e.from);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.order_ != b.order_ || a.directedness_ != b.directedness_ || a.weighted_ != b.weighted_ ||
      a.edges_.size() != b.edges_.size())
    return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const auto& x = a.edges_[i];
    const auto& y = b.edges_[i];
    if (x.from != y.from || x.to != y.to || x.weight != y.weight) return false;
  }
  return true;
}

Graph parse_graph(std::string_view text) {
  std::size_t order = 0;
  bool have_header = false;
  bool weighted = false;
  Directedness directedness = Directedness::Undirected;
  std::vector<Edge> edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_whitespace(line);
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";

    if (!have_header) {
      if (tokens[0].substr(0, 2) != "n=" || !parse_number(tokens[0].substr(2), order))
        throw ParseError(where + "expected header 'n=<int> <directed|undirected> [weighted]'");
      if (order == 0) throw ParseError(where + "vertex count must be positive");
      if (tokens.size() < 2 || tokens.size() > 3)
        throw ParseError(where + "expected header 'n=<int> <directed|undirected> [weighted]'");
      if (tokens[1] == "directed") {
        directedness = Directedness::Directed;
      } else if (tokens[1] == "undirected") {
        directedness = Directedness::Undirected;
      } else {
        throw ParseError(where + "unknown graph type '" + std::string(tokens[1]) + "'");
      }
      if (tokens.size() == 3) {
        if (tokens[2] != "weighted") throw ParseError(where + "unexpected header token '" + std::string(tokens[2]) + "'");
        weighted = true;
      }
      have_header = true;
      continue;
    }

    const std::size_t expected = weighted ? 3 : 2;
    if (tokens.size() != expected)
      throw ParseError(where + (weighted ? "expected '<i> <j> <weight>'" : "expected '<i> <j>'"));
    std::size_t i = 0;
    std::size_t j = 0;
    if (!parse_number(tokens[0], i) || !parse_number(tokens[1], j))
      throw ParseError(where + "vertex labels must be positive integers");
    if (i < 1 || i > order || j < 1 || j > order)
      throw ParseError(where + "vertex out of range 1.." + std::to_string(order));
    double w = 1.0;
    if (weighted && (!parse_number(tokens[2], w) || !std::isfinite(w)))
      throw ParseError(where + "malformed weight '" + std::string(tokens[2]) + "'");
    edges.push_back(Edge{i - 1, j - 1, w});
  }
  if (!have_header) throw ParseError("missing header 'n=<int> <directed|undirected> [weighted]'");
  return Graph(order, directedness, std::move(edges), weighted);
}

std::string to_graph_text(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << (g.directed() ? " directed" : " undirected");
  if (g.weighted()) out << " weighted";
  out << '\n';
  for (const auto& e : g.edges()) {
    out << e.from + 1 << ' ' << e.to + 1;
    if (g.weighted()) {
      char buf[64];
      auto res = std::to_chars(buf, buf + sizeof buf, e.weight);
      out << ' ' << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace eqdecomp
