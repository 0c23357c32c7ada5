// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "eqdecomp/error.hpp"
#include "eqdecomp/graph.hpp"

using namespace eqdecomp;

TEST_CASE("parse an undirected graph") {
  const Graph g = parse_graph("# a triangle\nn=3 undirected\n1 2\n2 3\n3 1  # closing edge\n");
  CHECK(g.order() == 3);
  CHECK_FALSE(g.directed());
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  CHECK(g.weight(1, 0) == 1.0);
}

TEST_CASE("parse a weighted directed graph") {
  const Graph g = parse_graph("n=3 directed weighted\n1 2 2.5\n2 3 -1\n");
  CHECK(g.directed());
  CHECK(g.weighted());
  CHECK(g.weight(0, 1) == 2.5);
  CHECK(g.weight(1, 0) == 0.0);
  CHECK(g.weight(1, 2) == -1.0);
}

TEST_CASE("text round trip") {
  const Graph g = parse_graph("n=4 directed weighted\n1 2 0.1\n4 3 7\n2 2 3\n");
  CHECK(parse_graph(to_graph_text(g)) == g);
}

TEST_CASE("duplicate edges collapse, conflicting weights do not") {
  CHECK(parse_graph("n=2 undirected\n1 2\n2 1\n").edge_count() == 1);
  CHECK_THROWS_AS(parse_graph("n=2 undirected weighted\n1 2 1\n2 1 3\n"), ParseError);
}

TEST_CASE("malformed input names the line") {
  CHECK_THROWS_AS(parse_graph(""), ParseError);
  CHECK_THROWS_AS(parse_graph("n=0 undirected\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("n=3 sideways\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("n=3 undirected\n1 4\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("n=3 undirected\n1 2 5\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("n=3 undirected weighted\n1 2\n"), ParseError);
  try {
    parse_graph("n=3 undirected\n1 2\nx y\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}
