#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "generators.hpp"
#include "oracles.hpp"
#include "sgec/datasets.hpp"
#include "sgec/error.hpp"
#include "sgec/graph.hpp"

using namespace sgec;
using namespace sgec::testing;

TEST_CASE("edge list one-based maps to dense ids") {
  Graph g = parse_edge_list("1 2\n2 3", Indexing::one_based);
  CHECK(g.num_vertices() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.external_id(0) == 1);
}

TEST_CASE("edge list collapses duplicates") {
  Graph g = parse_edge_list("0 1\n0 1", Indexing::zero_based);
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 1);
  CHECK(g.duplicate_edges() == 1);
}

TEST_CASE("edge list errors") {
  SUBCASE("self-loop") {
    try {
      parse_edge_list("0 1\n3 3", Indexing::zero_based);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("malformed line reports its number") {
    try {
      parse_edge_list("# header\n0 1\n1 x\n", Indexing::zero_based);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("three tokens") { CHECK_THROWS_AS(parse_edge_list("0 1 2", Indexing::zero_based), ParseError); }
  SUBCASE("empty input") { CHECK_THROWS_AS(parse_edge_list("# nothing\n\n", Indexing::zero_based), ParseError); }
  SUBCASE("zero id with one-based indexing") {
    CHECK_THROWS_AS(parse_edge_list("0 1", Indexing::one_based), ParseError);
  }
}

TEST_CASE("edge list vertex header keeps isolated vertices") {
  Graph g = parse_edge_list("# vertices 5\n0 1\n", Indexing::zero_based);
  CHECK(g.num_vertices() == 5);
  CHECK(g.degree(4) == 0);
  CHECK_THROWS_AS(parse_edge_list("# vertices 2\n0 4\n", Indexing::zero_based), ParseError);
}

TEST_CASE("pajek subset") {
  Graph g = parse_pajek("*Vertices 3\n*Edges\n1 2");
  CHECK(g.num_vertices() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}});

  Graph arcs = parse_pajek("*Vertices 2\n*Arcs\n1 2\n2 1");
  CHECK(arcs.num_vertices() == 2);
  CHECK(arcs.num_edges() == 1);

  Graph labelled = parse_pajek("% comment\n*Vertices 2\n1 \"Alice A\"\n2 Bob\n*Edges\n1 2 1.0\n");
  REQUIRE(labelled.names().size() == 2);
  CHECK(labelled.names()[0] == "Alice A");
  CHECK(labelled.names()[1] == "Bob");

  CHECK_THROWS_AS(parse_pajek("*Edges\n1 2"), ParseError);
  CHECK_THROWS_AS(parse_pajek("1 2"), ParseError);
  CHECK_THROWS_AS(parse_pajek("*Vertices 2\n*Edges\n1 3"), ParseError);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(path_graph(3)));
  CHECK_FALSE(is_connected(make_graph(4, {{0, 1}, {2, 3}})));
  CHECK(is_connected(Graph(1, std::vector<Edge>{})));
  CHECK_FALSE(is_connected(Graph()));
}

TEST_CASE("degree") {
  CHECK(complete_graph(3).degree(1) == 2);
  CHECK(star_graph(3).degree(0) == 3);
  Graph karate = karate_club();
  CHECK(karate.degree(33) == 17);  // vertex 34
  CHECK_THROWS_AS(karate.degree(34), Error);
}

TEST_CASE("graph rejects self-loops") {
  std::vector<Edge> e{{1, 1}};
  CHECK_THROWS_AS(Graph(2, e), Error);
}

TEST_CASE("karate fixture size") {
  Graph g = karate_club();
  CHECK(g.num_vertices() == 34);
  CHECK(g.num_edges() == 78);
  CHECK(is_connected(g));
}

TEST_CASE("property: serialization round-trips in both formats") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 1 + rng() % 15;
    Graph g = random_graph(n, 0.3, rng);
    for (Indexing ix : {Indexing::zero_based, Indexing::one_based}) {
      std::stringstream ss;
      write_edge_list(ss, g, ix);
      CHECK(parse_edge_list(ss, ix) == g);
    }
    std::stringstream pj;
    write_pajek(pj, g);
    CHECK(parse_pajek(pj) == g);
  }
}

TEST_CASE("property: degree sum is twice the edge count") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(1 + rng() % 20, 0.25, rng);
    std::size_t sum = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) sum += g.degree(v);
    CHECK(sum == 2 * g.num_edges());
    for (const Edge& e : g.edges()) {
      CHECK(g.has_edge(e.u, e.v));
      CHECK(g.has_edge(e.v, e.u));
    }
  }
}

TEST_CASE("property: is_connected agrees with union-find") {
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = random_graph(1 + rng() % 12, 0.2, rng);
    CHECK(is_connected(g) == union_find_connected(g));
  }
}
