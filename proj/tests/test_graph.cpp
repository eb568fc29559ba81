#include <random>

#include "doctest.h"

#include "convexcycles/errors.hpp"
#include "convexcycles/generators.hpp"
#include "convexcycles/graph.hpp"
#include "convexcycles/graph6.hpp"
#include "convexcycles/metric.hpp"
#include "support/oracles.hpp"

using namespace convexcycles;

namespace {

void check_simple(const Graph& g) {
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto nb = g.neighbors(v);
    degree_sum += nb.size();
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
    for (Vertex w : nb) {
      CHECK(w != v);
      CHECK(g.adjacent(w, v));
    }
  }
  CHECK(degree_sum == 2 * g.size());
}

}  // namespace

TEST_CASE("from_edge_list builds a normalized graph") {
  const Graph k3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(k3.order() == 3);
  CHECK(k3.size() == 3);
  check_simple(k3);
  CHECK(k3 == Graph::from_edge_list(3, {{2, 1}, {0, 2}, {1, 0}}));
  CHECK(k3.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("from_edge_list rejects non-simple input") {
  CHECK_THROWS_AS(Graph::from_edge_list(2, {{0, 0}}), InvalidEdge);
  CHECK_THROWS_AS(Graph::from_edge_list(4, {{0, 1}, {0, 1}}), DuplicateEdge);
  CHECK_THROWS_AS(Graph::from_edge_list(4, {{0, 1}, {1, 0}}), DuplicateEdge);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), OutOfRange);
  CHECK_THROWS_AS(Edge::make(4, 4), InvalidEdge);
  CHECK(Edge::make(5, 2) == Edge{2, 5});
}

TEST_CASE("graph6 hand-decoded examples") {
  // 'A' = 65 -> n = 2; '_' = 95 -> 32 = 0b100000, first upper-triangle bit set.
  const Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);
  CHECK(k2.adjacent(0, 1));
  CHECK(write_graph6(k2) == "A_");

  // 'C' -> n = 4; '~' = 126 -> 63, all six bits.
  const Graph k4 = parse_graph6("C~");
  CHECK(k4 == generators::complete(4));
  CHECK(write_graph6(generators::complete(4)) == "C~");

  CHECK(parse_graph6(">>graph6<<C~\r\n") == k4);
  CHECK(parse_graph6("@").order() == 1);
  CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("graph6 Petersen string is validated by invariants") {
  const Graph p = parse_graph6("IsP@OkWHG");
  CHECK(p.order() == 10);
  CHECK(p.size() == 15);
  CHECK(p.is_regular());
  CHECK(p.degree(0) == 3);
  CHECK(oracle::girth(p) == 5);
  CHECK(girth(p) == 5);
}

TEST_CASE("graph6 malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);       // missing data byte
  CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);     // extra byte
  CHECK_THROWS_AS(parse_graph6("C 1"), ParseError);     // bad characters
  CHECK_THROWS_AS(parse_graph6("~?"), ParseError);      // truncated long header
  CHECK_THROWS_AS(parse_graph6("~~???"), ParseError);
}

TEST_CASE("graph6 round trip on random labeled graphs, including the long header") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 200)(rng);
    const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const Graph g = generators::gnp(n, p, rng());
    const std::string text = write_graph6(g);
    CHECK((n <= 62 ? text[0] != '~' : text.substr(0, 1) == "~"));
    CHECK(parse_graph6(text) == g);
  }
}

TEST_CASE("edge-list text format") {
  const Graph g = parse_edge_list("# triangle plus isolated vertex\n4\n0 1\n1 2  # comment\n2 0\n\n");
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  CHECK(parse_edge_list(write_edge_list(g)) == g);
  CHECK(parse_edge_list("0 1\n1 2\n").order() == 3);
  CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 0\n"), InvalidEdge);
  CHECK_THROWS_AS(parse_edge_list("2\n0 5\n"), OutOfRange);
}

TEST_CASE("read_graphs auto-detects the format") {
  const auto many = read_graphs(">>graph6<<A_\n# comment\nC~\n");
  REQUIRE(many.size() == 2);
  CHECK(many[1] == generators::complete(4));
  const auto one = read_graphs("0 1\n1 2\n");
  REQUIRE(one.size() == 1);
  CHECK(one[0] == generators::path(3));
  CHECK_THROWS_AS(read_graphs("\n# nothing\n"), ParseError);
}

TEST_CASE("generators produce the named graphs") {
  const Graph c6 = generators::cycle(6);
  CHECK(c6.order() == 6);
  CHECK(c6.size() == 6);
  CHECK(c6.is_cycle());
  CHECK_THROWS_AS(generators::cycle(2), InvalidParameter);

  const Graph petersen = generators::petersen();
  CHECK(petersen.order() == 10);
  CHECK(petersen.size() == 15);
  CHECK(petersen.is_regular());
  CHECK(petersen.degree(0) == 3);

  const Graph k23 = generators::complete_bipartite(2, 3);
  CHECK(k23.size() == 6);
  CHECK(generators::hypercube(3).size() == 12);
  CHECK(generators::complete(5).size() == 10);
  for (const Graph& g : {c6, petersen, k23, generators::hoffman_singleton()}) check_simple(g);
}

TEST_CASE("Hoffman-Singleton invariants") {
  const Graph hs = generators::hoffman_singleton();
  CHECK(hs.order() == 50);
  CHECK(hs.size() == 175);
  CHECK(hs.is_regular());
  CHECK(hs.degree(0) == 7);
  const MetricProfile profile = compute_profile(hs);
  CHECK(profile.girth() == 5);
  CHECK(profile.diameter() == 2);
}

TEST_CASE("gnp is deterministic per seed") {
  CHECK(generators::gnp(30, 0.2, 7) == generators::gnp(30, 0.2, 7));
  CHECK(generators::gnp(30, 0.2, 7) != generators::gnp(30, 0.2, 8));
  CHECK(generators::gnp(10, 0.0, 1).size() == 0);
  CHECK(generators::gnp(10, 1.0, 1) == generators::complete(10));
  CHECK_THROWS_AS(generators::gnp(5, 1.5, 1), InvalidParameter);
}

TEST_CASE("by_name parses family parameters") {
  CHECK(generators::by_name("cycle", {"5"}, 0) == generators::cycle(5));
  CHECK(generators::by_name("complete_bipartite", {"2", "3"}, 0) == generators::complete_bipartite(2, 3));
  CHECK(generators::by_name("gnp", {"12", "0.5"}, 3) == generators::gnp(12, 0.5, 3));
  CHECK_THROWS_AS(generators::by_name("cycle", {}, 0), InvalidParameter);
  CHECK_THROWS_AS(generators::by_name("cycle", {"-1"}, 0), InvalidParameter);
  CHECK_THROWS_AS(generators::by_name("wheel", {"5"}, 0), InvalidParameter);
}

TEST_CASE("delete_vertex compacts labels") {
  const Graph k3 = generators::complete(3);
  CHECK(delete_vertex(k3, 2) == generators::path(2));
  CHECK(delete_vertex(generators::cycle(6), 0) == Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
  const Graph petersen = generators::petersen();
  const Graph with_pendant = attach_pendant(petersen, 0);
  CHECK(with_pendant.order() == 11);
  CHECK(with_pendant.degree(10) == 1);
  CHECK(delete_vertex(with_pendant, 10) == petersen);
  CHECK_THROWS_AS(delete_vertex(k3, 3), OutOfRange);
}
