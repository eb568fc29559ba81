#include <random>

#include "doctest.h"

#include "convexcycles/errors.hpp"
#include "convexcycles/generators.hpp"
#include "convexcycles/metric.hpp"
#include "support/oracles.hpp"

using namespace convexcycles;

namespace {

std::size_t oracle_sigma(const Graph& g, Vertex u, Vertex v) {
  return oracle::geodesics(g, oracle::floyd(g), u, v).size();
}

}  // namespace

TEST_CASE("bfs_record on C5") {
  const auto rec = bfs_record(generators::cycle(5), 0);
  for (Vertex v = 0; v < 5; ++v) {
    const Length expected[] = {0, 1, 2, 2, 1};
    CHECK(rec.dist(v) == expected[v]);
    CHECK(rec.sigma(v) == 1);
  }
  CHECK(rec.preds(0).empty());
  CHECK(rec.preds(2).size() == 1);
}

TEST_CASE("bfs_record path counts on K_{2,3} and Q3") {
  const Graph k23 = generators::complete_bipartite(2, 3);  // a=0, b=1; x,y,z = 2,3,4
  const auto rec = bfs_record(k23, 0);
  CHECK(rec.dist(1) == 2);
  CHECK(oracle_sigma(k23, 0, 1) == 3);
  CHECK(rec.sigma(1) == 3);
  CHECK(rec.preds(1).size() == 3);

  const Graph q3 = generators::hypercube(3);
  const auto q = bfs_record(q3, 0b000);
  CHECK(oracle_sigma(q3, 0b000, 0b011) == 2);
  CHECK(oracle_sigma(q3, 0b000, 0b111) == 6);
  CHECK(q.sigma(0b011) == 2);
  CHECK(q.sigma(0b111) == 6);
}

TEST_CASE("unreachable vertices get infinite distance and zero paths") {
  const Graph g = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  const auto rec = bfs_record(g, 0);
  CHECK(rec.dist(2) == kInfinite);
  CHECK(rec.sigma(2) == 0);
  CHECK_THROWS_AS(bfs_record(g, 4), OutOfRange);
}

TEST_CASE("girth examples") {
  CHECK(girth(generators::cycle(6)) == 6);
  CHECK(girth(generators::petersen()) == 5);
  CHECK(girth(Graph::from_edge_list(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {5, 6}})) == kInfinite);
  CHECK(girth(generators::complete(4)) == 3);
  CHECK(girth(generators::hypercube(3)) == 4);
  CHECK(compute_profile(generators::petersen()).girth() == 5);
}

TEST_CASE("diameter examples") {
  CHECK(diameter(generators::hoffman_singleton()) == 2);
  CHECK(diameter(generators::path(3)) == 2);
  CHECK(diameter(Graph::from_edge_list(4, {{0, 1}, {2, 3}})) == kInfinite);
  const auto profile = compute_profile(Graph::from_edge_list(4, {{0, 1}, {2, 3}}));
  CHECK(profile.diameter() == kInfinite);
  CHECK_FALSE(profile.connected());
}

TEST_CASE("unique_shortest_path") {
  const auto c5 = compute_profile(generators::cycle(5));
  CHECK(unique_shortest_path(c5, 0, 2) == Path{0, 1, 2});
  CHECK(unique_shortest_path(c5, 0, 0) == Path{0});

  const auto k23 = compute_profile(generators::complete_bipartite(2, 3));
  CHECK_FALSE(unique_shortest_path(k23, 0, 1).has_value());

  const Graph petersen = generators::petersen();
  const auto pp = compute_profile(petersen);
  for (const Edge& e : petersen.edges()) CHECK(unique_shortest_path(pp, e.u, e.v) == Path{e.u, e.v});

  const auto split = compute_profile(Graph::from_edge_list(4, {{0, 1}, {2, 3}}));
  CHECK_THROWS_AS(unique_shortest_path(split, 0, 3), Disconnected);
}

TEST_CASE("two_shortest_paths") {
  const auto c6 = compute_profile(generators::cycle(6));
  const auto arcs = two_shortest_paths(c6, 0, 3);
  REQUIRE(arcs.has_value());
  CHECK(arcs->first == Path{0, 1, 2, 3});
  CHECK(arcs->second == Path{0, 5, 4, 3});

  const auto q3 = compute_profile(generators::hypercube(3));
  const auto via = two_shortest_paths(q3, 0b000, 0b011);
  REQUIRE(via.has_value());
  CHECK(via->first == Path{0b000, 0b001, 0b011});
  CHECK(via->second == Path{0b000, 0b010, 0b011});

  const auto k23 = compute_profile(generators::complete_bipartite(2, 3));
  const auto xy = two_shortest_paths(k23, 2, 3);
  REQUIRE(xy.has_value());
  CHECK(xy->first == Path{2, 0, 3});
  CHECK(xy->second == Path{2, 1, 3});
  CHECK_FALSE(two_shortest_paths(k23, 0, 1).has_value());  // three paths
  CHECK_FALSE(two_shortest_paths(c6, 0, 2).has_value());   // one path

  const auto split = compute_profile(Graph::from_edge_list(4, {{0, 1}, {2, 3}}));
  CHECK_THROWS_AS(two_shortest_paths(split, 1, 2), Disconnected);
}

TEST_CASE("profile matches brute force on small graphs") {
  std::mt19937_64 rng(99);
  std::vector<Graph> corpus;
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    corpus.push_back(generators::gnp(n, std::uniform_real_distribution<double>(0.1, 0.9)(rng), rng()));
  }
  for (const Graph& g : corpus) {
    const auto profile = compute_profile(g, 2);
    const auto d = oracle::floyd(g);
    const std::size_t og = oracle::girth(g);
    CHECK(profile.girth() == (og == 0 ? kInfinite : og));
    CHECK(girth(g) == profile.girth());
    CHECK(diameter(g) == profile.diameter());
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = 0; v < g.order(); ++v) {
        const Length duv = profile.dist(u, v);
        CHECK(duv == (d[u][v] >= oracle::kInf ? kInfinite : static_cast<Length>(d[u][v])));
        CHECK(duv == profile.dist(v, u));
        CHECK(profile.sigma(u, v) == profile.sigma(v, u));
        CHECK(profile.sigma(u, v) == oracle::geodesics(g, d, u, v).size());
        for (Vertex w = 0; w < g.order(); ++w) {
          if (duv != kInfinite && profile.dist(v, w) != kInfinite) {
            CHECK(profile.dist(u, w) <= duv + profile.dist(v, w));
          }
        }
      }
      const auto& rec = profile.record(u);
      for (const Edge& e : g.edges()) {
        if (rec.dist(e.u) == kInfinite) continue;
        CHECK(std::max(rec.dist(e.u), rec.dist(e.v)) - std::min(rec.dist(e.u), rec.dist(e.v)) <= 1);
      }
      for (Vertex v = 0; v < g.order(); ++v) {
        if (v == u || rec.dist(v) == kInfinite) continue;
        mpz_class sum = 0;
        for (Vertex w : rec.preds(v)) {
          CHECK(rec.dist(w) + 1 == rec.dist(v));
          sum += rec.sigma(w);
        }
        CHECK(sum == rec.sigma(v));
      }
    }
  }
}

TEST_CASE("thread count does not change the profile") {
  const Graph g = generators::gnp(40, 0.15, 5);
  const auto one = compute_profile(g, 1);
  const auto four = compute_profile(g, 4);
  CHECK(one.girth() == four.girth());
  CHECK(one.diameter() == four.diameter());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < g.order(); ++v) {
      CHECK(one.dist(u, v) == four.dist(u, v));
      CHECK(one.sigma(u, v) == four.sigma(u, v));
    }
}

TEST_CASE("path counts are exact beyond 64 bits") {
  // Chain of 70 diamonds: 2^70 shortest paths end to end.
  std::vector<std::pair<Vertex, Vertex>> edges;
  const Vertex blocks = 70;
  for (Vertex b = 0; b < blocks; ++b) {
    const Vertex s = 3 * b;
    edges.insert(edges.end(), {{s, s + 1}, {s, s + 2}, {s + 1, s + 3}, {s + 2, s + 3}});
  }
  const Graph g = Graph::from_edge_list(3 * blocks + 1, edges);
  const auto rec = bfs_record(g, 0);
  mpz_class expected = 1;
  expected <<= 70;
  CHECK(rec.sigma(3 * blocks) == expected);
}
