#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace convexcycles {

using Vertex = std::uint32_t;

// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  // Normalizes the endpoint order. Throws InvalidEdge when a == b.
  static Edge make(Vertex a, Vertex b);

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on vertices 0..n-1.
//
// Neighbor lists are sorted, symmetric, and free of loops and duplicates.
// Every constructor path goes through from_edge_list, which enforces this.
class Graph {
 public:
  Graph() = default;

  static Graph from_edge_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);
  static Graph from_edge_list(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex a, Vertex b) const;

  // All edges, sorted lexicographically.
  std::vector<Edge> edges() const;

  // Every vertex has the same degree (vacuously true for n = 0).
  bool is_regular() const;

  // True iff the graph is connected (the empty graph counts as connected).
  bool is_connected() const;

  // Connected and 2-regular, i.e. the graph is C_n.
  bool is_cycle() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Removes v and its incident edges; vertices above v shift down by one.
Graph delete_vertex(const Graph& g, Vertex v);

// Adds a new vertex n adjacent only to `anchor`.
Graph attach_pendant(const Graph& g, Vertex anchor);

// Plain edge-list text: one "u v" pair per line, '#' starts a comment.
// A line holding a single integer declares the vertex count; otherwise the
// count is one past the largest label seen.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

}  // namespace convexcycles
