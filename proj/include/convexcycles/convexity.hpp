#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "convexcycles/graph.hpp"
#include "convexcycles/metric.hpp"

namespace convexcycles {

// A cycle as a vertex sequence in canonical form: starts at its smallest
// vertex, and of the two orientations the one with the smaller second vertex.
class Cycle {
 public:
  // Canonicalizes any rotation/reflection. Throws InvalidCycle if the
  // sequence has fewer than three vertices or repeats a vertex. Adjacency in
  // a host graph is checked separately by is_convex_cycle.
  static Cycle from_sequence(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t length() const { return vertices_.size(); }

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  std::vector<Vertex> vertices_;
};

struct OddAntipodalPair {
  Edge edge;
  Vertex vertex = 0;
  Length k = 0;

  friend bool operator==(const OddAntipodalPair&, const OddAntipodalPair&) = default;
  friend auto operator<=>(const OddAntipodalPair&, const OddAntipodalPair&) = default;
};

struct EvenAntipodalPair {
  Vertex u = 0;  // u < v
  Vertex v = 0;
  Length k = 0;

  friend bool operator==(const EvenAntipodalPair&, const EvenAntipodalPair&) = default;
  friend auto operator<=>(const EvenAntipodalPair&, const EvenAntipodalPair&) = default;
};

struct CycleCensus {
  std::vector<Cycle> cycles;  // sorted
  std::size_t rho = 0;
  std::size_t rho_odd = 0;
  std::size_t rho_even = 0;
  std::map<std::size_t, std::size_t> histogram;  // length -> count

  static CycleCensus from_cycles(std::vector<Cycle> cycles);

  friend bool operator==(const CycleCensus&, const CycleCensus&) = default;
};

// Pairs (xy, v) with d(x,v) = d(y,v) = k >= 1 and both geodesics unique.
// Sorted by (edge, vertex).
std::vector<OddAntipodalPair> odd_antipodal_pairs(const Graph& g, const MetricProfile& profile,
                                                  unsigned threads = 0);

// Unordered pairs at distance k >= 2 joined by exactly two geodesics. Sorted.
std::vector<EvenAntipodalPair> even_antipodal_pairs(const Graph& g, const MetricProfile& profile,
                                                    unsigned threads = 0);

// Checks every pair a, b on the cycle: d_G(a,b) must equal the arc distance
// and the G-geodesic count must equal the number of shortest arcs (2 for
// antipodes of an even cycle, else 1). Throws InvalidCycle when c is not a
// cycle of g.
bool is_convex_cycle(const Graph& g, const MetricProfile& profile, const Cycle& c);

// Every convex cycle of g, built from antipodal pairs and then verified.
CycleCensus enumerate_convex_cycles(const Graph& g, const MetricProfile& profile,
                                    unsigned threads = 0);

// Same, reusing pair lists already computed for this graph and profile.
CycleCensus enumerate_convex_cycles(const Graph& g, const MetricProfile& profile,
                                    const std::vector<OddAntipodalPair>& odd,
                                    const std::vector<EvenAntipodalPair>& even, unsigned threads = 0);

// Exhaustive simple-cycle DFS up to max_len, filtered by is_convex_cycle.
// Exponential; intended for small graphs.
CycleCensus brute_force_convex_cycles(const Graph& g, std::size_t max_len);
CycleCensus brute_force_convex_cycles(const Graph& g, const MetricProfile& profile,
                                      std::size_t max_len);

// Number of girth cycles for odd girth (all of them are convex).
// Throws NotApplicable for even or infinite girth.
std::size_t girth_cycle_count(const Graph& g, const MetricProfile& profile, unsigned threads = 0);
std::size_t girth_cycle_count(const MetricProfile& profile, const CycleCensus& census);

}  // namespace convexcycles
