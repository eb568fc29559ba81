#include "convexcycles/convexity.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "convexcycles/errors.hpp"
#include "parallel.hpp"

namespace convexcycles {

Cycle Cycle::from_sequence(std::vector<Vertex> vertices) {
  if (vertices.size() < 3) throw InvalidCycle("a cycle needs at least three vertices");
  std::vector<Vertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidCycle("cycle repeats a vertex");
  }
  std::rotate(vertices.begin(), std::min_element(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.back() < vertices[1]) std::reverse(vertices.begin() + 1, vertices.end());
  Cycle c;
  c.vertices_ = std::move(vertices);
  return c;
}

CycleCensus CycleCensus::from_cycles(std::vector<Cycle> cycles) {
  std::sort(cycles.begin(), cycles.end());
  cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
  CycleCensus census;
  for (const Cycle& c : cycles) {
    ++census.histogram[c.length()];
    ++(c.length() % 2 ? census.rho_odd : census.rho_even);
  }
  census.rho = cycles.size();
  census.cycles = std::move(cycles);
  return census;
}

std::vector<OddAntipodalPair> odd_antipodal_pairs(const Graph& g, const MetricProfile& profile,
                                                  unsigned threads) {
  const auto edges = g.edges();
  std::vector<std::vector<OddAntipodalPair>> per_root(g.order());
  detail::parallel_for(g.order(), threads, [&](std::size_t root) {
    const auto& rec = profile.record(static_cast<Vertex>(root));
    for (const Edge& e : edges) {
      const Length k = rec.dist(e.u);
      if (k == kInfinite || k == 0 || rec.dist(e.v) != k) continue;
      if (rec.sigma(e.u) == 1 && rec.sigma(e.v) == 1) {
        per_root[root].push_back({e, static_cast<Vertex>(root), k});
      }
    }
  });
  std::vector<OddAntipodalPair> pairs;
  for (auto& chunk : per_root) pairs.insert(pairs.end(), chunk.begin(), chunk.end());
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::vector<EvenAntipodalPair> even_antipodal_pairs(const Graph& g, const MetricProfile& profile,
                                                    unsigned threads) {
  const std::size_t n = g.order();
  std::vector<std::vector<EvenAntipodalPair>> per_root(n);
  detail::parallel_for(n, threads, [&](std::size_t u) {
    const auto& rec = profile.record(static_cast<Vertex>(u));
    for (Vertex v = static_cast<Vertex>(u) + 1; v < n; ++v) {
      const Length k = rec.dist(v);
      if (k != kInfinite && k >= 2 && rec.sigma(v) == 2) {
        per_root[u].push_back({static_cast<Vertex>(u), v, k});
      }
    }
  });
  std::vector<EvenAntipodalPair> pairs;
  for (auto& chunk : per_root) pairs.insert(pairs.end(), chunk.begin(), chunk.end());
  return pairs;
}

bool is_convex_cycle(const Graph& g, const MetricProfile& profile, const Cycle& c) {
  const auto& vs = c.vertices();
  const std::size_t len = vs.size();
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex a = vs[i];
    const Vertex b = vs[(i + 1) % len];
    if (a >= g.order() || b >= g.order()) throw InvalidCycle("cycle vertex out of range");
    if (!g.adjacent(a, b)) {
      throw InvalidCycle("vertices " + std::to_string(a) + " and " + std::to_string(b) +
                         " are consecutive on the cycle but not adjacent");
    }
  }
  for (std::size_t i = 0; i < len; ++i) {
    const auto& rec = profile.record(vs[i]);
    for (std::size_t j = i + 1; j < len; ++j) {
      const std::size_t gap = j - i;
      const std::size_t arc = std::min(gap, len - gap);
      const unsigned arc_paths = 2 * arc == len ? 2 : 1;
      if (rec.dist(vs[j]) != arc || rec.sigma(vs[j]) != arc_paths) return false;
    }
  }
  return true;
}

namespace {

// Unique geodesic from `from` back to the record's root, `from` first.
Path walk_to_root(const DistanceRecord& rec, Vertex from) {
  Path path{from};
  while (from != rec.root()) {
    from = rec.preds(from).front();
    path.push_back(from);
  }
  return path;
}

std::optional<Cycle> close_up(Path sequence) {
  std::vector<Vertex> sorted = sequence;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  return Cycle::from_sequence(std::move(sequence));
}

std::optional<Cycle> odd_candidate(const MetricProfile& profile, const OddAntipodalPair& pair) {
  const auto& rec = profile.record(pair.vertex);
  Path sequence = walk_to_root(rec, pair.edge.u);  // x .. v
  Path back = walk_to_root(rec, pair.edge.v);      // y .. v
  sequence.insert(sequence.end(), back.rbegin() + 1, back.rend());
  return close_up(std::move(sequence));
}

std::optional<Cycle> even_candidate(const MetricProfile& profile, const EvenAntipodalPair& pair) {
  auto paths = two_shortest_paths(profile, pair.u, pair.v);
  if (!paths) return std::nullopt;
  Path sequence = std::move(paths->first);  // u .. v
  const Path& other = paths->second;
  sequence.insert(sequence.end(), other.rbegin() + 1, other.rend() - 1);
  return close_up(std::move(sequence));
}

CycleCensus verify_candidates(const Graph& g, const MetricProfile& profile,
                              std::vector<std::optional<Cycle>> raw, unsigned threads) {
  std::vector<Cycle> candidates;
  candidates.reserve(raw.size());
  for (auto& c : raw) {
    if (c) candidates.push_back(std::move(*c));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<char> keep(candidates.size(), 0);
  detail::parallel_for(candidates.size(), threads, [&](std::size_t i) {
    keep[i] = is_convex_cycle(g, profile, candidates[i]);
  });
  std::vector<Cycle> convex;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (keep[i]) convex.push_back(std::move(candidates[i]));
  }
  return CycleCensus::from_cycles(std::move(convex));
}

}  // namespace

CycleCensus enumerate_convex_cycles(const Graph& g, const MetricProfile& profile, unsigned threads) {
  return enumerate_convex_cycles(g, profile, odd_antipodal_pairs(g, profile, threads),
                                 even_antipodal_pairs(g, profile, threads), threads);
}

CycleCensus enumerate_convex_cycles(const Graph& g, const MetricProfile& profile,
                                    const std::vector<OddAntipodalPair>& odd,
                                    const std::vector<EvenAntipodalPair>& even, unsigned threads) {
  std::vector<std::optional<Cycle>> raw(odd.size() + even.size());
  detail::parallel_for(raw.size(), threads, [&](std::size_t i) {
    raw[i] = i < odd.size() ? odd_candidate(profile, odd[i]) : even_candidate(profile, even[i - odd.size()]);
  });
  return verify_candidates(g, profile, std::move(raw), threads);
}

namespace {

struct CycleSearch {
  const Graph& g;
  std::size_t max_len;
  Vertex start = 0;
  std::vector<char> on_path;
  Path path;
  std::vector<Cycle> found;

  void extend(Vertex v) {
    for (Vertex w : g.neighbors(v)) {
      if (w == start && path.size() >= 3 && path[1] < path.back()) {
        found.push_back(Cycle::from_sequence(path));
      } else if (w > start && !on_path[w] && path.size() < max_len) {
        on_path[w] = 1;
        path.push_back(w);
        extend(w);
        path.pop_back();
        on_path[w] = 0;
      }
    }
  }
};

}  // namespace

CycleCensus brute_force_convex_cycles(const Graph& g, const MetricProfile& profile,
                                      std::size_t max_len) {
  // Each simple cycle is found once: rooted at its smallest vertex, in the
  // orientation whose second vertex is smaller than its last.
  CycleSearch search{g, max_len, 0, std::vector<char>(g.order(), 0), {}, {}};
  for (Vertex s = 0; s < g.order(); ++s) {
    search.start = s;
    search.path = {s};
    search.on_path[s] = 1;
    search.extend(s);
    search.on_path[s] = 0;
  }
  std::vector<Cycle> convex;
  for (auto& c : search.found) {
    if (is_convex_cycle(g, profile, c)) convex.push_back(std::move(c));
  }
  return CycleCensus::from_cycles(std::move(convex));
}

CycleCensus brute_force_convex_cycles(const Graph& g, std::size_t max_len) {
  return brute_force_convex_cycles(g, compute_profile(g, 1), max_len);
}

std::size_t girth_cycle_count(const MetricProfile& profile, const CycleCensus& census) {
  const Length g = profile.girth();
  if (g == kInfinite) throw NotApplicable("graph is a forest; girth is infinite");
  if (g % 2 == 0) throw NotApplicable("girth " + std::to_string(g) + " is even");
  auto it = census.histogram.find(g);
  return it == census.histogram.end() ? 0 : it->second;
}

std::size_t girth_cycle_count(const Graph& g, const MetricProfile& profile, unsigned threads) {
  if (profile.girth() == kInfinite || profile.girth() % 2 == 0) return girth_cycle_count(profile, CycleCensus{});
  return girth_cycle_count(profile, enumerate_convex_cycles(g, profile, threads));
}

}  // namespace convexcycles
