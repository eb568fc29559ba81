#include "convexcycles/metric.hpp"

#include <algorithm>
#include <string>

#include "convexcycles/errors.hpp"
#include "parallel.hpp"

namespace convexcycles {
namespace {

void check_vertex(std::size_t n, Vertex v) {
  if (v >= n) throw OutOfRange("vertex " + std::to_string(v) + " out of range");
}

// BFS distances; `order` receives the visit order.
void bfs_distances(const Graph& g, Vertex root, std::vector<Length>& dist, std::vector<Vertex>& order) {
  dist.assign(g.order(), kInfinite);
  order.clear();
  dist[root] = 0;
  order.push_back(root);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex v = order[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kInfinite) {
        dist[w] = dist[v] + 1;
        order.push_back(w);
      }
    }
  }
}

// Shortest cycle seen from one root: a same-level edge closes an odd closed
// walk of length 2d+1, a vertex with two predecessors closes an even one of
// length 2d. Both contain a cycle no longer than that; for a root on a
// shortest cycle one of them is exact.
Length girth_from_root(const Graph& g, std::span<const Length> dist, std::span<const Vertex> order) {
  Length best = kInfinite;
  for (Vertex v : order) {
    std::size_t preds = 0;
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == dist[v] && v < w) best = std::min(best, 2 * dist[v] + 1);
      if (dist[w] + 1 == dist[v]) ++preds;
    }
    if (preds >= 2) best = std::min(best, 2 * dist[v]);
  }
  return best;
}

Length eccentricity_part(std::span<const Length> dist) {
  Length ecc = 0;
  for (Length d : dist) {
    if (d == kInfinite) return kInfinite;
    ecc = std::max(ecc, d);
  }
  return ecc;
}

}  // namespace

DistanceRecord bfs_record(const Graph& g, Vertex root) {
  const std::size_t n = g.order();
  check_vertex(n, root);
  DistanceRecord rec;
  rec.root_ = root;
  std::vector<Vertex> order;
  bfs_distances(g, root, rec.dist_, order);

  rec.sigma_.assign(n, mpz_class(0));
  rec.pred_offset_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t count = 0;
    if (rec.dist_[v] != kInfinite && v != root) {
      for (Vertex w : g.neighbors(v)) count += rec.dist_[w] + 1 == rec.dist_[v];
    }
    rec.pred_offset_[v + 1] = rec.pred_offset_[v] + count;
  }
  rec.pred_list_.resize(rec.pred_offset_[n]);
  for (Vertex v = 0; v < n; ++v) {
    if (rec.dist_[v] == kInfinite || v == root) continue;
    std::size_t slot = rec.pred_offset_[v];
    for (Vertex w : g.neighbors(v)) {
      if (rec.dist_[w] + 1 == rec.dist_[v]) rec.pred_list_[slot++] = w;
    }
  }

  rec.sigma_[root] = 1;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Vertex v = order[i];
    for (Vertex w : rec.preds(v)) rec.sigma_[v] += rec.sigma_[w];
  }
  return rec;
}

MetricProfile compute_profile(const Graph& g, unsigned threads) {
  const std::size_t n = g.order();
  MetricProfile profile;
  profile.records_.resize(n);
  std::vector<Length> girths(n, kInfinite);
  detail::parallel_for(n, threads, [&](std::size_t root) {
    auto& rec = profile.records_[root];
    rec = bfs_record(g, static_cast<Vertex>(root));
    std::vector<Vertex> order;
    order.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
      if (rec.dist(v) != kInfinite) order.push_back(v);
    }
    girths[root] = girth_from_root(g, rec.distances(), order);
  });

  profile.girth_ = n == 0 ? kInfinite : *std::min_element(girths.begin(), girths.end());
  profile.connected_ = g.is_connected();
  profile.diameter_ = 0;
  for (const auto& rec : profile.records_) {
    profile.diameter_ = std::max(profile.diameter_, eccentricity_part(rec.distances()));
  }
  return profile;
}

Length girth(const Graph& g) {
  Length best = kInfinite;
  std::vector<Length> dist;
  std::vector<Vertex> order;
  for (Vertex root = 0; root < g.order(); ++root) {
    bfs_distances(g, root, dist, order);
    best = std::min(best, girth_from_root(g, dist, order));
  }
  return best;
}

Length diameter(const Graph& g) {
  Length diam = 0;
  std::vector<Length> dist;
  std::vector<Vertex> order;
  for (Vertex root = 0; root < g.order(); ++root) {
    bfs_distances(g, root, dist, order);
    diam = std::max(diam, eccentricity_part(dist));
    if (diam == kInfinite) break;
  }
  return diam;
}

namespace {

const DistanceRecord& checked_record(const MetricProfile& profile, Vertex u, Vertex v) {
  check_vertex(profile.order(), u);
  check_vertex(profile.order(), v);
  const auto& rec = profile.record(u);
  if (rec.dist(v) == kInfinite) {
    throw Disconnected("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                       " lie in different components");
  }
  return rec;
}

void collect_paths(const DistanceRecord& rec, Vertex v, Path& suffix, std::vector<Path>& out) {
  suffix.push_back(v);
  if (v == rec.root()) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
  } else {
    for (Vertex w : rec.preds(v)) collect_paths(rec, w, suffix, out);
  }
  suffix.pop_back();
}

}  // namespace

std::optional<Path> unique_shortest_path(const MetricProfile& profile, Vertex u, Vertex v) {
  const auto& rec = checked_record(profile, u, v);
  if (rec.sigma(v) != 1) return std::nullopt;
  Path path{v};
  for (Vertex cur = v; cur != u;) {
    cur = rec.preds(cur).front();
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<std::pair<Path, Path>> two_shortest_paths(const MetricProfile& profile, Vertex u,
                                                        Vertex v) {
  const auto& rec = checked_record(profile, u, v);
  if (rec.sigma(v) != 2) return std::nullopt;
  std::vector<Path> paths;
  Path suffix;
  collect_paths(rec, v, suffix, paths);
  std::sort(paths.begin(), paths.end());
  return std::pair{std::move(paths[0]), std::move(paths[1])};
}

}  // namespace convexcycles
