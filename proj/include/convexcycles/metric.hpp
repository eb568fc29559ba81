#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "convexcycles/graph.hpp"

namespace convexcycles {

using Length = std::uint32_t;
inline constexpr Length kInfinite = std::numeric_limits<Length>::max();

using Path = std::vector<Vertex>;

// Single-source BFS data: distances, exact shortest-path counts, and the
// shortest-path predecessor DAG (stored CSR-style).
class DistanceRecord {
 public:
  Vertex root() const { return root_; }
  Length dist(Vertex v) const { return dist_[v]; }
  const mpz_class& sigma(Vertex v) const { return sigma_[v]; }
  std::span<const Vertex> preds(Vertex v) const {
    return {pred_list_.data() + pred_offset_[v], pred_list_.data() + pred_offset_[v + 1]};
  }
  std::span<const Length> distances() const { return dist_; }
  std::size_t order() const { return dist_.size(); }

 private:
  friend DistanceRecord bfs_record(const Graph& g, Vertex root);

  Vertex root_ = 0;
  std::vector<Length> dist_;
  std::vector<mpz_class> sigma_;
  std::vector<std::size_t> pred_offset_;
  std::vector<Vertex> pred_list_;
};

// Distances and path counts from every root, plus girth and diameter.
class MetricProfile {
 public:
  const DistanceRecord& record(Vertex root) const { return records_[root]; }
  Length dist(Vertex u, Vertex v) const { return records_[u].dist(v); }
  const mpz_class& sigma(Vertex u, Vertex v) const { return records_[u].sigma(v); }

  std::size_t order() const { return records_.size(); }
  Length girth() const { return girth_; }
  Length diameter() const { return diameter_; }
  bool connected() const { return connected_; }

 private:
  friend MetricProfile compute_profile(const Graph& g, unsigned threads);

  std::vector<DistanceRecord> records_;
  Length girth_ = kInfinite;
  Length diameter_ = 0;
  bool connected_ = true;
};

DistanceRecord bfs_record(const Graph& g, Vertex root);

// `threads` == 0 uses every available core. Output does not depend on it.
MetricProfile compute_profile(const Graph& g, unsigned threads = 0);

Length girth(const Graph& g);
Length diameter(const Graph& g);

// Shortest u-v path (u first) when it is unique; nullopt otherwise.
// Throws Disconnected if v is unreachable from u.
std::optional<Path> unique_shortest_path(const MetricProfile& profile, Vertex u, Vertex v);

// Both shortest u-v paths when there are exactly two, in lexicographic order.
std::optional<std::pair<Path, Path>> two_shortest_paths(const MetricProfile& profile, Vertex u,
                                                        Vertex v);

}  // namespace convexcycles
