#include "convexcycles/generators.hpp"

#include <charconv>
#include <random>
#include <string>

#include "convexcycles/errors.hpp"

namespace convexcycles::generators {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

Graph cycle(std::size_t n) {
  if (n < 3) throw InvalidParameter("cycle needs n >= 3, got " + std::to_string(n));
  EdgeList edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::from_edge_list(n, edges);
}

Graph path(std::size_t n) {
  if (n < 1) throw InvalidParameter("path needs n >= 1");
  EdgeList edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, edges);
}

Graph complete(std::size_t n) {
  if (n < 1) throw InvalidParameter("complete needs n >= 1");
  EdgeList edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw InvalidParameter("complete_bipartite needs both parts non-empty");
  EdgeList edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, static_cast<Vertex>(a + v));
  }
  return Graph::from_edge_list(a + b, edges);
}

Graph hypercube(std::size_t dimension) {
  if (dimension > 20) throw InvalidParameter("hypercube dimension above 20");
  const std::size_t n = std::size_t{1} << dimension;
  EdgeList edges;
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t bit = 0; bit < dimension; ++bit) {
      const Vertex w = v ^ (Vertex{1} << bit);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph petersen() {
  EdgeList edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer pentagon
    edges.emplace_back(i, i + 5);                // spoke
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph::from_edge_list(10, edges);
}

Graph hoffman_singleton() {
  auto pentagon = [](Vertex h, Vertex j) { return 5 * h + j; };
  auto pentagram = [](Vertex i, Vertex j) { return 25 + 5 * i + j; };
  EdgeList edges;
  for (Vertex h = 0; h < 5; ++h) {
    for (Vertex j = 0; j < 5; ++j) {
      edges.emplace_back(pentagon(h, j), pentagon(h, (j + 1) % 5));
      edges.emplace_back(pentagram(h, j), pentagram(h, (j + 2) % 5));
    }
  }
  for (Vertex h = 0; h < 5; ++h) {
    for (Vertex i = 0; i < 5; ++i) {
      for (Vertex j = 0; j < 5; ++j) edges.emplace_back(pentagon(h, j), pentagram(i, (h * i + j) % 5));
    }
  }
  return Graph::from_edge_list(50, edges);
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("gnp needs 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  // Top 53 bits as a uniform double in [0, 1); avoids distribution
  // implementations that differ between standard libraries.
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  EdgeList edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (uniform() < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, edges);
}

namespace {

std::size_t count_param(const std::vector<std::string>& params, std::size_t i, std::string_view family) {
  if (i >= params.size()) {
    throw InvalidParameter(std::string(family) + ": missing parameter " + std::to_string(i + 1));
  }
  std::size_t value = 0;
  const std::string& s = params[i];
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidParameter(std::string(family) + ": \"" + s + "\" is not a non-negative integer");
  }
  return value;
}

void expect_params(const std::vector<std::string>& params, std::size_t count, std::string_view family) {
  if (params.size() != count) {
    throw InvalidParameter(std::string(family) + " takes " + std::to_string(count) + " parameter(s)");
  }
}

}  // namespace

Graph by_name(std::string_view family, const std::vector<std::string>& params, std::uint64_t seed) {
  if (family == "cycle") {
    expect_params(params, 1, family);
    return cycle(count_param(params, 0, family));
  }
  if (family == "path") {
    expect_params(params, 1, family);
    return path(count_param(params, 0, family));
  }
  if (family == "complete") {
    expect_params(params, 1, family);
    return complete(count_param(params, 0, family));
  }
  if (family == "complete_bipartite") {
    expect_params(params, 2, family);
    return complete_bipartite(count_param(params, 0, family), count_param(params, 1, family));
  }
  if (family == "hypercube") {
    expect_params(params, 1, family);
    return hypercube(count_param(params, 0, family));
  }
  if (family == "petersen") {
    expect_params(params, 0, family);
    return petersen();
  }
  if (family == "hoffman_singleton") {
    expect_params(params, 0, family);
    return hoffman_singleton();
  }
  if (family == "gnp") {
    expect_params(params, 2, family);
    double p = 0;
    try {
      std::size_t used = 0;
      p = std::stod(params[1], &used);
      if (used != params[1].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InvalidParameter("gnp: \"" + params[1] + "\" is not a probability");
    }
    return gnp(count_param(params, 0, family), p, seed);
  }
  throw InvalidParameter("unknown graph family \"" + std::string(family) + "\"");
}

}  // namespace convexcycles::generators
