#include "convexcycles/graph.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>

#include "convexcycles/errors.hpp"

namespace convexcycles {

Edge Edge::make(Vertex a, Vertex b) {
  if (a == b) throw InvalidEdge("loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph Graph::from_edge_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g;
  g.adjacency_.resize(n);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) {
      throw OutOfRange("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                       ") outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (a == b) throw InvalidEdge("loop at vertex " + std::to_string(a));
    g.adjacency_[a].push_back(b);
    g.adjacency_[b].push_back(a);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = g.adjacency_[v];
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) {
      throw DuplicateEdge("edge (" + std::to_string(v) + ", " + std::to_string(*dup) +
                          ") given more than once");
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

Graph Graph::from_edge_list(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

bool Graph::is_regular() const {
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [&](const auto& l) { return l.size() == adjacency_.front().size(); });
}

bool Graph::is_connected() const {
  const std::size_t n = order();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

bool Graph::is_cycle() const {
  return order() >= 3 && edge_count_ == order() &&
         std::all_of(adjacency_.begin(), adjacency_.end(),
                     [](const auto& l) { return l.size() == 2; }) &&
         is_connected();
}

Graph delete_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw OutOfRange("vertex " + std::to_string(v) + " out of range");
  auto relabel = [v](Vertex w) { return w > v ? w - 1 : w; };
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (const Edge& e : g.edges()) {
    if (e.u != v && e.v != v) kept.emplace_back(relabel(e.u), relabel(e.v));
  }
  return Graph::from_edge_list(g.order() - 1, kept);
}

Graph attach_pendant(const Graph& g, Vertex anchor) {
  if (anchor >= g.order()) throw OutOfRange("vertex " + std::to_string(anchor) + " out of range");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  edges.emplace_back(anchor, static_cast<Vertex>(g.order()));
  return Graph::from_edge_list(g.order() + 1, edges);
}

namespace {

std::vector<std::uint64_t> parse_integers(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> values;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == ',' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc{} || ptr == line.data() + i) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected integers");
    }
    values.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return values;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::optional<std::uint64_t> declared;
  std::uint64_t max_label_plus_one = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto values = parse_integers(line, line_no);
    if (values.empty()) continue;
    if (values.size() == 1) {
      if (declared) throw ParseError("edge list declares the vertex count twice");
      declared = values[0];
      continue;
    }
    if (values.size() != 2) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected \"u v\"");
    }
    if (values[0] > 0xfffffffeULL || values[1] > 0xfffffffeULL) {
      throw OutOfRange("edge list line " + std::to_string(line_no) + ": label too large");
    }
    edges.emplace_back(static_cast<Vertex>(values[0]), static_cast<Vertex>(values[1]));
    max_label_plus_one = std::max({max_label_plus_one, values[0] + 1, values[1] + 1});
  }
  const std::uint64_t n = declared.value_or(max_label_plus_one);
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace convexcycles
