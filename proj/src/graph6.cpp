#include "convexcycles/graph6.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "convexcycles/errors.hpp"

namespace convexcycles {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

bool is_g6_char(char c) { return c >= 63 && c <= 126; }

std::string_view strip(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  return line;
}

std::uint64_t read_sextets(std::string_view s, std::size_t count) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < count; ++i) value = (value << 6) | static_cast<std::uint64_t>(s[i] - kBias);
  return value;
}

void write_sextets(std::string& out, std::uint64_t value, std::size_t count) {
  for (std::size_t i = count; i-- > 0;) out.push_back(static_cast<char>(((value >> (6 * i)) & 0x3f) + kBias));
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = strip(line);
  if (line.empty()) throw ParseError("graph6: empty input");
  if (!std::all_of(line.begin(), line.end(), is_g6_char)) {
    throw ParseError("graph6: character outside the printable range 63..126");
  }

  std::uint64_t n = 0;
  std::size_t header = 0;
  if (line[0] != '~') {
    n = static_cast<std::uint64_t>(line[0] - kBias);
    header = 1;
  } else if (line.size() >= 2 && line[1] == '~') {
    if (line.size() < 8) throw ParseError("graph6: truncated 8-byte size header");
    n = read_sextets(line.substr(2), 6);
    header = 8;
  } else {
    if (line.size() < 4) throw ParseError("graph6: truncated 4-byte size header");
    n = read_sextets(line.substr(1), 3);
    header = 4;
  }
  if (n > 0xffffffffULL) throw ParseError("graph6: order too large");

  const std::uint64_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::uint64_t body = (bits + 5) / 6;
  if (line.size() - header != body) {
    throw ParseError("graph6: expected " + std::to_string(body) + " data bytes for n=" +
                     std::to_string(n) + ", got " + std::to_string(line.size() - header));
  }

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int sextet = line[header + k / 6] - kBias;
      if (sextet & (0x20 >> (k % 6))) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    write_sextets(out, n, 3);
  } else {
    out.append("~~");
    write_sextets(out, n, 6);
  }

  const std::size_t bits = static_cast<std::size_t>(n * (n == 0 ? 0 : n - 1) / 2);
  std::string body((bits + 5) / 6, 0);
  for (const Edge& e : g.edges()) {
    const std::size_t k = static_cast<std::size_t>(e.v) * (e.v - 1) / 2 + e.u;
    body[k / 6] = static_cast<char>(body[k / 6] | (0x20 >> (k % 6)));
  }
  for (char& c : body) c = static_cast<char>(c + kBias);
  return out + body;
}

bool looks_like_graph6(std::string_view line) {
  line = strip(line);
  return !line.empty() && std::all_of(line.begin(), line.end(), is_g6_char);
}

std::vector<Graph> read_graphs(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::string_view rest = text; !rest.empty();) {
    auto eol = rest.find('\n');
    std::string_view line = rest.substr(0, eol);
    rest.remove_prefix(eol == std::string_view::npos ? rest.size() : eol + 1);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    if (line.empty() || line.front() == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw ParseError("no graph in input");
  if (!looks_like_graph6(lines.front())) return {parse_edge_list(text)};

  std::vector<Graph> graphs;
  graphs.reserve(lines.size());
  for (std::string_view line : lines) graphs.push_back(parse_graph6(line));
  return graphs;
}

}  // namespace convexcycles
