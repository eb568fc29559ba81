#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "convexcycles/graph.hpp"

namespace convexcycles::generators {

Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph hypercube(std::size_t dimension);
Graph petersen();

// Five pentagons P_h and five pentagrams Q_i; vertex j of P_h is joined to
// vertex h*i + j (mod 5) of Q_i. Labels: P_h[j] = 5h + j, Q_i[j] = 25 + 5i + j.
Graph hoffman_singleton();

// Erdos-Renyi G(n, p). The edge coin flips consume a mt19937_64 stream in
// (u, v) lexicographic order, so output is fixed for a given seed.
Graph gnp(std::size_t n, double p, std::uint64_t seed);

// Builds a family by name, as used by the CLI: "cycle 6", "gnp 10 0.3", ...
Graph by_name(std::string_view family, const std::vector<std::string>& params, std::uint64_t seed);

}  // namespace convexcycles::generators
