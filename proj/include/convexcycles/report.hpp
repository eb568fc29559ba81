#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "convexcycles/graph.hpp"
#include "convexcycles/metric.hpp"

namespace convexcycles {

struct CensusSummary {
  std::string method;  // "antipodal" or "brute_force"
  std::size_t rho = 0;
  std::size_t rho_odd = 0;
  std::size_t rho_even = 0;
  std::map<std::size_t, std::size_t> histogram;

  friend bool operator==(const CensusSummary&, const CensusSummary&) = default;
};

struct ExtremalSummary {
  std::string classification;
  std::optional<std::string> reason;  // why NotApplicable
  std::optional<std::string> bound;   // exact rational, "p" or "p/q"
  bool equality = false;
  bool even_equality = false;

  friend bool operator==(const ExtremalSummary&, const ExtremalSummary&) = default;
};

struct Theorem2Summary {
  std::size_t count = 0;
  std::string target;
  bool is_moore_by_count = false;

  friend bool operator==(const Theorem2Summary&, const Theorem2Summary&) = default;
};

struct MooreSummary {
  std::optional<std::string> reason;
  bool is_moore = false;
  std::optional<std::size_t> r;
  std::optional<std::size_t> girth;
  std::optional<std::size_t> regular_degree;
  std::optional<Theorem2Summary> theorem2;

  friend bool operator==(const MooreSummary&, const MooreSummary&) = default;
};

struct SpectralSummary {
  std::optional<std::string> reason;
  std::optional<std::string> coefficient;  // at x^(n-g)
  std::optional<std::uint64_t> girth_cycles;
  std::optional<std::string> polynomial;

  friend bool operator==(const SpectralSummary&, const SpectralSummary&) = default;
};

struct AnalysisReport {
  std::string input;
  std::size_t index = 0;  // position of the graph within the input
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<std::size_t> girth;     // absent = infinite
  std::optional<std::size_t> diameter;  // absent = infinite
  bool connected = true;
  std::optional<CensusSummary> census;
  std::optional<ExtremalSummary> extremal;
  std::optional<MooreSummary> moore;
  std::optional<SpectralSummary> spectral;
  std::map<std::string, double> timings_ms;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalysisOptions {
  unsigned threads = 0;
  bool census = true;
  bool extremal = true;
  bool moore = true;
  bool spectral = true;
  bool brute_force = false;  // census via the exhaustive oracle
  std::size_t max_cycle_length = 0;  // brute force only; 0 = n
  std::size_t spectral_cap = 100;
  bool include_polynomial = false;
  bool timings = false;
};

AnalysisReport analyze(const Graph& g, const AnalysisOptions& options, std::string input = {},
                       std::size_t index = 0);

nlohmann::json to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const nlohmann::json& j);

// Human-readable rendering with the same numbers as the JSON form.
std::string render_table(const AnalysisReport& report);

}  // namespace convexcycles
