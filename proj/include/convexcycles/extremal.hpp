#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include <gmpxx.h>

#include "convexcycles/convexity.hpp"
#include "convexcycles/graph.hpp"
#include "convexcycles/metric.hpp"

namespace convexcycles {

enum class Classification { EvenCycle, MooreGraph, Strict, NotApplicable };

std::string_view to_string(Classification c);

struct ExtremalReport {
  std::size_t n = 0;
  std::size_t m = 0;
  Length g = kInfinite;
  std::size_t rho = 0;
  std::size_t rho_even = 0;
  mpq_class bound;  // n(m - n + 1) / g, exact
  bool equality = false;
  bool even_equality = false;  // rho_even * g == n(m - n + 1)
  Classification classification = Classification::NotApplicable;
};

struct MooreReport {
  bool is_moore = false;
  Length r = kInfinite;  // diameter
  Length girth = kInfinite;
  std::optional<std::size_t> regular_degree;
};

struct Theorem2Result {
  std::size_t count = 0;  // girth cycles
  mpq_class target;       // n(m - n + 1) / g
  bool is_moore_by_count = false;
};

// n(m - n + 1) / g as an exact rational. Throws NotApplicable for infinite
// girth and InvalidParameter when g < 3, n < g or m < n - 1.
mpq_class convex_cycle_bound(std::size_t n, std::size_t m, Length g);

// Moore graph test: girth == 2 * diameter + 1. Throws Disconnected, and
// ConsistencyViolation if a Moore graph turns out not to be regular.
MooreReport is_moore(const Graph& g, const MetricProfile& profile);

// Compares the girth-cycle count against n(m - n + 1) / g. Throws
// NotApplicable for even or infinite girth, Disconnected for disconnected
// input, and ConsistencyViolation if the count test and is_moore disagree.
Theorem2Result theorem2_check(const Graph& g, const MetricProfile& profile);
Theorem2Result theorem2_check(const Graph& g, const MetricProfile& profile,
                              const CycleCensus& census);

// Bound, equality and classification. Throws NotApplicable for forests,
// Disconnected for disconnected input, and ConsistencyViolation when the
// bound is exceeded or equality does not match the classification.
ExtremalReport check_extremal(const Graph& g, const MetricProfile& profile,
                              const CycleCensus& census);

}  // namespace convexcycles
