#include "convexcycles/extremal.hpp"

#include <string>

#include "convexcycles/errors.hpp"

namespace convexcycles {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::EvenCycle: return "EvenCycle";
    case Classification::MooreGraph: return "MooreGraph";
    case Classification::Strict: return "Strict";
    case Classification::NotApplicable: return "NotApplicable";
  }
  return "?";
}

namespace {

mpz_class cyclomatic_scaled(std::size_t n, std::size_t m) {
  // n (m - n + 1); callers guarantee m + 1 >= n.
  mpz_class nn(static_cast<unsigned long>(n));
  mpz_class mm(static_cast<unsigned long>(m));
  return nn * (mm - nn + 1);
}

void require_connected(const MetricProfile& profile) {
  if (!profile.connected()) throw Disconnected("graph is disconnected");
}

}  // namespace

mpq_class convex_cycle_bound(std::size_t n, std::size_t m, Length g) {
  if (g == kInfinite) throw NotApplicable("girth is infinite; the bound is undefined");
  if (g < 3) throw InvalidParameter("girth must be at least 3");
  if (n < g) throw InvalidParameter("order must be at least the girth");
  if (m + 1 < n) throw InvalidParameter("size must be at least n - 1");
  mpq_class bound(cyclomatic_scaled(n, m), mpz_class(static_cast<unsigned long>(g)));
  bound.canonicalize();
  return bound;
}

MooreReport is_moore(const Graph& g, const MetricProfile& profile) {
  require_connected(profile);
  MooreReport report;
  report.r = profile.diameter();
  report.girth = profile.girth();
  if (g.order() > 0 && g.is_regular()) report.regular_degree = g.degree(0);
  report.is_moore = report.girth != kInfinite && report.girth == 2 * report.r + 1;
  if (report.is_moore && !report.regular_degree) {
    throw ConsistencyViolation("graph has girth 2r+1 for diameter r but is not regular");
  }
  return report;
}

Theorem2Result theorem2_check(const Graph& g, const MetricProfile& profile, const CycleCensus& census) {
  require_connected(profile);
  Theorem2Result result;
  result.count = girth_cycle_count(profile, census);
  result.target = convex_cycle_bound(g.order(), g.size(), profile.girth());
  const mpz_class scaled = cyclomatic_scaled(g.order(), g.size());
  result.is_moore_by_count =
      mpz_class(static_cast<unsigned long>(result.count)) * profile.girth() == scaled;
  if (result.is_moore_by_count != is_moore(g, profile).is_moore) {
    throw ConsistencyViolation("girth-cycle count and diameter/girth Moore test disagree");
  }
  return result;
}

Theorem2Result theorem2_check(const Graph& g, const MetricProfile& profile) {
  require_connected(profile);
  const Length girth = profile.girth();
  if (girth == kInfinite || girth % 2 == 0) return theorem2_check(g, profile, CycleCensus{});
  return theorem2_check(g, profile, enumerate_convex_cycles(g, profile));
}

ExtremalReport check_extremal(const Graph& g, const MetricProfile& profile, const CycleCensus& census) {
  if (profile.girth() == kInfinite) throw NotApplicable("graph is a forest; the bound is undefined");
  require_connected(profile);

  ExtremalReport report;
  report.n = g.order();
  report.m = g.size();
  report.g = profile.girth();
  report.rho = census.rho;
  report.rho_even = census.rho_even;
  report.bound = convex_cycle_bound(report.n, report.m, report.g);

  const mpz_class scaled = cyclomatic_scaled(report.n, report.m);
  const mpz_class total = mpz_class(static_cast<unsigned long>(census.rho)) * report.g;
  const mpz_class even = mpz_class(static_cast<unsigned long>(census.rho_even)) * report.g;
  if (total > scaled) throw ConsistencyViolation("convex cycle count exceeds n(m-n+1)/g");
  report.equality = total == scaled;
  report.even_equality = even == scaled;

  if (g.is_cycle() && g.order() % 2 == 0) {
    report.classification = Classification::EvenCycle;
  } else if (is_moore(g, profile).is_moore) {
    report.classification = Classification::MooreGraph;
  } else {
    report.classification = Classification::Strict;
  }
  if (report.equality != (report.classification != Classification::Strict)) {
    throw ConsistencyViolation("bound equality does not match the even-cycle/Moore classification");
  }
  if (report.even_equality != (report.classification == Classification::EvenCycle)) {
    throw ConsistencyViolation("even-cycle bound equality does not match the classification");
  }
  return report;
}

}  // namespace convexcycles
