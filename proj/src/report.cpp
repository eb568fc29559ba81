#include "convexcycles/report.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "convexcycles/convexity.hpp"
#include "convexcycles/errors.hpp"
#include "convexcycles/extremal.hpp"
#include "convexcycles/spectral.hpp"

namespace convexcycles {
namespace {

using Clock = std::chrono::steady_clock;

class PhaseTimer {
 public:
  PhaseTimer(AnalysisReport& report, bool enabled) : report_(report), enabled_(enabled) {}

  template <class F>
  decltype(auto) run(const std::string& phase, F&& f) {
    const auto start = Clock::now();
    struct Record {
      PhaseTimer& timer;
      const std::string& phase;
      Clock::time_point start;
      ~Record() {
        if (timer.enabled_) {
          timer.report_.timings_ms[phase] +=
              std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        }
      }
    } record{*this, phase, start};
    return f();
  }

 private:
  AnalysisReport& report_;
  bool enabled_;
};

std::optional<std::size_t> finite(Length v) {
  if (v == kInfinite) return std::nullopt;
  return v;
}

std::string rational_text(const mpq_class& q) { return q.get_str(); }

}  // namespace

AnalysisReport analyze(const Graph& g, const AnalysisOptions& options, std::string input, std::size_t index) {
  AnalysisReport report;
  report.input = std::move(input);
  report.index = index;
  report.n = g.order();
  report.m = g.size();
  PhaseTimer timer(report, options.timings);

  const MetricProfile profile = timer.run("metric", [&] { return compute_profile(g, options.threads); });
  report.girth = finite(profile.girth());
  report.diameter = finite(profile.diameter());
  report.connected = profile.connected();

  const Length girth = profile.girth();
  const bool odd_girth = girth != kInfinite && girth % 2 == 1;

  CycleCensus census;
  if (options.census) {
    if (options.brute_force) {
      const std::size_t max_len = options.max_cycle_length ? options.max_cycle_length : g.order();
      census = timer.run("enumeration", [&] { return brute_force_convex_cycles(g, profile, max_len); });
    } else {
      auto odd = timer.run("pairs", [&] { return odd_antipodal_pairs(g, profile, options.threads); });
      auto even = timer.run("pairs", [&] { return even_antipodal_pairs(g, profile, options.threads); });
      census = timer.run("enumeration",
                         [&] { return enumerate_convex_cycles(g, profile, odd, even, options.threads); });
    }
    report.census = CensusSummary{options.brute_force ? "brute_force" : "antipodal", census.rho,
                                  census.rho_odd, census.rho_even, census.histogram};
  }

  if (options.extremal && options.census) {
    ExtremalSummary summary;
    if (!profile.connected()) {
      summary.classification = std::string(to_string(Classification::NotApplicable));
      summary.reason = "disconnected";
    } else if (girth == kInfinite) {
      summary.classification = std::string(to_string(Classification::NotApplicable));
      summary.reason = "forest";
    } else {
      const ExtremalReport ext = check_extremal(g, profile, census);
      summary.classification = std::string(to_string(ext.classification));
      summary.bound = rational_text(ext.bound);
      summary.equality = ext.equality;
      summary.even_equality = ext.even_equality;
    }
    report.extremal = summary;
  }

  if (options.moore) {
    MooreSummary summary;
    if (!profile.connected()) {
      summary.reason = "disconnected";
    } else {
      const MooreReport moore = is_moore(g, profile);
      summary.is_moore = moore.is_moore;
      summary.r = finite(moore.r);
      summary.girth = finite(moore.girth);
      summary.regular_degree = moore.regular_degree;
      if (odd_girth && options.census) {
        const Theorem2Result t2 = theorem2_check(g, profile, census);
        summary.theorem2 = Theorem2Summary{t2.count, rational_text(t2.target), t2.is_moore_by_count};
      } else if (!odd_girth) {
        summary.reason = girth == kInfinite ? "forest" : "even girth";
      }
    }
    report.moore = summary;
  }

  if (options.spectral) {
    SpectralSummary summary;
    if (girth == kInfinite) {
      summary.reason = "forest";
    } else if (!odd_girth) {
      summary.reason = "even girth";
    } else if (g.order() > options.spectral_cap) {
      summary.reason = "order exceeds spectral cap of " + std::to_string(options.spectral_cap);
    } else {
      timer.run("spectral", [&] {
        const IntPolynomial p = char_poly(g);
        const mpz_class count = girth_cycle_count_spectral(p, g.order(), girth);
        summary.coefficient = p.coefficient(g.order() - girth).get_str();
        summary.girth_cycles = count.get_ui();
        if (options.include_polynomial) summary.polynomial = p.to_string();
      });
      if (options.census && !options.brute_force &&
          *summary.girth_cycles != girth_cycle_count(profile, census)) {
        throw ConsistencyViolation("characteristic-polynomial and enumerated girth-cycle counts differ");
      }
    }
    report.spectral = summary;
  }
  return report;
}

namespace {

template <class T>
void put_optional(nlohmann::json& j, const char* key, const std::optional<T>& value) {
  if (value) j[key] = *value;
}

template <class T>
std::optional<T> get_optional(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

nlohmann::json to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["input"] = r.input;
  j["index"] = r.index;
  j["n"] = r.n;
  j["m"] = r.m;
  j["girth"] = r.girth ? nlohmann::json(*r.girth) : nlohmann::json(nullptr);
  j["diameter"] = r.diameter ? nlohmann::json(*r.diameter) : nlohmann::json(nullptr);
  j["connected"] = r.connected;
  if (r.census) {
    nlohmann::json hist = nlohmann::json::object();
    for (auto [len, count] : r.census->histogram) hist[std::to_string(len)] = count;
    j["census"] = {{"method", r.census->method},
                   {"rho", r.census->rho},
                   {"rho_odd", r.census->rho_odd},
                   {"rho_even", r.census->rho_even},
                   {"histogram", hist}};
  }
  if (r.extremal) {
    nlohmann::json e{{"classification", r.extremal->classification},
                     {"equality", r.extremal->equality},
                     {"even_equality", r.extremal->even_equality}};
    put_optional(e, "reason", r.extremal->reason);
    put_optional(e, "bound", r.extremal->bound);
    j["extremal"] = e;
  }
  if (r.moore) {
    nlohmann::json mo{{"is_moore", r.moore->is_moore}};
    put_optional(mo, "reason", r.moore->reason);
    put_optional(mo, "r", r.moore->r);
    put_optional(mo, "girth", r.moore->girth);
    put_optional(mo, "regular_degree", r.moore->regular_degree);
    if (r.moore->theorem2) {
      mo["theorem2"] = {{"count", r.moore->theorem2->count},
                        {"target", r.moore->theorem2->target},
                        {"is_moore_by_count", r.moore->theorem2->is_moore_by_count}};
    }
    j["moore"] = mo;
  }
  if (r.spectral) {
    nlohmann::json s = nlohmann::json::object();
    put_optional(s, "reason", r.spectral->reason);
    put_optional(s, "coefficient", r.spectral->coefficient);
    put_optional(s, "girth_cycles", r.spectral->girth_cycles);
    put_optional(s, "polynomial", r.spectral->polynomial);
    j["spectral"] = s;
  }
  if (!r.timings_ms.empty()) j["timings_ms"] = r.timings_ms;
  return j;
}

AnalysisReport report_from_json(const nlohmann::json& j) {
  AnalysisReport r;
  r.input = j.at("input").get<std::string>();
  r.index = j.at("index").get<std::size_t>();
  r.n = j.at("n").get<std::size_t>();
  r.m = j.at("m").get<std::size_t>();
  r.girth = get_optional<std::size_t>(j, "girth");
  r.diameter = get_optional<std::size_t>(j, "diameter");
  r.connected = j.at("connected").get<bool>();
  if (j.contains("census")) {
    const auto& c = j.at("census");
    CensusSummary census{c.at("method").get<std::string>(), c.at("rho").get<std::size_t>(),
                         c.at("rho_odd").get<std::size_t>(), c.at("rho_even").get<std::size_t>(), {}};
    for (const auto& [len, count] : c.at("histogram").items()) {
      census.histogram[std::stoul(len)] = count.get<std::size_t>();
    }
    r.census = census;
  }
  if (j.contains("extremal")) {
    const auto& e = j.at("extremal");
    r.extremal = ExtremalSummary{e.at("classification").get<std::string>(), get_optional<std::string>(e, "reason"),
                                 get_optional<std::string>(e, "bound"), e.at("equality").get<bool>(),
                                 e.at("even_equality").get<bool>()};
  }
  if (j.contains("moore")) {
    const auto& mo = j.at("moore");
    MooreSummary moore;
    moore.reason = get_optional<std::string>(mo, "reason");
    moore.is_moore = mo.at("is_moore").get<bool>();
    moore.r = get_optional<std::size_t>(mo, "r");
    moore.girth = get_optional<std::size_t>(mo, "girth");
    moore.regular_degree = get_optional<std::size_t>(mo, "regular_degree");
    if (mo.contains("theorem2")) {
      const auto& t = mo.at("theorem2");
      moore.theorem2 = Theorem2Summary{t.at("count").get<std::size_t>(), t.at("target").get<std::string>(),
                                       t.at("is_moore_by_count").get<bool>()};
    }
    r.moore = moore;
  }
  if (j.contains("spectral")) {
    const auto& s = j.at("spectral");
    r.spectral = SpectralSummary{get_optional<std::string>(s, "reason"), get_optional<std::string>(s, "coefficient"),
                                 get_optional<std::uint64_t>(s, "girth_cycles"),
                                 get_optional<std::string>(s, "polynomial")};
  }
  if (j.contains("timings_ms")) r.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
  return r;
}

std::string render_table(const AnalysisReport& r) {
  std::ostringstream out;
  auto row = [&out](const std::string& key, const std::string& value) {
    out << std::left << std::setw(34) << key << value << '\n';
  };
  auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string("inf"); };
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };

  row("input", r.input.empty() ? "-" : r.input);
  row("index", std::to_string(r.index));
  row("n", std::to_string(r.n));
  row("m", std::to_string(r.m));
  row("girth", opt(r.girth));
  row("diameter", opt(r.diameter));
  row("connected", flag(r.connected));
  if (r.census) {
    row("census.method", r.census->method);
    row("census.rho", std::to_string(r.census->rho));
    row("census.rho_odd", std::to_string(r.census->rho_odd));
    row("census.rho_even", std::to_string(r.census->rho_even));
    for (auto [len, count] : r.census->histogram) row("census.length." + std::to_string(len), std::to_string(count));
  }
  if (r.extremal) {
    row("extremal.classification", r.extremal->classification);
    if (r.extremal->reason) row("extremal.reason", *r.extremal->reason);
    if (r.extremal->bound) row("extremal.bound", *r.extremal->bound);
    row("extremal.equality", flag(r.extremal->equality));
    row("extremal.even_equality", flag(r.extremal->even_equality));
  }
  if (r.moore) {
    row("moore.is_moore", flag(r.moore->is_moore));
    if (r.moore->reason) row("moore.reason", *r.moore->reason);
    if (r.moore->r) row("moore.r", std::to_string(*r.moore->r));
    if (r.moore->girth) row("moore.girth", std::to_string(*r.moore->girth));
    if (r.moore->regular_degree) row("moore.regular_degree", std::to_string(*r.moore->regular_degree));
    if (r.moore->theorem2) {
      row("moore.theorem2.count", std::to_string(r.moore->theorem2->count));
      row("moore.theorem2.target", r.moore->theorem2->target);
      row("moore.theorem2.is_moore_by_count", flag(r.moore->theorem2->is_moore_by_count));
    }
  }
  if (r.spectral) {
    if (r.spectral->reason) row("spectral.reason", *r.spectral->reason);
    if (r.spectral->coefficient) row("spectral.coefficient", *r.spectral->coefficient);
    if (r.spectral->girth_cycles) row("spectral.girth_cycles", std::to_string(*r.spectral->girth_cycles));
    if (r.spectral->polynomial) row("spectral.polynomial", *r.spectral->polynomial);
  }
  for (const auto& [phase, ms] : r.timings_ms) {
    std::ostringstream v;
    v << std::fixed << std::setprecision(3) << ms;
    row("timings_ms." + phase, v.str());
  }
  return out.str();
}

}  // namespace convexcycles
