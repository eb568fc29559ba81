#include "convexcycles/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "convexcycles/errors.hpp"
#include "convexcycles/generators.hpp"
#include "convexcycles/graph6.hpp"
#include "convexcycles/report.hpp"

namespace convexcycles::cli {
namespace {

constexpr std::size_t kOracleDefaultCap = 12;

struct Settings {
  std::string format = "json";
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string file;

  bool timings = false;
  bool polynomial = false;
  std::size_t spectral_cap = 100;
  std::size_t max_len = 0;
  bool force = false;

  std::string family;
  std::vector<std::string> params;
  bool edge_list = false;
};

std::string slurp(const std::string& file, std::istream& in) {
  std::ostringstream buffer;
  if (file == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream stream(file, std::ios::binary);
    if (!stream) throw ParseError("cannot open \"" + file + "\"");
    buffer << stream.rdbuf();
  }
  return buffer.str();
}

void emit(const AnalysisReport& report, const Settings& s, std::ostream& out, bool first) {
  if (s.format == "json") {
    out << to_json(report).dump() << '\n';
  } else {
    if (!first) out << '\n';
    out << render_table(report);
  }
}

int run_reports(const Settings& s, AnalysisOptions options, std::istream& in, std::ostream& out,
                std::size_t max_order, const std::string& refusal) {
  options.threads = s.threads;
  const auto graphs = read_graphs(slurp(s.file, in));
  for (const Graph& g : graphs) {
    if (g.order() > max_order) throw InvalidParameter(refusal + " (n = " + std::to_string(g.order()) + ")");
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    emit(analyze(graphs[i], options, s.file, i), s, out, i == 0);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convex cycle census, extremal bound and Moore graph checks"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", s.seed, "Seed for random graph families");
  app.add_option("--threads", s.threads, "Worker threads (0 = all cores)");

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report: metric, census, bound, Moore, spectral");
  analyze_cmd->add_option("file", s.file, "graph6 or edge-list file, '-' for stdin")->required();
  analyze_cmd->add_flag("--timings", s.timings, "Include per-phase wall-clock timings");
  analyze_cmd->add_option("--spectral-cap", s.spectral_cap, "Largest order for the polynomial count");

  auto* bound_cmd = app.add_subcommand("bound", "Convex cycle census and extremal bound");
  bound_cmd->add_option("file", s.file)->required();

  auto* moore_cmd = app.add_subcommand("moore", "Moore graph test and girth-cycle count criterion");
  moore_cmd->add_option("file", s.file)->required();

  auto* spectral_cmd = app.add_subcommand("spectral", "Girth-cycle count from the characteristic polynomial");
  spectral_cmd->add_option("file", s.file)->required();
  spectral_cmd->add_option("--cap", s.spectral_cap, "Refuse graphs with more vertices than this");
  spectral_cmd->add_flag("--polynomial", s.polynomial, "Print all coefficients, constant term first");

  auto* generate_cmd = app.add_subcommand("generate", "Emit a named graph as graph6");
  generate_cmd->add_option("family", s.family,
                           "cycle|path|complete|complete_bipartite|hypercube|petersen|hoffman_singleton|gnp")
      ->required();
  generate_cmd->add_option("params", s.params, "Family parameters");
  generate_cmd->add_flag("--edge-list", s.edge_list, "Emit an edge list instead of graph6");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive convex cycle census (small graphs)");
  oracle_cmd->add_option("file", s.file)->required();
  oracle_cmd->add_option("--max-len", s.max_len, "Longest cycle to search (default n)");
  oracle_cmd->add_flag("--force", s.force, "Allow graphs with more than 12 vertices");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  try {
    if (*generate_cmd) {
      const Graph g = generators::by_name(s.family, s.params, s.seed);
      out << (s.edge_list ? write_edge_list(g) : write_graph6(g) + "\n");
      return kExitOk;
    }
    const std::size_t unlimited = std::numeric_limits<std::size_t>::max();
    if (*analyze_cmd) {
      AnalysisOptions options;
      options.timings = s.timings;
      options.spectral_cap = s.spectral_cap;
      return run_reports(s, options, in, out, unlimited, "");
    }
    if (*bound_cmd) {
      AnalysisOptions options;
      options.moore = false;
      options.spectral = false;
      return run_reports(s, options, in, out, unlimited, "");
    }
    if (*moore_cmd) {
      AnalysisOptions options;
      options.extremal = false;
      options.spectral = false;
      return run_reports(s, options, in, out, unlimited, "");
    }
    if (*spectral_cmd) {
      AnalysisOptions options;
      options.census = options.extremal = options.moore = false;
      options.spectral_cap = s.spectral_cap;
      options.include_polynomial = s.polynomial;
      const auto graphs = read_graphs(slurp(s.file, in));
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (graphs[i].order() > s.spectral_cap) {
          throw InvalidParameter("spectral: n = " + std::to_string(graphs[i].order()) + " exceeds --cap " +
                                 std::to_string(s.spectral_cap));
        }
        options.threads = s.threads;
        AnalysisReport report = analyze(graphs[i], options, s.file, i);
        if (report.spectral && report.spectral->reason) {
          throw NotApplicable("spectral: " + *report.spectral->reason + " (graph " + std::to_string(i) + ")");
        }
        emit(report, s, out, i == 0);
      }
      return kExitOk;
    }
    if (*oracle_cmd) {
      AnalysisOptions options;
      options.brute_force = true;
      options.max_cycle_length = s.max_len;
      options.extremal = options.moore = options.spectral = false;
      return run_reports(s, options, in, out, s.force ? unlimited : kOracleDefaultCap,
                         "oracle: graph too large for exhaustive search, use --force");
    }
  } catch (const ConsistencyViolation& e) {
    err << "internal consistency violation: " << e.what() << '\n';
    return kExitConsistency;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace convexcycles::cli
