// Command-line front end: analyze, bounds, enumerate, construct, verify-paper.
//
// Exit codes: 0 success, 1 a verification check failed, 2 bad input.

#include "greechie/bounds.hpp"
#include "greechie/constructions.hpp"
#include "greechie/enumerate.hpp"
#include "greechie/hypergraph.hpp"
#include "greechie/measures.hpp"
#include "greechie/report.hpp"
#include "greechie/verification.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#ifndef GREECHIE_DATA_DIR
#define GREECHIE_DATA_DIR "data"
#endif

namespace {

using namespace greechie;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_input = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Hypergraph load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return parse_diagram(in);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const DiagramError& e) {
    throw InputError(path + ": " + e.what());
  }
}

StructureKind parse_class(const std::string& name) {
  auto kind = parse_structure_kind(name);
  if (!kind || *kind == StructureKind::not_greechie) throw InputError("unknown class '" + name + "' (use oa, omp, oml)");
  return *kind;
}

std::vector<Edge> read_edges(const std::string& path) {
  try {
    return detail::read_edge_file(path);
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
  std::string file;
  bool json = false;
  std::vector<std::uint64_t> primes;
};

int run_analyze(const AnalyzeArgs& a) {
  const Hypergraph h = load(a.file);
  AnalysisReport r;
  try {
    r = analyze(h, a.file, a.primes);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (a.json)
    std::cout << to_json(r).dump(2) << "\n";
  else
    print_report(r, std::cout);
  return exit_ok;
}

struct BoundsArgs {
  std::string kind;
  std::int64_t n = 0;
  std::optional<std::int64_t> m;
};

int run_bounds(const BoundsArgs& a) {
  const StructureKind kind = parse_class(a.kind);
  if (a.n < 3) throw InputError("n must be at least 3");
  std::int64_t limit = 0;
  switch (kind) {
    case StructureKind::oa: limit = max_edges_oa(a.n); break;
    case StructureKind::omp: limit = max_edges_omp(a.n); break;
    default: limit = max_edges_oml(a.n); break;
  }
  std::cout << limit << "\n";
  if (a.m) {
    const bool ok = kind == StructureKind::oml ? oml_bound_satisfied(a.n, *a.m) : *a.m <= limit;
    std::cout << "m = " << *a.m << ": " << (ok ? "within bound" : "exceeds bound") << "\n";
  }
  return exit_ok;
}

struct EnumerateArgs {
  std::size_t max_vertices = 6;
  std::string kind = "oa";
  std::optional<std::size_t> max_edges;
  std::size_t min_edge_size = 3;
  std::optional<std::size_t> max_edge_size;
  bool all = false;
  bool jsonl = false;
  bool skip_states = false;
  std::optional<double> budget;
  std::size_t workers = 1;
};

int run_enumerate(const EnumerateArgs& a) {
  EnumerationTask task;
  task.max_vertices = a.max_vertices;
  task.class_filter = parse_class(a.kind);
  task.max_edges = a.max_edges;
  task.min_edge_size = a.min_edge_size;
  task.max_edge_size = a.max_edge_size;
  task.connected_only = !a.all;
  task.workers = a.workers;
  task.budget.seconds = a.budget;
  EnumerationResult result;
  try {
    result = enumerate_diagrams(task);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }

  for (const Hypergraph& h : result.diagrams) {
    const auto kind = classify(h).kind;
    std::optional<bool> state;
    if (!a.skip_states) state = find_probability_measure(h).has_value();
    if (a.jsonl) {
      nlohmann::ordered_json j;
      j["n"] = h.vertex_count();
      j["m"] = h.edge_count();
      j["class"] = std::string(to_string(kind));
      j["state"] = state ? nlohmann::ordered_json(*state) : nlohmann::ordered_json(nullptr);
      j["edges"] = h.edges();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "# n=" << h.vertex_count() << " m=" << h.edge_count() << " class=" << to_string(kind)
                << " state=" << (state ? (*state ? "yes" : "no") : "unchecked") << "\n";
      serialize_diagram(h, std::cout);
      std::cout << "\n";
    }
  }
  std::cerr << result.diagrams.size() << " diagrams, " << result.nodes_visited << " nodes, " << std::fixed
            << std::setprecision(2) << result.seconds << " s" << (result.complete ? "" : ", budget exhausted: INCOMPLETE")
            << "\n";
  return exit_ok;
}

struct ConstructArgs {
  std::string name;
  std::optional<std::string> diagonals;
  bool search = false;
};

int run_construct(const ConstructArgs& a) {
  if ((a.diagonals || a.search) && a.name != "merge") throw InputError("--diagonals and --search only apply to merge");
  std::optional<Hypergraph> h;
  if (a.name == "fano") h = fano();
  else if (a.name == "ag23") h = ag23();
  else if (a.name == "omp21") h = omp21();
  else if (a.name == "oml67") h = oml67();
  else if (a.name == "merge") {
    const GridMerge m = merge(fano(), ag23());
    std::vector<Edge> diagonals;
    if (a.diagonals) diagonals = read_edges(*a.diagonals);
    if (a.search) {
      const auto found = search_diagonal_edges(m, 4, Budget{600.0, {}});
      if (!found.diagonals) {
        std::cerr << "no diagonal set found within budget\n";
        return exit_failed;
      }
      diagonals.insert(diagonals.end(), found.diagonals->begin(), found.diagonals->end());
    }
    try {
      h = add_diagonal_edges(m, diagonals);
    } catch (const DiagramError& e) {
      throw InputError(std::string("invalid diagonals: ") + e.what());
    }
  } else {
    throw InputError("unknown construction '" + a.name + "' (use fano, ag23, merge, oml67, omp21)");
  }
  serialize_diagram(*h, std::cout);
  return exit_ok;
}

struct VerifyArgs {
  std::vector<std::string> skip;
  std::vector<std::string> fixtures;
  bool extended = false;
  std::size_t workers = 0;
  std::string diagonals = std::string(GREECHIE_DATA_DIR) + "/grid_diagonals.txt";
};

int run_verify(const VerifyArgs& a) {
  VerificationOptions opt;
  const auto& stages = verification_stages();
  for (const auto& s : a.skip) {
    if (std::find(stages.begin(), stages.end(), s) == stages.end()) throw InputError("unknown stage '" + s + "'");
    opt.skip.insert(s);
  }
  for (const auto& f : a.fixtures) {
    const auto eq = f.find('=');
    if (eq == std::string::npos) throw InputError("--fixture expects name=FILE");
    const std::string name = f.substr(0, eq);
    if (name != "omp21" && name != "oml67" && name != "fano" && name != "ag23")
      throw InputError("unknown fixture '" + name + "'");
    opt.fixtures.insert_or_assign(name, load(f.substr(eq + 1)));
  }
  opt.extended = a.extended;
  if (a.workers) opt.workers = a.workers;
  opt.grid_diagonals_file = a.diagonals;

  const auto results = run_verification(opt);
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  for (const auto& r : results) {
    std::cout << to_string(r.status) << "  " << std::left << std::setw(10) << r.stage << std::setw(static_cast<int>(width))
              << r.name << std::right;
    if (r.status != CheckStatus::skipped) std::cout << "  " << std::fixed << std::setprecision(2) << r.seconds << " s";
    if (!r.gating) std::cout << "  (non-gating)";
    if (!r.detail.empty()) std::cout << "\n        " << r.detail;
    std::cout << "\n";
  }
  const bool ok = verification_passed(results);
  std::cout << (ok ? "all checks passed" : "verification FAILED") << "\n";
  return ok ? exit_ok : exit_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greechie diagrams: classification, measures, bounds, enumeration"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "classify a diagram and decide states and group-valued measures");
  analyze_cmd->add_option("file", analyze_args.file, "diagram in edge-list format")->required();
  analyze_cmd->add_flag("--json", analyze_args.json, "emit JSON");
  analyze_cmd->add_option("--primes", analyze_args.primes, "primes for the nonconstant-range profile")->delimiter(',');

  BoundsArgs bounds_args;
  auto* bounds_cmd = app.add_subcommand("bounds", "maximum edge count for a class on n vertices");
  bounds_cmd->add_option("class", bounds_args.kind, "oa, omp or oml")->required();
  bounds_cmd->add_option("n", bounds_args.n, "vertex count")->required();
  bounds_cmd->add_option("m", bounds_args.m, "edge count to test");

  EnumerateArgs enum_args;
  auto* enum_cmd = app.add_subcommand("enumerate", "list diagrams up to isomorphism");
  enum_cmd->add_option("--max-vertices", enum_args.max_vertices)->required()->check(CLI::Range(1, 16));
  enum_cmd->add_option("--class", enum_args.kind, "oa, omp or oml")->required();
  enum_cmd->add_option("--max-edges", enum_args.max_edges);
  enum_cmd->add_option("--min-edge-size", enum_args.min_edge_size)->check(CLI::Range(2, 16));
  enum_cmd->add_option("--max-edge-size", enum_args.max_edge_size)->check(CLI::Range(2, 16));
  enum_cmd->add_flag("--all", enum_args.all, "include disconnected diagrams");
  enum_cmd->add_flag("--jsonl", enum_args.jsonl, "one JSON object per line");
  enum_cmd->add_flag("--no-states", enum_args.skip_states, "skip the state check per diagram");
  enum_cmd->add_option("--budget", enum_args.budget, "wall-clock budget in seconds");
  enum_cmd->add_option("--workers", enum_args.workers)->check(CLI::Range(1, 256));

  ConstructArgs construct_args;
  auto* construct_cmd = app.add_subcommand("construct", "print a built-in diagram");
  construct_cmd->add_option("name", construct_args.name, "fano, ag23, merge, oml67 or omp21")->required();
  construct_cmd->add_option("--diagonals", construct_args.diagonals, "diagonal edges to add to merge");
  construct_cmd->add_flag("--search", construct_args.search, "add diagonals found by search to merge");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify-paper", "run all verification checks");
  verify_cmd->add_option("--skip", verify_args.skip, "stage to skip (repeatable)");
  verify_cmd->add_option("--fixture", verify_args.fixtures, "replace a built-in diagram: name=FILE");
  verify_cmd->add_flag("--extended", verify_args.extended, "also run the 9-vertex state check");
  verify_cmd->add_option("--workers", verify_args.workers);
  verify_cmd->add_option("--diagonals", verify_args.diagonals, "fallback diagonal set for the grid check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*analyze_cmd) return run_analyze(analyze_args);
    if (*bounds_cmd) return run_bounds(bounds_args);
    if (*enum_cmd) return run_enumerate(enum_args);
    if (*construct_cmd) return run_construct(construct_args);
    if (*verify_cmd) return run_verify(verify_args);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}
