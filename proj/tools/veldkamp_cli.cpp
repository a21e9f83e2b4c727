// Command-line front end: analyzes the Veldkamp space of a graph, optionally
// verifies a Pauli labeling, and emits text, JSON, or DOT reports.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "veldkamp/report.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + out_path);
  out << content;
}

struct AnalyzeArgs {
  int dynkin_n = 0;
  std::string graph_path;
  std::string labeling;  // empty, "builtin", or a file path
  int variant = 1;
  std::string format = "text";
  std::string view = "diagram";
  std::string out_path;
  std::string expect;
  bool allow_nonidentity = false;
  int max_points = 30;
  int threads = 0;
};

int run_analyze(const AnalyzeArgs& args) {
#ifdef _OPENMP
  if (args.threads > 0) omp_set_num_threads(args.threads);
#endif

  std::vector<std::string> warnings;
  std::optional<veld::IncidenceStructure> structure;
  if (args.dynkin_n > 0) {
    structure = veld::build_extended_dynkin_d(args.dynkin_n);
  } else {
    structure = veld::parse_edge_list(read_file(args.graph_path), &warnings);
  }

  veld::AnalysisOptions options;
  options.enumerate.max_points = args.max_points;

  std::string labeling_choice = args.labeling;
  if (!args.expect.empty() && labeling_choice.empty()) labeling_choice = "builtin";
  if (labeling_choice == "builtin") {
    if (args.dynkin_n < 4 || args.dynkin_n > 8) {
      std::cerr << "error: built-in labelings exist only for --dynkin-d 4..8\n";
      return kExitUsage;
    }
    options.labeling = veld::builtin_labeling(args.dynkin_n, args.variant);
  } else if (!labeling_choice.empty()) {
    options.labeling =
        veld::load_labeling(read_file(labeling_choice), structure->point_count(),
                            args.allow_nonidentity, &warnings);
  }

  auto report = veld::build_analysis(*structure, options);
  report.warnings.insert(report.warnings.begin(), warnings.begin(), warnings.end());

  std::string content;
  if (args.format == "json") {
    content = veld::to_json(report);
  } else if (args.format == "dot") {
    veld::DotView view = veld::DotView::Diagram;
    if (args.view == "veldkamp") view = veld::DotView::Veldkamp;
    else if (args.view == "hierarchy") view = veld::DotView::Hierarchy;
    content = veld::emit_dot(report, view);
  } else {
    content = veld::to_text(report);
  }
  write_output(args.out_path, content);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";

  if (!args.expect.empty()) {
    auto failures = veld::check_dynkin_expectations(report, args.dynkin_n);
    if (!failures.empty()) {
      for (const auto& f : failures) std::cerr << "expectation failed: " << f << "\n";
      return kExitVerification;
    }
    std::cerr << "all reference expectations hold for n=" << args.dynkin_n << "\n";
  }
  return 0;
}

int run_tables(int n) {
  auto structure = veld::build_extended_dynkin_d(n);
  auto space = veld::build_veldkamp_space(veld::enumerate_hyperplanes(structure));
  auto hierarchy = veld::build_subspace_hierarchy(space);
  auto induced = veld::induce(veld::builtin_labeling(n), space.catalog);

  auto diffs = (n == 4) ? veld::tables::compare_d4(space, induced)
                        : veld::tables::compare_d5(space, hierarchy, induced);
  if (diffs.empty()) {
    std::cout << "D" << n << " tables reproduce exactly ("
              << space.catalog.size() << " hyperplanes, " << space.lines3.size()
              << " lines)\n";
    return 0;
  }
  std::cout << "D" << n << " tables differ:\n";
  for (const auto& d : diffs) std::cout << "  " << d << "\n";
  return kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Veldkamp spaces of two-point-per-line incidence structures"};
  app.require_subcommand(1);

  AnalyzeArgs args;
  auto* analyze = app.add_subcommand(
      "analyze", "hyperplanes, veldkamp lines, subspaces, labeling checks");
  auto* dynkin = analyze->add_option("--dynkin-d", args.dynkin_n,
                                     "extended D diagram with vertices 0..n");
  dynkin->check(CLI::Range(4, 62));
  auto* graph =
      analyze->add_option("--graph", args.graph_path, "edge-list file");
  graph->excludes(dynkin);
  dynkin->excludes(graph);
  analyze->add_option("--labeling", args.labeling,
                      "'builtin' or a labeling file");
  analyze->add_option("--variant", args.variant, "built-in labeling variant")
      ->check(CLI::Range(1, 2));
  analyze->add_option("--format", args.format, "text, json, or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  analyze->add_option("--view", args.view,
                      "dot view: diagram, veldkamp, or hierarchy")
      ->check(CLI::IsMember({"diagram", "veldkamp", "hierarchy"}));
  analyze->add_option("--out", args.out_path, "write the report to a file");
  analyze->add_option("--expect", args.expect,
                      "verify against the published reference results")
      ->check(CLI::IsMember({"paper"}));
  analyze->add_flag("--allow-nonidentity", args.allow_nonidentity,
                    "accept labeling files whose total product is not the identity");
  analyze->add_option("--max-points", args.max_points,
                      "enumeration capacity cap");
  analyze->add_option("--threads", args.threads, "OpenMP thread count");

  int tables_n = 4;
  auto* tables = app.add_subcommand(
      "tables", "compare the D4/D5 catalogs against the embedded reference tables");
  tables->add_option("--dynkin-d", tables_n, "4 or 5")
      ->required()
      ->check(CLI::IsMember({4, 5}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      if ((args.dynkin_n > 0) == !args.graph_path.empty()) {
        std::cerr << "error: exactly one of --dynkin-d or --graph is required\n";
        return kExitUsage;
      }
      if (!args.expect.empty() && (args.dynkin_n < 4 || args.dynkin_n > 8)) {
        std::cerr << "error: --expect requires --dynkin-d 4..8\n";
        return kExitUsage;
      }
      return run_analyze(args);
    }
    return run_tables(tables_n);
  } catch (const veld::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
