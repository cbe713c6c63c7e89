// scra: supply-chain risk analysis from the command line.
//
// Exit status: 0 success, 1 invalid input or failed analysis, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "scra/analysis.h"
#include "scra/error.h"
#include "scra/graph_format.h"
#include "scra/perturb.h"
#include "scra/report.h"

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

/// Raised for input problems that are already fully described.
struct Failure {
  std::string message;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{path + ": cannot read file"};
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

scra::SystemGraph LoadGraph(const std::string& path) {
  std::string text = ReadFile(path);
  try {
    return scra::ToGraph(scra::ParseDocument(
        text, std::filesystem::path(path).stem().string()));
  } catch (const scra::ParseError& e) {
    std::string caret(e.column() > 0 ? e.column() - 1 : 0, ' ');
    throw Failure{path + ":" + std::to_string(e.line()) + ":" +
                  std::to_string(e.column()) + ": error: " + e.detail() +
                  " [" + std::string(scra::ToString(e.code())) + "]\n  " +
                  e.snippet() + "\n  " + caret + "^"};
  }
}

void Emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{out_path + ": cannot write file"};
}

struct OutputOptions {
  std::string format = "table";
  std::string out_path;

  void Attach(CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", out_path, "Write the report to this file instead of stdout");
  }
  scra::ReportFormat Format() const { return *scra::ParseReportFormat(format); }
};

std::vector<double> ParseGrid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double value = 0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw CLI::ValidationError("--grid", "'" + item + "' is not a number");
    if (!(value > 0 && value <= 1))
      throw CLI::ValidationError("--grid", "margin " + item + " is outside (0, 1]");
    grid.push_back(value);
  }
  if (grid.empty()) throw CLI::ValidationError("--grid", "empty margin list");
  return grid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supply-chain security risk analysis over component/supplier graphs"};
  app.name("scra");
  app.require_subcommand(1);

  std::string graph_path;
  std::string variant_path;

  auto* validate = app.add_subcommand("validate", "Check a graph file and list warnings");
  validate->add_option("graph", graph_path, "Graph file")->required();

  auto* analyze = app.add_subcommand("analyze", "Risk, cutset count and average cutset size");
  OutputOptions analyze_out;
  analyze->add_option("graph", graph_path, "Graph file")->required();
  analyze_out.Attach(analyze);

  auto* cutsets = app.add_subcommand("cutsets", "List minimal cutsets");
  OutputOptions cutsets_out;
  std::size_t max_order = 0;
  cutsets->add_option("graph", graph_path, "Graph file")->required();
  cutsets->add_option("--max-order", max_order,
                      "Only list cutsets with at most this many events (display only)")
      ->check(CLI::PositiveNumber);
  cutsets_out.Attach(cutsets);

  auto* compare = app.add_subcommand("compare", "Compare a variant graph against a baseline");
  OutputOptions compare_out;
  compare->add_option("baseline", graph_path, "Baseline graph file")->required();
  compare->add_option("variant", variant_path, "Variant graph file")->required();
  compare_out.Attach(compare);

  auto* perturb = app.add_subcommand("perturb", "Apply one perturbation and compare with the input");
  OutputOptions perturb_out;
  std::string flip, omit, rewire, emit_graph;
  double margin = 0;
  perturb->add_option("graph", graph_path, "Graph file")->required();
  auto* flip_opt = perturb->add_option("--flip", flip, "Toggle AND/OR logic of a component");
  auto* omit_opt = perturb->add_option("--omit", omit,
                                       "Omit a component and everything that only feeds it");
  auto* rewire_opt = perturb->add_option("--rewire", rewire,
                                         "Move edge SRC->OLD to SRC->NEW, given as SRC,OLD,NEW");
  auto* error_opt = perturb->add_option("--error", margin,
                                        "Scale every probability by (1 + E), 0 < E <= 1");
  perturb->add_option("--emit-graph", emit_graph, "Also write the perturbed graph to this file");
  for (auto* a : {flip_opt, omit_opt, rewire_opt, error_opt}) {
    for (auto* b : {flip_opt, omit_opt, rewire_opt, error_opt}) {
      if (a != b) a->excludes(b);
    }
  }
  perturb_out.Attach(perturb);

  auto* sweep = app.add_subcommand("sweep", "Apply one perturbation class across all subjects");
  OutputOptions sweep_out;
  std::string mode;
  std::string grid_text;
  unsigned jobs = 1;
  sweep->add_option("graph", graph_path, "Graph file")->required();
  sweep->add_option("--mode", mode, "Perturbation class")
      ->required()
      ->check(CLI::IsMember({"flip", "omit", "error"}));
  auto* grid_opt = sweep->add_option("--grid", grid_text,
                                     "Comma-separated error margins (required for --mode error)");
  sweep->add_option("--jobs", jobs, "Worker threads (output does not depend on it)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep_out.Attach(sweep);

  std::vector<double> grid;
  scra::Perturbation perturbation = scra::LogicFlip{"x"};
  try {
    app.parse(argc, argv);
    if (perturb->parsed()) {
      int chosen = flip_opt->count() + omit_opt->count() + rewire_opt->count() +
                   error_opt->count();
      if (chosen != 1)
        throw CLI::ValidationError("perturb",
                                   "exactly one of --flip, --omit, --rewire, --error is required");
      try {
        if (flip_opt->count()) {
          perturbation = scra::LogicFlip{scra::NodeId(flip)};
        } else if (omit_opt->count()) {
          perturbation = scra::NodeOmission{scra::NodeId(omit)};
        } else if (rewire_opt->count()) {
          std::vector<std::string> parts;
          std::stringstream in(rewire);
          for (std::string p; std::getline(in, p, ',');) parts.push_back(p);
          if (parts.size() != 3)
            throw CLI::ValidationError("--rewire", "expected SRC,OLD,NEW");
          perturbation = scra::EdgeRewire{scra::NodeId(parts[0]), scra::NodeId(parts[1]),
                                          scra::NodeId(parts[2])};
        } else {
          perturbation = scra::ErrorMargin(margin);
        }
      } catch (const scra::Error& e) {
        throw CLI::ValidationError("perturb", e.what());
      }
    }
    if (sweep->parsed()) {
      if (mode == "error" && !grid_opt->count())
        throw CLI::ValidationError("--grid", "--mode error requires --grid");
      if (mode != "error" && grid_opt->count())
        throw CLI::ValidationError("--grid", "--grid only applies to --mode error");
      if (grid_opt->count()) grid = ParseGrid(grid_text);
    }
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "scra: " << e.what() << "\n"
              << "Run with --help for more information.\n";
    return kExitUsage;
  }

  try {
    if (validate->parsed()) {
      scra::SystemGraph g = LoadGraph(graph_path);
      std::string text = "valid: " + std::to_string(g.components().size()) +
                         " components, " + std::to_string(g.suppliers().size()) +
                         " suppliers, " + std::to_string(g.edges().size()) + " edges\n";
      for (const scra::Violation& v : scra::Validate(g))
        text += "warning: " + v.message + " [" + std::string(scra::ToString(v.rule)) + "]\n";
      std::cout << text;
    } else if (analyze->parsed()) {
      scra::Analysis a = scra::Analyze(LoadGraph(graph_path));
      Emit(scra::WriteReport(a.report, analyze_out.Format()), analyze_out.out_path);
    } else if (cutsets->parsed()) {
      scra::Analysis a = scra::Analyze(LoadGraph(graph_path));
      std::optional<std::size_t> limit;
      if (max_order > 0) limit = max_order;
      Emit(scra::WriteCutsets(a.cutsets, cutsets_out.Format(), limit), cutsets_out.out_path);
    } else if (compare->parsed()) {
      scra::SystemGraph base = LoadGraph(graph_path);
      scra::SystemGraph variant = LoadGraph(variant_path);
      Emit(scra::WriteReport(scra::Compare(base, variant), compare_out.Format()),
           compare_out.out_path);
    } else if (perturb->parsed()) {
      scra::SystemGraph base = LoadGraph(graph_path);
      scra::SystemGraph variant = scra::Apply(base, perturbation);
      std::string report =
          scra::WriteReport(scra::Compare(base, variant), perturb_out.Format());
      if (!emit_graph.empty()) Emit(scra::SerializeGraph(variant), emit_graph);
      Emit(report, perturb_out.out_path);
    } else if (sweep->parsed()) {
      scra::SystemGraph g = LoadGraph(graph_path);
      scra::SweepOptions opts{jobs};
      std::vector<scra::SweepRow> rows;
      if (mode == "flip") {
        rows = scra::SweepFlip(g, opts);
      } else if (mode == "omit") {
        rows = scra::SweepOmit(g, opts);
      } else {
        rows = scra::SweepError(g, grid, opts);
      }
      Emit(scra::WriteReport(rows, sweep_out.Format()), sweep_out.out_path);
    }
  } catch (const Failure& f) {
    std::cerr << f.message << "\n";
    return kExitInvalid;
  } catch (const scra::Error& e) {
    std::cerr << "scra: " << e.what() << " [" << scra::ToString(e.code()) << "]\n";
    return kExitInvalid;
  }
  return 0;
}
