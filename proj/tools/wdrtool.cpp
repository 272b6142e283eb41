// Command-line frontend for the weakly distance-regular digraph analyzer.
//
// Exit codes: 0 success, 2 input/parse error, 3 precondition violation,
// 4 verification failure (a theorem/lemma check found a counterexample).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wdr/classify.hpp"
#include "wdr/parse.hpp"
#include "wdr/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerification = 4;

std::string read_input_argument(const std::string& arg) {
  if (arg.rfind("cay:", 0) == 0) return arg;
  if (arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream file(arg);
  if (!file) throw wdr::input_error("cannot open input file '" + arg + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

int worker_count() {
  if (const char* env = std::getenv("WDR_WORKERS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (...) {
      throw wdr::input_error("WDR_WORKERS must be a positive integer");
    }
  }
  return 0;  // parallel_for_index resolves 0 to the available parallelism
}

bool report_failed(const wdr::AnalysisReport& r) {
  if (!r.identities.ok) return true;
  if (r.mixed_arc.applicable && !r.mixed_arc.consistent) return true;
  if (r.delta.delta2_complete_bipartite == wdr::CheckStatus::fails) return true;
  if (r.delta.deltaq_cayley_structure == wdr::CheckStatus::fails) return true;
  return !r.lemmas.all_ok();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyzer for weakly distance-regular digraphs with regular attached schemes"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "structured", "json-like-structured"}))
      ->capture_default_str();

  std::string analyze_input;
  bool allow_undirected = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one digraph");
  analyze_cmd->add_option("input", analyze_input,
                          "Input file, '-' for stdin, or a cay:... spec string")
      ->required();
  analyze_cmd->add_flag("--allow-undirected", allow_undirected,
                        "Accept digraphs whose arcs are all paired");

  auto* catalog_cmd = app.add_subcommand("catalog", "Print the diameter-2 catalog");

  auto* search_cmd = app.add_subcommand("search", "Run a classification search");
  search_cmd->require_subcommand(1);
  int min_n = 3, max_n = 12;
  std::optional<int> diameter;
  auto* circ_cmd = search_cmd->add_subcommand("circulants", "Search circulant digraphs");
  circ_cmd->add_option("--min", min_n, "Smallest group order")->capture_default_str();
  circ_cmd->add_option("--max", max_n, "Largest group order")->capture_default_str();
  circ_cmd->add_option("--diameter", diameter, "Keep only survivors of this diameter");
  int all_max_n = 4;
  std::optional<int> all_diameter;
  bool no_prune = false;
  auto* all_cmd = search_cmd->add_subcommand("all", "Search all digraphs up to a given order");
  all_cmd->add_option("--max", all_max_n, "Largest vertex count (<= 5)")->capture_default_str();
  all_cmd->add_option("--diameter", all_diameter, "Keep only survivors of this diameter");
  all_cmd->add_flag("--no-prune", no_prune, "Disable candidate pruning (slow)");

  auto* verify_cmd = app.add_subcommand("verify", "Verify theorem and lemma suites");
  verify_cmd->require_subcommand(1);
  std::vector<std::string> corpus_inputs;
  bool corpus_allow_undirected = false;
  auto* corpus_cmd = verify_cmd->add_subcommand("corpus", "Verify a corpus of digraphs");
  corpus_cmd->add_option("inputs", corpus_inputs, "Input files or cay:... spec strings")
      ->required();
  corpus_cmd->add_flag("--allow-undirected", corpus_allow_undirected,
                       "Accept digraphs whose arcs are all paired");

  CLI11_PARSE(app, argc, argv);

  const wdr::ReportFormat fmt =
      format == "text" ? wdr::ReportFormat::text : wdr::ReportFormat::structured;

  try {
    if (*analyze_cmd) {
      const wdr::Digraph d =
          wdr::parse_input(read_input_argument(analyze_input), !allow_undirected);
      const wdr::AnalysisReport report = wdr::analyze(d);
      std::cout << wdr::render_report(report, fmt);
      if (!report.strongly_connected) return kExitPrecondition;
      return report_failed(report) ? kExitVerification : kExitOk;
    }

    if (*catalog_cmd) {
      const auto& catalog = wdr::classification_catalog();
      if (fmt == wdr::ReportFormat::structured) {
        wdr::json j = wdr::json::array();
        for (const auto& entry : catalog) {
          const wdr::Digraph d = entry.spec.build();
          j.push_back({{"label", entry.label},
                       {"spec", entry.spec.to_string()},
                       {"order", d.order()},
                       {"out_degree", d.out_degree(0)},
                       {"certificate", wdr::canonical_certificate(d).hex()}});
        }
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& entry : catalog) {
          const wdr::Digraph d = entry.spec.build();
          std::cout << entry.label << ": " << entry.spec.to_string()
                    << " order=" << d.order() << " out_degree=" << d.out_degree(0)
                    << " certificate=" << wdr::canonical_certificate(d).hex() << "\n";
        }
      }
      return kExitOk;
    }

    if (*circ_cmd) {
      const auto result = wdr::search_circulants(min_n, max_n, diameter, worker_count());
      std::cout << wdr::render_report(result, fmt);
      return kExitOk;
    }

    if (*all_cmd) {
      const auto result =
          wdr::search_all_digraphs(all_max_n, all_diameter, worker_count(), !no_prune);
      std::cout << wdr::render_report(result, fmt);
      return kExitOk;
    }

    if (*corpus_cmd) {
      std::vector<wdr::CorpusItem> items;
      for (const auto& arg : corpus_inputs)
        items.push_back({arg, wdr::parse_input(read_input_argument(arg),
                                               !corpus_allow_undirected)});
      const auto aggregate = wdr::corpus_verify(items);
      std::cout << wdr::render_report(aggregate, fmt);
      return aggregate.pass ? kExitOk : kExitVerification;
    }
  } catch (const wdr::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const wdr::precondition_error& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitOk;
}
