#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "report.hpp"

namespace {

using namespace sgec;
using namespace sgec::cli;

void add_graph_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--graph", cfg.graph, "Graph file path or bundled dataset name (karate)")
      ->required();
  cmd->add_option("--format", cfg.format, "Graph file format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, GraphFormat>{{"edgelist", GraphFormat::edgelist},
                                             {"pajek", GraphFormat::pajek}}));
  cmd->add_flag("--one-based", cfg.one_based, "Edge-list vertex ids start at 1");
  cmd->add_option("--convention", cfg.convention, "Tensor contraction convention")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Convention>{{"set", Convention::set_based},
                                            {"ordered", Convention::ordered_tuple}}));
}

Indexing report_indexing(const RunConfig& cfg) {
  if (cfg.format == GraphFormat::pajek || cfg.one_based) return Indexing::one_based;
  if (!std::filesystem::exists(cfg.graph) && cfg.graph == "karate") return Indexing::one_based;
  return Indexing::zero_based;
}

template <class Write>
void emit(const std::string& path, Write&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sgec: subgraph eigenvector centralities of undirected graphs"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string measure_list = "ec";
  std::string out_path;

  auto* compute = app.add_subcommand("compute", "Compute centrality measures");
  add_graph_options(compute, cfg);
  compute->add_option("--pattern", cfg.pattern, "Pattern token or file for f / k2f measures");
  compute->add_option("--measure", measure_list,
                      "Comma list: ec,dc,bc,sc,f,k2f,f:<pat>,k2f:<pat>,p2c,k2k3c,...");
  compute->add_option("--tol", cfg.tolerance, "Relative bracket tolerance")
      ->check(CLI::PositiveNumber);
  compute->add_option("--max-iter", cfg.max_iterations, "Iteration cap")
      ->check(CLI::PositiveNumber);
  compute->add_option("--out", cfg.output, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"json", OutputFormat::json},
                                              {"csv", OutputFormat::csv},
                                              {"table", OutputFormat::table}}));
  compute->add_option("--output", out_path, "Write the report here instead of stdout");
  compute->add_option("--corr", cfg.correlation, "Correlation method")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, CorrelationMethod>{{"pearson", CorrelationMethod::pearson},
                                                   {"spearman", CorrelationMethod::spearman}}));
  compute->add_option("--trace-convergence", cfg.trace_path,
                      "CSV of per-iteration bracket values");

  auto* check = app.add_subcommand("check", "Existence diagnostics for a pattern");
  add_graph_options(check, cfg);
  check->add_option("--pattern", cfg.pattern, "Pattern token or file")->required();
  check->add_option("--dump-tensor", cfg.dump_tensor_path,
                    "Write stored sets as 'i1 ... ik  multiplicity'");

  std::string dataset_name;
  auto* dataset = app.add_subcommand("dataset", "Materialize a bundled dataset");
  dataset->add_option("name", dataset_name, "Dataset name (karate)")->required();
  dataset->add_option("--dir", cfg.dataset_dir, "Output directory");

  app.add_subcommand("patterns", "List builtin pattern tokens");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) {
      std::stringstream list(measure_list);
      for (std::string tok; std::getline(list, tok, ',');) {
        if (!tok.empty()) cfg.measures.push_back(tok);
      }
      ReportDocument doc = cmd_compute(cfg);
      emit(out_path, [&](std::ostream& os) { write_report(os, doc, cfg.output); });
    } else if (*check) {
      Json doc = cmd_check(cfg);
      std::cout << doc.dump(2) << '\n';
    } else if (*dataset) {
      std::cout << cmd_dataset(dataset_name, cfg.dataset_dir) << '\n';
    } else {
      for (const auto& t : builtin_pattern_tokens()) std::cout << t << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << error_document(e, report_indexing(cfg)).dump(2) << '\n';
    return exit_code_for(e);
  }
  return kExitOk;
}
