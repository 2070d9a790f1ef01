#ifndef SGEC_TOOLS_REPORT_HPP
#define SGEC_TOOLS_REPORT_HPP

#include <cstddef>
#include <exception>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgec/sgec.hpp"

namespace sgec::cli {

using Json = nlohmann::ordered_json;

enum class GraphFormat { edgelist, pajek };
enum class OutputFormat { json, csv, table };

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitNoCentrality = 3,
  kExitNotConverged = 4,
  kExitIo = 5,
};

struct RunConfig {
  std::string command;
  std::string graph;  // path, or a bundled dataset name
  GraphFormat format = GraphFormat::edgelist;
  bool one_based = false;
  std::string pattern;  // builtin token or pattern file path
  std::vector<std::string> measures;
  double tolerance = 1e-10;
  std::size_t max_iterations = 100000;
  OutputFormat output = OutputFormat::json;
  std::string output_path;  // stdout when empty
  CorrelationMethod correlation = CorrelationMethod::spearman;
  std::string trace_path;
  std::string dump_tensor_path;
  Convention convention = Convention::set_based;
  std::string dataset_dir = ".";

  // Throws Error(invalid_argument) on inconsistent settings.
  void validate() const;
};

enum class MeasureKind { ec, dc, bc, sc, f, mixed };

struct MeasureSpec {
  MeasureKind kind;
  std::optional<Pattern> pattern;
};

// Builtin token first, then a pattern file path.
Pattern resolve_pattern(const std::string& token);

// Tokens: ec dc bc sc | f | k2f (use --pattern) | f:<pat> | k2f:<pat> |
// <builtin>c (e.g. p2c) | k2<builtin>c (e.g. k2k3c).
MeasureSpec parse_measure(const std::string& token, const std::string& default_pattern);

Graph load_graph(const RunConfig& config);

struct MeasureBlock {
  CentralityVector centrality;
  Ranking ranking;
};

struct ReportDocument {
  std::size_t n = 0;
  std::size_t m = 0;
  Indexing indexing = Indexing::zero_based;
  Convention convention = Convention::set_based;
  std::vector<MeasureBlock> measures;
  std::optional<CorrelationMethod> correlation_method;
  // correlations[i][j]; nullopt where undefined (constant scores).
  std::vector<std::vector<std::optional<double>>> correlations;
  Json diagnostics = Json::object();
};

ReportDocument cmd_compute(const RunConfig& config);
Json cmd_check(const RunConfig& config);
// Writes <dataset_dir>/<name>.edgelist and returns its path.
std::string cmd_dataset(const std::string& name, const std::string& dir);

Json to_json(const ReportDocument& doc);
void write_csv(std::ostream& out, const ReportDocument& doc);
void write_table(std::ostream& out, const ReportDocument& doc);
void write_report(std::ostream& out, const ReportDocument& doc, OutputFormat format);

int exit_code_for(const std::exception& e);
// Machine-readable error, including the F-connectivity witness when present.
Json error_document(const std::exception& e, Indexing indexing = Indexing::zero_based);

}  // namespace sgec::cli

#endif  // SGEC_TOOLS_REPORT_HPP
