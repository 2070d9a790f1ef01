#include "report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

namespace sgec::cli {
namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_builtin(const std::string& token) {
  try {
    builtin_pattern(token);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::string measure_name(const MeasureSpec& spec) {
  switch (spec.kind) {
    case MeasureKind::ec: return "ec";
    case MeasureKind::dc: return "dc";
    case MeasureKind::bc: return "bc";
    case MeasureKind::sc: return "sc";
    case MeasureKind::f: return (spec.pattern->name().empty() ? "f" : spec.pattern->name()) + "c";
    case MeasureKind::mixed:
      return "k2" + (spec.pattern->name().empty() ? "f" : spec.pattern->name()) + "c";
  }
  return "?";
}

Json ids(std::span<const Vertex> vs, Indexing indexing) {
  const std::int64_t base = indexing == Indexing::one_based ? 1 : 0;
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(static_cast<std::int64_t>(v) + base);
  return out;
}

Json edge_ids(const std::vector<Edge>& edges, Indexing indexing) {
  const std::int64_t base = indexing == Indexing::one_based ? 1 : 0;
  Json out = Json::array();
  for (const Edge& e : edges) {
    out.push_back({static_cast<std::int64_t>(e.u) + base, static_cast<std::int64_t>(e.v) + base});
  }
  return out;
}

Json groups_json(const std::vector<std::vector<Vertex>>& groups, Indexing indexing) {
  Json out = Json::array();
  for (const auto& g : groups) out.push_back(ids(g, indexing));
  return out;
}

Json witness_json(const FConnectivity& w, Indexing indexing) {
  return Json{{"f_connected", w.connected},
              {"uncovered_edges", edge_ids(w.uncovered_edges, indexing)},
              {"components", groups_json(w.components, indexing)}};
}

std::string full_precision(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  return out;
}

}  // namespace

void RunConfig::validate() const {
  if (graph.empty()) throw Error(ErrorKind::invalid_argument, "exactly one graph source is required");
  if (!(tolerance > 0.0)) throw Error(ErrorKind::invalid_argument, "tolerance must be > 0");
  if (max_iterations == 0) throw Error(ErrorKind::invalid_argument, "max iterations must be > 0");
}

Pattern resolve_pattern(const std::string& token) {
  if (token.empty()) throw Error(ErrorKind::invalid_argument, "a pattern is required");
  if (is_builtin(token)) return builtin_pattern(token);
  std::ifstream in(token);
  if (!in) {
    throw Error(ErrorKind::invalid_argument,
                "pattern '" + token + "' is neither a builtin nor a readable file");
  }
  return parse_pattern(in, std::filesystem::path(token).stem().string());
}

MeasureSpec parse_measure(const std::string& token, const std::string& default_pattern) {
  if (token == "ec") return {MeasureKind::ec, std::nullopt};
  if (token == "dc") return {MeasureKind::dc, std::nullopt};
  if (token == "bc") return {MeasureKind::bc, std::nullopt};
  if (token == "sc") return {MeasureKind::sc, std::nullopt};
  if (token == "f") return {MeasureKind::f, resolve_pattern(default_pattern)};
  if (token == "k2f") return {MeasureKind::mixed, resolve_pattern(default_pattern)};
  if (token.starts_with("f:")) return {MeasureKind::f, resolve_pattern(token.substr(2))};
  if (token.starts_with("k2f:")) return {MeasureKind::mixed, resolve_pattern(token.substr(4))};
  if (token.size() > 1 && token.back() == 'c') {
    std::string stem = token.substr(0, token.size() - 1);
    if (is_builtin(stem)) return {MeasureKind::f, builtin_pattern(stem)};
    if (stem.starts_with("k2") && is_builtin(stem.substr(2))) {
      return {MeasureKind::mixed, builtin_pattern(stem.substr(2))};
    }
  }
  throw Error(ErrorKind::invalid_argument, "unknown measure '" + token + "'");
}

Graph load_graph(const RunConfig& config) {
  namespace fs = std::filesystem;
  if (!fs::exists(config.graph)) {
    for (const auto& d : bundled_datasets()) {
      if (d.name == config.graph) return load_dataset(d.name);
    }
    if (config.graph == "sandi") return load_dataset("sandi");
    throw IoError("cannot open graph file '" + config.graph + "'");
  }
  std::ifstream in(config.graph);
  if (!in) throw IoError("cannot open graph file '" + config.graph + "'");
  if (config.format == GraphFormat::pajek) return parse_pajek(in);
  return parse_edge_list(in, config.one_based ? Indexing::one_based : Indexing::zero_based);
}

ReportDocument cmd_compute(const RunConfig& config) {
  config.validate();
  if (config.measures.empty()) throw Error(ErrorKind::invalid_argument, "no measures requested");
  Graph g = load_graph(config);

  std::vector<MeasureSpec> specs;
  for (const auto& token : config.measures) specs.push_back(parse_measure(token, config.pattern));

  std::unique_ptr<std::ofstream> trace;
  if (!config.trace_path.empty()) {
    trace = std::make_unique<std::ofstream>(open_output(config.trace_path));
    *trace << "measure,iteration,lower,upper\n";
  }

  ReportDocument doc;
  doc.n = g.num_vertices();
  doc.m = g.num_edges();
  doc.indexing = g.external_indexing();
  doc.convention = config.convention;
  doc.diagnostics["connected"] = is_connected(g);
  doc.diagnostics["duplicate_edges"] = g.duplicate_edges();
  Json per_measure = Json::object();

  for (const auto& spec : specs) {
    const std::string name = measure_name(spec);
    CentralityOptions opts;
    opts.iteration.tolerance = config.tolerance;
    opts.iteration.max_iterations = config.max_iterations;
    opts.tensor.convention = config.convention;
    if (trace) {
      opts.iteration.trace = [&, name](const IterationTrace& t) {
        *trace << name << ',' << t.iteration << ',' << full_precision(t.lower) << ','
               << full_precision(t.upper) << '\n';
      };
    }
    CentralityVector c;
    switch (spec.kind) {
      case MeasureKind::ec: c = ec_centrality(g, opts); break;
      case MeasureKind::dc: c = degree_centrality(g); break;
      case MeasureKind::bc: c = betweenness_centrality(g); break;
      case MeasureKind::sc: c = subgraph_centrality(g); break;
      case MeasureKind::f: c = f_centrality(g, *spec.pattern, opts); break;
      case MeasureKind::mixed: c = mixed_centrality(g, *spec.pattern, opts); break;
    }
    c.measure = name;
    if (spec.pattern) {
      auto occ = enumerate_occurrences(g, *spec.pattern);
      per_measure[name] = Json{{"pattern", spec.pattern->name()},
                               {"pattern_order", spec.pattern->order()},
                               {"occurrence_sets", occ.size()},
                               {"occurrence_total", occ.total_multiplicity()},
                               {"weakly_irreducible", true}};
    }
    Ranking r = ranking(c);
    doc.measures.push_back({std::move(c), std::move(r)});
  }
  doc.diagnostics["measures"] = per_measure;

  if (doc.measures.size() >= 2) {
    doc.correlation_method = config.correlation;
    const std::size_t k = doc.measures.size();
    doc.correlations.assign(k, std::vector<std::optional<double>>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        try {
          doc.correlations[i][j] =
              correlate(doc.measures[i].centrality, doc.measures[j].centrality, config.correlation);
        } catch (const Error&) {
          doc.correlations[i][j] = std::nullopt;
        }
      }
    }
  }
  return doc;
}

Json cmd_check(const RunConfig& config) {
  config.validate();
  Graph g = load_graph(config);
  Pattern f = resolve_pattern(config.pattern);
  const Indexing ix = g.external_indexing();

  TensorOptions topts;
  topts.convention = config.convention;
  SubgraphTensor t = build_subgraph_tensor(g, f, topts);
  const OccurrenceMap& occ = t.occurrences();
  FConnectivity fc = is_f_connected(g, occ);
  Irreducibility irr = is_weakly_irreducible(t);

  if (!config.dump_tensor_path.empty()) {
    auto out = open_output(config.dump_tensor_path);
    write_tensor(out, t);
  }

  Json per_vertex = Json::array();
  for (auto c : occ.per_vertex_totals(g.num_vertices())) per_vertex.push_back(c);

  Json doc;
  doc["graph"] = {{"n", g.num_vertices()}, {"m", g.num_edges()},
                  {"index_base", ix == Indexing::one_based ? 1 : 0}};
  doc["pattern"] = {{"name", f.name()}, {"k", f.order()}, {"edges", f.edges().size()}};
  doc["connected"] = is_connected(g);
  doc["occurrences"] = {{"sets", occ.size()},
                        {"total", occ.total_multiplicity()},
                        {"per_vertex", per_vertex}};
  doc["f_connectivity"] = witness_json(fc, ix);
  doc["tensor"] = {{"weakly_irreducible", irr.weakly_irreducible},
                   {"scc_count", irr.components.size()},
                   {"components", groups_json(irr.components, ix)}};
  if (f.order() >= 3) {
    MixedTensor mt(g, occ, config.convention);
    Irreducibility mixed = is_weakly_irreducible(mt);
    doc["mixed_tensor"] = {{"weakly_irreducible", mixed.weakly_irreducible},
                           {"scc_count", mixed.components.size()}};
  } else {
    doc["mixed_tensor"] = nullptr;
  }
  return doc;
}

std::string cmd_dataset(const std::string& name, const std::string& dir) {
  if (name.empty()) throw Error(ErrorKind::invalid_argument, "dataset name required");
  Graph g = load_dataset(name);
  const auto info = bundled_datasets();
  for (const auto& d : info) {
    if (d.name == name && (g.num_vertices() != d.vertices || g.num_edges() != d.edges)) {
      throw Error(ErrorKind::invalid_argument, "bundled dataset failed its size check");
    }
  }
  std::filesystem::path path = std::filesystem::path(dir) / (name + ".edgelist");
  std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  auto out = open_output(path.string());
  out << karate_club_edge_list();
  if (!out) throw IoError("failed writing " + path.string());
  return path.string();
}

Json to_json(const ReportDocument& doc) {
  Json j;
  j["graph"] = {{"n", doc.n}, {"m", doc.m},
                {"index_base", doc.indexing == Indexing::one_based ? 1 : 0}};
  j["convention"] = to_string(doc.convention);
  Json measures = Json::array();
  for (const auto& block : doc.measures) {
    const auto& c = block.centrality;
    Json mj;
    mj["name"] = c.measure;
    if (!c.pattern.empty()) mj["pattern"] = c.pattern;
    mj["rho"] = c.rho ? Json(*c.rho) : Json(nullptr);
    mj["residual"] = c.residual ? Json(*c.residual) : Json(nullptr);
    mj["converged"] = c.converged;
    mj["iterations"] = c.iterations;
    mj["scores"] = c.scores;
    mj["ranking"] = ids(block.ranking.order, doc.indexing);
    mj["ties"] = groups_json(block.ranking.ties(), doc.indexing);
    measures.push_back(std::move(mj));
  }
  j["measures"] = std::move(measures);
  Json corr = Json::object();
  if (doc.correlation_method) {
    corr["method"] = *doc.correlation_method == CorrelationMethod::pearson ? "pearson" : "spearman";
    Json names = Json::array();
    for (const auto& b : doc.measures) names.push_back(b.centrality.measure);
    corr["measures"] = std::move(names);
    Json matrix = Json::array();
    for (const auto& row : doc.correlations) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(v ? Json(*v) : Json(nullptr));
      matrix.push_back(std::move(r));
    }
    corr["matrix"] = std::move(matrix);
  }
  j["correlations"] = std::move(corr);
  j["diagnostics"] = doc.diagnostics;
  return j;
}

void write_csv(std::ostream& out, const ReportDocument& doc) {
  const std::int64_t base = doc.indexing == Indexing::one_based ? 1 : 0;
  out << "vertex";
  for (const auto& b : doc.measures) out << ',' << b.centrality.measure;
  out << '\n';
  for (std::size_t v = 0; v < doc.n; ++v) {
    out << static_cast<std::int64_t>(v) + base;
    for (const auto& b : doc.measures) out << ',' << full_precision(b.centrality.scores[v]);
    out << '\n';
  }
}

void write_table(std::ostream& out, const ReportDocument& doc) {
  const std::int64_t base = doc.indexing == Indexing::one_based ? 1 : 0;
  out << "graph: n=" << doc.n << " m=" << doc.m
      << "  contraction convention: " << to_string(doc.convention) << "\n\n";
  out << std::left << std::setw(10) << "measure" << std::setw(14) << "rho" << std::setw(12)
      << "iterations" << "top-10\n";
  for (const auto& b : doc.measures) {
    const auto& c = b.centrality;
    std::ostringstream rho;
    if (c.rho) rho << std::fixed << std::setprecision(6) << *c.rho;
    else rho << "-";
    out << std::setw(10) << c.measure << std::setw(14) << rho.str() << std::setw(12)
        << c.iterations;
    for (std::size_t i = 0; i < std::min<std::size_t>(10, b.ranking.order.size()); ++i) {
      out << (i ? " " : "") << static_cast<std::int64_t>(b.ranking.order[i]) + base;
    }
    out << '\n';
  }
  out << '\n' << std::setw(8) << "vertex";
  for (const auto& b : doc.measures) out << std::setw(12) << b.centrality.measure;
  out << '\n' << std::fixed << std::setprecision(4);
  for (std::size_t v = 0; v < doc.n; ++v) {
    out << std::setw(8) << static_cast<std::int64_t>(v) + base;
    for (const auto& b : doc.measures) out << std::setw(12) << b.centrality.scores[v];
    out << '\n';
  }
  out.unsetf(std::ios::fixed);
}

void write_report(std::ostream& out, const ReportDocument& doc, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: out << to_json(doc).dump(2) << '\n'; break;
    case OutputFormat::csv: write_csv(out, doc); break;
    case OutputFormat::table: write_table(out, doc); break;
  }
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const IoError*>(&e)) return kExitIo;
  const auto* err = dynamic_cast<const Error*>(&e);
  if (!err) return kExitUsage;
  switch (err->kind()) {
    case ErrorKind::parse: return kExitParse;
    case ErrorKind::disconnected_graph:
    case ErrorKind::no_occurrences:
    case ErrorKind::not_f_connected:
    case ErrorKind::zero_tensor: return kExitNoCentrality;
    case ErrorKind::not_converged: return kExitNotConverged;
    case ErrorKind::invalid_argument:
    case ErrorKind::order_limit:
    case ErrorKind::unknown_dataset: return kExitUsage;
  }
  return kExitUsage;
}

Json error_document(const std::exception& e, Indexing indexing) {
  Json j;
  const auto* err = dynamic_cast<const Error*>(&e);
  j["error"] = err ? to_string(err->kind()) : (dynamic_cast<const IoError*>(&e) ? "io" : "usage");
  j["message"] = e.what();
  j["exit_code"] = exit_code_for(e);
  if (const auto* nf = dynamic_cast<const NotFConnectedError*>(&e)) {
    j["witness"] = witness_json(nf->witness(), indexing);
  }
  if (const auto* nc = dynamic_cast<const NotConvergedError*>(&e)) {
    j["bracket"] = {nc->result().lower, nc->result().upper};
    j["iterations"] = nc->result().iterations;
  }
  return j;
}

}  // namespace sgec::cli
