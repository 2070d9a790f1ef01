#include "sgec/centrality.hpp"

namespace sgec {
namespace {

std::string pattern_label(const Pattern& f) { return f.name().empty() ? "f" : f.name(); }

void require_connected(const Graph& g, const char* measure) {
  if (!is_connected(g)) {
    throw Error(ErrorKind::disconnected_graph, std::string(measure) + " needs a connected graph");
  }
}

CentralityVector from_spectral(std::string measure, std::string pattern, SpectralResult r) {
  CentralityVector c;
  c.measure = std::move(measure);
  c.pattern = std::move(pattern);
  c.scores = std::move(r.x);
  c.rho = r.rho;
  c.residual = r.residual_inf;
  c.iterations = r.iterations;
  c.converged = r.converged;
  return c;
}

std::string describe(const FConnectivity& w) {
  std::string s = std::to_string(w.uncovered_edges.size()) + " uncovered edge(s), " +
                  std::to_string(w.components.size()) + " component(s)";
  return s;
}

}  // namespace

NotFConnectedError::NotFConnectedError(std::string pattern, FConnectivity witness)
    : Error(ErrorKind::not_f_connected,
            "graph is not " + pattern + "-connected (" + describe(witness) +
                "); the subgraph tensor is reducible and the centrality does not exist"),
      witness_(std::move(witness)) {}

CentralityVector ec_centrality(const Graph& g, const CentralityOptions& options) {
  return from_spectral("ec", "k2", eigenvector_centrality(g, options.iteration));
}

CentralityVector f_centrality(const Graph& g, const Pattern& f, const CentralityOptions& options) {
  require_connected(g, "F-subgraph eigenvector centrality");
  SubgraphTensor t = build_subgraph_tensor(g, f, options.tensor);
  const std::string label = pattern_label(f);
  if (t.is_zero()) {
    throw Error(ErrorKind::no_occurrences, "graph contains no occurrence of pattern " + label);
  }
  if (!is_weakly_irreducible(t).weakly_irreducible) {
    throw NotFConnectedError(label, is_f_connected(g, t.occurrences()));
  }
  return from_spectral(label + "c", label, zqw_iterate(t, options.iteration));
}

CentralityVector mixed_centrality(const Graph& g, const Pattern& f,
                                  const CentralityOptions& options) {
  require_connected(g, "(K2,F)-subgraph eigenvector centrality");
  MixedTensor t = build_mixed_tensor(g, f, options.tensor);
  const std::string label = pattern_label(f);
  return from_spectral("k2" + label + "c", label, zqw_iterate(t, options.iteration));
}

CentralityVector degree_centrality(const Graph& g) {
  CentralityVector c;
  c.measure = "dc";
  c.scores.resize(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) c.scores[v] = static_cast<double>(g.degree(v));
  return c;
}

}  // namespace sgec
