#ifndef SGEC_CENTRALITY_HPP
#define SGEC_CENTRALITY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgec/error.hpp"
#include "sgec/graph.hpp"
#include "sgec/pattern.hpp"
#include "sgec/spectral.hpp"
#include "sgec/tensor.hpp"

namespace sgec {

struct CentralityOptions {
  IterationOptions iteration;
  TensorOptions tensor;
};

struct CentralityVector {
  std::string measure;
  std::vector<double> scores;
  // Spectral measures only.
  std::optional<double> rho;
  std::optional<double> residual;
  std::size_t iterations = 0;
  bool converged = true;
  std::string pattern;
};

// A_F is reducible: carries the uncovered edges and the components of the
// covered-edge subgraph.
class NotFConnectedError : public Error {
 public:
  NotFConnectedError(std::string pattern, FConnectivity witness);
  const FConnectivity& witness() const noexcept { return witness_; }

 private:
  FConnectivity witness_;
};

CentralityVector ec_centrality(const Graph& g, const CentralityOptions& options = {});

// F-subgraph eigenvector centrality. Throws Error(disconnected_graph),
// Error(no_occurrences) or NotFConnectedError.
CentralityVector f_centrality(const Graph& g, const Pattern& f,
                              const CentralityOptions& options = {});

// (K2,F)-subgraph eigenvector centrality; exists on every connected graph.
CentralityVector mixed_centrality(const Graph& g, const Pattern& f,
                                  const CentralityOptions& options = {});

CentralityVector degree_centrality(const Graph& g);

// Unnormalized, over unordered pairs {s, t}.
CentralityVector betweenness_centrality(const Graph& g);

// diag(exp(A)) via symmetric eigendecomposition.
CentralityVector subgraph_centrality(const Graph& g);

struct Ranking {
  // Vertices by descending score; ties listed by ascending id.
  std::vector<Vertex> order;
  // Consecutive runs of `order` whose scores lie within the tie tolerance of
  // the run's top score. Singletons included.
  std::vector<std::vector<Vertex>> groups;

  std::vector<std::vector<Vertex>> ties() const;
};

inline constexpr double kDefaultTieTolerance = 1e-9;

Ranking ranking(std::span<const double> scores, double tie_tolerance = kDefaultTieTolerance);
Ranking ranking(const CentralityVector& c, double tie_tolerance = kDefaultTieTolerance);

enum class CorrelationMethod { pearson, spearman };

// Throws Error(invalid_argument) for mismatched lengths, n < 2, or a
// constant input.
double correlate(std::span<const double> a, std::span<const double> b, CorrelationMethod method);
double correlate(const CentralityVector& a, const CentralityVector& b, CorrelationMethod method);

// Average ranks (1-based) with ties sharing their mean rank.
std::vector<double> mid_ranks(std::span<const double> values);

}  // namespace sgec

#endif  // SGEC_CENTRALITY_HPP
