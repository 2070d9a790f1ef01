#ifndef SGEC_SPECTRAL_HPP
#define SGEC_SPECTRAL_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "sgec/error.hpp"
#include "sgec/graph.hpp"
#include "sgec/tensor.hpp"

namespace sgec {

struct IterationTrace {
  std::size_t iteration;
  double lower;
  double upper;
};

struct IterationOptions {
  // Relative bracket gap (upper - lower) / lower at which iteration stops.
  double tolerance = 1e-10;
  std::size_t max_iterations = 100000;
  // Positive start vector; uniform 1/sqrt(n) when empty.
  std::vector<double> initial;
  // Iterate on B = A + I. Turning this off is only safe for primitive tensors.
  bool shift = true;
  // A result only counts as converged once ||A x^{k-1} - rho x^{[k-1]}||_inf
  // is at or below this bound as well.
  double residual_tolerance = 1e-8;
  std::function<void(const IterationTrace&)> trace;
};

struct SpectralResult {
  double rho = 0.0;
  std::vector<double> x;  // unit 2-norm
  std::size_t iterations = 0;
  double lower = 0.0;  // final bracket on rho(B)
  double upper = 0.0;
  bool converged = false;
  double residual_inf = 0.0;
  // Set when some component of x fell below 1e-100, a sign of reducibility.
  bool near_zero_component = false;
};

class NotConvergedError : public Error {
 public:
  explicit NotConvergedError(SpectralResult partial);
  const SpectralResult& result() const noexcept { return result_; }

 private:
  SpectralResult result_;
};

// Shifted higher-order power method bracketing rho(A + I) between
// min_i y_i / x_i^{k-1} and max_i y_i / x_i^{k-1}, with
// x <- normalize(y^{[1/(k-1)]}). Returns rho(A) = midpoint - 1.
// Throws Error(zero_tensor) for a zero tensor and NotConvergedError when the
// bracket is still open after max_iterations.
SpectralResult zqw_iterate(const SubgraphTensor& t, const IterationOptions& options = {});
SpectralResult zqw_iterate(const MixedTensor& t, const IterationOptions& options = {});

double residual(const SubgraphTensor& t, double rho, std::span<const double> x);
double residual(const MixedTensor& t, double rho, std::span<const double> x);

// Classic eigenvector centrality: zqw_iterate on the K2 tensor (adjacency).
// Throws Error(disconnected_graph) unless g is connected with n >= 2.
SpectralResult eigenvector_centrality(const Graph& g, const IterationOptions& options = {});

}  // namespace sgec

#endif  // SGEC_SPECTRAL_HPP
