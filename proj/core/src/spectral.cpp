#include "sgec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace sgec {
namespace {

double ipow(double base, std::size_t e) {
  double r = 1.0;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

void normalize(std::vector<double>& x) {
  double norm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
  for (double& v : x) v /= norm;
}

template <class Tensor>
double residual_impl(const Tensor& t, double rho, std::span<const double> x) {
  auto ax = apply(t, x);
  const std::size_t p = t.order() - 1;
  double worst = 0.0;
  for (std::size_t i = 0; i < ax.size(); ++i) {
    worst = std::max(worst, std::abs(ax[i] - rho * ipow(x[i], p)));
  }
  return worst;
}

template <class Tensor>
SpectralResult iterate(const Tensor& t, const IterationOptions& opt) {
  if (t.is_zero()) throw Error(ErrorKind::zero_tensor, "tensor has no nonzero entries");
  if (!(opt.tolerance > 0.0)) throw Error(ErrorKind::invalid_argument, "tolerance must be > 0");
  const std::size_t n = t.dimension();
  const std::size_t p = t.order() - 1;
  const double root = 1.0 / static_cast<double>(p);
  const double shift = opt.shift ? 1.0 : 0.0;

  std::vector<double> x;
  if (opt.initial.empty()) {
    x.assign(n, 1.0);
  } else {
    if (opt.initial.size() != n) {
      throw Error(ErrorKind::invalid_argument, "initial vector length differs from dimension");
    }
    if (std::any_of(opt.initial.begin(), opt.initial.end(), [](double v) { return !(v > 0.0); })) {
      throw Error(ErrorKind::invalid_argument, "initial vector must be strictly positive");
    }
    x = opt.initial;
  }
  normalize(x);

  std::vector<double> y(n);
  auto apply_shifted = [&] {
    t.apply(x, y);
    for (std::size_t i = 0; i < n; ++i) y[i] += shift * ipow(x[i], p);
  };
  apply_shifted();

  SpectralResult r;
  for (std::size_t it = 1; it <= opt.max_iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) x[i] = std::pow(y[i], root);
    normalize(x);
    apply_shifted();

    double lower = std::numeric_limits<double>::infinity();
    double upper = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] <= 0.0) continue;
      double ratio = y[i] / ipow(x[i], p);
      lower = std::min(lower, ratio);
      upper = std::max(upper, ratio);
    }
    r.iterations = it;
    r.lower = lower;
    r.upper = upper;
    if (opt.trace) opt.trace({it, lower, upper});

    const double scale = std::max(lower, std::numeric_limits<double>::min());
    if ((upper - lower) <= opt.tolerance * scale) {
      r.rho = 0.5 * (lower + upper) - shift;
      r.residual_inf = residual_impl(t, r.rho, x);
      if (r.residual_inf <= opt.residual_tolerance) {
        r.converged = true;
        break;
      }
    }
  }
  r.x = std::move(x);
  r.near_zero_component = std::any_of(r.x.begin(), r.x.end(), [](double v) { return v < 1e-100; });
  if (!r.converged) {
    r.rho = 0.5 * (r.lower + r.upper) - shift;
    r.residual_inf = residual_impl(t, r.rho, r.x);
    throw NotConvergedError(std::move(r));
  }
  return r;
}

}  // namespace

NotConvergedError::NotConvergedError(SpectralResult partial)
    : Error(ErrorKind::not_converged,
            "power iteration did not converge after " + std::to_string(partial.iterations) +
                " iterations (bracket [" + std::to_string(partial.lower) + ", " +
                std::to_string(partial.upper) + "])"),
      result_(std::move(partial)) {}

SpectralResult zqw_iterate(const SubgraphTensor& t, const IterationOptions& options) {
  return iterate(t, options);
}

SpectralResult zqw_iterate(const MixedTensor& t, const IterationOptions& options) {
  return iterate(t, options);
}

double residual(const SubgraphTensor& t, double rho, std::span<const double> x) {
  return residual_impl(t, rho, x);
}

double residual(const MixedTensor& t, double rho, std::span<const double> x) {
  return residual_impl(t, rho, x);
}

SpectralResult eigenvector_centrality(const Graph& g, const IterationOptions& options) {
  if (g.num_vertices() < 2 || !is_connected(g)) {
    throw Error(ErrorKind::disconnected_graph,
                "eigenvector centrality needs a connected graph with at least 2 vertices");
  }
  return zqw_iterate(build_subgraph_tensor(g, builtin_pattern("k2")), options);
}

}  // namespace sgec
