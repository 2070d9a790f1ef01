#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "sgec/datasets.hpp"
#include "sgec/error.hpp"
#include "sgec/spectral.hpp"

using namespace sgec;
using namespace sgec::testing;

namespace {

std::vector<double> random_start(std::size_t n, Rng& rng) {
  std::uniform_real_distribution<double> u(0.01, 1.0);
  std::vector<double> x(n);
  for (auto& v : x) v = u(rng);
  return x;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

TEST_CASE("single edge") {
  SpectralResult r = eigenvector_centrality(path_graph(2));
  CHECK(r.converged);
  CHECK(r.rho == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.x[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.x[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("triangle tensors") {
  const double third = 1.0 / std::sqrt(3.0);
  SpectralResult p2 = zqw_iterate(build_subgraph_tensor(complete_graph(3), builtin_pattern("p2")));
  CHECK(p2.rho == doctest::Approx(3.0).epsilon(1e-12));
  for (double v : p2.x) CHECK(v == doctest::Approx(third).epsilon(1e-12));

  SpectralResult mixed = zqw_iterate(build_mixed_tensor(complete_graph(3), builtin_pattern("k3")));
  CHECK(mixed.rho == doctest::Approx(3.0).epsilon(1e-12));
  for (double v : mixed.x) CHECK(v == doctest::Approx(third).epsilon(1e-12));
}

TEST_CASE("order four tensor on K4") {
  // Uniform x = 1/2: every vertex sees 12 paths times (1/2)^3.
  SpectralResult r = zqw_iterate(build_subgraph_tensor(complete_graph(4), builtin_pattern("p3")));
  CHECK(r.rho == doctest::Approx(12.0).epsilon(1e-12));
  for (double v : r.x) CHECK(v == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("residual of a converged pair") {
  Graph g = karate_club();
  auto t = build_subgraph_tensor(g, builtin_pattern("p2"));
  SpectralResult r = zqw_iterate(t);
  CHECK(r.converged);
  CHECK(r.residual_inf <= 1e-8);
  CHECK(residual(t, r.rho, r.x) == doctest::Approx(r.residual_inf));
  CHECK(residual(t, r.rho + 1.0, r.x) > 1e-3);
  CHECK_FALSE(r.near_zero_component);
  double norm = 0.0;
  for (double v : r.x) norm += v * v;
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("bracket tightens monotonically") {
  Graph g = karate_club();
  for (const char* tok : {"k2", "p2"}) {
    std::vector<IterationTrace> steps;
    IterationOptions opt;
    opt.trace = [&](const IterationTrace& s) { steps.push_back(s); };
    SpectralResult r = zqw_iterate(build_subgraph_tensor(g, builtin_pattern(tok)), opt);
    REQUIRE(steps.size() == r.iterations);
    for (std::size_t i = 1; i < steps.size(); ++i) {
      const double slack = 1e-12 * steps[i].upper;
      CHECK(steps[i].lower >= steps[i - 1].lower - slack);
      CHECK(steps[i].upper <= steps[i - 1].upper + slack);
      CHECK(steps[i].lower <= steps[i].upper + slack);
    }
    CHECK(r.lower <= r.rho + 1.0);
    CHECK(r.rho + 1.0 <= r.upper);
  }
  auto mixed = build_mixed_tensor(g, builtin_pattern("k3"));
  double lower = 0.0, upper = std::numeric_limits<double>::infinity();
  IterationOptions opt;
  opt.trace = [&](const IterationTrace& s) {
    CHECK(s.lower >= lower - 1e-12 * s.upper);
    CHECK(s.upper <= upper + 1e-12 * s.upper);
    lower = s.lower;
    upper = s.upper;
  };
  zqw_iterate(mixed, opt);
}

TEST_CASE("shifted bracket sits exactly one above rho") {
  for (const Graph& g : {cycle_graph(5), cycle_graph(7), karate_club()}) {
    SpectralResult r = eigenvector_centrality(g);
    CHECK(std::abs(0.5 * (r.lower + r.upper) - r.rho - 1.0) <= 1e-10);
  }
  // Odd cycles are aperiodic, so the unshifted iteration also settles.
  IterationOptions plain;
  plain.shift = false;
  Rng rng(61);
  plain.initial = random_start(5, rng);
  SpectralResult r = eigenvector_centrality(cycle_graph(5), plain);
  CHECK(r.rho == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("unshifted iteration oscillates on bipartite graphs") {
  Rng rng(67);
  IterationOptions plain;
  plain.shift = false;
  plain.max_iterations = 2000;
  plain.initial = random_start(4, rng);
  CHECK_THROWS_AS(eigenvector_centrality(path_graph(4), plain), NotConvergedError);

  IterationOptions shifted;
  shifted.initial = plain.initial;
  SpectralResult r = eigenvector_centrality(path_graph(4), shifted);
  CHECK(r.rho == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-10));
}

TEST_CASE("zero tensor") {
  try {
    zqw_iterate(build_subgraph_tensor(path_graph(4), builtin_pattern("k3")));
    FAIL("expected zero_tensor");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::zero_tensor);
  }
}

TEST_CASE("iteration cap") {
  IterationOptions opt;
  opt.max_iterations = 1;
  try {
    eigenvector_centrality(karate_club(), opt);
    FAIL("expected not_converged");
  } catch (const NotConvergedError& e) {
    CHECK(e.kind() == ErrorKind::not_converged);
    CHECK(e.result().iterations == 1);
    CHECK_FALSE(e.result().converged);
    CHECK(e.result().lower < e.result().upper);
  }
}

TEST_CASE("invalid options") {
  IterationOptions opt;
  opt.initial = {1.0, 0.0};
  CHECK_THROWS_AS(eigenvector_centrality(path_graph(2), opt), Error);
  opt.initial = {1.0};
  CHECK_THROWS_AS(eigenvector_centrality(path_graph(2), opt), Error);
  IterationOptions bad_tol;
  bad_tol.tolerance = 0.0;
  CHECK_THROWS_AS(eigenvector_centrality(path_graph(2), bad_tol), Error);
}

TEST_CASE("eigenvector centrality needs a connected graph") {
  for (const Graph& g : {make_graph(4, {{0, 1}, {2, 3}}), Graph(1, std::vector<Edge>{})}) {
    try {
      eigenvector_centrality(g);
      FAIL("expected disconnected_graph");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::disconnected_graph);
    }
  }
}

TEST_CASE("property: K2 iteration matches a dense symmetric eigensolver") {
  Rng rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_connected_graph(2 + rng() % 29, 0.15, rng);
    SpectralResult r = eigenvector_centrality(g);
    DenseEigen oracle = dominant_eigenpair(g);
    CHECK(std::abs(r.rho - oracle.value) <= 1e-8 * oracle.value);
    CHECK(max_abs_diff(r.x, oracle.vector) <= 1e-6);
  }
}

TEST_CASE("property: Perron vector is independent of the start") {
  Rng rng(73);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = random_connected_graph(4 + rng() % 12, 0.3, rng);
    for (const char* tok : {"p2", "k3"}) {
      Pattern f = builtin_pattern(tok);
      if (!is_f_connected(g, f).connected) continue;
      auto t = build_subgraph_tensor(g, f);
      SpectralResult base = zqw_iterate(t);
      for (int start = 0; start < 3; ++start) {
        IterationOptions opt;
        opt.initial = random_start(g.num_vertices(), rng);
        SpectralResult other = zqw_iterate(t, opt);
        CHECK(other.rho == doctest::Approx(base.rho).epsilon(1e-9));
        CHECK(max_abs_diff(other.x, base.x) <= 1e-7);
      }
    }
    auto mixed = build_mixed_tensor(g, builtin_pattern("k3"));
    SpectralResult base = zqw_iterate(mixed);
    IterationOptions opt;
    opt.initial = random_start(g.num_vertices(), rng);
    SpectralResult other = zqw_iterate(mixed, opt);
    CHECK(other.rho == doctest::Approx(base.rho).epsilon(1e-9));
    CHECK(max_abs_diff(other.x, base.x) <= 1e-7);
  }
}

TEST_CASE("property: eigenpair satisfies the defining equation") {
  Rng rng(79);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_connected_graph(3 + rng() % 15, 0.25, rng);
    auto mixed = build_mixed_tensor(g, builtin_pattern("p2"));
    SpectralResult r = zqw_iterate(mixed);
    CHECK(residual(mixed, r.rho, r.x) <= 1e-8);
    for (double v : r.x) CHECK(v > 0.0);
  }
}
