#include <Eigen/Dense>
#include <cmath>
#include <queue>

#include "sgec/centrality.hpp"

namespace sgec {

// Brandes accumulation: one BFS per source counts shortest paths, then
// dependencies are pushed back in order of non-increasing distance.
CentralityVector betweenness_centrality(const Graph& g) {
  const std::size_t n = g.num_vertices();
  CentralityVector c;
  c.measure = "bc";
  c.scores.assign(n, 0.0);

  std::vector<double> sigma(n), delta(n);
  std::vector<long long> dist(n);
  std::vector<Vertex> visit_order;
  visit_order.reserve(n);
  std::queue<Vertex> frontier;

  for (Vertex s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    visit_order.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      Vertex v = frontier.front();
      frontier.pop();
      visit_order.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          frontier.push(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    for (auto it = visit_order.rbegin(); it != visit_order.rend(); ++it) {
      Vertex w = *it;
      for (Vertex v : g.neighbors(w)) {
        if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) c.scores[w] += delta[w];
    }
  }
  // Each unordered pair was counted from both endpoints.
  for (double& v : c.scores) v *= 0.5;
  return c;
}

CentralityVector subgraph_centrality(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  CentralityVector c;
  c.measure = "sc";
  c.scores.assign(static_cast<std::size_t>(n), 0.0);
  if (n == 0) return c;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = 1.0;
    a(e.v, e.u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  const Eigen::VectorXd weights = solver.eigenvalues().array().exp();
  const Eigen::MatrixXd& q = solver.eigenvectors();
  for (Eigen::Index u = 0; u < n; ++u) {
    c.scores[static_cast<std::size_t>(u)] = q.row(u).array().square().matrix().dot(weights);
  }
  return c;
}

}  // namespace sgec
