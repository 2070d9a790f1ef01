#include "sgec/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "sgec/error.hpp"

namespace sgec {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::order_limit: return "order_limit";
    case ErrorKind::disconnected_graph: return "disconnected_graph";
    case ErrorKind::no_occurrences: return "no_occurrences";
    case ErrorKind::not_f_connected: return "not_f_connected";
    case ErrorKind::zero_tensor: return "zero_tensor";
    case ErrorKind::not_converged: return "not_converged";
    case ErrorKind::unknown_dataset: return "unknown_dataset";
  }
  return "unknown";
}

ParseError::ParseError(const std::string& what, std::size_t line)
    : Error(ErrorKind::parse, line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

Graph::Graph(std::size_t num_vertices, std::span<const Edge> edges, Indexing external_indexing)
    : indexing_(external_indexing) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw Error(ErrorKind::invalid_argument,
                  "self-loop on vertex " + std::to_string(e.u));
    }
    if (e.v >= num_vertices) {
      throw Error(ErrorKind::invalid_argument,
                  "edge endpoint " + std::to_string(e.v) + " out of range for " +
                      std::to_string(num_vertices) + " vertices");
    }
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  auto last = std::unique(edges_.begin(), edges_.end());
  duplicates_ = static_cast<std::size_t>(edges_.end() - last);
  edges_.erase(last, edges_.end());

  offsets_.assign(num_vertices + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  targets_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    targets_[cursor[e.u]++] = e.v;
    targets_[cursor[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < num_vertices; ++v) {
    std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v >= num_vertices()) {
    throw Error(ErrorKind::invalid_argument, "vertex " + std::to_string(v) + " out of range");
  }
  return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t Graph::degree(Vertex v) const { return neighbors(v).size(); }

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= num_vertices() || b >= num_vertices() || a == b) return false;
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

void Graph::set_names(std::vector<std::string> names) {
  if (!names.empty() && names.size() != num_vertices()) {
    throw Error(ErrorKind::invalid_argument, "name count does not match vertex count");
  }
  names_ = std::move(names);
}

std::vector<std::size_t> component_labels(const Graph& g) {
  const std::size_t n = g.num_vertices();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(n, unset);
  std::size_t next = 0;
  std::queue<Vertex> frontier;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != unset) continue;
    label[s] = next;
    frontier.push(s);
    while (!frontier.empty()) {
      Vertex v = frontier.front();
      frontier.pop();
      for (Vertex w : g.neighbors(v)) {
        if (label[w] == unset) {
          label[w] = next;
          frontier.push(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return false;
  auto labels = component_labels(g);
  return std::all_of(labels.begin(), labels.end(), [](std::size_t c) { return c == 0; });
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.num_vertices()) {
    throw Error(ErrorKind::invalid_argument, "permutation size does not match vertex count");
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.num_vertices(), edges, g.external_indexing());
}

}  // namespace sgec
