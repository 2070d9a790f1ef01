#ifndef SGEC_GRAPH_HPP
#define SGEC_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace sgec {

using Vertex = std::uint32_t;

// Unordered vertex pair, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Indexing { zero_based, one_based };

// Simple undirected graph on vertices 0..n-1 with sorted CSR adjacency.
// Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Duplicates are collapsed (and counted); self-loops and out-of-range
  // endpoints throw sgec::Error(invalid_argument).
  Graph(std::size_t num_vertices, std::span<const Edge> edges,
        Indexing external_indexing = Indexing::zero_based);

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;
  bool has_edge(Vertex a, Vertex b) const;

  // Sorted lexicographically, u < v in every entry.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Number of repeated edges dropped while building the graph.
  std::size_t duplicate_edges() const noexcept { return duplicates_; }

  // External ids are internal ids shifted by the input's index base.
  Indexing external_indexing() const noexcept { return indexing_; }
  std::int64_t external_id(Vertex v) const noexcept {
    return static_cast<std::int64_t>(v) + (indexing_ == Indexing::one_based ? 1 : 0);
  }

  // Optional per-vertex names (Pajek vertex labels); empty when absent.
  const std::vector<std::string>& names() const noexcept { return names_; }
  void set_names(std::vector<std::string> names);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<Edge> edges_;
  std::vector<std::string> names_;
  std::size_t duplicates_ = 0;
  Indexing indexing_ = Indexing::zero_based;
};

// Edge list: one "a b" pair per line, '#' starts a comment. A comment of the
// form "# vertices N" fixes the vertex count (keeps trailing isolated vertices).
Graph parse_edge_list(std::istream& in, Indexing indexing);
Graph parse_edge_list(const std::string& text, Indexing indexing);

// Pajek subset: *Vertices N, optional vertex label lines, *Edges / *Arcs.
// Arcs are symmetrized. Pajek ids are 1-based.
Graph parse_pajek(std::istream& in);
Graph parse_pajek(const std::string& text);

void write_edge_list(std::ostream& out, const Graph& g, Indexing indexing);
void write_pajek(std::ostream& out, const Graph& g);

bool is_connected(const Graph& g);

// Component id per vertex, numbered in order of smallest member.
std::vector<std::size_t> component_labels(const Graph& g);

// Graph whose vertex perm[v] corresponds to vertex v of g.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace sgec

#endif  // SGEC_GRAPH_HPP
