#ifndef SGEC_PATTERN_HPP
#define SGEC_PATTERN_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sgec/graph.hpp"

namespace sgec {

// Connected template graph F on vertices 0..k-1.
class Pattern {
 public:
  // Throws sgec::Error(invalid_argument) when k < 2, an index is >= k, a
  // template edge is a self-loop or repeated, or the template is disconnected.
  Pattern(std::size_t k, std::vector<Edge> edges, std::string name = {});

  std::size_t order() const noexcept { return k_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::size_t k_;
  std::vector<Edge> edges_;
  std::string name_;
};

// p1|k2, p2, p3, k3, k4, star-r (r >= 2), cycle-r (r >= 3).
Pattern builtin_pattern(std::string_view token);
std::vector<std::string> builtin_pattern_tokens();

// First line k, then one template edge "a b" (0-based) per line.
Pattern parse_pattern(std::istream& in, std::string name = {});
Pattern parse_pattern(const std::string& text, std::string name = {});

// Occurrences of F grouped by vertex set. Entries are sorted
// lexicographically by vertex set; every multiplicity is >= 1.
class OccurrenceMap {
 public:
  OccurrenceMap() = default;
  explicit OccurrenceMap(std::size_t k) : k_(k) {}

  std::size_t order() const noexcept { return k_; }
  std::size_t size() const noexcept { return multiplicity_.size(); }
  bool empty() const noexcept { return multiplicity_.empty(); }

  std::span<const Vertex> set(std::size_t i) const {
    return {vertices_.data() + i * k_, k_};
  }
  std::uint64_t multiplicity(std::size_t i) const { return multiplicity_[i]; }

  // Multiplicity of a sorted vertex set, 0 when absent.
  std::uint64_t find(std::span<const Vertex> sorted_set) const;

  std::uint64_t total_multiplicity() const noexcept;

  // Sum of multiplicities over the sets containing each vertex.
  std::vector<std::uint64_t> per_vertex_totals(std::size_t n) const;

  // Edges of G used by at least one occurrence, sorted.
  const std::vector<Edge>& covered_edges() const noexcept { return covered_; }

  // Appends an entry; call finalize() once all entries are in.
  void add(std::span<const Vertex> sorted_set, std::uint64_t multiplicity);
  void set_covered_edges(std::vector<Edge> covered);
  void finalize();

 private:
  std::size_t k_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<std::uint64_t> multiplicity_;
  std::vector<Edge> covered_;
};

struct EnumerationOptions {
  // Patterns above this order are rejected as intractable.
  std::size_t max_order = 8;
};

// Largest max_order accepted by enumerate_occurrences.
inline constexpr std::size_t kHardOrderLimit = 11;

// Number of distinct edge sets on exactly `sorted_set` that form a copy of f.
std::uint64_t count_on_set(const Graph& g, const Pattern& f, std::span<const Vertex> sorted_set);

// Visits each vertex set S with G[S] connected and |S| = k exactly once.
// Sets are passed sorted.
void for_each_connected_set(const Graph& g, std::size_t k,
                            const std::function<void(std::span<const Vertex>)>& visit);

OccurrenceMap enumerate_occurrences(const Graph& g, const Pattern& f,
                                    const EnumerationOptions& options = {});

std::vector<Edge> covered_edges(const Graph& g, const OccurrenceMap& occ, const Pattern& f);

struct FConnectivity {
  bool connected = false;
  std::vector<Edge> uncovered_edges;
  // Components of the spanning subgraph (V(G), covered edges), each sorted.
  std::vector<std::vector<Vertex>> components;
};

FConnectivity is_f_connected(const Graph& g, const OccurrenceMap& occ);
FConnectivity is_f_connected(const Graph& g, const Pattern& f,
                             const EnumerationOptions& options = {});

}  // namespace sgec

#endif  // SGEC_PATTERN_HPP
