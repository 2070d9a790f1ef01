#ifndef SGEC_TENSOR_HPP
#define SGEC_TENSOR_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "sgec/graph.hpp"
#include "sgec/pattern.hpp"

namespace sgec {

// How the F part of a tensor is contracted with x.
//
// set_based:     (A x^{k-1})_i = sum over stored sets S containing i of
//                m(S) * prod_{j in S, j != i} x_j
// ordered_tuple: the same sum taken over every ordered tuple (i, i2, ..., ik),
//                i.e. each set contributes (k-1)! times.
//
// The K2 part of a mixed tensor is unaffected: its tuples (i, j, i, ..., i)
// are stored once per neighbour j under either convention.
enum class Convention { set_based, ordered_tuple };

const char* to_string(Convention c) noexcept;

struct TensorOptions {
  Convention convention = Convention::set_based;
  EnumerationOptions enumeration;
};

// Symmetric order-k tensor A_F. Storage is the occurrence map itself.
class SubgraphTensor {
 public:
  SubgraphTensor(std::size_t dimension, OccurrenceMap occ,
                 Convention convention = Convention::set_based);

  std::size_t order() const noexcept { return occ_.order(); }
  std::size_t dimension() const noexcept { return n_; }
  Convention convention() const noexcept { return convention_; }
  const OccurrenceMap& occurrences() const noexcept { return occ_; }
  bool is_zero() const noexcept { return occ_.empty(); }

  // Factor applied to every stored multiplicity during apply().
  double set_weight() const noexcept { return weight_; }

  // out = A x^{k-1}. Throws on dimension mismatch.
  void apply(std::span<const double> x, std::span<double> out) const;

 private:
  std::size_t n_;
  OccurrenceMap occ_;
  Convention convention_;
  double weight_;
};

// Order-k tensor A_{K2,F}: entry 1 on (i, j, i, ..., i) for j in N(i), and
// the F-part entries on tuples of distinct indices. Requires k >= 3.
class MixedTensor {
 public:
  MixedTensor(Graph g, OccurrenceMap occ, Convention convention = Convention::set_based);

  std::size_t order() const noexcept { return f_part_.order(); }
  std::size_t dimension() const noexcept { return f_part_.dimension(); }
  Convention convention() const noexcept { return f_part_.convention(); }
  const Graph& graph() const noexcept { return graph_; }
  const SubgraphTensor& f_part() const noexcept { return f_part_; }
  bool is_zero() const noexcept { return graph_.num_edges() == 0 && f_part_.is_zero(); }

  // out_i = x_i^{k-2} * sum_{j in N(i)} x_j + (A_F x^{k-1})_i
  void apply(std::span<const double> x, std::span<double> out) const;

 private:
  Graph graph_;
  SubgraphTensor f_part_;
};

SubgraphTensor build_subgraph_tensor(const Graph& g, const Pattern& f,
                                     const TensorOptions& options = {});
MixedTensor build_mixed_tensor(const Graph& g, const Pattern& f,
                               const TensorOptions& options = {});

std::vector<double> apply(const SubgraphTensor& t, std::span<const double> x);
std::vector<double> apply(const MixedTensor& t, std::span<const double> x);

// Associated digraph D_A in CSR form; no self-arcs.
class Digraph {
 public:
  Digraph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> arcs);

  std::size_t num_vertices() const noexcept { return offsets_.size() - 1; }
  std::size_t num_arcs() const noexcept { return targets_.size(); }
  std::span<const Vertex> successors(Vertex v) const {
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  bool has_arc(Vertex from, Vertex to) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

Digraph associated_digraph(const SubgraphTensor& t);
Digraph associated_digraph(const MixedTensor& t);

// Strongly connected components (Tarjan). Each component is sorted; the list
// is ordered by smallest member.
std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& d);

struct Irreducibility {
  bool weakly_irreducible = false;
  std::vector<std::vector<Vertex>> components;
};

Irreducibility is_weakly_irreducible(const SubgraphTensor& t);
Irreducibility is_weakly_irreducible(const MixedTensor& t);
Irreducibility is_strongly_connected(const Digraph& d);

// One line per stored set: "i1 i2 ... ik  multiplicity" (0-based ids).
void write_tensor(std::ostream& out, const SubgraphTensor& t);

}  // namespace sgec

#endif  // SGEC_TENSOR_HPP
