#include "sgec/tensor.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>

#include "sgec/error.hpp"

namespace sgec {
namespace {

double factorial(std::size_t m) {
  double f = 1.0;
  for (std::size_t i = 2; i <= m; ++i) f *= static_cast<double>(i);
  return f;
}

void check_dims(std::size_t n, std::span<const double> x, std::span<double> out) {
  if (x.size() != n || out.size() != n) {
    throw Error(ErrorKind::invalid_argument,
                "dimension mismatch: tensor has dimension " + std::to_string(n) +
                    ", vectors have " + std::to_string(x.size()) + " and " +
                    std::to_string(out.size()));
  }
}

void add_set_arcs(const OccurrenceMap& occ, std::vector<std::pair<Vertex, Vertex>>& arcs) {
  for (std::size_t s = 0; s < occ.size(); ++s) {
    auto set = occ.set(s);
    for (Vertex a : set)
      for (Vertex b : set)
        if (a != b) arcs.emplace_back(a, b);
  }
}

}  // namespace

const char* to_string(Convention c) noexcept {
  return c == Convention::set_based ? "set" : "ordered";
}

SubgraphTensor::SubgraphTensor(std::size_t dimension, OccurrenceMap occ, Convention convention)
    : n_(dimension), occ_(std::move(occ)), convention_(convention) {
  if (occ_.order() < 2) throw Error(ErrorKind::invalid_argument, "tensor order must be >= 2");
  for (std::size_t s = 0; s < occ_.size(); ++s) {
    if (occ_.set(s).back() >= n_) {
      throw Error(ErrorKind::invalid_argument, "occurrence set exceeds tensor dimension");
    }
  }
  weight_ = convention_ == Convention::ordered_tuple ? factorial(occ_.order() - 1) : 1.0;
}

void SubgraphTensor::apply(std::span<const double> x, std::span<double> out) const {
  check_dims(n_, x, out);
  std::fill(out.begin(), out.end(), 0.0);
  const std::size_t k = order();
  std::array<double, kHardOrderLimit + 1> prefix{};
  // Prefix/suffix products give prod_{j != i} x_j without dividing by x_i.
  for (std::size_t s = 0; s < occ_.size(); ++s) {
    auto set = occ_.set(s);
    const double m = weight_ * static_cast<double>(occ_.multiplicity(s));
    prefix[0] = 1.0;
    for (std::size_t p = 0; p < k; ++p) prefix[p + 1] = prefix[p] * x[set[p]];
    double suffix = 1.0;
    for (std::size_t p = k; p-- > 0;) {
      out[set[p]] += m * prefix[p] * suffix;
      suffix *= x[set[p]];
    }
  }
}

MixedTensor::MixedTensor(Graph g, OccurrenceMap occ, Convention convention)
    : graph_(std::move(g)), f_part_(graph_.num_vertices(), std::move(occ), convention) {
  if (f_part_.order() < 3) {
    throw Error(ErrorKind::invalid_argument, "mixed tensor requires pattern order >= 3");
  }
}

void MixedTensor::apply(std::span<const double> x, std::span<double> out) const {
  f_part_.apply(x, out);
  const int power = static_cast<int>(order()) - 2;
  for (Vertex i = 0; i < dimension(); ++i) {
    double sum = 0.0;
    for (Vertex j : graph_.neighbors(i)) sum += x[j];
    out[i] += std::pow(x[i], power) * sum;
  }
}

SubgraphTensor build_subgraph_tensor(const Graph& g, const Pattern& f,
                                     const TensorOptions& options) {
  return SubgraphTensor(g.num_vertices(), enumerate_occurrences(g, f, options.enumeration),
                        options.convention);
}

MixedTensor build_mixed_tensor(const Graph& g, const Pattern& f, const TensorOptions& options) {
  if (f.order() < 3) {
    throw Error(ErrorKind::invalid_argument, "mixed tensor requires pattern order >= 3");
  }
  return MixedTensor(g, enumerate_occurrences(g, f, options.enumeration), options.convention);
}

std::vector<double> apply(const SubgraphTensor& t, std::span<const double> x) {
  std::vector<double> out(t.dimension());
  t.apply(x, out);
  return out;
}

std::vector<double> apply(const MixedTensor& t, std::span<const double> x) {
  std::vector<double> out(t.dimension());
  t.apply(x, out);
  return out;
}

Digraph::Digraph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> arcs) {
  std::erase_if(arcs, [](const auto& a) { return a.first == a.second; });
  for (const auto& [from, to] : arcs) {
    if (from >= n || to >= n) throw Error(ErrorKind::invalid_argument, "arc endpoint out of range");
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  offsets_.assign(n + 1, 0);
  for (const auto& a : arcs) ++offsets_[a.first + 1];
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  targets_.reserve(arcs.size());
  for (const auto& a : arcs) targets_.push_back(a.second);
}

bool Digraph::has_arc(Vertex from, Vertex to) const {
  if (from >= num_vertices()) return false;
  auto succ = successors(from);
  return std::binary_search(succ.begin(), succ.end(), to);
}

Digraph associated_digraph(const SubgraphTensor& t) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  add_set_arcs(t.occurrences(), arcs);
  return Digraph(t.dimension(), std::move(arcs));
}

Digraph associated_digraph(const MixedTensor& t) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  add_set_arcs(t.f_part().occurrences(), arcs);
  // (i, j, i, ..., i) with j in N(i) yields i -> j; the i -> i arcs are dropped.
  for (const Edge& e : t.graph().edges()) {
    arcs.emplace_back(e.u, e.v);
    arcs.emplace_back(e.v, e.u);
  }
  return Digraph(t.dimension(), std::move(arcs));
}

std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& d) {
  const std::size_t n = d.num_vertices();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> components;
  std::size_t counter = 0;

  // Iterative Tarjan: frame = (vertex, next successor position).
  std::vector<std::pair<Vertex, std::size_t>> call;
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      auto succ = d.successors(v);
      if (pos < succ.size()) {
        Vertex w = succ[pos++];
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      Vertex done = v;
      call.pop_back();
      if (!call.empty()) {
        Vertex parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != done);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

Irreducibility is_strongly_connected(const Digraph& d) {
  Irreducibility out;
  out.components = strongly_connected_components(d);
  out.weakly_irreducible = out.components.size() == 1;
  return out;
}

Irreducibility is_weakly_irreducible(const SubgraphTensor& t) {
  return is_strongly_connected(associated_digraph(t));
}

Irreducibility is_weakly_irreducible(const MixedTensor& t) {
  return is_strongly_connected(associated_digraph(t));
}

void write_tensor(std::ostream& out, const SubgraphTensor& t) {
  const auto& occ = t.occurrences();
  for (std::size_t s = 0; s < occ.size(); ++s) {
    auto set = occ.set(s);
    for (std::size_t p = 0; p < set.size(); ++p) out << (p ? " " : "") << set[p];
    out << "  " << occ.multiplicity(s) << '\n';
  }
}

}  // namespace sgec
