#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "sgec/error.hpp"
#include "sgec/pattern.hpp"

namespace sgec {
namespace {

using PairMask = std::uint64_t;

// Bit index of the unordered position pair (a, b), a < b, among k positions.
constexpr std::size_t pair_bit(std::size_t a, std::size_t b, std::size_t k) {
  return a * k - a * (a + 1) / 2 + (b - a - 1);
}

struct LocalCount {
  std::uint64_t count = 0;
  PairMask used = 0;  // union of occurrence edge sets
};

// Search plan for mapping template vertices onto the positions of a k-set.
// Template vertices are placed in BFS order so each step after the first has
// at least one already-placed template neighbour to check against.
class MatchPlan {
 public:
  explicit MatchPlan(const Pattern& f) : k_(f.order()), edges_(f.edges()) {
    std::vector<std::vector<std::size_t>> adj(k_);
    for (const Edge& e : edges_) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    std::vector<std::size_t> step_of(k_, k_);
    order_.push_back(0);
    step_of[0] = 0;
    for (std::size_t head = 0; head < order_.size(); ++head) {
      for (std::size_t w : adj[order_[head]]) {
        if (step_of[w] == k_) {
          step_of[w] = order_.size();
          order_.push_back(w);
        }
      }
    }
    back_.resize(k_);
    for (std::size_t s = 0; s < k_; ++s) {
      for (std::size_t w : adj[order_[s]]) {
        if (step_of[w] < s) back_[s].push_back(step_of[w]);
      }
    }
  }

  // local_adj[p] has bit q set when positions p and q are adjacent in G.
  LocalCount count(std::span<const std::uint16_t> local_adj) const {
    std::vector<PairMask> images;
    std::array<std::size_t, kHardOrderLimit> placed{};  // position chosen at each step
    place(0, 0, placed, local_adj, images);
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    LocalCount out;
    out.count = images.size();
    for (PairMask m : images) out.used |= m;
    return out;
  }

  std::size_t num_edges() const noexcept { return edges_.size(); }

 private:
  void place(std::size_t step, std::uint16_t used_positions,
             std::array<std::size_t, kHardOrderLimit>& placed,
             std::span<const std::uint16_t> local_adj, std::vector<PairMask>& images) const {
    if (step == k_) {
      std::array<std::size_t, kHardOrderLimit> pos_of{};
      for (std::size_t s = 0; s < k_; ++s) pos_of[order_[s]] = placed[s];
      PairMask mask = 0;
      for (const Edge& e : edges_) {
        std::size_t a = pos_of[e.u], b = pos_of[e.v];
        if (a > b) std::swap(a, b);
        mask |= PairMask{1} << pair_bit(a, b, k_);
      }
      images.push_back(mask);
      return;
    }
    for (std::size_t p = 0; p < k_; ++p) {
      if (used_positions & (1u << p)) continue;
      bool ok = true;
      for (std::size_t prev : back_[step]) {
        if (!(local_adj[placed[prev]] & (1u << p))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      placed[step] = p;
      place(step + 1, static_cast<std::uint16_t>(used_positions | (1u << p)), placed, local_adj,
            images);
    }
  }

  std::size_t k_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> back_;
};

// Induced adjacency of a sorted set: per-position neighbour bits plus the
// pair mask used as a cache key.
struct LocalGraph {
  std::array<std::uint16_t, kHardOrderLimit> adj{};
  PairMask key = 0;
};

LocalGraph induced(const Graph& g, std::span<const Vertex> s) {
  LocalGraph lg;
  const std::size_t k = s.size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      if (g.has_edge(s[a], s[b])) {
        lg.adj[a] |= static_cast<std::uint16_t>(1u << b);
        lg.adj[b] |= static_cast<std::uint16_t>(1u << a);
        lg.key |= PairMask{1} << pair_bit(a, b, k);
      }
    }
  }
  return lg;
}

class SetCounter {
 public:
  explicit SetCounter(const Pattern& f) : plan_(f), k_(f.order()) {}

  LocalCount operator()(const Graph& g, std::span<const Vertex> s) {
    LocalGraph lg = induced(g, s);
    if (static_cast<std::size_t>(std::popcount(lg.key)) < plan_.num_edges()) return {};
    auto it = cache_.find(lg.key);
    if (it != cache_.end()) return it->second;
    LocalCount c = plan_.count(std::span<const std::uint16_t>(lg.adj.data(), k_));
    cache_.emplace(lg.key, c);
    return c;
  }

 private:
  MatchPlan plan_;
  std::size_t k_;
  std::unordered_map<PairMask, LocalCount> cache_;
};

void append_used_edges(std::span<const Vertex> s, PairMask used, std::vector<Edge>& out) {
  const std::size_t k = s.size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      if (used & (PairMask{1} << pair_bit(a, b, k))) out.emplace_back(s[a], s[b]);
    }
  }
}

std::vector<Vertex> checked_sorted_set(const Graph& g, std::span<const Vertex> set) {
  std::vector<Vertex> s(set.begin(), set.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw Error(ErrorKind::invalid_argument, "vertex set has repeated vertices");
  }
  if (!s.empty() && s.back() >= g.num_vertices()) {
    throw Error(ErrorKind::invalid_argument, "vertex set has out-of-range vertex");
  }
  return s;
}

}  // namespace

std::uint64_t count_on_set(const Graph& g, const Pattern& f, std::span<const Vertex> sorted_set) {
  if (sorted_set.size() != f.order()) {
    throw Error(ErrorKind::invalid_argument, "vertex set size differs from pattern order");
  }
  if (f.order() > kHardOrderLimit) {
    throw Error(ErrorKind::order_limit, "pattern order exceeds " + std::to_string(kHardOrderLimit));
  }
  auto s = checked_sorted_set(g, sorted_set);
  SetCounter counter(f);
  return counter(g, s).count;
}

void for_each_connected_set(const Graph& g, std::size_t k,
                            const std::function<void(std::span<const Vertex>)>& visit) {
  const std::size_t n = g.num_vertices();
  if (k == 0 || k > n) return;
  std::vector<Vertex> sub;
  std::vector<Vertex> sorted;
  // closed[u] > 0 iff u is in the closed neighbourhood of the current set.
  std::vector<std::uint32_t> closed(n, 0);
  auto mark = [&](Vertex v, int delta) {
    closed[v] += static_cast<std::uint32_t>(delta);
    for (Vertex u : g.neighbors(v)) closed[u] += static_cast<std::uint32_t>(delta);
  };

  // Anchored extension: every set is produced once, from its minimum vertex.
  std::function<void(std::vector<Vertex>, Vertex)> extend = [&](std::vector<Vertex> ext,
                                                                Vertex anchor) {
    if (sub.size() == k) {
      sorted = sub;
      std::sort(sorted.begin(), sorted.end());
      visit(sorted);
      return;
    }
    while (!ext.empty()) {
      Vertex w = ext.back();
      ext.pop_back();
      std::vector<Vertex> next = ext;
      for (Vertex u : g.neighbors(w)) {
        if (u > anchor && closed[u] == 0) next.push_back(u);
      }
      sub.push_back(w);
      mark(w, 1);
      extend(std::move(next), anchor);
      mark(w, -1);
      sub.pop_back();
    }
  };

  for (Vertex v = 0; v < n; ++v) {
    sub.assign(1, v);
    mark(v, 1);
    std::vector<Vertex> ext;
    for (Vertex u : g.neighbors(v)) {
      if (u > v) ext.push_back(u);
    }
    extend(std::move(ext), v);
    mark(v, -1);
  }
}

OccurrenceMap enumerate_occurrences(const Graph& g, const Pattern& f,
                                    const EnumerationOptions& options) {
  if (options.max_order > kHardOrderLimit) {
    throw Error(ErrorKind::invalid_argument,
                "max_order above the supported limit of " + std::to_string(kHardOrderLimit));
  }
  if (f.order() > options.max_order) {
    throw Error(ErrorKind::order_limit, "pattern order " + std::to_string(f.order()) +
                                            " exceeds the configured limit of " +
                                            std::to_string(options.max_order));
  }
  OccurrenceMap occ(f.order());
  SetCounter counter(f);
  std::vector<Edge> used;
  for_each_connected_set(g, f.order(), [&](std::span<const Vertex> s) {
    LocalCount c = counter(g, s);
    if (c.count == 0) return;
    occ.add(s, c.count);
    append_used_edges(s, c.used, used);
  });
  occ.finalize();
  occ.set_covered_edges(std::move(used));
  return occ;
}

std::vector<Edge> covered_edges(const Graph& g, const OccurrenceMap& occ, const Pattern& f) {
  if (occ.order() != f.order()) {
    throw Error(ErrorKind::invalid_argument, "occurrence map order differs from pattern order");
  }
  SetCounter counter(f);
  std::vector<Edge> used;
  for (std::size_t i = 0; i < occ.size(); ++i) {
    append_used_edges(occ.set(i), counter(g, occ.set(i)).used, used);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  return used;
}

FConnectivity is_f_connected(const Graph& g, const OccurrenceMap& occ) {
  const std::size_t n = g.num_vertices();
  FConnectivity out;
  const auto& covered = occ.covered_edges();
  std::set_difference(g.edges().begin(), g.edges().end(), covered.begin(), covered.end(),
                      std::back_inserter(out.uncovered_edges));

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : covered) {
    auto a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> slot(n, n);
  for (Vertex v = 0; v < n; ++v) {
    auto r = find(v);
    if (slot[r] == n) {
      slot[r] = out.components.size();
      out.components.emplace_back();
    }
    out.components[slot[r]].push_back(v);
  }
  out.connected = n > 0 && out.components.size() == 1;
  return out;
}

FConnectivity is_f_connected(const Graph& g, const Pattern& f, const EnumerationOptions& options) {
  return is_f_connected(g, enumerate_occurrences(g, f, options));
}

}  // namespace sgec
