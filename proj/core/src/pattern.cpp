#include "sgec/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <optional>
#include <sstream>

#include "sgec/error.hpp"

namespace sgec {
namespace {

bool template_connected(std::size_t k, const std::vector<Edge>& edges) {
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t merges = 0;
  for (const Edge& e : edges) {
    auto a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      ++merges;
    }
  }
  return merges + 1 == k;
}

std::size_t parse_parameter(std::string_view token, std::string_view prefix, std::size_t min) {
  auto digits = token.substr(prefix.size());
  std::size_t r = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), r);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || r < min) {
    throw Error(ErrorKind::invalid_argument,
                "malformed pattern parameter in '" + std::string(token) + "' (need integer >= " +
                    std::to_string(min) + ")");
  }
  return r;
}

std::vector<Edge> path_edges(std::size_t k) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return e;
}

std::vector<Edge> complete_edges(std::size_t k) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = i + 1; j < k; ++j) e.emplace_back(i, j);
  return e;
}

}  // namespace

Pattern::Pattern(std::size_t k, std::vector<Edge> edges, std::string name)
    : k_(k), edges_(std::move(edges)), name_(std::move(name)) {
  if (k_ < 2) throw Error(ErrorKind::invalid_argument, "pattern needs at least 2 vertices");
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw Error(ErrorKind::invalid_argument, "pattern edge is a self-loop");
    if (e.v >= k_) {
      throw Error(ErrorKind::invalid_argument,
                  "pattern edge index " + std::to_string(e.v) + " >= k = " + std::to_string(k_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error(ErrorKind::invalid_argument, "duplicate pattern edge");
  }
  if (!template_connected(k_, edges_)) {
    throw Error(ErrorKind::invalid_argument, "pattern template is disconnected");
  }
}

Pattern builtin_pattern(std::string_view token) {
  if (token == "p1" || token == "k2") return Pattern(2, path_edges(2), std::string(token));
  if (token == "p2") return Pattern(3, path_edges(3), "p2");
  if (token == "p3") return Pattern(4, path_edges(4), "p3");
  if (token == "k3") return Pattern(3, complete_edges(3), "k3");
  if (token == "k4") return Pattern(4, complete_edges(4), "k4");
  if (token.starts_with("star-")) {
    std::size_t r = parse_parameter(token, "star-", 2);
    std::vector<Edge> e;
    for (Vertex leaf = 1; leaf <= r; ++leaf) e.emplace_back(0, leaf);
    return Pattern(r + 1, std::move(e), std::string(token));
  }
  if (token.starts_with("cycle-")) {
    std::size_t r = parse_parameter(token, "cycle-", 3);
    auto e = path_edges(r);
    e.emplace_back(0, static_cast<Vertex>(r - 1));
    return Pattern(r, std::move(e), std::string(token));
  }
  throw Error(ErrorKind::invalid_argument, "unknown pattern '" + std::string(token) + "'");
}

std::vector<std::string> builtin_pattern_tokens() {
  return {"p1", "k2", "p2", "p3", "k3", "k4", "star-r", "cycle-r"};
}

Pattern parse_pattern(std::istream& in, std::string name) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> k;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<long long> values;
    long long v = 0;
    while (fields >> v) values.push_back(v);
    if (!fields.eof()) throw ParseError("expected integers", line_no);
    if (values.empty()) continue;
    if (!k) {
      if (values.size() != 1 || values[0] < 0) throw ParseError("first line must hold k", line_no);
      k = static_cast<std::size_t>(values[0]);
      continue;
    }
    if (values.size() != 2) throw ParseError("expected a template edge 'a b'", line_no);
    if (values[0] < 0 || values[1] < 0) throw ParseError("negative template index", line_no);
    if (static_cast<std::size_t>(std::max(values[0], values[1])) >= *k) {
      throw ParseError("template edge index >= k", line_no);
    }
    edges.emplace_back(static_cast<Vertex>(values[0]), static_cast<Vertex>(values[1]));
  }
  if (!k) throw ParseError("empty pattern");
  try {
    return Pattern(*k, std::move(edges), std::move(name));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

Pattern parse_pattern(const std::string& text, std::string name) {
  std::istringstream in(text);
  return parse_pattern(in, std::move(name));
}

std::uint64_t OccurrenceMap::find(std::span<const Vertex> sorted_set) const {
  if (sorted_set.size() != k_ || empty()) return 0;
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto s = set(mid);
    if (std::lexicographical_compare(s.begin(), s.end(), sorted_set.begin(), sorted_set.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < size() && std::ranges::equal(set(lo), sorted_set)) return multiplicity_[lo];
  return 0;
}

std::uint64_t OccurrenceMap::total_multiplicity() const noexcept {
  return std::accumulate(multiplicity_.begin(), multiplicity_.end(), std::uint64_t{0});
}

std::vector<std::uint64_t> OccurrenceMap::per_vertex_totals(std::size_t n) const {
  std::vector<std::uint64_t> totals(n, 0);
  for (std::size_t i = 0; i < size(); ++i) {
    for (Vertex v : set(i)) {
      if (v < n) totals[v] += multiplicity_[i];
    }
  }
  return totals;
}

void OccurrenceMap::add(std::span<const Vertex> sorted_set, std::uint64_t multiplicity) {
  if (sorted_set.size() != k_) throw Error(ErrorKind::invalid_argument, "occurrence set size != k");
  if (multiplicity == 0) return;
  vertices_.insert(vertices_.end(), sorted_set.begin(), sorted_set.end());
  multiplicity_.push_back(multiplicity);
}

void OccurrenceMap::set_covered_edges(std::vector<Edge> covered) {
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  covered_ = std::move(covered);
}

void OccurrenceMap::finalize() {
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto sa = set(a), sb = set(b);
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
  });
  std::vector<Vertex> vertices;
  std::vector<std::uint64_t> mult;
  vertices.reserve(vertices_.size());
  mult.reserve(size());
  for (std::size_t i : order) {
    auto s = set(i);
    if (!mult.empty() && std::equal(s.begin(), s.end(), vertices.end() - static_cast<std::ptrdiff_t>(k_))) {
      throw Error(ErrorKind::invalid_argument, "duplicate occurrence set");
    }
    vertices.insert(vertices.end(), s.begin(), s.end());
    mult.push_back(multiplicity_[i]);
  }
  vertices_ = std::move(vertices);
  multiplicity_ = std::move(mult);
}

}  // namespace sgec
