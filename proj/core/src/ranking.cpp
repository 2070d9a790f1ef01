#include <algorithm>
#include <cmath>
#include <numeric>

#include "sgec/centrality.hpp"

namespace sgec {

std::vector<std::vector<Vertex>> Ranking::ties() const {
  std::vector<std::vector<Vertex>> out;
  for (const auto& g : groups) {
    if (g.size() > 1) out.push_back(g);
  }
  return out;
}

Ranking ranking(std::span<const double> scores, double tie_tolerance) {
  std::vector<Vertex> idx(scores.size());
  std::iota(idx.begin(), idx.end(), Vertex{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](Vertex a, Vertex b) { return scores[a] > scores[b]; });
  Ranking r;
  for (std::size_t i = 0; i < idx.size();) {
    const double top = scores[idx[i]];
    std::size_t j = i + 1;
    while (j < idx.size() && top - scores[idx[j]] <= tie_tolerance) ++j;
    std::vector<Vertex> group(idx.begin() + static_cast<std::ptrdiff_t>(i),
                              idx.begin() + static_cast<std::ptrdiff_t>(j));
    std::sort(group.begin(), group.end());
    r.order.insert(r.order.end(), group.begin(), group.end());
    r.groups.push_back(std::move(group));
    i = j;
  }
  return r;
}

Ranking ranking(const CentralityVector& c, double tie_tolerance) {
  return ranking(c.scores, tie_tolerance);
}

std::vector<double> mid_ranks(std::span<const double> values) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i + 1;
    while (j < idx.size() && values[idx[j]] == values[idx[i]]) ++j;
    const double mean = 0.5 * static_cast<double>(i + 1 + j);  // mean of ranks i+1..j
    for (std::size_t p = i; p < j; ++p) ranks[idx[p]] = mean;
    i = j;
  }
  return ranks;
}

double correlate(std::span<const double> a, std::span<const double> b, CorrelationMethod method) {
  if (a.size() != b.size()) throw Error(ErrorKind::invalid_argument, "score vectors differ in length");
  if (a.size() < 2) throw Error(ErrorKind::invalid_argument, "correlation needs at least 2 values");
  if (method == CorrelationMethod::spearman) {
    auto ra = mid_ranks(a);
    auto rb = mid_ranks(b);
    return correlate(ra, rb, CorrelationMethod::pearson);
  }
  const double n = static_cast<double>(a.size());
  const double mean_a = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mean_b = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - mean_a;
    const double db = b[i] - mean_b;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) {
    throw Error(ErrorKind::invalid_argument, "correlation undefined for a constant vector");
  }
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

double correlate(const CentralityVector& a, const CentralityVector& b, CorrelationMethod method) {
  return correlate(a.scores, b.scores, method);
}

}  // namespace sgec
