#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

#include "sgec/error.hpp"
#include "sgec/graph.hpp"

namespace sgec {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> to_integer(std::string_view tok) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// "# vertices N" header; returns N when the comment has that shape.
std::optional<long long> vertex_header(std::string_view comment) {
  auto toks = split_ws(comment);
  if (toks.size() != 2 || lower(toks[0]) != "vertices") return std::nullopt;
  return to_integer(toks[1]);
}

}  // namespace

Graph parse_edge_list(std::istream& in, Indexing indexing) {
  const long long base = indexing == Indexing::one_based ? 1 : 0;
  std::vector<Edge> edges;
  std::optional<long long> declared;
  long long max_id = -1;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) {
      if (auto n = vertex_header(trim(view.substr(hash + 1)))) {
        if (*n < 0) throw ParseError("negative vertex count", line_no);
        declared = *n;
      }
      view = view.substr(0, hash);
    }
    auto toks = split_ws(view);
    if (toks.empty()) continue;
    if (toks.size() != 2) throw ParseError("expected two vertex ids", line_no);
    auto a = to_integer(toks[0]);
    auto b = to_integer(toks[1]);
    if (!a || !b) throw ParseError("vertex ids must be integers", line_no);
    if (*a < base || *b < base) {
      throw ParseError(base == 1 ? "vertex ids must be >= 1 with one-based indexing"
                                 : "vertex ids must be >= 0",
                       line_no);
    }
    if (*a == *b) throw ParseError("self-loop on vertex " + std::to_string(*a), line_no);
    long long u = *a - base;
    long long v = *b - base;
    if (std::max(u, v) > static_cast<long long>(UINT32_MAX) - 1) {
      throw ParseError("vertex id too large", line_no);
    }
    max_id = std::max({max_id, u, v});
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (edges.empty() && !declared) throw ParseError("empty input");
  std::size_t n = static_cast<std::size_t>(max_id + 1);
  if (declared) {
    if (*declared < max_id + 1) {
      throw ParseError("vertex header declares " + std::to_string(*declared) +
                       " vertices but ids reach " + std::to_string(max_id + base));
    }
    n = static_cast<std::size_t>(*declared);
  }
  return Graph(n, edges, indexing);
}

Graph parse_edge_list(const std::string& text, Indexing indexing) {
  std::istringstream in(text);
  return parse_edge_list(in, indexing);
}

Graph parse_pajek(std::istream& in) {
  enum class Section { none, vertices, edges };
  Section section = Section::none;
  std::optional<std::size_t> n;
  std::vector<std::string> names;
  bool any_name = false;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '%') continue;
    if (view.front() == '*') {
      auto toks = split_ws(view);
      std::string head = lower(toks[0]);
      if (head == "*vertices") {
        if (toks.size() < 2) throw ParseError("*Vertices needs a count", line_no);
        auto count = to_integer(toks[1]);
        if (!count || *count < 0) throw ParseError("bad vertex count", line_no);
        n = static_cast<std::size_t>(*count);
        names.assign(*n, std::string());
        section = Section::vertices;
      } else if (head == "*edges" || head == "*arcs") {
        if (!n) throw ParseError("missing *Vertices header before " + std::string(toks[0]), line_no);
        section = Section::edges;
      } else {
        throw ParseError("unsupported Pajek section " + std::string(toks[0]), line_no);
      }
      continue;
    }
    if (section == Section::none) throw ParseError("missing *Vertices header", line_no);
    auto toks = split_ws(view);
    if (section == Section::vertices) {
      auto id = to_integer(toks[0]);
      if (!id || *id < 1 || static_cast<std::size_t>(*id) > *n) {
        throw ParseError("vertex id out of range", line_no);
      }
      auto rest = trim(view.substr(toks[0].size()));
      if (!rest.empty() && rest.front() == '"') {
        auto close = rest.find('"', 1);
        if (close == std::string_view::npos) throw ParseError("unterminated vertex label", line_no);
        names[static_cast<std::size_t>(*id - 1)] = std::string(rest.substr(1, close - 1));
      } else if (!rest.empty()) {
        names[static_cast<std::size_t>(*id - 1)] = std::string(split_ws(rest).front());
      }
      any_name = true;
      continue;
    }
    // Edge line: "a b [weight]"; weights are ignored.
    if (toks.size() < 2) throw ParseError("expected two vertex ids", line_no);
    auto a = to_integer(toks[0]);
    auto b = to_integer(toks[1]);
    if (!a || !b) throw ParseError("vertex ids must be integers", line_no);
    if (*a < 1 || *b < 1 || static_cast<std::size_t>(*a) > *n || static_cast<std::size_t>(*b) > *n) {
      throw ParseError("edge endpoint out of range", line_no);
    }
    if (*a == *b) throw ParseError("self-loop on vertex " + std::to_string(*a), line_no);
    edges.emplace_back(static_cast<Vertex>(*a - 1), static_cast<Vertex>(*b - 1));
  }
  if (!n) throw ParseError("missing *Vertices header");
  Graph g(*n, edges, Indexing::one_based);
  if (any_name) g.set_names(std::move(names));
  return g;
}

Graph parse_pajek(const std::string& text) {
  std::istringstream in(text);
  return parse_pajek(in);
}

void write_edge_list(std::ostream& out, const Graph& g, Indexing indexing) {
  const Vertex base = indexing == Indexing::one_based ? 1 : 0;
  out << "# vertices " << g.num_vertices() << '\n';
  for (const Edge& e : g.edges()) out << (e.u + base) << ' ' << (e.v + base) << '\n';
}

void write_pajek(std::ostream& out, const Graph& g) {
  out << "*Vertices " << g.num_vertices() << '\n';
  const auto& names = g.names();
  for (std::size_t v = 0; v < names.size(); ++v) {
    out << (v + 1) << " \"" << names[v] << "\"\n";
  }
  out << "*Edges\n";
  for (const Edge& e : g.edges()) out << (e.u + 1) << ' ' << (e.v + 1) << '\n';
}

}  // namespace sgec
