#pragma once

// Simple undirected graphs, text formats (graph6, edge list), named families,
// exhaustive labeled enumeration and exact walk counting.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "walkcert/rational.hpp"

namespace walkcert {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on nodes {0..n-1}. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), adj_(n) {}

  /// Throws input_error on a self-loop or an out-of-range endpoint.
  /// Duplicate edges (in either orientation) are merged.
  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), adj_(n) {
    for (auto& e : edges) {
      if (e.u >= n || e.v >= n) {
        throw input_error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
      }
      if (e.u == e.v) throw input_error("self-loop at node " + std::to_string(e.u));
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    for (const auto& e : edges_) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
  std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }

  bool adjacent(std::size_t u, std::size_t v) const {
    const auto& list = adj_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
  }

  std::vector<std::size_t> degree_sequence() const {
    std::vector<std::size_t> d(n_);
    for (std::size_t v = 0; v < n_; ++v) d[v] = adj_[v].size();
    return d;
  }

  bool is_regular() const {
    for (std::size_t v = 1; v < n_; ++v) {
      if (adj_[v].size() != adj_[0].size()) return false;
    }
    return true;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adj_;
};

// ---------------------------------------------------------------------------
// Walk counts
// ---------------------------------------------------------------------------

/// Exact walk counts w_0..w_K of one graph.
struct WalkTable {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Integer> counts;

  std::size_t max_length() const noexcept { return counts.empty() ? 0 : counts.size() - 1; }
  const Integer& operator[](std::size_t k) const { return counts.at(k); }
};

/// Iterates v_{k+1}[u] = sum of v_k over the neighbours of u, starting from
/// the all-ones vector; w_k is the sum of v_k.
inline WalkTable walk_counts(const Graph& g, std::size_t max_length) {
  WalkTable table{g.order(), g.size(), {}};
  table.counts.reserve(max_length + 1);
  std::vector<Integer> current(g.order(), Integer(1));
  std::vector<Integer> next(g.order());
  for (std::size_t k = 0;; ++k) {
    Integer total = 0;
    for (const auto& x : current) total += x;
    table.counts.push_back(std::move(total));
    if (k == max_length) break;
    for (std::size_t u = 0; u < g.order(); ++u) {
      next[u] = 0;
      for (std::size_t v : g.neighbors(u)) next[u] += current[v];
    }
    std::swap(current, next);
  }
  return table;
}

/// Second exact route: w_k = 1^T A^k 1 from explicit integer matrix powers.
/// Used to re-check reported violations; quadratic memory, cubic time.
inline std::vector<Integer> walk_counts_matrix_power(const Graph& g, std::size_t max_length) {
  const std::size_t n = g.order();
  using Matrix = std::vector<std::vector<Integer>>;
  Matrix adjacency(n, std::vector<Integer>(n, Integer(0)));
  for (const auto& e : g.edges()) adjacency[e.u][e.v] = adjacency[e.v][e.u] = 1;
  Matrix power(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;

  std::vector<Integer> out;
  for (std::size_t k = 0;; ++k) {
    Integer total = 0;
    for (const auto& row : power)
      for (const auto& x : row) total += x;
    out.push_back(total);
    if (k == max_length) break;
    Matrix product(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (power[i][l] != 0)
          for (std::size_t j = 0; j < n; ++j)
            if (adjacency[l][j] != 0) product[i][j] += power[i][l];
    power = std::move(product);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Named families
// ---------------------------------------------------------------------------

enum class Family { complete, path, cycle, star, edgeless };

inline Family parse_family(std::string_view name) {
  if (name == "complete") return Family::complete;
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "star") return Family::star;
  if (name == "edgeless") return Family::edgeless;
  throw input_error("unknown graph family '" + std::string(name) + "'");
}

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::complete: return "complete";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::star: return "star";
    case Family::edgeless: return "edgeless";
  }
  return "?";
}

/// star(s) is the hub plus s leaves (s + 1 nodes); all others have s nodes.
inline Graph make_named_graph(Family family, std::size_t size) {
  if (size < 1) throw input_error("family size must be >= 1");
  std::vector<Edge> edges;
  switch (family) {
    case Family::complete:
      for (std::size_t j = 1; j < size; ++j)
        for (std::size_t i = 0; i < j; ++i) edges.push_back({i, j});
      return Graph(size, std::move(edges));
    case Family::path:
      for (std::size_t i = 0; i + 1 < size; ++i) edges.push_back({i, i + 1});
      return Graph(size, std::move(edges));
    case Family::cycle:
      if (size < 3) throw input_error("cycle requires size >= 3");
      for (std::size_t i = 0; i < size; ++i) edges.push_back({i, (i + 1) % size});
      return Graph(size, std::move(edges));
    case Family::star:
      for (std::size_t i = 1; i <= size; ++i) edges.push_back({0, i});
      return Graph(size + 1, std::move(edges));
    case Family::edgeless:
      return Graph(size);
  }
  throw input_error("unknown graph family");
}

inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  std::vector<Edge> edges = g1.edges();
  const std::size_t offset = g1.order();
  for (const auto& e : g2.edges()) edges.push_back({e.u + offset, e.v + offset});
  return Graph(g1.order() + g2.order(), std::move(edges));
}

// ---------------------------------------------------------------------------
// Text formats
// ---------------------------------------------------------------------------

enum class GraphFormat { graph6, edge_list };

inline constexpr std::size_t graph6_max_order = 62;

/// Decodes the short (single size byte) graph6 form.
inline Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw input_error("empty graph6 string");
  for (char ch : text) {
    if (ch < 63 || ch > 126) throw input_error("graph6 byte out of range in '" + std::string(text) + "'");
  }
  if (text.front() == 126) throw input_error("graph6 sizes above 62 are not supported");
  const std::size_t n = static_cast<std::size_t>(text.front() - 63);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != 1 + bytes) {
    throw input_error("graph6 string '" + std::string(text) + "' has " + std::to_string(text.size() - 1) +
                      " data bytes, expected " + std::to_string(bytes));
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const int value = text[1 + bit / 6] - 63;
      if ((value >> (5 - bit % 6)) & 1) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

inline std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > graph6_max_order) throw input_error("graph6 output limited to n <= 62");
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<unsigned char> groups((bits + 5) / 6, 0);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      if (g.adjacent(i, j)) groups[bit / 6] |= static_cast<unsigned char>(1u << (5 - bit % 6));
    }
  }
  std::string out(1, static_cast<char>(63 + n));
  for (auto v : groups) out.push_back(static_cast<char>(63 + v));
  return out;
}

/// "n <count>" header, then one "u v" pair per line (0-indexed).
/// Blank lines and lines starting with '#' are skipped.
inline Graph parse_edge_list(std::string_view text, std::vector<std::string>* warnings = nullptr) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto next_content_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      auto first = out.find_first_not_of(" \t\r");
      if (first == std::string::npos || out[first] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_content_line(line)) throw input_error("edge list is empty; expected header 'n <count>'");
  std::istringstream header(line);
  std::string tag;
  long long n = -1;
  std::string trailing;
  if (!(header >> tag >> n) || tag != "n" || n < 0 || (header >> trailing)) {
    throw input_error("malformed edge-list header '" + line + "'; expected 'n <count>'");
  }

  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (next_content_line(line)) {
    std::istringstream row(line);
    long long u = -1, v = -1;
    if (!(row >> u >> v) || (row >> trailing)) {
      throw input_error("line " + std::to_string(line_no) + ": expected 'u v', got '" + line + "'");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw input_error("line " + std::to_string(line_no) + ": endpoint out of range 0.." + std::to_string(n - 1));
    }
    if (u == v) throw input_error("line " + std::to_string(line_no) + ": self-loop at node " + std::to_string(u));
    Edge e{static_cast<std::size_t>(std::min(u, v)), static_cast<std::size_t>(std::max(u, v))};
    if (!seen.insert(e).second) {
      if (warnings) {
        warnings->push_back("line " + std::to_string(line_no) + ": duplicate edge " + std::to_string(e.u) + " " +
                            std::to_string(e.v) + " ignored");
      }
      continue;
    }
    edges.push_back(e);
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

inline std::string emit_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

inline Graph load_graph(std::string_view text, GraphFormat format, std::vector<std::string>* warnings = nullptr) {
  return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text, warnings);
}

// ---------------------------------------------------------------------------
// Exhaustive labeled enumeration
// ---------------------------------------------------------------------------

inline constexpr std::size_t default_max_order = 7;

/// All 2^(n(n-1)/2) labeled graphs on n nodes. Bit b of a mask is the b-th
/// node pair in graph6 order, (0,1), (0,2), (1,2), (0,3), ...
class LabeledGraphs {
 public:
  explicit LabeledGraphs(std::size_t n, std::size_t max_order = default_max_order) : n_(n) {
    if (n < 1) throw input_error("labeled graph enumeration needs n >= 1");
    if (n > max_order) {
      throw input_error("exhaustive enumeration refused for n = " + std::to_string(n) + " (limit " +
                        std::to_string(max_order) + "; raise it explicitly to continue)");
    }
    if (n > 11) throw input_error("exhaustive enumeration beyond n = 11 is not representable");
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i) pairs_.push_back({i, j});
  }

  std::size_t order() const noexcept { return n_; }
  std::uint64_t count() const noexcept { return std::uint64_t{1} << pairs_.size(); }

  Graph graph(std::uint64_t mask) const {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs_.size(); ++b) {
      if ((mask >> b) & 1u) edges.push_back(pairs_[b]);
    }
    return Graph(n_, std::move(edges));
  }

  /// Calls fn(mask, graph) for masks in [begin, end).
  template <class Fn>
  void for_each(Fn&& fn, std::uint64_t begin, std::uint64_t end) const {
    end = std::min(end, count());
    for (std::uint64_t mask = begin; mask < end; ++mask) fn(mask, graph(mask));
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for_each(std::forward<Fn>(fn), 0, count());
  }

  /// Splits [0, count) into at most `parts` contiguous, independent ranges.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> partitions(std::size_t parts) const {
    parts = std::max<std::size_t>(1, parts);
    const std::uint64_t total = count();
    const std::uint64_t step = (total + parts - 1) / parts;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t lo = 0; lo < total; lo += step) out.emplace_back(lo, std::min(total, lo + step));
    return out;
  }

 private:
  std::size_t n_;
  std::vector<Edge> pairs_;
};

/// Report-shrinking filter keyed on (sorted degree sequence, w_0..w_n).
/// Heuristic: non-isomorphic graphs can share a key.
class DegreeWalkDedup {
 public:
  bool insert(const Graph& g) {
    auto degrees = g.degree_sequence();
    std::sort(degrees.begin(), degrees.end());
    std::string key;
    for (auto d : degrees) key += std::to_string(d) + ",";
    key += "|";
    for (const auto& w : walk_counts(g, g.order()).counts) key += w.get_str() + ",";
    return keys_.insert(std::move(key)).second;
  }
  std::size_t size() const noexcept { return keys_.size(); }

 private:
  std::set<std::string> keys_;
};

}  // namespace walkcert
