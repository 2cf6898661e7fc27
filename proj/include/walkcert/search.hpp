#pragma once

// Counterexample search over graph corpora: exhaustive labeled enumeration,
// parametric family scans and explicit graph lists.

#include <cctype>
#include <chrono>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

#include "walkcert/graph.hpp"
#include "walkcert/inequality.hpp"

namespace walkcert {

/// Graph-valued expression over named families, e.g.
/// "union(complete:3,star:m)" or "cycle:6". Sizes are integers or variables.
class FamilySpec {
 public:
  static FamilySpec parse(std::string_view text) {
    FamilySpec spec;
    std::size_t pos = 0;
    spec.root_ = spec.parse_node(text, pos);
    skip_space(text, pos);
    if (pos != text.size()) throw input_error("trailing characters in family spec '" + std::string(text) + "'");
    spec.text_ = std::string(text);
    return spec;
  }

  Graph build(const std::map<std::string, std::size_t>& bindings = {}) const { return build_node(root_, bindings); }

  std::set<std::string> variables() const {
    std::set<std::string> out;
    collect(root_, out);
    return out;
  }

  const std::string& str() const noexcept { return text_; }

 private:
  struct Node {
    bool is_union = false;
    Family family = Family::edgeless;
    std::size_t size = 0;
    std::string variable;  // non-empty when the size is symbolic
    std::vector<Node> children;
  };

  static void skip_space(std::string_view t, std::size_t& pos) {
    while (pos < t.size() && (t[pos] == ' ' || t[pos] == '\t')) ++pos;
  }

  static std::string read_word(std::string_view t, std::size_t& pos) {
    skip_space(t, pos);
    const std::size_t start = pos;
    while (pos < t.size() && (std::isalnum(static_cast<unsigned char>(t[pos])) || t[pos] == '_')) ++pos;
    if (start == pos) throw input_error("expected a name or number in family spec '" + std::string(t) + "'");
    return std::string(t.substr(start, pos - start));
  }

  static void expect(std::string_view t, std::size_t& pos, char ch) {
    skip_space(t, pos);
    if (pos >= t.size() || t[pos] != ch) {
      throw input_error(std::string("expected '") + ch + "' in family spec '" + std::string(t) + "'");
    }
    ++pos;
  }

  Node parse_node(std::string_view t, std::size_t& pos) {
    const std::string name = read_word(t, pos);
    Node node;
    if (name == "union") {
      node.is_union = true;
      expect(t, pos, '(');
      node.children.push_back(parse_node(t, pos));
      skip_space(t, pos);
      while (pos < t.size() && t[pos] == ',') {
        ++pos;
        node.children.push_back(parse_node(t, pos));
        skip_space(t, pos);
      }
      expect(t, pos, ')');
      return node;
    }
    node.family = parse_family(name);
    expect(t, pos, ':');
    const std::string size = read_word(t, pos);
    if (std::isdigit(static_cast<unsigned char>(size.front()))) {
      for (char ch : size) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw input_error("malformed size '" + size + "'");
      }
      node.size = std::stoul(size);
    } else {
      node.variable = size;
    }
    return node;
  }

  static Graph build_node(const Node& node, const std::map<std::string, std::size_t>& bindings) {
    if (node.is_union) {
      Graph g = build_node(node.children.front(), bindings);
      for (std::size_t i = 1; i < node.children.size(); ++i) g = disjoint_union(g, build_node(node.children[i], bindings));
      return g;
    }
    std::size_t size = node.size;
    if (!node.variable.empty()) {
      auto it = bindings.find(node.variable);
      if (it == bindings.end()) throw input_error("family variable '" + node.variable + "' is unbound");
      size = it->second;
    }
    return make_named_graph(node.family, size);
  }

  static void collect(const Node& node, std::set<std::string>& out) {
    if (!node.variable.empty()) out.insert(node.variable);
    for (const auto& c : node.children) collect(c, out);
  }

  Node root_;
  std::string text_;
};

struct ExhaustiveCorpus {
  std::size_t min_n = 1;
  std::size_t max_n = 1;
  std::size_t order_cap = default_max_order;
};

struct FamilyScanCorpus {
  FamilySpec family;
  std::string variable;
  std::size_t lo = 0;
  std::size_t hi = 0;
};

struct GraphListCorpus {
  std::vector<Graph> graphs;
  std::vector<std::string> labels;
  std::string description = "graph list";
};

using Corpus = std::variant<ExhaustiveCorpus, FamilyScanCorpus, GraphListCorpus>;

struct SearchOptions {
  bool stop_at_first = false;
  bool regular_only = false;
  std::size_t jobs = 1;
};

struct Violation {
  Graph graph;
  std::string label;
  Rational value;
  std::vector<Integer> walks;
};

struct SearchReport {
  WalkInequality inequality;
  std::string corpus;
  std::uint64_t graphs_tested = 0;
  std::uint64_t graphs_skipped = 0;
  std::vector<Violation> violations;
  std::optional<Rational> min_value;
  std::optional<Rational> max_value;
  double elapsed_seconds = 0.0;

  /// Appends `later`, which must cover corpus items after this report's.
  void merge(const SearchReport& later) {
    graphs_tested += later.graphs_tested;
    graphs_skipped += later.graphs_skipped;
    violations.insert(violations.end(), later.violations.begin(), later.violations.end());
    if (later.min_value && (!min_value || *later.min_value < *min_value)) min_value = later.min_value;
    if (later.max_value && (!max_value || *later.max_value > *max_value)) max_value = later.max_value;
  }
};

namespace detail {

/// Evaluates one graph into `report`; returns true when it violated.
inline bool examine(const WalkInequality& ineq, const Graph& g, std::string label, const SearchOptions& options,
                    SearchReport& report) {
  if (options.regular_only && !g.is_regular()) {
    ++report.graphs_skipped;
    return false;
  }
  ++report.graphs_tested;
  const WalkTable table = walk_counts(g, ineq.max_index());
  const Rational value = evaluate_inequality(ineq, table);
  if (!report.min_value || value < *report.min_value) report.min_value = value;
  if (!report.max_value || value > *report.max_value) report.max_value = value;
  if (value >= 0) return false;

  // Independent recomputation before anything is reported.
  WalkTable recheck{g.order(), g.size(), walk_counts_matrix_power(g, ineq.max_index())};
  if (evaluate_inequality(ineq, recheck) != value) {
    throw internal_error("violation on " + label + " did not re-verify under matrix powers");
  }
  report.violations.push_back({g, std::move(label), value, table.counts});
  return true;
}

}  // namespace detail

inline std::string describe(const Corpus& corpus) {
  return std::visit(
      [](const auto& c) -> std::string {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, ExhaustiveCorpus>) {
          return c.min_n == c.max_n ? "exhaustive(" + std::to_string(c.max_n) + ")"
                                    : "exhaustive(" + std::to_string(c.min_n) + ".." + std::to_string(c.max_n) + ")";
        } else if constexpr (std::is_same_v<C, FamilyScanCorpus>) {
          return "family-scan(" + c.family.str() + ", " + c.variable + "=" + std::to_string(c.lo) + ".." +
                 std::to_string(c.hi) + ")";
        } else {
          return c.description;
        }
      },
      corpus);
}

/// Exact evaluation of `ineq` over every graph of the corpus. Violations
/// come back in corpus order and each one has been re-verified.
inline SearchReport search_counterexamples(const WalkInequality& ineq, const Corpus& corpus,
                                           const SearchOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  report.inequality = ineq;
  report.corpus = describe(corpus);

  std::visit(
      [&](const auto& c) {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, ExhaustiveCorpus>) {
          if (c.min_n < 1 || c.min_n > c.max_n) throw input_error("exhaustive corpus needs 1 <= min_n <= max_n");
          for (std::size_t n = c.min_n; n <= c.max_n; ++n) {
            const LabeledGraphs graphs(n, c.order_cap);
            const auto parts = graphs.partitions(std::max<std::size_t>(1, options.jobs));
            std::vector<SearchReport> partial(parts.size());
            std::vector<std::exception_ptr> errors(parts.size());
            auto work = [&](std::size_t p) {
              try {
                for (std::uint64_t mask = parts[p].first; mask < parts[p].second; ++mask) {
                  if (detail::examine(ineq, graphs.graph(mask),
                                      "n=" + std::to_string(n) + " mask=" + std::to_string(mask), options,
                                      partial[p]) &&
                      options.stop_at_first) {
                    break;
                  }
                }
              } catch (...) {
                errors[p] = std::current_exception();
              }
            };
            if (parts.size() == 1) {
              work(0);
            } else {
              std::vector<std::thread> pool;
              for (std::size_t p = 0; p < parts.size(); ++p) pool.emplace_back(work, p);
              for (auto& t : pool) t.join();
            }
            for (auto& e : errors)
              if (e) std::rethrow_exception(e);
            for (const auto& r : partial) report.merge(r);
            if (options.stop_at_first && !report.violations.empty()) {
              report.violations.resize(1);
              break;
            }
          }
        } else if constexpr (std::is_same_v<C, FamilyScanCorpus>) {
          const auto vars = c.family.variables();
          if (vars.size() > 1) throw input_error("family scan supports a single size variable");
          if (!vars.empty() && *vars.begin() != c.variable) {
            throw input_error("family spec uses variable '" + *vars.begin() + "' but the range binds '" + c.variable + "'");
          }
          if (c.lo > c.hi) throw input_error("empty family range");
          for (std::size_t v = c.lo; v <= c.hi; ++v) {
            const Graph g = c.family.build({{c.variable, v}});
            if (detail::examine(ineq, g, c.variable + "=" + std::to_string(v), options, report) &&
                options.stop_at_first) {
              break;
            }
          }
        } else {
          for (std::size_t i = 0; i < c.graphs.size(); ++i) {
            std::string label = i < c.labels.size() ? c.labels[i] : "#" + std::to_string(i);
            if (detail::examine(ineq, c.graphs[i], std::move(label), options, report) && options.stop_at_first) break;
          }
        }
      },
      corpus);

  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace walkcert
