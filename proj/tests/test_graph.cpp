#include <gtest/gtest.h>

#include "oracles.hpp"
#include "walkcert/graph.hpp"

using namespace walkcert;

namespace {

std::vector<std::string> as_strings(const std::vector<Integer>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

}  // namespace

TEST(Graph, NormalizesEdges) {
  Graph g(4, {{2, 1}, {1, 2}, {0, 3}});
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 3}));
  EXPECT_EQ(g.edges()[1], (Edge{1, 2}));
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_EQ(g.degree(3), 1u);
}

TEST(Graph, RejectsLoopsAndRange) {
  EXPECT_THROW(Graph(3, {{1, 1}}), input_error);
  EXPECT_THROW(Graph(3, {{0, 3}}), input_error);
}

TEST(Walks, PathOnThreeNodes) {
  const auto t = walk_counts(make_named_graph(Family::path, 3), 4);
  EXPECT_EQ(as_strings(t.counts), (std::vector<std::string>{"3", "4", "6", "8", "12"}));
  EXPECT_EQ(t.n, 3u);
  EXPECT_EQ(t.m, 2u);
}

TEST(Walks, TriangleUnionStar) {
  const Graph g = disjoint_union(make_named_graph(Family::complete, 3), make_named_graph(Family::star, 5));
  const auto t = walk_counts(g, 3);
  EXPECT_EQ(as_strings(t.counts), (std::vector<std::string>{"9", "16", "42", "74"}));
  const auto brute = oracle::brute_force_walks(oracle::adjacency(g), 3);
  for (std::size_t k = 0; k <= 3; ++k) EXPECT_EQ(t[k], Integer(std::to_string(brute[k])));
}

TEST(Walks, EmptyAndEdgeless) {
  const auto t0 = walk_counts(Graph(0), 3);
  for (const auto& x : t0.counts) EXPECT_EQ(x, 0);
  const auto t = walk_counts(make_named_graph(Family::edgeless, 4), 2);
  EXPECT_EQ(as_strings(t.counts), (std::vector<std::string>{"4", "0", "0"}));
}

TEST(Walks, MatchesBruteForceOnSmallGraphs) {
  for (std::size_t n = 1; n <= 4; ++n) {
    LabeledGraphs all(n);
    all.for_each([&](std::uint64_t mask, const Graph& g) {
      const auto brute = oracle::brute_force_walks(oracle::adjacency(g), 4);
      const auto ours = walk_counts(g, 4);
      const auto mp = walk_counts_matrix_power(g, 4);
      for (std::size_t k = 0; k <= 4; ++k) {
        ASSERT_EQ(ours[k], Integer(std::to_string(brute[k]))) << "n=" << n << " mask=" << mask << " k=" << k;
        ASSERT_EQ(mp[k], ours[k]);
      }
    });
  }
}

TEST(Walks, LongWalksStayExact) {
  const auto t = walk_counts(make_named_graph(Family::complete, 7), 60);
  Integer expect;
  mpz_ui_pow_ui(expect.get_mpz_t(), 6, 60);
  EXPECT_EQ(t[60], 7 * expect);
  const auto mp = oracle::matrix_power_walks(oracle::adjacency(make_named_graph(Family::cycle, 5)), 30);
  const auto ours = walk_counts(make_named_graph(Family::cycle, 5), 30);
  for (std::size_t k = 0; k <= 30; ++k) EXPECT_EQ(ours[k].get_str(), oracle::to_string(mp[k]));
}

TEST(Walks, RegularGraphsAreGeometric) {
  const Graph g = make_named_graph(Family::cycle, 6);
  const auto t = walk_counts(g, 8);
  for (std::size_t k = 0; k <= 8; ++k) EXPECT_EQ(t[k], Integer(6) << static_cast<mp_bitcnt_t>(k));
}

TEST(Families, Shapes) {
  EXPECT_EQ(make_named_graph(Family::complete, 5).size(), 10u);
  EXPECT_EQ(make_named_graph(Family::path, 5).size(), 4u);
  EXPECT_EQ(make_named_graph(Family::cycle, 5).size(), 5u);
  const Graph star = make_named_graph(Family::star, 4);
  EXPECT_EQ(star.order(), 5u);
  EXPECT_EQ(star.degree(0), 4u);
  EXPECT_EQ(make_named_graph(Family::edgeless, 3).size(), 0u);
  EXPECT_THROW(make_named_graph(Family::cycle, 2), input_error);
  EXPECT_THROW(parse_family("wheel"), input_error);
}

TEST(Graph6, KnownStrings) {
  const Graph a = parse_graph6("A?");
  EXPECT_EQ(a.order(), 2u);
  EXPECT_EQ(a.size(), 0u);
  const Graph k3 = parse_graph6("Bw");
  EXPECT_EQ(k3, make_named_graph(Family::complete, 3));
  // 'B_': first data bit set, i.e. the single pair (0,1)
  const Graph b = parse_graph6("B_");
  EXPECT_EQ(b.order(), 3u);
  EXPECT_EQ(b.edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(emit_graph6(make_named_graph(Family::cycle, 5)), "Dhc");
  EXPECT_EQ(parse_graph6(">>graph6<<Bw\n"), k3);
  // frozen from networkx to_graph6_bytes
  EXPECT_EQ(emit_graph6(disjoint_union(k3, make_named_graph(Family::star, 5))), "HwCO__O");
  const std::string p40 =
      "ghCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@"
      "??????_?????G?????@";
  EXPECT_EQ(emit_graph6(make_named_graph(Family::path, 40)), p40);
  EXPECT_EQ(parse_graph6(p40), make_named_graph(Family::path, 40));
}

TEST(Graph6, Malformed) {
  EXPECT_THROW(parse_graph6(""), input_error);
  EXPECT_THROW(parse_graph6("~"), input_error);
  EXPECT_THROW(parse_graph6("B"), input_error);
  EXPECT_THROW(parse_graph6("Bw?"), input_error);
  EXPECT_THROW(parse_graph6("B\x01"), input_error);
}

TEST(Graph6, RoundTripAgainstIndependentDecoder) {
  for (std::size_t n = 1; n <= 5; ++n) {
    LabeledGraphs all(n);
    all.for_each([&](std::uint64_t, const Graph& g) {
      const std::string s = emit_graph6(g);
      ASSERT_EQ(parse_graph6(s), g);
      ASSERT_EQ(oracle::decode_graph6(s), oracle::adjacency(g)) << s;
    });
  }
  const Graph big = make_named_graph(Family::path, 40);
  EXPECT_EQ(parse_graph6(emit_graph6(big)), big);
}

TEST(EdgeList, ParseAndEmit) {
  std::vector<std::string> warnings;
  const Graph g = parse_edge_list("# triangle\nn 3\n0 1\n1 2\n\n2 0\n1 0\n", &warnings);
  EXPECT_EQ(g, make_named_graph(Family::complete, 3));
  EXPECT_EQ(warnings.size(), 1u);
  EXPECT_EQ(parse_edge_list(emit_edge_list(g)), g);
  EXPECT_EQ(load_graph("Bw", GraphFormat::graph6), g);
  EXPECT_EQ(load_graph("n 3\n0 1\n1 2\n0 2\n", GraphFormat::edge_list), g);
}

TEST(EdgeList, Malformed) {
  EXPECT_THROW(parse_edge_list("3\n0 1\n"), input_error);
  EXPECT_THROW(parse_edge_list("n 3\n0 3\n"), input_error);
  EXPECT_THROW(parse_edge_list("n 3\n1 1\n"), input_error);
  EXPECT_THROW(parse_edge_list("n 3\n0 x\n"), input_error);
}

TEST(Enumeration, CountsAndMaskOrder) {
  EXPECT_EQ(LabeledGraphs(1).count(), 1u);
  EXPECT_EQ(LabeledGraphs(4).count(), 64u);
  EXPECT_EQ(LabeledGraphs(6).count(), 32768u);
  const LabeledGraphs five(5);
  // mask bits follow graph6 order, so emit(graph(mask)) encodes mask directly
  EXPECT_EQ(five.graph(1).edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(five.graph(4).edges(), (std::vector<Edge>{{1, 2}}));
  EXPECT_THROW(LabeledGraphs(8), input_error);
  EXPECT_NO_THROW(LabeledGraphs(8, 8));
  EXPECT_THROW(LabeledGraphs(12, 12), input_error);
  EXPECT_THROW(LabeledGraphs(0), input_error);
}

TEST(Enumeration, PartitionsCoverRange) {
  const LabeledGraphs five(5);
  for (std::size_t parts : {1u, 3u, 7u, 2000u}) {
    std::uint64_t next = 0;
    for (auto [lo, hi] : five.partitions(parts)) {
      EXPECT_EQ(lo, next);
      EXPECT_LT(lo, hi);
      next = hi;
    }
    EXPECT_EQ(next, five.count());
  }
}

TEST(Enumeration, DedupShrinksCorpus) {
  DegreeWalkDedup dedup;
  LabeledGraphs(4).for_each([&](std::uint64_t, const Graph& g) { dedup.insert(g); });
  // 11 isomorphism classes on 4 nodes; the key can merge classes but never splits one
  EXPECT_LE(dedup.size(), 11u);
  EXPECT_GE(dedup.size(), 9u);
}
