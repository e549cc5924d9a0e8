#include "greechie/constructions.hpp"
#include "greechie/hypergraph.hpp"
#include "greechie/random.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace greechie;

TEST(Parse, ReadsEdgeList) {
  const Hypergraph h = parse_diagram("1 2 3\n3 4 5");
  EXPECT_EQ(h.vertex_count(), 5u);
  ASSERT_EQ(h.edge_count(), 2u);
  EXPECT_EQ(h.edge(0), (Edge{1, 2, 3}));
  EXPECT_EQ(h.edge(1), (Edge{3, 4, 5}));
}

TEST(Parse, SkipsCommentsAndBlankLines) {
  const Hypergraph h = parse_diagram("# header\n\n3 1 2   # trailing\n\t\n2 4 5\n");
  EXPECT_EQ(h.vertex_count(), 5u);
  EXPECT_EQ(h.edge(0), (Edge{1, 2, 3}));  // members sorted, edge order kept
  EXPECT_EQ(h.edge(1), (Edge{2, 4, 5}));
}

TEST(Parse, ReportsLineNumbers) {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_diagram(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 999;
  };
  EXPECT_EQ(line_of("1 2 3\n1 2 3"), 2u);        // duplicate edge
  EXPECT_EQ(line_of("1 2 3\n3 2 1\n"), 2u);      // duplicate as a set
  EXPECT_EQ(line_of("1 2 x\n"), 1u);             // malformed token
  EXPECT_EQ(line_of("1 2 3\n# c\n0 1 2\n"), 3u);  // id <= 0
  EXPECT_EQ(line_of("1 2 3\n4 -5 6\n"), 2u);
  EXPECT_EQ(line_of("1 2 2\n"), 1u);  // repeated vertex
  EXPECT_EQ(line_of("1 2 3 4.5\n"), 1u);
  EXPECT_EQ(line_of("1 2 99999999999\n"), 1u);
  EXPECT_EQ(line_of("1 2 3\n5 6 7\n"), 0u);  // 4 never mentioned
  EXPECT_EQ(line_of("# nothing\n"), 0u);
}

TEST(Parse, ReadsTheOmpFixtureListing) {
  std::ostringstream text;
  text << "# 21-vertex OMP\n";
  serialize_diagram(omp21(), text);
  const Hypergraph h = parse_diagram(text.str());
  EXPECT_EQ(h.vertex_count(), 21u);
  EXPECT_EQ(h.edge_count(), 22u);
}

TEST(Serialize, SingleEdge) { EXPECT_EQ(serialize_diagram(Hypergraph(3, {{1, 2, 3}})), "1 2 3\n"); }

TEST(Serialize, RoundTripsFixturesAndRandomDiagrams) {
  for (const Hypergraph& h : {oml67(), omp21(), fano(), ag23()}) EXPECT_EQ(parse_diagram(serialize_diagram(h)), h);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Hypergraph h = random_sparse_diagram(rng);
    EXPECT_EQ(parse_diagram(serialize_diagram(h)), h);
  }
}

TEST(Hypergraph, RejectsInvalidInput) {
  EXPECT_THROW(Hypergraph(0, {}), DiagramError);
  EXPECT_THROW(Hypergraph(3, {{1, 2}}), DiagramError);        // 3 uncovered
  EXPECT_THROW(Hypergraph(3, {{1, 2, 4}}), DiagramError);     // out of range
  EXPECT_THROW(Hypergraph(3, {{1, 2, 3}, {}}), DiagramError);  // empty edge
  EXPECT_THROW(Hypergraph(3, {{1, 2, 3}, {3, 2, 1}}), DiagramError);
  EXPECT_THROW(Hypergraph(3, {{1, 1, 2, 3}}), DiagramError);
}

TEST(Degree, Examples) {
  EXPECT_EQ(degree(Hypergraph(3, {{1, 2, 3}}), 1), 1u);
  const Hypergraph f = fano();
  for (VertexId v = 1; v <= 7; ++v) EXPECT_EQ(degree(f, v), 3u);
  EXPECT_EQ(degree(omp21(), 18), 3u);
  EXPECT_THROW(degree(f, 0), std::out_of_range);
  EXPECT_THROW(degree(f, 8), std::out_of_range);
}

TEST(Adjacency, Examples) {
  EXPECT_EQ(adjacency(Hypergraph(3, {{1, 2, 3}}), 1), (std::vector<VertexId>{2, 3}));
  EXPECT_EQ(adjacency(Hypergraph(6, {{1, 2, 3}, {4, 5, 6}}), 1), (std::vector<VertexId>{2, 3}));
  const Hypergraph f = fano();
  for (VertexId v = 1; v <= 7; ++v) EXPECT_EQ(adjacency(f, v).size(), 6u);
  EXPECT_THROW(adjacency(f, 9), std::out_of_range);
}

TEST(Degree, SumsMatchEdgeSizes) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Hypergraph h = random_sparse_diagram(rng);
    const auto d = degrees(h);
    std::size_t degree_sum = 0, size_sum = 0;
    for (VertexId v = 1; v <= h.vertex_count(); ++v) degree_sum += d[v];
    for (const Edge& e : h.edges()) size_sum += e.size();
    EXPECT_EQ(degree_sum, size_sum);
  }
  for (const Hypergraph& h : {fano(), ag23()})
    for (VertexId v = 1; v <= h.vertex_count(); ++v) EXPECT_EQ(adjacency(h, v).size(), 2 * degree(h, v));
}

TEST(CycleOrder, Examples) {
  EXPECT_EQ(min_cycle_order(Hypergraph(4, {{1, 2, 3}, {2, 3, 4}})), 2u);
  EXPECT_EQ(min_cycle_order(fano()), 3u);
  EXPECT_EQ(min_cycle_order(Hypergraph(5, {{1, 2, 3}, {3, 4, 5}})), std::nullopt);
  EXPECT_EQ(min_cycle_order(omp21()), 4u);
  EXPECT_EQ(min_cycle_order(Hypergraph(3, {{1, 2, 3}})), std::nullopt);
}

TEST(CycleOrder, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 600; ++i) {
    const std::size_t n = 3 + rng() % 6;  // 3..8
    const std::size_t m = 1 + rng() % 7;
    const Hypergraph h = oracle::random_hypergraph(rng, n, m);
    EXPECT_EQ(min_cycle_order(h), oracle::cycle_order(h)) << serialize_diagram(h);
  }
  EXPECT_EQ(oracle::cycle_order(omp21()), 4u);
}

TEST(CycleOrder, OrderTwoIffPairSharesTwoVertices) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const Hypergraph h = oracle::random_hypergraph(rng, 4 + rng() % 5, 2 + rng() % 6);
    bool shares = false;
    for (const auto& v : greechie_violations(h)) shares = shares || v.condition == GreechieCondition::intersection;
    EXPECT_EQ(min_cycle_order(h) == 2u, shares);
  }
}

TEST(Greechie, ReportsViolatedCondition) {
  // Two shared points also leave each edge only one point of its own.
  auto v = greechie_violations(Hypergraph(4, {{1, 2, 3}, {1, 2, 4}}));
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0], (GreechieViolation{0, 1, GreechieCondition::difference}));
  EXPECT_EQ(v[1], (GreechieViolation{0, 1, GreechieCondition::intersection}));

  v = greechie_violations(Hypergraph(5, {{1, 2, 3, 4}, {1, 2, 5}}));
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[1].condition, GreechieCondition::intersection);

  v = greechie_violations(Hypergraph(4, {{1, 2}, {2, 3, 4}}));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].condition, GreechieCondition::difference);
  EXPECT_FALSE(is_greechie(Hypergraph(4, {{1, 2}, {2, 3, 4}})));

  EXPECT_TRUE(is_greechie(oml67()));
  EXPECT_TRUE(greechie_violations(oml67()).empty());
  // A disjoint 2-edge is allowed.
  EXPECT_TRUE(is_greechie(Hypergraph(5, {{1, 2}, {3, 4, 5}})));
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(fano()).kind, StructureKind::oa);
  EXPECT_EQ(classify(omp21()).kind, StructureKind::omp);
  EXPECT_EQ(classify(oml67()).kind, StructureKind::oml);
  EXPECT_EQ(classify(Hypergraph(3, {{1, 2, 3}})).kind, StructureKind::oml);
  const auto bad = classify(Hypergraph(4, {{1, 2}, {2, 3, 4}}));
  EXPECT_EQ(bad.kind, StructureKind::not_greechie);
  EXPECT_FALSE(bad.violations.empty());
  EXPECT_FALSE(bad.at_least(StructureKind::oa));
}

TEST(Classify, KindAgreesWithCycleOrder) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const Hypergraph h = random_sparse_diagram(rng);
    const auto c = classify(h);
    ASSERT_NE(c.kind, StructureKind::not_greechie);
    const std::size_t order = c.min_cycle_order.value_or(100);
    EXPECT_GE(order, required_girth(c.kind));
    EXPECT_TRUE(c.at_least(StructureKind::oa));
    if (c.kind == StructureKind::oml) { EXPECT_TRUE(c.at_least(StructureKind::omp)); }
  }
}

TEST(Classify, InvariantUnderRelabeling) {
  std::mt19937_64 rng(23);
  std::vector<Hypergraph> samples{fano(), ag23(), omp21(), oml67()};
  for (int i = 0; i < 50; ++i) samples.push_back(random_sparse_diagram(rng));
  for (int i = 0; i < 50; ++i) samples.push_back(oracle::random_hypergraph(rng, 6, 5));
  for (const Hypergraph& h : samples) {
    const auto base = classify(h);
    for (int k = 0; k < 3; ++k) {
      const auto c = classify(oracle::relabel(h, rng));
      EXPECT_EQ(c.kind, base.kind);
      EXPECT_EQ(c.min_cycle_order, base.min_cycle_order);
      EXPECT_EQ(c.violations.size(), base.violations.size());
    }
  }
}

TEST(Connectivity, Basic) {
  EXPECT_TRUE(is_connected(fano()));
  EXPECT_FALSE(is_connected(Hypergraph(6, {{1, 2, 3}, {4, 5, 6}})));
  EXPECT_TRUE(is_connected(Hypergraph(5, {{1, 2, 3}, {3, 4, 5}})));
}

TEST(StructureKind, ParsesNames) {
  EXPECT_EQ(parse_structure_kind("oa"), StructureKind::oa);
  EXPECT_EQ(parse_structure_kind("OMP"), StructureKind::omp);
  EXPECT_EQ(parse_structure_kind("Oml"), StructureKind::oml);
  EXPECT_EQ(parse_structure_kind("lattice"), std::nullopt);
}
