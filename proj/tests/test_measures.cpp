#include "greechie/constructions.hpp"
#include "greechie/measures.hpp"
#include "greechie/random.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace greechie;

namespace {

std::vector<Integer> ints(std::initializer_list<long long> xs) {
  std::vector<Integer> out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

ProbabilityMeasure state(std::initializer_list<Rational> xs) { return ProbabilityMeasure{std::vector<Rational>(xs)}; }

}  // namespace

TEST(IncidenceSystem, Shape) {
  const auto s = build_incidence_system(Hypergraph(3, {{1, 2, 3}}));
  EXPECT_EQ(s.matrix, (IntMatrix{{1, 1, 1, -1}}));
  EXPECT_EQ(build_incidence_system(omp21()).matrix.rows(), 22u);
  EXPECT_TRUE(build_incidence_system(omp21()).square());
  EXPECT_TRUE(build_incidence_system(oml67()).square());
  EXPECT_EQ(build_incidence_system(oml67()).vertex_count(), 67u);

  const Hypergraph h = ag23();
  const auto a = build_incidence_system(h).matrix;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Integer sum = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) sum += a(r, c);
    EXPECT_EQ(sum, Integer(h.edge(r).size()) - 1);
  }
}

TEST(States, Examples) {
  EXPECT_TRUE(find_probability_measure(Hypergraph(2, {{1, 2}})));
  EXPECT_FALSE(find_probability_measure(oml67()));
  EXPECT_FALSE(find_probability_measure(omp21()));

  const Rational third(1, 3), half(1, 2);
  EXPECT_TRUE(verify_probability_measure(fano(), ProbabilityMeasure{std::vector<Rational>(7, third)}));
  EXPECT_TRUE(verify_probability_measure(Hypergraph(3, {{1, 2, 3}}), state({half, half, 0})));
  EXPECT_FALSE(verify_probability_measure(Hypergraph(3, {{1, 2, 3}}), state({half, half, half})));
  EXPECT_FALSE(verify_probability_measure(Hypergraph(3, {{1, 2, 3}}), state({2, -1, 0})));
  EXPECT_THROW(verify_probability_measure(Hypergraph(3, {{1, 2, 3}}), state({1, 0})), std::invalid_argument);
}

TEST(States, ThreeUniformDiagramsAlwaysHaveOne) {
  std::mt19937_64 rng(31);
  RandomDiagramOptions opt;
  opt.four_edge_probability = 0;
  for (int i = 0; i < 100; ++i) {
    const Hypergraph h = random_sparse_diagram(rng, opt);
    ASSERT_TRUE(h.is_uniform(3));
    const auto x = find_probability_measure(h);
    ASSERT_TRUE(x);
    EXPECT_TRUE(verify_probability_measure(h, *x));
    EXPECT_TRUE(verify_probability_measure(h, ProbabilityMeasure{std::vector<Rational>(h.vertex_count(), Rational(1, 3))}));
  }
}

TEST(GroupMeasures, Examples) {
  const auto w = find_group_valued_measure(fano());
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_group_measure(fano(), *w));
  EXPECT_FALSE(find_group_valued_measure(omp21()));
  EXPECT_FALSE(find_group_valued_measure(oml67()));

  EXPECT_TRUE(verify_group_measure(fano(), GroupMeasureWitness{Integer(2), std::vector<Integer>(7, Integer(1)), Integer(1)}));
  EXPECT_FALSE(verify_group_measure(fano(), GroupMeasureWitness{Integer(2), std::vector<Integer>(7, Integer(0)), Integer(0)}));
  EXPECT_FALSE(verify_group_measure(fano(), GroupMeasureWitness{Integer(3), std::vector<Integer>(7, Integer(1)), Integer(1)}));
  EXPECT_THROW(verify_group_measure(fano(), GroupMeasureWitness{Integer(2), ints({1, 1}), Integer(1)}),
               std::invalid_argument);

  // A nonconstant AG(2,3) solution mod 3 from the nullspace.
  const Hypergraph h = ag23();
  bool found = false;
  for (const auto& x : nullspace_mod_p(build_incidence_system(h).matrix, Integer(3))) {
    GroupMeasureWitness cand{Integer(3), std::vector<Integer>(x.begin(), x.end() - 1), x.back()};
    const bool nonconstant = std::any_of(cand.values.begin(), cand.values.end(),
                                         [&](const Integer& v) { return v != cand.values.front(); });
    if (!nonconstant) continue;
    found = true;
    EXPECT_TRUE(verify_group_measure(h, cand));
  }
  EXPECT_TRUE(found);
}

TEST(GroupMeasures, FewEdgesAlwaysGiveAWitness) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 300; ++i) {
    const Hypergraph h = random_sparse_diagram(rng);
    ASSERT_LE(h.edge_count(), h.vertex_count());
    const auto w = find_group_valued_measure(h);
    ASSERT_TRUE(w);
    EXPECT_TRUE(verify_group_measure(h, *w));
  }
}

TEST(GroupMeasures, SquareSystemsAgreeWithDeterminant) {
  std::mt19937_64 rng(41);
  std::size_t unimodular = 0;
  for (int i = 0; i < 300; ++i) {
    const Hypergraph h = random_square_diagram(rng);
    const Integer det = square_system_determinant(h);
    const auto analysis = analyze_group_measures(h);
    const bool unit = det == 1 || det == -1;
    EXPECT_EQ(unit, !analysis.witness);
    if (analysis.witness) { EXPECT_TRUE(verify_group_measure(h, *analysis.witness)); }
    unimodular += unit;
  }
  EXPECT_GT(unimodular, 0u);
}

TEST(GroupMeasures, WitnessesOnDenseDiagramsVerify) {
  // Dense random hypergraphs (not necessarily Greechie) exercise the
  // full-rank branch with nontrivial invariant factors.
  std::mt19937_64 rng(43);
  std::size_t full_rank_witnesses = 0;
  for (int i = 0; i < 300; ++i) {
    const Hypergraph h = oracle::random_hypergraph(rng, 5 + rng() % 4, 10 + rng() % 8, 5);
    const auto a = analyze_group_measures(h);
    if (!a.witness) {
      EXPECT_TRUE(a.full_column_rank());
      EXPECT_TRUE(a.snf.all_units());
      // No solution modulo small primes either.
      for (std::uint64_t p : {2u, 3u, 5u, 7u})
        EXPECT_EQ(nullity_mod_p(build_incidence_system(h).matrix, Integer(p)), 0u);
      continue;
    }
    EXPECT_TRUE(verify_group_measure(h, *a.witness)) << serialize_diagram(h);
    full_rank_witnesses += a.full_column_rank();
  }
  EXPECT_GT(full_rank_witnesses, 0u);
}

TEST(GroupMeasures, StateImpliesWitness) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 300; ++i) {
    const Hypergraph h = oracle::random_hypergraph(rng, 4 + rng() % 5, 3 + rng() % 9);
    if (find_probability_measure(h)) { EXPECT_TRUE(find_group_valued_measure(h)); }
  }
}

TEST(GroupMeasures, MixedEdgeSizesRuleOutConstants) {
  std::mt19937_64 rng(53);
  std::size_t mixed = 0;
  for (int i = 0; i < 200; ++i) {
    const Hypergraph h = random_sparse_diagram(rng);
    if (h.is_uniform(3) || h.is_uniform(4)) continue;
    ++mixed;
    // Sizes 3 and 4 force 3c = 4c = g, so c = g = 0.
    for (long long p : {2, 3, 5, 7})
      for (long long c = 1; c < p; ++c)
        for (long long g = 0; g < p; ++g)
          EXPECT_FALSE(verify_group_measure(
              h, GroupMeasureWitness{Integer(p), std::vector<Integer>(h.vertex_count(), Integer(c)), Integer(g)}));
    const auto w = find_group_valued_measure(h);
    ASSERT_TRUE(w);
    EXPECT_TRUE(std::any_of(w->values.begin(), w->values.end(),
                            [&](const Integer& v) { return v != w->values.front(); }));
  }
  EXPECT_GT(mixed, 0u);
}

TEST(RangeProfile, Examples) {
  EXPECT_EQ(nonconstant_range_profile(fano(), {2, 3, 5, 7}),
            (std::map<std::uint64_t, bool>{{2, true}, {3, false}, {5, false}, {7, false}}));
  EXPECT_EQ(nonconstant_range_profile(ag23(), {2, 3, 5}),
            (std::map<std::uint64_t, bool>{{2, false}, {3, true}, {5, false}}));
  EXPECT_EQ(nonconstant_range_profile(Hypergraph(3, {{1, 2, 3}}), {2}), (std::map<std::uint64_t, bool>{{2, true}}));
  EXPECT_THROW(nonconstant_range_profile(fano(), {2, 4}), std::invalid_argument);
}

TEST(RangeProfile, MatchesBruteForceOverSmallDiagrams) {
  // A measure mod p is nonconstant iff some kernel vector has two distinct
  // vertex values; count constant kernel vectors directly.
  std::mt19937_64 rng(59);
  for (int i = 0; i < 60; ++i) {
    const Hypergraph h = oracle::random_hypergraph(rng, 3 + rng() % 3, 1 + rng() % 4);
    const IntMatrix a = build_incidence_system(h).matrix;
    for (std::uint64_t p : {2u, 3u}) {
      const std::uint64_t all = oracle::count_kernel_mod_p(a, p);
      std::uint64_t constant = 0;
      for (std::uint64_t c = 0; c < p; ++c) {
        // (c, ..., c, g) is a solution iff every edge has |e| c equal to one g.
        std::set<std::uint64_t> sums;
        for (const Edge& e : h.edges()) sums.insert(e.size() * c % p);
        constant += sums.size() == 1;
      }
      EXPECT_EQ(nonconstant_range_profile(h, {p}).at(p), all > constant) << serialize_diagram(h);
    }
  }
}

TEST(SquareSystem, Determinants) {
  const Integer a = square_system_determinant(omp21()), b = square_system_determinant(oml67());
  EXPECT_TRUE(a == 1 || a == -1);
  EXPECT_TRUE(b == 1 || b == -1);
  EXPECT_THROW(square_system_determinant(Hypergraph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})),
               std::invalid_argument);
}
