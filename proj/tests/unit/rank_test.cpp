#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "matroid_limits/rank.hpp"
#include "oracles.hpp"

using namespace mlim;

namespace {

MultiGraph triangle() { return MultiGraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
MultiGraph hexagon() { return MultiGraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}); }
MultiGraph k4() { return MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

EdgeSet mask(std::size_t m, std::uint64_t bits) { return EdgeSet::from_mask(m, bits); }

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_EQ(to_string(Rational(3, 6)), "1/2");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("a/b"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rational, MixedComparisonsTerminate) {
  const Rational one(2, 2);
  EXPECT_TRUE(one == 1);
  EXPECT_TRUE(1 == one);
  EXPECT_FALSE(one != 1);
  EXPECT_TRUE(one != std::int64_t{0});
  EXPECT_TRUE(std::size_t{1} == one);
}

TEST(Eta, Examples) {
  EXPECT_EQ(eta(triangle(), EdgeSet::full(3)), Rational(1));
  EXPECT_EQ(eta(triangle(), mask(3, 0b001)), Rational(1, 3));
  const MultiGraph with_loop(4, {{0, 0}, {1, 2}});
  EXPECT_EQ(eta(with_loop, mask(2, 0b01)), Rational(1, 4));
}

TEST(Rho, Examples) {
  EXPECT_EQ(rho(triangle(), EdgeSet::full(3)), Rational(2, 3));
  EXPECT_EQ(rho(hexagon(), EdgeSet(6)), Rational(0));
  EXPECT_EQ(rho(hexagon(), mask(6, 0b01011)), Rational(1, 2));
  EXPECT_EQ(rank_abs(triangle(), EdgeSet::full(3)), 2u);
  EXPECT_EQ(rank_abs(k4(), EdgeSet::full(6)), 3u);
  EXPECT_EQ(rank_abs(hexagon(), mask(6, 0b00111)), 3u);
}

TEST(CocycleRho, Examples) {
  EXPECT_EQ(cocycle_rho(triangle(), mask(3, 0b001)), Rational(1, 3));
  EXPECT_EQ(cocycle_rho(triangle(), EdgeSet(3)), Rational(0));
  EXPECT_EQ(cocycle_rho(triangle(), EdgeSet::full(3)), Rational(1, 3));
}

TEST(Independence, Examples) {
  EXPECT_TRUE(is_independent(triangle(), mask(3, 0b011)));
  EXPECT_FALSE(is_independent(triangle(), EdgeSet::full(3)));
  const MultiGraph loop(2, {{1, 1}});
  EXPECT_FALSE(is_independent(loop, EdgeSet::full(1)));
  EXPECT_LT(rho(loop, EdgeSet::full(1)), eta(loop, EdgeSet::full(1)));
  EXPECT_TRUE(is_base(triangle(), mask(3, 0b011)));
  EXPECT_FALSE(is_base(triangle(), mask(3, 0b001)));
  EXPECT_TRUE(is_base(MultiGraph(3, {}), EdgeSet(0)));
}

// Properties over random multigraphs, against the graph-search oracle.
TEST(RankProperties, RandomGraphs) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 300; ++t) {
    const MultiGraph g = oracle::random_multigraph(rng, 10, 14);
    const std::size_t m = g.edge_count();
    const auto n = static_cast<std::int64_t>(g.vertex_count());
    const EdgeSet f = oracle::random_subset(m, rng);
    const EdgeSet sub = f & oracle::random_subset(m, rng);
    EXPECT_EQ(rho(g, f) * n, Rational(static_cast<std::int64_t>(oracle::rank_by_search(g, f))));
    EXPECT_LE(Rational(0), rho(g, f));
    EXPECT_LE(rho(g, f), eta(g, f));
    EXPECT_LE(rho(g, sub), rho(g, f));
    EXPECT_EQ(is_independent(g, f), oracle::acyclic_by_dfs(g, f));
    EXPECT_EQ(is_independent(g, f), rho(g, f) == eta(g, f));
    EXPECT_EQ(cocycle_rho(g, f), oracle::cocycle_by_search(g, f));
    EXPECT_GE(cocycle_rho(g, f), Rational(0));
    const EdgeSet all = EdgeSet::full(m);
    EXPECT_EQ(cocycle_rho(g, all), eta(g, all) - rho(g, all));
    // Denominators divide n.
    EXPECT_EQ(n % rho(g, f).denominator(), 0);
    EXPECT_EQ(n % eta(g, f).denominator(), 0);
  }
}

TEST(Tabulate, MatchesPointwiseEvaluation) {
  const MultiGraph g = k4();
  for (SetFunction fn : {SetFunction::rho, SetFunction::rho_star, SetFunction::eta}) {
    const auto table = tabulate(fn, g);
    ASSERT_EQ(table.size(), 64u);
    for (std::uint64_t x = 0; x < 64; ++x) EXPECT_EQ(table[x], oracle::evaluate_by_search(fn, g, mask(6, x)));
  }
}

TEST(Submodularity, SampledAndExhaustive) {
  EXPECT_TRUE(check_submodular(triangle(), 1000, 1).ok());
  EXPECT_TRUE(check_submodular(triangle(), 1000, 1, SetFunction::rho_star).ok());
  const auto full = check_submodular_exhaustive(k4());
  EXPECT_TRUE(full.ok());
  EXPECT_EQ(full.pairs_checked, 64u * 64u);
  EXPECT_TRUE(check_submodular_exhaustive(k4(), SetFunction::rho_star).ok());
}

TEST(Submodularity, ModularOnChains) {
  const MultiGraph g = hexagon();
  const EdgeSet x = mask(6, 0b000011), y = mask(6, 0b001111);
  EXPECT_EQ(rho(g, x) + rho(g, y), rho(g, x & y) + rho(g, x | y));
}

TEST(MatroidAxioms, Corpus) {
  for (const auto& [name, g] : corpus::small_graphs()) {
    const AxiomReport r = check_matroid_axioms(g);
    EXPECT_TRUE(r.ok()) << name << ": " << r.first_failure()->axiom;
    bool skipped_i1 = false;
    for (const auto& a : r.results) skipped_i1 |= a.status == AxiomStatus::skipped;
    EXPECT_TRUE(skipped_i1);
  }
  const MultiGraph big(2, std::vector<Edge>(13, Edge{0, 1}));
  EXPECT_THROW(check_matroid_axioms(big, 20), std::length_error);
}

TEST(EdgeMeasure, AdditiveAndRoundTrips) {
  const EdgeMeasure alpha({Rational(1, 2), Rational(0), Rational(3, 4)});
  const EdgeSet a = mask(3, 0b011), b = mask(3, 0b110);
  EXPECT_EQ(alpha(a | b) + alpha(a & b), alpha(a) + alpha(b));
  EXPECT_EQ(parse_edge_measure(serialize_edge_measure(alpha)), alpha);
  EXPECT_THROW(EdgeMeasure({Rational(-1)}), std::invalid_argument);
}

TEST(Minorizing, Examples) {
  const MultiGraph g = triangle();
  EXPECT_TRUE(is_minorizing(g, EdgeMeasure::restricted_eta(g, mask(3, 0b011)), true));
  EXPECT_FALSE(is_minorizing(g, EdgeMeasure::uniform(3, Rational(1, 3)), false));
  const EdgeMeasure zero = EdgeMeasure::uniform(3, Rational(0));
  EXPECT_TRUE(is_minorizing(g, zero, false));
  EXPECT_FALSE(is_minorizing(g, zero, true));
}

// A base measure of rho complements to a base measure of the cocycle rank.
TEST(Minorizing, ComplementationOnSpanningTrees) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    const MultiGraph g = oracle::random_multigraph(rng, 6, 8);
    oracle::for_each_spanning_forest(g, [&](const EdgeSet& f) {
      const EdgeMeasure alpha = EdgeMeasure::restricted_eta(g, f);
      EXPECT_TRUE(is_minorizing(g, alpha, true));
      EXPECT_TRUE(is_minorizing(g, alpha.complement_in(g), true, SetFunction::rho_star));
    });
    // A non-spanning set fails on one side, and so does its complement.
    const EdgeSet f = oracle::random_subset(g.edge_count(), rng);
    const EdgeMeasure alpha = EdgeMeasure::restricted_eta(g, f);
    EXPECT_EQ(is_minorizing(g, alpha, true),
              is_minorizing(g, alpha.complement_in(g), true, SetFunction::rho_star));
  }
}

TEST(FiniteComponentGraphing, Examples) {
  FiniteComponentGraphing single{{{triangle(), Rational(1)}}};
  const std::vector<EdgeSet> full{EdgeSet::full(3)};
  EXPECT_EQ(graphing_rho(single, full), Rational(2, 3));

  FiniteComponentGraphing two{{{MultiGraph(2, {{0, 1}}), Rational(1, 2)}, {triangle(), Rational(1, 2)}}};
  const std::vector<EdgeSet> both{EdgeSet::full(1), EdgeSet::full(3)};
  EXPECT_EQ(graphing_rho(two, both), Rational(3, 5));
  const std::vector<EdgeSet> none{EdgeSet(1), EdgeSet(3)};
  EXPECT_EQ(graphing_rho(two, none), Rational(0));

  FiniteComponentGraphing bad{{{MultiGraph(2, {}), Rational(1)}}};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  EXPECT_THROW(graphing_rho(two, full), std::invalid_argument);
}
