#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "matroid_limits/graphgen.hpp"
#include "matroid_limits/local_stats.hpp"
#include "oracles.hpp"

using namespace mlim;

TEST(Generate, DeterministicPerSpec) {
  GenSpec rr;
  rr.family = Family::random_regular;
  rr.n = 20;
  rr.seed = 5;
  EXPECT_EQ(generate(rr).graph, generate(rr).graph);
  rr.seed = 6;
  const MultiGraph other = generate(rr).graph;
  rr.seed = 5;
  EXPECT_NE(generate(rr).graph, other);

  GenSpec patch;
  patch.family = Family::hyperbolic_patch;
  patch.p = 4;
  patch.q = 5;
  patch.layers = 1;
  const Generated g = generate(patch);
  ASSERT_TRUE(g.map.has_value());
  EXPECT_EQ(g.map->graph(), g.graph);
  EXPECT_FALSE(g.map->graph().edges().empty());
}

TEST(Generate, RejectsInfeasibleParameters) {
  GenSpec odd;
  odd.family = Family::random_regular;
  odd.n = 7;
  odd.degree = 3;
  EXPECT_THROW(generate(odd), std::invalid_argument);
  GenSpec dbl;
  dbl.family = Family::doubled;
  EXPECT_THROW(generate(dbl), std::invalid_argument);
  EXPECT_THROW(cycle_graph(0), std::invalid_argument);
  EXPECT_THROW(parse_family("pentagon"), std::invalid_argument);
}

TEST(Family, NamesRoundTrip) {
  for (Family f : {Family::cycle, Family::path, Family::complete, Family::grid, Family::torus,
                   Family::random_regular, Family::doubled, Family::hyperbolic_patch,
                   Family::tetrahedron, Family::random_planar}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
}

TEST(RandomRegular, SimpleAndRegular) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const MultiGraph g = random_regular(30, 3, seed);
    EXPECT_EQ(g.edge_count(), 45u);
    for (Vertex v = 0; v < 30; ++v) EXPECT_EQ(g.degree(v), 3u);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const Edge& e : g.edges()) {
      EXPECT_FALSE(e.is_loop());
      pairs.push_back(std::minmax(e.u, e.v));
    }
    std::sort(pairs.begin(), pairs.end());
    EXPECT_EQ(std::adjacent_find(pairs.begin(), pairs.end()), pairs.end());
    EXPECT_GE(*girth(g), 3u);
  }
}

TEST(Doubled, TwoCopiesSameLocalStatistics) {
  const MultiGraph g = random_regular(10, 3, 1);
  const MultiGraph d = doubled(g);
  EXPECT_EQ(d.vertex_count(), 20u);
  EXPECT_EQ(d.edge_count(), 30u);
  for (std::uint32_t r = 0; r <= 2; ++r) EXPECT_EQ(local_distribution(d, r), local_distribution(g, r));
  EXPECT_EQ(component_count(d, EdgeSet::full(30)), 2 * component_count(g, EdgeSet::full(15)));
}

TEST(Girth, Examples) {
  EXPECT_EQ(girth(cycle_graph(6)), 6u);
  EXPECT_EQ(girth(path_graph(5)), std::nullopt);
  EXPECT_EQ(girth(complete_graph(4)), 3u);
  EXPECT_EQ(girth(MultiGraph(2, {{0, 1}, {1, 0}})), 2u);
  EXPECT_EQ(girth(MultiGraph(2, {{0, 1}, {1, 1}})), 1u);
  EXPECT_EQ(girth(torus_graph(4, 5)), 4u);
}

TEST(Expansion, ExactMatchesBruteForceAndSpectralBrackets) {
  std::mt19937_64 rng(89);
  for (int t = 0; t < 40; ++t) {
    const MultiGraph g = oracle::random_multigraph(rng, 9, 14);
    if (g.vertex_count() < 2) continue;
    const ExpansionEstimate ex = estimate_edge_expansion(g, ExpansionMethod::exact);
    ASSERT_TRUE(ex.exact.has_value());
    EXPECT_EQ(*ex.exact, oracle::expansion_brute(g));
    const ExpansionEstimate sp = estimate_edge_expansion(g, ExpansionMethod::spectral);
    const double h = boost::rational_cast<double>(*ex.exact);
    EXPECT_LE(sp.lower, h + 1e-9);
    EXPECT_GE(sp.upper, h - 1e-9);
  }
  EXPECT_EQ(*estimate_edge_expansion(cycle_graph(8), ExpansionMethod::exact).exact, Rational(1, 2));
  EXPECT_THROW(estimate_edge_expansion(cycle_graph(24), ExpansionMethod::exact), std::length_error);
}
