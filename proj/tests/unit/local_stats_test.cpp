#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "matroid_limits/graphgen.hpp"
#include "matroid_limits/local_stats.hpp"
#include "oracles.hpp"

using namespace mlim;

namespace {

MultiGraph relabel(const MultiGraph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.v], perm[e.u]});
  std::reverse(edges.begin(), edges.end());
  return MultiGraph(g.vertex_count(), std::move(edges));
}

}  // namespace

TEST(Ball, Examples) {
  const MultiGraph c6 = cycle_graph(6);
  const RootedBall r0 = ball(c6, 3, 0);
  EXPECT_EQ(r0.graph.vertex_count(), 1u);
  EXPECT_EQ(r0.graph.edge_count(), 0u);

  const RootedBall r1 = ball(c6, 3, 1);
  EXPECT_EQ(r1.graph.vertex_count(), 3u);
  EXPECT_EQ(r1.graph.edge_count(), 2u);
  EXPECT_EQ(r1.root, 0u);
  EXPECT_EQ(r1.original_ids.front(), 3u);
  EXPECT_EQ(canonical_code(r1), canonical_code(path_graph(3), 1));

  const RootedBall whole = ball(c6, 0, 5);
  EXPECT_EQ(whole.graph.vertex_count(), 6u);
  EXPECT_EQ(whole.graph.edge_count(), 6u);
}

TEST(Ball, RestrictsColoursAndKeepsInducedEdges) {
  const MultiGraph g(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {1, 1}});
  const RootedBall b = ball(g, 0, 1, {5, 6, 7, 8});
  EXPECT_EQ(b.graph.vertex_count(), 3u);
  EXPECT_EQ(b.graph.edge_count(), 4u);  // triangle plus the loop at 1
  EXPECT_EQ(b.colors, (VertexColors{5, 6, 7}));
}

TEST(CanonicalCode, Examples) {
  const MultiGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const MultiGraph star2(4, {{3, 2}, {3, 0}, {1, 3}});
  EXPECT_EQ(canonical_code(star, 0), canonical_code(star2, 3));
  EXPECT_NE(canonical_code(path_graph(3), 1), canonical_code(path_graph(3), 0));
  EXPECT_NE(canonical_code(path_graph(3), 0, {0, 0, 0}), canonical_code(path_graph(3), 0, {1, 0, 0}));
  const BallCode c = canonical_code(star, 1);
  EXPECT_EQ(BallCode::from_hex(c.hex()), c);
  EXPECT_THROW(BallCode::from_hex("abc"), std::invalid_argument);
}

// Multigraphs with loops and parallel edges on up to three vertices, two colours.
TEST(CanonicalCode, SmallMultigraphCatalogMatchesBruteForce) {
  std::map<BallCode, std::vector<std::uint32_t>> form_of_code;
  std::map<std::vector<std::uint32_t>, BallCode> code_of_form;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<Edge> slots;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a; b < n; ++b) slots.push_back({a, b});
    }
    std::vector<std::uint32_t> mult(slots.size(), 0);
    while (true) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        for (std::uint32_t j = 0; j < mult[i]; ++j) edges.push_back(slots[i]);
      }
      const MultiGraph g(n, edges);
      for (std::uint64_t cs = 0; cs < (std::uint64_t{1} << n); ++cs) {
        std::vector<std::uint32_t> colors(n);
        for (Vertex v = 0; v < n; ++v) colors[v] = (cs >> v) & 1u;
        const BallCode code = canonical_code(g, 0, colors);
        const auto form = oracle::rooted_form(g, 0, colors);
        auto [a, fresh] = form_of_code.emplace(code, form);
        EXPECT_TRUE(fresh || a->second == form);
        auto [b, fresh2] = code_of_form.emplace(form, code);
        EXPECT_TRUE(fresh2 || b->second == code);
      }
      std::size_t i = 0;
      while (i < mult.size() && ++mult[i] == 3) mult[i++] = 0;
      if (i == mult.size()) break;
    }
  }
  EXPECT_EQ(form_of_code.size(), code_of_form.size());
}

TEST(CanonicalCode, InvariantUnderRelabelling) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 30; ++t) {
    const MultiGraph g = random_regular(16, 3, t);
    std::vector<Vertex> perm(16);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const MultiGraph h = relabel(g, perm);
    VertexColors colors(16), moved(16);
    for (Vertex v = 0; v < 16; ++v) colors[v] = rng() % 2;
    for (Vertex v = 0; v < 16; ++v) moved[perm[v]] = colors[v];
    for (std::uint32_t r = 1; r <= 3; ++r) {
      const Vertex v = t % 16;
      EXPECT_EQ(canonical_code(ball(g, v, r, colors)), canonical_code(ball(h, perm[v], r, moved)));
    }
    EXPECT_EQ(local_distribution(g, 2, colors), local_distribution(h, 2, moved));
  }
}

// Codes of whole small graphs rooted anywhere, compared with the oracle.
TEST(CanonicalCode, RandomGraphsAgreeWithOracle) {
  std::mt19937_64 rng(43);
  std::map<BallCode, std::vector<std::uint32_t>> form_of_code;
  std::map<std::vector<std::uint32_t>, BallCode> code_of_form;
  for (int t = 0; t < 400; ++t) {
    const MultiGraph g = oracle::random_multigraph(rng, 7, 9);
    const Vertex root = static_cast<Vertex>(rng() % g.vertex_count());
    VertexColors colors(g.vertex_count());
    for (auto& c : colors) c = rng() % 2;
    const BallCode code = canonical_code(g, root, colors);
    const auto form = oracle::rooted_form(g, root, colors);
    auto [a, fresh] = form_of_code.emplace(code, form);
    EXPECT_TRUE(fresh || a->second == form);
    auto [b, fresh2] = code_of_form.emplace(form, code);
    EXPECT_TRUE(fresh2 || b->second == code);
  }
}

TEST(LocalDistribution, Examples) {
  const auto cyc = local_distribution(cycle_graph(9), 1);
  ASSERT_EQ(cyc.size(), 1u);
  EXPECT_EQ(cyc.begin()->first, canonical_code(path_graph(3), 1));
  EXPECT_EQ(cyc.begin()->second, Rational(1));

  const MultiGraph tri_k2(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
  const auto d = local_distribution(tri_k2, 1);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.at(canonical_code(MultiGraph(3, {{0, 1}, {1, 2}, {2, 0}}), 0)), Rational(3, 5));
  EXPECT_EQ(d.at(canonical_code(path_graph(2), 0)), Rational(2, 5));

  EXPECT_EQ(local_distribution(tri_k2, 0).size(), 1u);
}

TEST(LocalDistribution, SumsToOneWithDenominatorsDividingN) {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 50; ++t) {
    const MultiGraph g = oracle::random_multigraph(rng, 12, 16);
    const auto n = static_cast<std::int64_t>(g.vertex_count());
    for (std::uint32_t r = 0; r <= 2; ++r) {
      Rational total(0);
      for (const auto& [code, p] : local_distribution(g, r)) {
        total += p;
        EXPECT_EQ(n % p.denominator(), 0);
      }
      EXPECT_EQ(total, Rational(1));
    }
  }
}

TEST(LocalDistribution, VertexTransitiveGivesPointMass) {
  for (std::uint32_t r = 0; r <= 3; ++r) {
    EXPECT_EQ(local_distribution(cycle_graph(11), r).size(), 1u);
    EXPECT_EQ(local_distribution(torus_graph(5, 6), r).size(), 1u);
  }
}

TEST(TvDistance, ExamplesAndMetric) {
  const auto c6 = local_distribution(cycle_graph(6), 1);
  const auto c7 = local_distribution(cycle_graph(7), 1);
  EXPECT_EQ(tv_distance(c6, c7), Rational(0));
  const auto p3 = local_distribution(path_graph(3), 1);
  EXPECT_EQ(tv_distance(c6, local_distribution(MultiGraph(2, {}), 1)), Rational(1));
  EXPECT_EQ(tv_distance(p3, p3), Rational(0));

  std::mt19937_64 rng(53);
  for (int t = 0; t < 30; ++t) {
    std::vector<LocalDistribution> d;
    for (int i = 0; i < 3; ++i) d.push_back(local_distribution(oracle::random_multigraph(rng, 8, 10), 1));
    EXPECT_EQ(tv_distance(d[0], d[1]), tv_distance(d[1], d[0]));
    EXPECT_LE(tv_distance(d[0], d[2]), tv_distance(d[0], d[1]) + tv_distance(d[1], d[2]));
    EXPECT_LE(tv_distance(d[0], d[1]), Rational(1));
  }
}

TEST(ColouredStatistics, SamplingInsideEnumeration) {
  const MultiGraph k3(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto all = enumerate_qkr(k3, 2, 1);
  // Direct enumeration of the 8 colourings.
  std::vector<LocalDistribution> direct;
  for (std::uint32_t cs = 0; cs < 8; ++cs) {
    direct.push_back(local_distribution(k3, 1, {cs & 1u, (cs >> 1) & 1u, (cs >> 2) & 1u}));
  }
  std::sort(direct.begin(), direct.end());
  direct.erase(std::unique(direct.begin(), direct.end()), direct.end());
  EXPECT_EQ(all, direct);

  const auto sampled = sample_qkr(k3, 2, 1, 64, 7);
  for (const auto& d : sampled) EXPECT_TRUE(std::find(all.begin(), all.end(), d) != all.end());
  EXPECT_EQ(sampled, sample_qkr(k3, 2, 1, 64, 7));
  EXPECT_EQ(sample_qkr(k3, 1, 1, 5, 1), (std::vector<LocalDistribution>{local_distribution(k3, 1)}));
  EXPECT_EQ(hausdorff_tv(all, all), 0.0);
  EXPECT_THROW(enumerate_qkr(cycle_graph(30), 2, 1), std::length_error);
}

TEST(Subdivision, MidpointsCarryEdgeColours) {
  const MultiGraph g(2, {{0, 1}, {1, 1}});
  const Subdivision s = subdivide_edge_coloring(g, EdgePartition({1, 0}, 2));
  EXPECT_EQ(s.graph.vertex_count(), 4u);
  EXPECT_EQ(s.graph.edge_count(), 4u);
  EXPECT_EQ(s.colors, (VertexColors{2, 2, 1, 0}));
  EXPECT_EQ(s.graph.degree(3), 2u);
}
