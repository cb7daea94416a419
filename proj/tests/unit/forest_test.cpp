#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "corpus.hpp"
#include "matroid_limits/forest.hpp"
#include "matroid_limits/planar.hpp"
#include "matroid_limits/rank.hpp"
#include "oracles.hpp"

using namespace mlim;

namespace {

MultiGraph triangle() { return MultiGraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

std::vector<EdgeId> identity(std::size_t m) {
  std::vector<EdgeId> out(m);
  std::iota(out.begin(), out.end(), EdgeId{0});
  return out;
}

std::vector<EdgeId> shuffled(std::size_t m, std::mt19937_64& rng) {
  auto out = identity(m);
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

std::vector<Rational> small_key(std::size_t m, std::mt19937_64& rng) {
  std::vector<Rational> key(m);
  for (auto& x : key) x = Rational(static_cast<std::int64_t>(rng() % 4));
  return key;
}

}  // namespace

TEST(WeightList, OrderAndReverse) {
  const WeightList w({{Rational(1), Rational(2), Rational(1)}}, {0, 2, 1});
  EXPECT_TRUE(w.prefers(1, 0));
  EXPECT_TRUE(w.prefers(2, 0));  // tie on the key, 2 comes later
  const WeightList r = w.reversed();
  EXPECT_TRUE(r.prefers(0, 2));
  EXPECT_TRUE(r.prefers(0, 1));
  EXPECT_THROW(WeightList({{Rational(1)}}, {0, 1}), std::invalid_argument);
  EXPECT_THROW(WeightList::from_order({0, 0}), std::invalid_argument);
}

TEST(Invasion, TriangleDropsLightestEdge) {
  const WeightList w = WeightList::single({Rational(3), Rational(2), Rational(1)});
  const ForestResult res = invasion(triangle(), w);
  EXPECT_EQ(res.forest.ids(), (std::vector<EdgeId>{0, 1}));
  EXPECT_TRUE(trace_replays(triangle(), res));
  EXPECT_EQ(res.rounds, 1u);
}

TEST(Invasion, EdgelessAndLoops) {
  const MultiGraph empty(4, {});
  const ForestResult a = invasion(empty, WeightList::from_order({}));
  EXPECT_EQ(a.forest.count(), 0u);
  EXPECT_EQ(a.rounds, 0u);
  EXPECT_TRUE(verify_token_ledger(a, empty).ok());

  const MultiGraph loops(2, {{0, 0}, {0, 1}, {1, 1}});
  const ForestResult b = invasion(loops, WeightList::from_order({1, 0, 2}));
  EXPECT_EQ(b.forest.ids(), (std::vector<EdgeId>{1}));
}

TEST(Invasion, EqualKeysAreDeterministic) {
  const MultiGraph g = corpus::small_graphs().front().graph;
  const WeightList w = WeightList::single(std::vector<Rational>(g.edge_count(), Rational(1)));
  EXPECT_EQ(invasion(g, w).forest, invasion(g, w).forest);
}

// Maximal forests against brute force and Kruskal, with one and two keys.
TEST(Invasion, MatchesBruteForceAndKruskal) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 150; ++t) {
    const MultiGraph g = oracle::random_multigraph(rng, 7, 9);
    const std::size_t m = g.edge_count();
    std::vector<std::vector<Rational>> keys{small_key(m, rng)};
    if (t % 2) keys.push_back(small_key(m, rng));
    const auto tie = shuffled(m, rng);
    const WeightList w(keys, tie);
    const ForestResult res = invasion(g, w);
    const auto rank = oracle::order_ranks(keys, tie);
    EXPECT_EQ(res.forest, oracle::best_forest_brute(g, rank));
    EXPECT_EQ(res.forest, oracle::kruskal(g, rank, true));
    EXPECT_EQ(res.forest, free_forest_by_cycles(g, w));
    EXPECT_TRUE(trace_replays(g, res));
    EXPECT_EQ(invasion(g, w.reversed()).forest, oracle::kruskal(g, rank, false));
  }
}

TEST(TokenLedger, PathExample) {
  const MultiGraph p(3, {{0, 1}, {1, 2}});
  const ForestResult res = invasion(p, WeightList::from_order({0, 1}));
  for (const Rational& paid : res.ledger.vertex_paid) EXPECT_EQ(paid, Rational(2, 3));
  for (const Rational& got : res.ledger.edge_received) EXPECT_EQ(got, Rational(1));
  EXPECT_TRUE(res.ledger.anomalies.empty());
  EXPECT_TRUE(verify_token_ledger(res, p).ok());
}

TEST(TokenLedger, RandomGraphs) {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 100; ++t) {
    const MultiGraph g = oracle::random_multigraph(rng, 20, 30);
    const ForestResult res = invasion(g, WeightList::from_order(shuffled(g.edge_count(), rng)));
    const CheckReport r = verify_token_ledger(res, g);
    EXPECT_TRUE(r.ok()) << r.first_failure();
    Rational total(0);
    for (const Rational& x : res.ledger.vertex_paid) total += x;
    EXPECT_EQ(total, Rational(static_cast<std::int64_t>(rank_abs(g, EdgeSet::full(g.edge_count())))));
  }
}

TEST(LayerProperty, HoldsForSingleKeys) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 100; ++t) {
    const MultiGraph g = oracle::random_multigraph(rng, 10, 14);
    const WeightList w(std::vector<std::vector<Rational>>{small_key(g.edge_count(), rng)},
                       shuffled(g.edge_count(), rng));
    const CheckReport r = check_layer_property(g, w, invasion(g, w));
    EXPECT_TRUE(r.ok()) << r.first_failure();
  }
  const WeightList two({{Rational(1), Rational(1)}, {Rational(1), Rational(2)}}, {0, 1});
  const MultiGraph k2(2, {{0, 1}, {0, 1}});
  EXPECT_THROW(check_layer_property(k2, two, invasion(k2, two)), std::invalid_argument);
}

TEST(ExtendForest, Examples) {
  const MultiGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const WeightList w = WeightList::single({Rational(4), Rational(3), Rational(2), Rational(1)});
  EXPECT_EQ(extend_forest(c4, EdgeSet(4), w), invasion(c4, w).forest);
  const EdgeSet spanning = EdgeSet::from_mask(4, 0b1110);
  EXPECT_EQ(extend_forest(c4, spanning, w), spanning);
  // Seeded with the lightest edge, the forest keeps it and drops the next lightest.
  EXPECT_EQ(extend_forest(c4, EdgeSet::from_mask(4, 0b1000), w).to_mask(), 0b1011u);
  EXPECT_THROW(extend_forest(c4, EdgeSet::full(4), w), std::invalid_argument);
}

TEST(WiredFree, PathWithBothEndsWired) {
  const MultiGraph p(3, {{0, 1}, {1, 2}});
  const WeightList w = WeightList::from_order({1, 0});  // edge 0 preferred
  const WiredFree a = wired_free_forests(p, BoundarySpec({0, 2}), w);
  EXPECT_EQ(a.free.to_mask(), 0b11u);
  EXPECT_EQ(a.wired.to_mask(), 0b01u);
  const WiredFree b = wired_free_forests(p, BoundarySpec{}, w);
  EXPECT_EQ(b.wired, b.free);
}

TEST(WiredFree, WiredInsideFreeOnGrids) {
  std::mt19937_64 rng(73);
  const PlanarMap grid = grid_map(3, 3);
  for (int t = 0; t < 20; ++t) {
    const WeightList w = WeightList::from_order(shuffled(grid.graph().edge_count(), rng));
    const WiredFree wf = wired_free_forests(grid, w);
    EXPECT_TRUE(wf.wired.is_subset_of(wf.free));
    EXPECT_EQ(wf.free.count(), 8u);
    // The ring of 8 boundary vertices collapses to one: 2 vertices left.
    EXPECT_EQ(wf.wired.count(), 1u);
  }
}

// Every spanning forest is the unique maximum for the weights +1 on F, -1 off F.
TEST(Exposedness, IndicatorWeightsRecoverTheForest) {
  std::mt19937_64 rng(79);
  for (int t = 0; t < 30; ++t) {
    const MultiGraph g = oracle::random_multigraph(rng, 6, 8);
    oracle::for_each_spanning_forest(g, [&](const EdgeSet& f) {
      std::vector<Rational> key(g.edge_count(), Rational(-1));
      for (EdgeId e : f.ids()) key[e] = Rational(1);
      const WeightList w(std::vector<std::vector<Rational>>{key}, shuffled(g.edge_count(), rng));
      EXPECT_EQ(invasion(g, w).forest, f);
    });
  }
}
