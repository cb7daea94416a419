#include "matroid_limits/forest.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "matroid_limits/planar.hpp"
#include "matroid_limits/rank.hpp"

namespace mlim {

WeightList::WeightList(std::vector<std::vector<Rational>> keys, std::vector<EdgeId> tie_break)
    : keys_(std::move(keys)), tie_break_(std::move(tie_break)), position_(tie_break_.size()) {
  const std::size_t m = tie_break_.size();
  std::vector<bool> seen(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const EdgeId e = tie_break_[i];
    if (e >= m || seen[e]) throw std::invalid_argument("tie-break must be a permutation of edge ids");
    seen[e] = true;
    position_[e] = i;
  }
  for (const auto& key : keys_) {
    if (key.size() != m) throw std::invalid_argument("every weight vector must cover all edges");
  }
}

WeightList WeightList::single(std::vector<Rational> key) {
  std::vector<EdgeId> order(key.size());
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::vector<std::vector<Rational>> keys;
  keys.push_back(std::move(key));
  return WeightList(std::move(keys), std::move(order));
}

WeightList WeightList::from_order(std::vector<EdgeId> tie_break) {
  return WeightList({}, std::move(tie_break));
}

std::strong_ordering WeightList::compare(EdgeId a, EdgeId b) const {
  for (const auto& key : keys_) {
    if (key[a] < key[b]) return std::strong_ordering::less;
    if (key[b] < key[a]) return std::strong_ordering::greater;
  }
  return position_[a] <=> position_[b];
}

WeightList WeightList::reversed() const {
  auto keys = keys_;
  for (auto& key : keys) {
    for (auto& x : key) x = -x;
  }
  std::vector<EdgeId> order(tie_break_.rbegin(), tie_break_.rend());
  return WeightList(std::move(keys), std::move(order));
}

namespace {

ForestResult run_invasion(const MultiGraph& g, const WeightList& w, const EdgeSet* seed) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (w.edge_count() != m) throw std::invalid_argument("weight list does not match the graph");

  const Components ecomp = components(g, EdgeSet::full(m));
  DisjointSets ds(n);
  ForestResult res;
  res.forest = EdgeSet(m);
  const bool track_ledger = seed == nullptr;

  if (seed) {
    for (EdgeId e : seed->ids()) {
      if (!ds.unite(g.edge(e).u, g.edge(e).v)) {
        throw std::invalid_argument("seed edge set contains a cycle");
      }
      res.forest.insert(e);
    }
  }

  // Tokens are indexed by the current root of each component.
  std::vector<Rational> token;
  if (track_ledger) {
    res.ledger.vertex_paid.assign(n, Rational(1));
    res.ledger.edge_received.assign(m, Rational(0));
    token.assign(n, Rational(1));
  }

  auto spans = [&](Vertex root) { return ds.size_of(root) == ecomp.size_of_vertex(root); };

  auto redistribute_spanning = [&](const std::vector<bool>& candidate_root) {
    // Members grouped by root; only roots flagged as candidates are considered.
    std::vector<std::vector<Vertex>> members(n);
    for (Vertex v = 0; v < n; ++v) {
      const Vertex r = ds.find(v);
      if (candidate_root[r]) members[r].push_back(v);
    }
    for (Vertex r = 0; r < n; ++r) {
      if (!candidate_root[r] || !spans(r) || token[r] == Rational(0)) continue;
      const Rational share = token[r] / static_cast<std::int64_t>(members[r].size());
      for (Vertex v : members[r]) res.ledger.vertex_paid[v] -= share;
      token[r] = 0;
    }
  };

  if (track_ledger) {
    std::vector<bool> all_roots(n, true);
    redistribute_spanning(all_roots);
  }

  for (std::size_t round = 1;; ++round) {
    std::vector<std::optional<EdgeId>> best(n);
    for (EdgeId e = 0; e < m; ++e) {
      const Edge& ed = g.edge(e);
      const Vertex ra = ds.find(ed.u);
      const Vertex rb = ds.find(ed.v);
      if (ra == rb) continue;
      for (Vertex r : {ra, rb}) {
        if (spans(r)) continue;
        if (!best[r] || w.prefers(e, *best[r])) best[r] = e;
      }
    }

    std::vector<Vertex> smallest(n, static_cast<Vertex>(n));
    for (Vertex v = 0; v < n; ++v) {
      const Vertex r = ds.find(v);
      smallest[r] = std::min(smallest[r], v);
    }
    std::vector<std::pair<Vertex, Vertex>> choosers;  // (representative, root)
    for (Vertex r = 0; r < n; ++r) {
      if (best[r]) choosers.emplace_back(smallest[r], r);
    }
    if (choosers.empty()) break;
    std::sort(choosers.begin(), choosers.end());
    res.rounds = round;

    std::vector<EdgeId> chosen;
    for (const auto& [rep, root] : choosers) {
      const EdgeId e = *best[root];
      res.trace.push_back({round, rep, e});
      chosen.push_back(e);
      if (track_ledger) {
        token[root] -= 1;
        res.ledger.edge_received[e] += 1;
      }
    }
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());

    std::vector<Vertex> old_roots;
    for (Vertex v = 0; v < n; ++v) {
      if (ds.find(v) == v) old_roots.push_back(v);
    }
    for (EdgeId e : chosen) {
      res.forest.insert(e);
      ds.unite(g.edge(e).u, g.edge(e).v);
    }
    if (!track_ledger) continue;

    std::vector<Rational> merged(n, Rational(0));
    for (Vertex r : old_roots) merged[ds.find(r)] += token[r];
    token = std::move(merged);

    std::vector<bool> touched(n, false);
    std::vector<std::size_t> doubly_paid(n, 0);
    for (EdgeId e : chosen) {
      const Vertex r = ds.find(g.edge(e).u);
      touched[r] = true;
      if (res.ledger.edge_received[e] == Rational(2)) {
        ++doubly_paid[r];
        res.ledger.edge_received[e] -= 1;
        token[r] += 1;
      }
    }
    for (Vertex r = 0; r < n; ++r) {
      if (touched[r] && doubly_paid[r] != 1) {
        res.ledger.anomalies.push_back("round " + std::to_string(round) + ": component of vertex " +
                                       std::to_string(r) + " has " + std::to_string(doubly_paid[r]) +
                                       " doubly paid edges");
      }
    }
    redistribute_spanning(touched);
  }
  return res;
}

}  // namespace

ForestResult invasion(const MultiGraph& g, const WeightList& w) { return run_invasion(g, w, nullptr); }

bool trace_replays(const MultiGraph& g, const ForestResult& res) {
  DisjointSets ds(g.vertex_count());
  EdgeSet forest(g.edge_count());
  std::size_t i = 0;
  while (i < res.trace.size()) {
    const std::size_t round = res.trace[i].round;
    std::vector<EdgeId> picks;
    for (; i < res.trace.size() && res.trace[i].round == round; ++i) {
      const auto& step = res.trace[i];
      if (step.edge >= g.edge_count()) return false;
      const Edge& ed = g.edge(step.edge);
      const Vertex rc = ds.find(step.component);
      const Vertex ru = ds.find(ed.u);
      const Vertex rv = ds.find(ed.v);
      if (ru == rv || (rc != ru && rc != rv)) return false;
      picks.push_back(step.edge);
    }
    for (EdgeId e : picks) {
      forest.insert(e);
      ds.unite(g.edge(e).u, g.edge(e).v);
    }
  }
  return forest == res.forest;
}

CheckReport verify_token_ledger(const ForestResult& res, const MultiGraph& g) {
  CheckReport report;
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  const auto& ledger = res.ledger;
  if (ledger.vertex_paid.size() != n || ledger.edge_received.size() != m) {
    report.failures.push_back("ledger does not match the graph");
    return report;
  }
  for (const auto& a : ledger.anomalies) report.failures.push_back(a);

  for (EdgeId e = 0; e < m; ++e) {
    const Rational expected = res.forest.contains(e) ? Rational(1) : Rational(0);
    if (ledger.edge_received[e] != expected) {
      report.failures.push_back("edge " + std::to_string(e) + " received " +
                                to_string(ledger.edge_received[e]) + ", expected " + to_string(expected));
    }
  }
  const Components ecomp = components(g, EdgeSet::full(m));
  Rational total(0);
  for (Vertex v = 0; v < n; ++v) {
    const auto s = static_cast<std::int64_t>(ecomp.size_of_vertex(v));
    const Rational expected(s - 1, s);
    if (ledger.vertex_paid[v] != expected) {
      report.failures.push_back("vertex " + std::to_string(v) + " paid " +
                                to_string(ledger.vertex_paid[v]) + ", expected " + to_string(expected));
    }
    total += ledger.vertex_paid[v];
  }
  const auto rank = static_cast<std::int64_t>(rank_abs(g, EdgeSet::full(m)));
  if (total != rank) {
    report.failures.push_back("total paid " + to_string(total) + " != rank " + std::to_string(rank));
  }
  Rational received(0);
  for (const auto& r : ledger.edge_received) received += r;
  if (received != total) {
    report.failures.push_back("tokens received " + to_string(received) + " != tokens paid " +
                              to_string(total));
  }
  return report;
}

CheckReport check_layer_property(const MultiGraph& g, const WeightList& w, const ForestResult& res) {
  if (w.key_count() != 1) throw std::invalid_argument("layer property needs exactly one weight key");
  const auto& key = w.key(0);
  std::set<Rational> thresholds(key.begin(), key.end());
  CheckReport report;
  for (const auto& t : thresholds) {
    EdgeSet layer(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (key[e] >= t) layer.insert(e);
    }
    const auto in_forest = (res.forest & layer).count();
    const auto rank = rank_abs(g, layer);
    if (in_forest != rank) {
      report.failures.push_back("t=" + to_string(t) + ": |F & A_t| = " + std::to_string(in_forest) +
                                " but rank = " + std::to_string(rank));
    }
  }
  return report;
}

EdgeSet extend_forest(const MultiGraph& g, const EdgeSet& seed, const WeightList& w) {
  if (seed.universe() != g.edge_count()) throw std::invalid_argument("seed does not match the graph");
  return run_invasion(g, w, &seed).forest;
}

EdgeSet free_forest_by_cycles(const MultiGraph& g, const WeightList& w) {
  const std::size_t m = g.edge_count();
  if (w.edge_count() != m) throw std::invalid_argument("weight list does not match the graph");
  // Process edges from most to least preferred; an edge is the minimum of a
  // cycle iff its endpoints are already joined by the more preferred edges.
  std::vector<EdgeId> order(m);
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return w.prefers(a, b); });
  EdgeSet kept(m);
  DisjointSets preferred(g.vertex_count());
  for (EdgeId e : order) {
    const Edge& ed = g.edge(e);
    if (preferred.find(ed.u) != preferred.find(ed.v)) kept.insert(e);
    preferred.unite(ed.u, ed.v);
  }
  return kept;
}

WiredFree wired_free_forests(const MultiGraph& g, const BoundarySpec& b, const WeightList& w) {
  const Contraction wired = contract(g, b);
  WiredFree out;
  out.free = free_forest_by_cycles(g, w);
  const EdgeSet contracted = invasion(wired.graph, w).forest;
  out.wired = EdgeSet(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (contracted.contains(wired.edge_map[e])) out.wired.insert(e);
  }
  return out;
}

WiredFree wired_free_forests(const PlanarMap& map, const WeightList& w) {
  return wired_free_forests(map.graph(), outer_boundary(map), w);
}

}  // namespace mlim
