#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "matroid_limits/graph.hpp"
#include "matroid_limits/rational.hpp"

namespace mlim {

class PlanarMap;

/// Lexicographic edge order: keys[0] first, then keys[1], ..., and finally
/// the tie-break permutation. `tie_break` lists edge ids from least to most
/// preferred, so the last entry wins every remaining tie.
class WeightList {
 public:
  WeightList() = default;
  WeightList(std::vector<std::vector<Rational>> keys, std::vector<EdgeId> tie_break);

  /// Single key with the identity tie-break (higher edge id preferred).
  static WeightList single(std::vector<Rational> key);
  /// No keys; the order is the tie-break permutation alone.
  static WeightList from_order(std::vector<EdgeId> tie_break);

  std::size_t edge_count() const { return tie_break_.size(); }
  std::size_t key_count() const { return keys_.size(); }
  const std::vector<Rational>& key(std::size_t level) const { return keys_[level]; }
  const std::vector<EdgeId>& tie_break() const { return tie_break_; }
  std::size_t position(EdgeId e) const { return position_[e]; }

  /// Strict total order on edges; `greater` means preferred by the invasion.
  std::strong_ordering compare(EdgeId a, EdgeId b) const;
  bool prefers(EdgeId a, EdgeId b) const { return compare(a, b) == std::strong_ordering::greater; }

  /// The opposite order: keys negated and tie-break reversed. Running the
  /// invasion under the reversed order yields a minimal spanning forest.
  WeightList reversed() const;

 private:
  std::vector<std::vector<Rational>> keys_;
  std::vector<EdgeId> tie_break_;
  std::vector<std::size_t> position_;
};

struct InvasionStep {
  std::size_t round = 0;
  Vertex component = 0;  // smallest vertex of the choosing component
  EdgeId edge = 0;
};

/// Token accounting of one invasion run. Every vertex starts by handing one
/// token to its singleton component; components pay one token per chosen edge;
/// the doubly paid edge of every merged component hands one back; components
/// that span their connected component split their token among their vertices.
struct TokenLedger {
  std::vector<Rational> vertex_paid;
  std::vector<Rational> edge_received;
  /// Rounds where a merged component did not contain exactly one doubly paid edge.
  std::vector<std::string> anomalies;
};

struct ForestResult {
  EdgeSet forest;
  std::vector<InvasionStep> trace;
  TokenLedger ledger;
  std::size_t rounds = 0;
};

/// Simultaneous-round invasion: in every round each component that does not
/// yet span its connected component picks its most preferred leaving edge and
/// all picks are added at once. Produces the maximal spanning forest for the
/// order defined by `w`.
ForestResult invasion(const MultiGraph& g, const WeightList& w);

/// Replays the trace and checks it yields the forest.
bool trace_replays(const MultiGraph& g, const ForestResult& res);

struct CheckReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  std::string first_failure() const { return failures.empty() ? std::string{} : failures.front(); }
};

/// Every forest edge received exactly one token, every vertex of a connected
/// component of size s paid (s-1)/s, and the total paid equals rank_abs(E).
CheckReport verify_token_ledger(const ForestResult& res, const MultiGraph& g);

/// For a single-key run: |F & {g >= t}| == rank_abs({g >= t}) for every
/// threshold t among the key values. Throws std::invalid_argument for L != 1.
CheckReport check_layer_property(const MultiGraph& g, const WeightList& w, const ForestResult& res);

/// Invasion started from the components of the acyclic set `seed`.
/// Throws std::invalid_argument if `seed` contains a cycle.
EdgeSet extend_forest(const MultiGraph& g, const EdgeSet& seed, const WeightList& w);

/// Maximal spanning forest by the cycle criterion: an edge is removed iff it
/// is the minimum of some cycle, i.e. its endpoints are joined by strictly
/// preferred edges (loops are always removed).
EdgeSet free_forest_by_cycles(const MultiGraph& g, const WeightList& w);

struct WiredFree {
  EdgeSet wired;
  EdgeSet free;
};

/// free: maximal spanning forest of g. wired: maximal spanning forest of g
/// with the boundary contracted to a single vertex, pulled back to g's edge ids.
WiredFree wired_free_forests(const MultiGraph& g, const BoundarySpec& b, const WeightList& w);
/// As above with the vertices of the map's outer face as the boundary.
WiredFree wired_free_forests(const PlanarMap& map, const WeightList& w);

}  // namespace mlim
