#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "matroid_limits/graph.hpp"
#include "matroid_limits/rank.hpp"
#include "matroid_limits/rational.hpp"

namespace mlim {

/// One k-quotient: coords[X] = phi(union of the classes in X), X a bitmask
/// over [k].
struct QuotientPoint {
  std::uint32_t k = 0;
  std::vector<Rational> coords;

  friend bool operator==(const QuotientPoint&, const QuotientPoint&) = default;
  friend std::strong_ordering operator<=>(const QuotientPoint& a, const QuotientPoint& b);
};

enum class QuotientMode { exact, sampled };

/// Finite set of quotients sharing k. Points are kept sorted and free of
/// duplicates; call normalize() after editing `points` directly.
struct QuotientSet {
  std::uint32_t k = 0;
  QuotientMode mode = QuotientMode::exact;
  std::vector<QuotientPoint> points;

  void normalize();
  bool contains(const QuotientPoint& p) const;
  std::size_t size() const { return points.size(); }
};

enum class Norm { sup, l1 };

QuotientPoint quotient(const MultiGraph& g, SetFunction fn, const EdgePartition& part);

/// Applies a permutation of the colour classes: class i becomes perm[i].
QuotientPoint permute_classes(const QuotientPoint& p, std::span<const std::uint32_t> perm);

/// Exact Q_k by visiting every k-colouring of the edges. For k = 2 edge 0 is
/// pinned to class 0 and the swapped point is added alongside. Throws
/// std::length_error when the number of colourings exceeds `budget`.
QuotientSet enumerate_qk(const MultiGraph& g, SetFunction fn, std::uint32_t k,
                         std::uint64_t budget = 10'000'000);

/// Exact Q_k by dynamic programming over the vertex order 0..n-1, carrying for
/// every union of classes the connectivity of the live vertices. Exponential
/// only in the number of live vertices, so long cycles and paths are cheap.
/// Throws std::length_error when more than `budget` states are alive.
QuotientSet frontier_qk(const MultiGraph& g, SetFunction fn, std::uint32_t k,
                        std::uint64_t budget = 10'000'000);

/// Quotients of `samples` uniformly random colourings.
QuotientSet sample_qk(const MultiGraph& g, SetFunction fn, std::uint32_t k, std::size_t samples,
                      std::uint64_t rng_seed);

Rational distance(const QuotientPoint& a, const QuotientPoint& b, Norm norm = Norm::sup);

/// Hausdorff distance. Throws std::invalid_argument on k mismatch or an empty set.
Rational hausdorff_exact(const QuotientSet& a, const QuotientSet& b, Norm norm = Norm::sup);
double hausdorff(const QuotientSet& a, const QuotientSet& b, Norm norm = Norm::sup);

/// Distances between consecutive sets of the sequence.
std::vector<double> profile_cauchy_diagnostics(std::span<const QuotientSet> sequence,
                                               Norm norm = Norm::sup);

/// Smallest distance from `target` to a point of `set`.
Rational min_distance(const QuotientSet& set, const QuotientPoint& target, Norm norm = Norm::sup);

struct SearchResult {
  EdgePartition partition;
  QuotientPoint point;
  Rational distance;
  std::size_t evaluations = 0;
};

/// Local search for a k-colouring whose quotient is sup-close to `target`:
/// every restart recolours single edges, always taking the best strictly
/// improving move, until no move improves. The first restarts start from
/// `initial` (if any), the remaining ones from uniform random colourings.
/// The returned distance is an upper bound on the true minimum.
SearchResult nearest_quotient_search(const MultiGraph& g, SetFunction fn, std::uint32_t k,
                                     const QuotientPoint& target, std::size_t restarts,
                                     std::uint64_t rng_seed,
                                     std::span<const EdgePartition> initial = {});

/// 2-quotient of rho on two disjoint copies of an N-vertex connected graph,
/// split along the copies: (0, (N-1)/(2N), (N-1)/(2N), (N-1)/N).
QuotientPoint doubled_copy_target(std::size_t vertices_per_copy);

/// Partition of a graph built by disjoint_union(a, a) into the two copies.
EdgePartition copy_partition(std::size_t edges_per_copy);

}  // namespace mlim
