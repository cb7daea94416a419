#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matroid_limits/graph.hpp"
#include "matroid_limits/rational.hpp"

namespace mlim {

/// Vertex colouring; an empty vector means uncoloured.
using VertexColors = std::vector<std::uint32_t>;

/// Induced subgraph on the vertices within distance `radius` of the root.
/// Vertices are ordered by (distance, original id), so the root is vertex 0.
struct RootedBall {
  MultiGraph graph;
  Vertex root = 0;
  VertexColors colors;  // empty or one entry per ball vertex
  std::uint32_t radius = 0;
  std::vector<Vertex> original_ids;
};

/// Canonical form of a rooted coloured multigraph. Equal codes iff the balls
/// are isomorphic by a map that fixes the root and preserves colours.
struct BallCode {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  static BallCode from_hex(std::string_view text);

  friend bool operator==(const BallCode&, const BallCode&) = default;
  friend auto operator<=>(const BallCode&, const BallCode&) = default;
};

RootedBall ball(const MultiGraph& g, Vertex v, std::uint32_t radius, const VertexColors& colors = {});

/// Colour refinement with the root pinned, then a search over individualised
/// vertices keeping the smallest leaf encoding. Automorphisms discovered along
/// the way prune equivalent branches.
BallCode canonical_code(const RootedBall& b);

/// Same for a bare rooted graph.
BallCode canonical_code(const MultiGraph& g, Vertex root, const VertexColors& colors = {});

using LocalDistribution = std::map<BallCode, Rational>;

/// Law of the r-ball type at a uniform vertex.
LocalDistribution local_distribution(const MultiGraph& g, std::uint32_t radius,
                                     const VertexColors& colors = {});

/// Half the l1 distance between two distributions.
Rational tv_distance(const LocalDistribution& p, const LocalDistribution& q);

/// Coloured statistics of `colorings` colourings: even draws are uniform,
/// odd draws recolour one random vertex of the previous colouring. The result
/// is sorted and free of duplicates.
std::vector<LocalDistribution> sample_qkr(const MultiGraph& g, std::uint32_t k, std::uint32_t radius,
                                          std::size_t colorings, std::uint64_t rng_seed);

/// All k^n colourings. Throws std::length_error above `budget` colourings.
std::vector<LocalDistribution> enumerate_qkr(const MultiGraph& g, std::uint32_t k,
                                             std::uint32_t radius, std::uint64_t budget = 1'000'000);

/// Hausdorff distance with tv_distance as the ground metric.
double hausdorff_tv(std::span<const LocalDistribution> a, std::span<const LocalDistribution> b);

/// Each edge gets a midpoint vertex n + e coloured by the edge's class;
/// original vertices get colour k.
struct Subdivision {
  MultiGraph graph;
  VertexColors colors;
};
Subdivision subdivide_edge_coloring(const MultiGraph& g, const EdgePartition& part);

}  // namespace mlim
