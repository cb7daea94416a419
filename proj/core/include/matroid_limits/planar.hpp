#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matroid_limits/forest.hpp"
#include "matroid_limits/graph.hpp"

namespace mlim {

/// Half-edge 2e sits at edge(e).u, half-edge 2e+1 at edge(e).v.
using HalfEdge = std::uint32_t;

inline HalfEdge twin(HalfEdge h) { return h ^ 1u; }
inline EdgeId edge_of(HalfEdge h) { return h >> 1; }

class MapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Combinatorial map given by a rotation system: for each vertex, the cyclic
/// order of the half-edges at that vertex. Faces are the orbits of
/// h -> next_around(twin(h)).
///
/// The constructor checks that the rotation is a permutation of the half-edges
/// compatible with the edge list and that every connected component satisfies
/// n - m + f = 2 (an isolated vertex counts as one face). Throws MapError.
class PlanarMap {
 public:
  PlanarMap() = default;
  PlanarMap(MultiGraph g, std::vector<std::vector<HalfEdge>> rotation,
            std::optional<HalfEdge> outer = std::nullopt);

  /// Builds a map from oriented facial cycles given as vertex sequences; every
  /// undirected edge must occur exactly once in each direction, and no two
  /// edges may join the same pair of vertices. `outer_face` marks one face as
  /// the outer face.
  static PlanarMap from_faces(std::size_t n, const std::vector<std::vector<Vertex>>& faces,
                              std::optional<std::size_t> outer_face = std::nullopt);

  const MultiGraph& graph() const { return graph_; }
  std::size_t half_edge_count() const { return 2 * graph_.edge_count(); }
  const std::vector<HalfEdge>& rotation(Vertex v) const { return rotation_[v]; }
  const std::vector<std::vector<HalfEdge>>& rotations() const { return rotation_; }

  Vertex origin(HalfEdge h) const {
    const Edge& e = graph_.edge(edge_of(h));
    return (h & 1u) ? e.v : e.u;
  }
  HalfEdge next_around(HalfEdge h) const { return next_[h]; }
  HalfEdge prev_around(HalfEdge h) const { return prev_[h]; }
  HalfEdge face_next(HalfEdge h) const { return next_[twin(h)]; }

  /// A half-edge on the outer face, when one has been designated.
  std::optional<HalfEdge> outer_half_edge() const { return outer_; }

 private:
  MultiGraph graph_;
  std::vector<std::vector<HalfEdge>> rotation_;
  std::vector<HalfEdge> next_;
  std::vector<HalfEdge> prev_;
  std::optional<HalfEdge> outer_;
};

/// Facial walks, each starting at its smallest half-edge, ordered by that
/// half-edge. Every half-edge occurs in exactly one walk.
std::vector<std::vector<HalfEdge>> faces(const PlanarMap& m);

/// Face index of every half-edge, consistent with faces().
std::vector<std::uint32_t> face_index(const PlanarMap& m);

/// Vertices on the outer face; empty when no outer face is designated.
BoundarySpec outer_boundary(const PlanarMap& m);

struct DualResult {
  PlanarMap map;
  /// sigma[e] is the dual edge crossing primal edge e.
  std::vector<EdgeId> sigma;
  /// Dual vertex of the primal outer face, when the primal designates one.
  std::optional<Vertex> outer_vertex;
};

/// Dual map of a connected map: one vertex per face (in faces() order), dual
/// edge sigma(e) joins the faces on the two sides of e, and the rotation at a
/// dual vertex follows the facial walk. A bridge becomes a loop and a loop
/// becomes a bridge. Throws MapError for disconnected maps.
DualResult dual(const PlanarMap& m);

/// Canonical encoding of a map up to isomorphism and reflection, minimized
/// over every choice of root half-edge and orientation.
std::vector<std::uint32_t> canonical_map_code(const PlanarMap& m);
bool isomorphic(const PlanarMap& a, const PlanarMap& b);

struct DualityReport {
  std::size_t subsets_checked = 0;
  std::size_t trees_checked = 0;
  bool cocycle_exhaustive = false;
  bool trees_exhaustive = false;
  std::size_t primal_spanning_trees = 0;  // counted in exhaustive mode
  std::size_t dual_spanning_trees = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Exact finite duality checks on a connected map:
///  - n * rho*_G(F) == rank_abs(G*, sigma(F)) (all F for m <= 16, else `trials` random F);
///  - T spanning tree of G iff sigma(E \ T) spanning tree of G* (all T for m <= 8,
///    else `trials` random spanning trees);
///  - Euler: m == (n - 1) + (f - 1);
///  - dual(dual(m)) isomorphic to m and sigma* o sigma == id.
DualityReport check_duality(const PlanarMap& m, std::size_t trials, std::uint64_t rng_seed);

/// Patch of the {p,q} tiling: one p-gon surrounded by `layers` rings of p-gons,
/// every vertex of the inner rings having degree q. Requires 1/p + 1/q <= 1/2.
/// The outer face is designated.
PlanarMap hyperbolic_patch(std::uint32_t p, std::uint32_t q, std::uint32_t layers);

PlanarMap tetrahedron_map();
PlanarMap cycle_map(std::size_t n);
PlanarMap path_map(std::size_t n);
/// Grid of width x height vertices.
PlanarMap grid_map(std::size_t width, std::size_t height);
/// Map built from a single vertex by `operations` random planar moves:
/// pendant edges (bridges), chords and loops inside a face, and edge
/// subdivisions.
PlanarMap random_planar_map(std::size_t operations, std::uint64_t rng_seed);
/// Disjoint union of two maps (the result is not connected).
PlanarMap disjoint_union(const PlanarMap& a, const PlanarMap& b);

}  // namespace mlim
