#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mlim {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Raised by the text parsers; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Finite multigraph on vertices [0, n) with the uniform vertex measure.
///
/// Loops and parallel edges are allowed. Edge identities are the positions in
/// the edge list, so every edge subset, weight vector and coloring elsewhere in
/// the library is an array indexed by EdgeId. The incidence index lists a loop
/// twice at its vertex, which makes degree() count it twice.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  /// Edge ids incident to v; a loop appears twice.
  std::span<const EdgeId> incident(Vertex v) const {
    return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  Vertex other(EdgeId e, Vertex v) const {
    const Edge& ed = edges_[e];
    return ed.u == v ? ed.v : ed.u;
  }

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<EdgeId> incidence_;
};

/// Subset of edge identities of one graph, stored as a dense bit vector.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t universe, bool full = false);

  static EdgeSet full(std::size_t universe) { return EdgeSet(universe, true); }
  static EdgeSet from_mask(std::size_t universe, std::uint64_t mask);
  static EdgeSet from_ids(std::size_t universe, std::span<const EdgeId> ids);

  std::size_t universe() const { return universe_; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }

  bool contains(EdgeId e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
  void insert(EdgeId e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(EdgeId e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
  void set(EdgeId e, bool on) { on ? insert(e) : erase(e); }

  EdgeSet complement() const;
  bool is_subset_of(const EdgeSet& other) const;
  std::vector<EdgeId> ids() const;
  /// Only valid for universes of at most 64 edges.
  std::uint64_t to_mask() const;

  EdgeSet& operator|=(const EdgeSet& o);
  EdgeSet& operator&=(const EdgeSet& o);
  EdgeSet& operator-=(const EdgeSet& o);
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }
  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;

 private:
  void trim();

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Assignment of every edge to one of k classes.
struct EdgePartition {
  std::vector<std::uint32_t> color;
  std::uint32_t k = 1;

  EdgePartition() = default;
  EdgePartition(std::vector<std::uint32_t> colors, std::uint32_t classes);

  std::size_t edge_count() const { return color.size(); }
  EdgeSet part(std::uint32_t i) const;
  /// Union of the classes whose bit is set in `classes`.
  EdgeSet union_of(std::uint64_t classes) const;
  friend bool operator==(const EdgePartition&, const EdgePartition&) = default;
};

/// Boundary vertex set used for wired boundary conditions.
struct BoundarySpec {
  std::vector<Vertex> vertices;

  BoundarySpec() = default;
  explicit BoundarySpec(std::vector<Vertex> vs);
  void validate(std::size_t n) const;
  bool empty() const { return vertices.empty(); }
};

/// Union-find with path compression and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);

  Vertex find(Vertex x);
  /// Returns false when a and b were already joined.
  bool unite(Vertex a, Vertex b);
  std::size_t size_of(Vertex x) { return size_[find(x)]; }
  std::size_t set_count() const { return sets_; }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::size_t> size_;
  std::size_t sets_;
};

/// Connected components of (V, f). Labels are numbered in order of the
/// smallest vertex of each component.
struct Components {
  std::vector<std::uint32_t> label;
  std::vector<std::size_t> sizes;

  std::size_t count() const { return sizes.size(); }
  std::size_t size_of_vertex(Vertex v) const { return sizes[label[v]]; }
};

Components components(const MultiGraph& g, const EdgeSet& f);
/// Number of components only; skips building labels.
std::size_t component_count(const MultiGraph& g, const EdgeSet& f);

struct Contraction {
  MultiGraph graph;
  std::vector<Vertex> vertex_map;  // old vertex -> new vertex
  std::vector<EdgeId> edge_map;    // old edge -> new edge (identity on ids)
};

/// Merges all boundary vertices into one; edge ids are preserved and edges
/// with both ends in the boundary become loops.
Contraction contract(const MultiGraph& g, const BoundarySpec& b);

/// Disjoint union; the vertices and edges of `b` follow those of `a`.
MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b);

/// Edge-list text: first line n, then one "u v" line per edge.
MultiGraph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const MultiGraph& g);

}  // namespace mlim
