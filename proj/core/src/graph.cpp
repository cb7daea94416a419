#include "matroid_limits/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <sstream>

namespace mlim {

MultiGraph::MultiGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ == 0) throw std::invalid_argument("graph must have at least one vertex");
  std::vector<std::size_t> deg(n_, 0);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u >= n_ || ed.v >= n_) {
      throw std::out_of_range("edge " + std::to_string(e) + " has an endpoint outside [0, " +
                              std::to_string(n_) + ")");
    }
    ++deg[ed.u];
    ++deg[ed.v];
  }
  offsets_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  incidence_.resize(offsets_[n_]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    incidence_[cursor[edges_[e].u]++] = static_cast<EdgeId>(e);
    incidence_[cursor[edges_[e].v]++] = static_cast<EdgeId>(e);
  }
}

// ---------------------------------------------------------------------------
// EdgeSet

EdgeSet::EdgeSet(std::size_t universe, bool full)
    : universe_(universe), words_((universe + 63) / 64, full ? ~std::uint64_t{0} : 0) {
  trim();
}

void EdgeSet::trim() {
  if (universe_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }
}

EdgeSet EdgeSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw std::invalid_argument("from_mask needs a universe of at most 64 edges");
  EdgeSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  s.trim();
  return s;
}

EdgeSet EdgeSet::from_ids(std::size_t universe, std::span<const EdgeId> ids) {
  EdgeSet s(universe);
  for (EdgeId e : ids) {
    if (e >= universe) throw std::out_of_range("edge id " + std::to_string(e) + " out of range");
    s.insert(e);
  }
  return s;
}

std::size_t EdgeSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

EdgeSet EdgeSet::complement() const {
  EdgeSet s = *this;
  for (auto& w : s.words_) w = ~w;
  s.trim();
  return s;
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::vector<EdgeId> EdgeSet::ids() const {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w) {
      const int b = std::countr_zero(w);
      out.push_back(static_cast<EdgeId>(i * 64 + static_cast<std::size_t>(b)));
      w &= w - 1;
    }
  }
  return out;
}

std::uint64_t EdgeSet::to_mask() const {
  if (universe_ > 64) throw std::invalid_argument("to_mask needs a universe of at most 64 edges");
  return words_.empty() ? 0 : words_[0];
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}
EdgeSet& EdgeSet::operator&=(const EdgeSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}
EdgeSet& EdgeSet::operator-=(const EdgeSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

// ---------------------------------------------------------------------------
// EdgePartition / BoundarySpec

EdgePartition::EdgePartition(std::vector<std::uint32_t> colors, std::uint32_t classes)
    : color(std::move(colors)), k(classes) {
  if (k == 0) throw std::invalid_argument("partition needs at least one class");
  for (auto c : color) {
    if (c >= k) throw std::out_of_range("edge class " + std::to_string(c) + " >= k");
  }
}

EdgeSet EdgePartition::part(std::uint32_t i) const {
  EdgeSet s(color.size());
  for (std::size_t e = 0; e < color.size(); ++e) {
    if (color[e] == i) s.insert(static_cast<EdgeId>(e));
  }
  return s;
}

EdgeSet EdgePartition::union_of(std::uint64_t classes) const {
  EdgeSet s(color.size());
  for (std::size_t e = 0; e < color.size(); ++e) {
    if ((classes >> color[e]) & 1u) s.insert(static_cast<EdgeId>(e));
  }
  return s;
}

BoundarySpec::BoundarySpec(std::vector<Vertex> vs) : vertices(std::move(vs)) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
}

void BoundarySpec::validate(std::size_t n) const {
  for (auto v : vertices) {
    if (v >= n) throw std::out_of_range("boundary vertex " + std::to_string(v) + " out of range");
  }
}

// ---------------------------------------------------------------------------
// DisjointSets

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), Vertex{0});
}

Vertex DisjointSets::find(Vertex x) {
  Vertex root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    const Vertex next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool DisjointSets::unite(Vertex a, Vertex b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --sets_;
  return true;
}

// ---------------------------------------------------------------------------

Components components(const MultiGraph& g, const EdgeSet& f) {
  DisjointSets ds(g.vertex_count());
  for (EdgeId e : f.ids()) ds.unite(g.edge(e).u, g.edge(e).v);
  Components out;
  out.label.assign(g.vertex_count(), 0);
  std::vector<std::int64_t> root_label(g.vertex_count(), -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Vertex r = ds.find(v);
    if (root_label[r] < 0) {
      root_label[r] = static_cast<std::int64_t>(out.sizes.size());
      out.sizes.push_back(0);
    }
    out.label[v] = static_cast<std::uint32_t>(root_label[r]);
    ++out.sizes[out.label[v]];
  }
  return out;
}

std::size_t component_count(const MultiGraph& g, const EdgeSet& f) {
  DisjointSets ds(g.vertex_count());
  for (EdgeId e : f.ids()) ds.unite(g.edge(e).u, g.edge(e).v);
  return ds.set_count();
}

Contraction contract(const MultiGraph& g, const BoundarySpec& b) {
  b.validate(g.vertex_count());
  Contraction out;
  out.edge_map.resize(g.edge_count());
  std::iota(out.edge_map.begin(), out.edge_map.end(), EdgeId{0});
  if (b.empty()) {
    out.graph = g;
    out.vertex_map.resize(g.vertex_count());
    std::iota(out.vertex_map.begin(), out.vertex_map.end(), Vertex{0});
    return out;
  }
  std::vector<bool> in_boundary(g.vertex_count(), false);
  for (auto v : b.vertices) in_boundary[v] = true;
  const Vertex first = b.vertices.front();
  out.vertex_map.assign(g.vertex_count(), 0);
  Vertex next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in_boundary[v] && v != first) continue;
    out.vertex_map[v] = next++;
  }
  for (auto v : b.vertices) out.vertex_map[v] = out.vertex_map[first];
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back({out.vertex_map[e.u], out.vertex_map[e.v]});
  out.graph = MultiGraph(next, std::move(edges));
  return out;
}

MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  const auto shift = static_cast<Vertex>(a.vertex_count());
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return MultiGraph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

// ---------------------------------------------------------------------------
// Edge-list text

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_index(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

MultiGraph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_n = false;
  std::vector<Edge> edges;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    const auto line = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty()) {
      if (pos > text.size()) break;  // trailing newline
      throw ParseError(line_no, "blank line");
    }
    if (!have_n) {
      if (tokens.size() != 1) throw ParseError(line_no, "first line must hold the vertex count");
      n = parse_index(tokens[0], line_no);
      if (n == 0) throw ParseError(line_no, "vertex count must be positive");
      have_n = true;
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected 'u v'");
    const auto u = parse_index(tokens[0], line_no);
    const auto v = parse_index(tokens[1], line_no);
    if (u >= n || v >= n) {
      throw ParseError(line_no, "endpoint out of range (n = " + std::to_string(n) + ")");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!have_n) throw ParseError(1, "missing vertex count");
  return MultiGraph(n, std::move(edges));
}

std::string serialize_edge_list(const MultiGraph& g) {
  std::ostringstream os;
  os << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

}  // namespace mlim
