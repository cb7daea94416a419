#include "matroid_limits/planar.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>

#include "matroid_limits/rank.hpp"

namespace mlim {

PlanarMap::PlanarMap(MultiGraph g, std::vector<std::vector<HalfEdge>> rotation,
                     std::optional<HalfEdge> outer)
    : graph_(std::move(g)), rotation_(std::move(rotation)), outer_(outer) {
  const std::size_t n = graph_.vertex_count();
  const std::size_t halves = half_edge_count();
  if (rotation_.size() != n) throw MapError("rotation must list every vertex");
  next_.assign(halves, 0);
  prev_.assign(halves, 0);
  std::vector<bool> seen(halves, false);
  for (Vertex v = 0; v < n; ++v) {
    const auto& rot = rotation_[v];
    if (rot.size() != graph_.degree(v)) {
      throw MapError("rotation at vertex " + std::to_string(v) + " does not match its degree");
    }
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const HalfEdge h = rot[i];
      if (h >= halves || seen[h]) throw MapError("half-edge listed twice or out of range");
      if (origin(h) != v) {
        throw MapError("half-edge " + std::to_string(h) + " listed at the wrong vertex");
      }
      seen[h] = true;
      next_[h] = rot[(i + 1) % rot.size()];
      prev_[h] = rot[(i + rot.size() - 1) % rot.size()];
    }
  }
  if (outer_ && *outer_ >= halves) throw MapError("outer half-edge out of range");

  // Euler characteristic per connected component.
  const Components comps = components(graph_, EdgeSet::full(graph_.edge_count()));
  std::vector<std::int64_t> chi(comps.count(), 0);
  for (Vertex v = 0; v < n; ++v) {
    chi[comps.label[v]] += 1;
    if (graph_.degree(v) == 0) chi[comps.label[v]] += 1;
  }
  for (const Edge& e : graph_.edges()) chi[comps.label[e.u]] -= 1;
  std::vector<bool> visited(halves, false);
  for (HalfEdge h = 0; h < halves; ++h) {
    if (visited[h]) continue;
    chi[comps.label[origin(h)]] += 1;
    for (HalfEdge x = h; !visited[x]; x = face_next(x)) visited[x] = true;
  }
  for (std::size_t c = 0; c < chi.size(); ++c) {
    if (chi[c] != 2) {
      throw MapError("component " + std::to_string(c) + " has Euler characteristic " +
                     std::to_string(chi[c]) + ", not a planar embedding");
    }
  }
}

PlanarMap PlanarMap::from_faces(std::size_t n, const std::vector<std::vector<Vertex>>& face_list,
                                std::optional<std::size_t> outer_face) {
  std::map<std::pair<Vertex, Vertex>, HalfEdge> directed;
  std::vector<Edge> edges;
  std::vector<std::vector<HalfEdge>> walks;
  walks.reserve(face_list.size());
  for (const auto& face : face_list) {
    if (face.size() < 2) throw MapError("faces need at least two vertices");
    std::vector<HalfEdge> walk;
    for (std::size_t i = 0; i < face.size(); ++i) {
      const Vertex a = face[i];
      const Vertex b = face[(i + 1) % face.size()];
      if (a >= n || b >= n) throw MapError("face vertex out of range");
      if (a == b) throw MapError("faces may not contain loops");
      if (directed.count({a, b})) throw MapError("directed edge used by two faces");
      HalfEdge h;
      if (auto it = directed.find({b, a}); it != directed.end()) {
        h = twin(it->second);
      } else {
        const auto e = static_cast<EdgeId>(edges.size());
        edges.push_back({a, b});
        h = 2 * e;
      }
      directed[{a, b}] = h;
      walk.push_back(h);
    }
    walks.push_back(std::move(walk));
  }
  const std::size_t halves = 2 * edges.size();
  if (directed.size() != halves) throw MapError("every edge must bound two faces");

  std::vector<HalfEdge> face_next(halves);
  for (const auto& walk : walks) {
    for (std::size_t i = 0; i < walk.size(); ++i) face_next[walk[i]] = walk[(i + 1) % walk.size()];
  }
  // face_next = next_around o twin, hence next_around = face_next o twin.
  MultiGraph g(n, edges);
  std::vector<std::vector<HalfEdge>> rotation(n);
  std::vector<bool> placed(halves, false);
  for (HalfEdge h = 0; h < halves; ++h) {
    const Edge& ed = g.edge(edge_of(h));
    const Vertex v = (h & 1u) ? ed.v : ed.u;
    if (!rotation[v].empty() || placed[h]) continue;
    for (HalfEdge x = h; !placed[x]; x = face_next[twin(x)]) {
      placed[x] = true;
      rotation[v].push_back(x);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (rotation[v].size() != g.degree(v)) {
      throw MapError("faces around vertex " + std::to_string(v) + " do not close up into a disk");
    }
  }
  std::optional<HalfEdge> outer;
  if (outer_face) {
    if (*outer_face >= walks.size()) throw MapError("outer face index out of range");
    outer = walks[*outer_face].front();
  }
  return PlanarMap(std::move(g), std::move(rotation), outer);
}

std::vector<std::vector<HalfEdge>> faces(const PlanarMap& m) {
  const std::size_t halves = m.half_edge_count();
  std::vector<bool> visited(halves, false);
  std::vector<std::vector<HalfEdge>> out;
  for (HalfEdge h = 0; h < halves; ++h) {
    if (visited[h]) continue;
    std::vector<HalfEdge> walk;
    for (HalfEdge x = h; !visited[x]; x = m.face_next(x)) {
      visited[x] = true;
      walk.push_back(x);
    }
    out.push_back(std::move(walk));
  }
  return out;
}

std::vector<std::uint32_t> face_index(const PlanarMap& m) {
  std::vector<std::uint32_t> index(m.half_edge_count(), 0);
  const auto walks = faces(m);
  for (std::size_t f = 0; f < walks.size(); ++f) {
    for (HalfEdge h : walks[f]) index[h] = static_cast<std::uint32_t>(f);
  }
  return index;
}

BoundarySpec outer_boundary(const PlanarMap& m) {
  const auto start = m.outer_half_edge();
  if (!start) return {};
  std::vector<Vertex> vs;
  HalfEdge h = *start;
  do {
    vs.push_back(m.origin(h));
    h = m.face_next(h);
  } while (h != *start);
  return BoundarySpec(std::move(vs));
}

DualResult dual(const PlanarMap& m) {
  const MultiGraph& g = m.graph();
  if (component_count(g, EdgeSet::full(g.edge_count())) != 1) {
    throw MapError("dual needs a connected map");
  }
  DualResult out;
  if (g.edge_count() == 0) {
    out.map = PlanarMap(MultiGraph(1, {}), {{}});
    if (m.outer_half_edge()) out.outer_vertex = 0;
    return out;
  }
  const auto walks = faces(m);
  const auto index = face_index(m);
  std::vector<Edge> edges(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) edges[e] = {index[2 * e], index[2 * e + 1]};
  MultiGraph dg(walks.size(), std::move(edges));
  out.map = PlanarMap(std::move(dg), walks);
  out.sigma.resize(g.edge_count());
  std::iota(out.sigma.begin(), out.sigma.end(), EdgeId{0});
  if (m.outer_half_edge()) out.outer_vertex = index[*m.outer_half_edge()];
  return out;
}

// ---------------------------------------------------------------------------
// Canonical encoding

namespace {

// Code of the component containing `root`, labelling half-edges in BFS order
// over {rotation successor (or predecessor), twin}. Returns false as soon as
// the code exceeds `best` (when best is nonempty).
bool rooted_code(const PlanarMap& m, HalfEdge root, bool forward, std::vector<std::int64_t>& label,
                 std::vector<HalfEdge>& order, std::vector<std::uint32_t>& code,
                 const std::vector<std::uint32_t>& best) {
  order.clear();
  code.clear();
  order.push_back(root);
  label[root] = 0;
  bool tied = !best.empty();
  auto emit = [&](std::uint32_t x) {
    if (tied) {
      const std::size_t i = code.size();
      if (i < best.size()) {
        if (x > best[i]) return false;
        if (x < best[i]) tied = false;
      }
    }
    code.push_back(x);
    return true;
  };
  bool alive = true;
  for (std::size_t i = 0; i < order.size() && alive; ++i) {
    const HalfEdge h = order[i];
    for (HalfEdge nb : {forward ? m.next_around(h) : m.prev_around(h), twin(h)}) {
      if (label[nb] < 0) {
        label[nb] = static_cast<std::int64_t>(order.size());
        order.push_back(nb);
      }
      if (!emit(static_cast<std::uint32_t>(label[nb]))) {
        alive = false;
        break;
      }
    }
  }
  for (HalfEdge h : order) label[h] = -1;
  // Unvisited neighbours may have been labelled then abandoned; clear them too.
  return alive;
}

}  // namespace

std::vector<std::uint32_t> canonical_map_code(const PlanarMap& m) {
  const MultiGraph& g = m.graph();
  const Components comps = components(g, EdgeSet::full(g.edge_count()));
  std::vector<std::vector<HalfEdge>> comp_halves(comps.count());
  for (HalfEdge h = 0; h < m.half_edge_count(); ++h) comp_halves[comps.label[m.origin(h)]].push_back(h);

  std::vector<std::int64_t> label(m.half_edge_count(), -1);
  std::vector<HalfEdge> order;
  std::vector<std::uint32_t> code;
  std::vector<std::vector<std::uint32_t>> parts;
  for (const auto& halves : comp_halves) {
    std::vector<std::uint32_t> best;
    for (HalfEdge root : halves) {
      for (bool forward : {true, false}) {
        if (rooted_code(m, root, forward, label, order, code, best)) {
          if (best.empty() || code < best) best = code;
        }
      }
    }
    std::vector<std::uint32_t> part{static_cast<std::uint32_t>(halves.size())};
    part.insert(part.end(), best.begin(), best.end());
    parts.push_back(std::move(part));
  }
  std::sort(parts.begin(), parts.end());
  std::vector<std::uint32_t> out{static_cast<std::uint32_t>(parts.size())};
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

bool isomorphic(const PlanarMap& a, const PlanarMap& b) {
  return a.graph().vertex_count() == b.graph().vertex_count() &&
         a.graph().edge_count() == b.graph().edge_count() &&
         canonical_map_code(a) == canonical_map_code(b);
}

// ---------------------------------------------------------------------------
// Duality checks

DualityReport check_duality(const PlanarMap& m, std::size_t trials, std::uint64_t rng_seed) {
  const MultiGraph& g = m.graph();
  const std::size_t n = g.vertex_count();
  const std::size_t edges = g.edge_count();
  if (component_count(g, EdgeSet::full(edges)) != 1) throw MapError("duality checks need a connected map");

  DualityReport report;
  const DualResult d = dual(m);
  const MultiGraph& dg = d.map.graph();
  const std::size_t f = dg.vertex_count();
  std::mt19937_64 rng(rng_seed);

  auto push_sigma = [&](const EdgeSet& s) {
    EdgeSet out(edges);
    for (EdgeId e : s.ids()) out.insert(d.sigma[e]);
    return out;
  };

  if (edges != (n - 1) + (f - 1)) {
    report.failures.push_back("Euler: m=" + std::to_string(edges) + " n=" + std::to_string(n) +
                              " f=" + std::to_string(f));
  }

  // Cocycle rank of G equals cycle rank of G* on the image.
  auto check_cocycle = [&](const EdgeSet& s) {
    ++report.subsets_checked;
    const Rational lhs = cocycle_rho(g, s) * static_cast<std::int64_t>(n);
    const auto rhs = static_cast<std::int64_t>(rank_abs(dg, push_sigma(s)));
    if (lhs != rhs) {
      report.failures.push_back("cocycle rank mismatch on a set of size " + std::to_string(s.count()) +
                                ": n*rho* = " + to_string(lhs) + ", dual rank = " + std::to_string(rhs));
    }
  };
  if (edges <= 16) {
    report.cocycle_exhaustive = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges); ++mask) {
      check_cocycle(EdgeSet::from_mask(edges, mask));
    }
  } else {
    std::bernoulli_distribution coin(0.5);
    check_cocycle(EdgeSet(edges));
    check_cocycle(EdgeSet::full(edges));
    for (std::size_t t = 0; t < trials; ++t) {
      EdgeSet s(edges);
      for (EdgeId e = 0; e < edges; ++e) s.set(e, coin(rng));
      check_cocycle(s);
    }
  }

  // Spanning tree complementation.
  if (edges <= 8) {
    report.trees_exhaustive = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges); ++mask) {
      const EdgeSet t = EdgeSet::from_mask(edges, mask);
      const bool primal = is_base(g, t);
      const bool dual_tree = is_base(dg, push_sigma(t.complement()));
      report.primal_spanning_trees += primal;
      report.dual_spanning_trees += is_base(dg, t);
      ++report.trees_checked;
      if (primal != dual_tree) {
        report.failures.push_back("tree complementation fails on mask " + std::to_string(mask));
      }
    }
    if (report.primal_spanning_trees != report.dual_spanning_trees) {
      report.failures.push_back("spanning tree counts differ: " +
                                std::to_string(report.primal_spanning_trees) + " vs " +
                                std::to_string(report.dual_spanning_trees));
    }
  } else {
    std::uniform_int_distribution<std::int64_t> weight(0, 1'000'000);
    for (std::size_t t = 0; t < trials; ++t) {
      std::vector<Rational> key(edges);
      for (auto& x : key) x = weight(rng);
      const WeightList w = WeightList::single(std::move(key));
      const EdgeSet tree = invasion(g, w).forest;
      const EdgeSet dual_tree = invasion(dg, w).forest;
      ++report.trees_checked;
      if (!is_base(dg, push_sigma(tree.complement()))) {
        report.failures.push_back("complement of a primal spanning tree is not a dual spanning tree");
      }
      // sigma is the identity on ids, so the inverse image is the same id set.
      if (!is_base(g, dual_tree.complement())) {
        report.failures.push_back("complement of a dual spanning tree is not a primal spanning tree");
      }
    }
  }

  // Involution.
  const DualResult dd = dual(d.map);
  for (EdgeId e = 0; e < edges; ++e) {
    if (dd.sigma[d.sigma[e]] != e) {
      report.failures.push_back("sigma* o sigma moves edge " + std::to_string(e));
      break;
    }
  }
  if (!isomorphic(dd.map, m)) report.failures.push_back("dual of the dual is not isomorphic to the map");
  return report;
}

// ---------------------------------------------------------------------------
// Generators

PlanarMap tetrahedron_map() {
  return PlanarMap::from_faces(4, {{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {0, 2, 3}}, 0);
}

PlanarMap cycle_map(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle map needs n >= 3");
  std::vector<Vertex> inner(n);
  std::iota(inner.begin(), inner.end(), Vertex{0});
  std::vector<Vertex> outer(inner.rbegin(), inner.rend());
  return PlanarMap::from_faces(n, {inner, outer}, 1);
}

PlanarMap path_map(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path map needs n >= 1");
  std::vector<Edge> edges;
  std::vector<std::vector<HalfEdge>> rotation(n);
  for (Vertex i = 0; i + 1 < n; ++i) {
    edges.push_back({i, i + 1});
    rotation[i].push_back(2 * i);
    rotation[i + 1].push_back(2 * i + 1);
  }
  std::optional<HalfEdge> outer;
  if (!edges.empty()) outer = 0;
  return PlanarMap(MultiGraph(n, std::move(edges)), std::move(rotation), outer);
}

PlanarMap grid_map(std::size_t width, std::size_t height) {
  if (width == 0 || height == 0) throw std::invalid_argument("grid needs positive dimensions");
  if (width == 1 || height == 1) return path_map(width * height);
  auto id = [&](std::size_t x, std::size_t y) { return static_cast<Vertex>(y * width + x); };
  std::vector<std::vector<Vertex>> face_list;
  for (std::size_t y = 0; y + 1 < height; ++y) {
    for (std::size_t x = 0; x + 1 < width; ++x) {
      face_list.push_back({id(x, y), id(x + 1, y), id(x + 1, y + 1), id(x, y + 1)});
    }
  }
  std::vector<Vertex> outer;
  for (std::size_t y = 0; y + 1 < height; ++y) outer.push_back(id(0, y));
  for (std::size_t x = 0; x + 1 < width; ++x) outer.push_back(id(x, height - 1));
  for (std::size_t y = height - 1; y > 0; --y) outer.push_back(id(width - 1, y));
  for (std::size_t x = width - 1; x > 0; --x) outer.push_back(id(x, 0));
  face_list.push_back(outer);
  return PlanarMap::from_faces(width * height, face_list, face_list.size() - 1);
}

PlanarMap hyperbolic_patch(std::uint32_t p, std::uint32_t q, std::uint32_t layers) {
  if (p < 3 || q < 3 || (p - 2) * (q - 2) < 4) {
    throw std::invalid_argument("{" + std::to_string(p) + "," + std::to_string(q) +
                                "} is spherical; need 1/p + 1/q <= 1/2");
  }
  std::vector<std::vector<Vertex>> face_list;
  std::map<std::pair<Vertex, Vertex>, bool> edge_seen;
  std::vector<std::size_t> degree;
  auto new_vertex = [&]() {
    degree.push_back(0);
    return static_cast<Vertex>(degree.size() - 1);
  };
  auto add_face = [&](std::vector<Vertex> face) {
    for (std::size_t i = 0; i < face.size(); ++i) {
      Vertex a = face[i];
      Vertex b = face[(i + 1) % face.size()];
      if (a > b) std::swap(a, b);
      if (!edge_seen[{a, b}]) {
        edge_seen[{a, b}] = true;
        ++degree[a];
        ++degree[b];
      }
    }
    face_list.push_back(std::move(face));
  };

  // Boundary runs in the same direction as the faces just inside it.
  std::vector<Vertex> boundary;
  for (std::uint32_t i = 0; i < p; ++i) boundary.push_back(new_vertex());
  add_face(boundary);

  for (std::uint32_t layer = 0; layer < layers; ++layer) {
    const std::size_t b = boundary.size();
    std::vector<std::size_t> spoke_base;
    for (std::size_t i = 0; i < b; ++i) {
      const auto deg = degree[boundary[i]];
      if (deg > q) throw std::logic_error("boundary vertex exceeds degree q");
      for (std::size_t t = 0; t < q - deg; ++t) spoke_base.push_back(i);
    }
    const std::size_t s = spoke_base.size();
    if (s < 2) throw std::invalid_argument("patch cannot be extended by another layer");

    // Number of boundary edges between consecutive spokes and resulting
    // outer path length.
    std::vector<std::size_t> gap(s);
    std::vector<std::int64_t> outer_len(s);
    for (std::size_t j = 0; j < s; ++j) {
      const std::size_t a = spoke_base[j];
      const std::size_t c = spoke_base[(j + 1) % s];
      std::size_t old = (c + b - a) % b;
      if (j + 1 == s && old == 0) old = b;
      gap[j] = old;
      outer_len[j] = static_cast<std::int64_t>(p) - 2 - static_cast<std::int64_t>(old);
      if (outer_len[j] < 0) throw std::invalid_argument("{p,q} layer construction failed");
    }
    // Spokes j and j+1 share their tip when the outer path has length 0.
    std::vector<std::size_t> tip_class(s);
    std::iota(tip_class.begin(), tip_class.end(), 0);
    std::size_t shared = 0;
    for (std::size_t j = 0; j < s; ++j) shared += outer_len[j] == 0;
    if (shared == s) throw std::invalid_argument("patch closes up; not a hyperbolic/Euclidean tiling");
    std::size_t start = 0;
    while (outer_len[(start + s - 1) % s] == 0) start = (start + 1) % s;
    std::vector<Vertex> tip(s);
    for (std::size_t step = 0; step < s; ++step) {
      const std::size_t j = (start + step) % s;
      const std::size_t prev = (j + s - 1) % s;
      tip[j] = (step > 0 && outer_len[prev] == 0) ? tip[prev] : new_vertex();
    }

    std::vector<Vertex> next_boundary;
    for (std::size_t step = 0; step < s; ++step) {
      const std::size_t j = (start + step) % s;
      const std::size_t k = (j + 1) % s;
      std::vector<Vertex> path{tip[j]};
      for (std::int64_t x = 1; x < outer_len[j]; ++x) path.push_back(new_vertex());
      if (outer_len[j] > 0) path.push_back(tip[k]);

      std::vector<Vertex> face;
      const std::size_t a = spoke_base[j];
      for (std::size_t t = 0; t <= gap[j]; ++t) face.push_back(boundary[(a + gap[j] - t) % b]);
      face.insert(face.end(), path.begin(), path.end());
      add_face(std::move(face));
      if (outer_len[j] > 0) next_boundary.insert(next_boundary.end(), path.begin(), path.end() - 1);
    }
    boundary = std::move(next_boundary);
  }
  std::vector<Vertex> outer(boundary.rbegin(), boundary.rend());
  face_list.push_back(outer);
  return PlanarMap::from_faces(degree.size(), face_list, face_list.size() - 1);
}

PlanarMap disjoint_union(const PlanarMap& a, const PlanarMap& b) {
  const auto shift_v = static_cast<Vertex>(a.graph().vertex_count());
  const auto shift_h = static_cast<HalfEdge>(a.half_edge_count());
  auto rotation = a.rotations();
  for (const auto& rot : b.rotations()) {
    std::vector<HalfEdge> shifted;
    for (HalfEdge h : rot) shifted.push_back(h + shift_h);
    rotation.push_back(std::move(shifted));
  }
  (void)shift_v;
  return PlanarMap(mlim::disjoint_union(a.graph(), b.graph()), std::move(rotation),
                   a.outer_half_edge());
}

PlanarMap random_planar_map(std::size_t operations, std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  std::vector<Edge> edges;
  std::vector<std::vector<HalfEdge>> rotation(1);
  auto build = [&] {
    return PlanarMap(MultiGraph(rotation.size(), edges), rotation);
  };
  auto pick = [&](std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
  };
  auto insert_after = [](std::vector<HalfEdge>& rot, HalfEdge anchor, HalfEdge h) {
    auto it = std::find(rot.begin(), rot.end(), anchor);
    rot.insert(it + 1, h);
  };

  for (std::size_t op = 0; op < operations; ++op) {
    const std::size_t kind = edges.empty() ? 0 : pick(8);
    const auto e = static_cast<EdgeId>(edges.size());
    if (kind < 3) {
      // pendant edge in a random corner
      const auto v = static_cast<Vertex>(pick(rotation.size()));
      const auto w = static_cast<Vertex>(rotation.size());
      auto& rot = rotation[v];
      rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(pick(rot.size() + 1)), 2 * e);
      rotation.push_back({2 * e + 1});
      edges.push_back({v, w});
    } else if (kind < 7) {
      // chord (or loop when both corners coincide) inside one face
      const PlanarMap current = build();
      const auto walks = faces(current);
      const auto& walk = walks[pick(walks.size())];
      const std::size_t len = walk.size();
      const std::size_t i = pick(len);
      const std::size_t j = kind == 6 ? i : pick(len);
      const HalfEdge hi = walk[i];
      const HalfEdge hj = walk[j];
      const HalfEdge anchor_i = twin(walk[(i + len - 1) % len]);
      const HalfEdge anchor_j = twin(walk[(j + len - 1) % len]);
      const Vertex vi = current.origin(hi);
      const Vertex vj = current.origin(hj);
      edges.push_back({vi, vj});
      insert_after(rotation[vi], anchor_i, 2 * e);
      insert_after(rotation[vj], anchor_j, 2 * e + 1);
    } else {
      // subdivide an edge
      const auto target = static_cast<EdgeId>(pick(edges.size()));
      const Vertex v = edges[target].v;
      const auto w = static_cast<Vertex>(rotation.size());
      auto& rot_v = rotation[v];
      *std::find(rot_v.begin(), rot_v.end(), 2 * target + 1) = 2 * e + 1;
      edges[target].v = w;
      edges.push_back({w, v});
      rotation.push_back({2 * target + 1, 2 * e});
    }
  }
  return build();
}

}  // namespace mlim
