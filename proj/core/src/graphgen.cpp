#include "matroid_limits/graphgen.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

namespace mlim {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 10> family_names{{
    {Family::cycle, "cycle"},
    {Family::path, "path"},
    {Family::complete, "complete"},
    {Family::grid, "grid"},
    {Family::torus, "torus"},
    {Family::random_regular, "random_regular"},
    {Family::doubled, "doubled"},
    {Family::hyperbolic_patch, "hyperbolic_patch"},
    {Family::tetrahedron, "tetrahedron"},
    {Family::random_planar, "random_planar"},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

std::string_view to_string(Family f) {
  for (auto [fam, name] : family_names) {
    if (fam == f) return name;
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (auto [fam, known] : family_names) {
    if (known == name) return fam;
  }
  throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

std::string GenSpec::label() const {
  const std::string fam(to_string(family));
  switch (family) {
    case Family::cycle:
    case Family::path:
    case Family::complete: return fam + "(" + std::to_string(n) + ")";
    case Family::grid:
    case Family::torus: return fam + "(" + std::to_string(width) + "x" + std::to_string(height) + ")";
    case Family::random_regular:
      return fam + "(n=" + std::to_string(n) + ",d=" + std::to_string(degree) + ",seed=" + std::to_string(seed) + ")";
    case Family::doubled: return fam + "(" + (base.empty() ? std::string("?") : base.front().label()) + ")";
    case Family::hyperbolic_patch:
      return "patch{" + std::to_string(p) + "," + std::to_string(q) + "}x" + std::to_string(layers);
    case Family::tetrahedron: return fam;
    case Family::random_planar:
      return fam + "(ops=" + std::to_string(operations) + ",seed=" + std::to_string(seed) + ")";
  }
  return fam;
}

MultiGraph cycle_graph(std::size_t n) {
  require(n >= 1, "cycle needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return MultiGraph(n, std::move(edges));
}

MultiGraph path_graph(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return MultiGraph(n, std::move(edges));
}

MultiGraph complete_graph(std::size_t n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return MultiGraph(n, std::move(edges));
}

MultiGraph torus_graph(std::size_t width, std::size_t height) {
  require(width >= 3 && height >= 3, "torus needs width, height >= 3");
  auto id = [&](std::size_t x, std::size_t y) { return static_cast<Vertex>(y * width + x); };
  std::vector<Edge> edges;
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      edges.push_back({id(x, y), id((x + 1) % width, y)});
      edges.push_back({id(x, y), id(x, (y + 1) % height)});
    }
  }
  return MultiGraph(width * height, std::move(edges));
}

MultiGraph random_regular(std::size_t n, std::size_t degree, std::uint64_t rng_seed,
                          std::size_t max_attempts) {
  require(n >= 1, "random regular graph needs n >= 1");
  require((n * degree) % 2 == 0, "n * degree must be even");
  require(degree < n, "degree must be below n for a simple graph");
  std::mt19937_64 rng(rng_seed);
  std::vector<Vertex> stubs;
  for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), degree, v);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<std::pair<Vertex, Vertex>> seen;
    std::vector<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size() && simple; i += 2) {
      const Vertex a = std::min(stubs[i], stubs[i + 1]);
      const Vertex b = std::max(stubs[i], stubs[i + 1]);
      simple = a != b && seen.insert({a, b}).second;
      edges.push_back({a, b});
    }
    if (simple) return MultiGraph(n, std::move(edges));
  }
  throw std::runtime_error("configuration model produced no simple graph in " +
                           std::to_string(max_attempts) + " attempts");
}

MultiGraph doubled(const MultiGraph& g) { return disjoint_union(g, g); }

Generated generate(const GenSpec& spec) {
  Generated out;
  auto with_map = [&](PlanarMap map) {
    out.graph = map.graph();
    out.map = std::move(map);
  };
  switch (spec.family) {
    case Family::cycle:
      if (spec.n >= 3) {
        with_map(cycle_map(spec.n));
      } else {
        out.graph = cycle_graph(spec.n);
      }
      break;
    case Family::path: with_map(path_map(spec.n)); break;
    case Family::complete: out.graph = complete_graph(spec.n); break;
    case Family::grid: with_map(grid_map(spec.width, spec.height)); break;
    case Family::torus: out.graph = torus_graph(spec.width, spec.height); break;
    case Family::random_regular: out.graph = random_regular(spec.n, spec.degree, spec.seed); break;
    case Family::doubled: {
      require(spec.base.size() == 1, "doubled needs exactly one base spec");
      Generated inner = generate(spec.base.front());
      if (inner.map) {
        with_map(disjoint_union(*inner.map, *inner.map));
      } else {
        out.graph = doubled(inner.graph);
      }
      break;
    }
    case Family::hyperbolic_patch: with_map(hyperbolic_patch(spec.p, spec.q, spec.layers)); break;
    case Family::tetrahedron: with_map(tetrahedron_map()); break;
    case Family::random_planar: with_map(random_planar_map(spec.operations, spec.seed)); break;
  }
  return out;
}

ExpansionEstimate estimate_edge_expansion(const MultiGraph& g, ExpansionMethod method,
                                          std::uint64_t budget) {
  const std::size_t n = g.vertex_count();
  require(n >= 2, "edge expansion needs at least two vertices");
  ExpansionEstimate out;
  if (method == ExpansionMethod::exact) {
    if (n > 20 || (std::uint64_t{1} << n) > budget) {
      throw std::length_error("exact expansion needs n <= 20 and 2^n <= budget");
    }
    Rational best(std::numeric_limits<std::int32_t>::max());
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      const auto size = static_cast<std::size_t>(std::popcount(mask));
      if (size > n / 2) continue;
      std::int64_t cut = 0;
      for (const Edge& e : g.edges()) cut += ((mask >> e.u) & 1u) != ((mask >> e.v) & 1u);
      best = std::min(best, Rational(cut, static_cast<std::int64_t>(size)));
    }
    out.exact = best;
    out.lower = out.upper = to_double(best);
    return out;
  }
  if (component_count(g, EdgeSet::full(g.edge_count())) > 1) return out;
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  double dmax = 0;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    const auto u = static_cast<Eigen::Index>(e.u);
    const auto v = static_cast<Eigen::Index>(e.v);
    lap(u, u) += 1;
    lap(v, v) += 1;
    lap(u, v) -= 1;
    lap(v, u) -= 1;
  }
  for (Eigen::Index i = 0; i < lap.rows(); ++i) dmax = std::max(dmax, lap(i, i));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap, Eigen::EigenvaluesOnly);
  const double lambda2 = std::max(0.0, solver.eigenvalues()(1));
  out.lower = lambda2 / 2;
  out.upper = std::sqrt(2 * dmax * lambda2);
  return out;
}

std::optional<std::size_t> girth(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr auto unseen = std::numeric_limits<std::size_t>::max();
  std::size_t best = unseen;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) return 1;
  }
  std::vector<std::size_t> dist(n);
  std::vector<EdgeId> via(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), unseen);
    dist[root] = 0;
    via[root] = std::numeric_limits<EdgeId>::max();
    std::vector<Vertex> queue{root};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Vertex x = queue[i];
      if (2 * dist[x] + 1 >= best) break;
      for (EdgeId e : g.incident(x)) {
        if (e == via[x]) continue;
        const Vertex y = g.other(e, x);
        if (dist[y] == unseen) {
          dist[y] = dist[x] + 1;
          via[y] = e;
          queue.push_back(y);
        } else {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == unseen) return std::nullopt;
  return best;
}

}  // namespace mlim
