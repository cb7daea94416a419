#include "matroid_limits/local_stats.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <random>
#include <stdexcept>

namespace mlim {

std::string BallCode::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (auto b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

BallCode BallCode::from_hex(std::string_view text) {
  auto nibble = [](char c) -> std::uint8_t {
    if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<std::uint8_t>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<std::uint8_t>(c - 'A' + 10);
    throw std::invalid_argument("bad hex digit in ball code");
  };
  if (text.size() % 2 != 0) throw std::invalid_argument("odd-length ball code");
  BallCode code;
  for (std::size_t i = 0; i < text.size(); i += 2) {
    code.bytes.push_back(static_cast<std::uint8_t>(nibble(text[i]) << 4 | nibble(text[i + 1])));
  }
  return code;
}

RootedBall ball(const MultiGraph& g, Vertex v, std::uint32_t radius, const VertexColors& colors) {
  const std::size_t n = g.vertex_count();
  if (v >= n) throw std::out_of_range("ball root out of range");
  if (!colors.empty() && colors.size() != n) throw std::invalid_argument("colouring size mismatch");
  constexpr auto unseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(n, unseen);
  std::vector<Vertex> order{v};
  dist[v] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex x = order[i];
    if (dist[x] == radius) continue;
    for (EdgeId e : g.incident(x)) {
      const Vertex y = g.other(e, x);
      if (dist[y] == unseen) {
        dist[y] = dist[x] + 1;
        order.push_back(y);
      }
    }
  }
  std::sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return std::pair(dist[a], a) < std::pair(dist[b], b); });
  std::vector<Vertex> local(n, unseen);
  for (std::size_t i = 0; i < order.size(); ++i) local[order[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] != unseen && local[e.v] != unseen) edges.push_back({local[e.u], local[e.v]});
  }
  RootedBall out;
  out.graph = MultiGraph(order.size(), std::move(edges));
  out.root = 0;
  out.radius = radius;
  out.original_ids = order;
  if (!colors.empty()) {
    for (Vertex x : order) out.colors.push_back(colors[x]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical labelling

namespace {

using Cells = std::vector<std::uint32_t>;  // ordered cell index per vertex

class Canonizer {
 public:
  Canonizer(const MultiGraph& g, Vertex root, const VertexColors& colors)
      : n_(g.vertex_count()), colors_(colors), nbrs_(n_) {
    if (root >= n_) throw std::out_of_range("root out of range");
    if (colors_.empty()) colors_.assign(n_, 0);
    if (colors_.size() != n_) throw std::invalid_argument("colouring size mismatch");
    for (const Edge& e : g.edges()) {
      nbrs_[e.u].push_back(e.v);
      nbrs_[e.v].push_back(e.u);
      edges_.emplace_back(e.u, e.v);
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> key(n_);
    for (Vertex v = 0; v < n_; ++v) key[v] = {v == root ? 0u : 1u, colors_[v]};
    start_ = refine(rank_by(key));
  }

  std::vector<std::uint32_t> run() {
    path_.clear();
    search(start_, 0);
    return best_code_;
  }

 private:
  template <class Key>
  Cells rank_by(const std::vector<Key>& key) const {
    std::vector<Key> sorted = key;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Cells cells(n_);
    for (Vertex v = 0; v < n_; ++v) {
      cells[v] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), key[v]) -
                                            sorted.begin());
    }
    return cells;
  }

  static std::size_t cell_count(const Cells& cells) {
    return cells.empty() ? 0 : *std::max_element(cells.begin(), cells.end()) + 1;
  }

  Cells refine(Cells cells) const {
    std::size_t count = cell_count(cells);
    for (;;) {
      std::vector<std::vector<std::uint32_t>> sig(n_);
      for (Vertex v = 0; v < n_; ++v) {
        sig[v].push_back(cells[v]);
        std::vector<std::uint32_t> around;
        for (Vertex u : nbrs_[v]) around.push_back(cells[u]);
        std::sort(around.begin(), around.end());
        sig[v].insert(sig[v].end(), around.begin(), around.end());
      }
      Cells next = rank_by(sig);
      const std::size_t next_count = cell_count(next);
      if (next_count == count) return next;
      cells = std::move(next);
      count = next_count;
    }
  }

  Cells individualize(const Cells& cells, Vertex v) const {
    std::vector<std::uint32_t> key(n_);
    for (Vertex u = 0; u < n_; ++u) key[u] = 2 * cells[u] + ((cells[u] == cells[v] && u != v) ? 1 : 0);
    return refine(rank_by(key));
  }

  std::vector<std::uint32_t> leaf_code(const Cells& pos) const {
    std::vector<std::uint32_t> code{static_cast<std::uint32_t>(n_)};
    std::vector<std::uint32_t> by_pos(n_);
    for (Vertex v = 0; v < n_; ++v) by_pos[pos[v]] = colors_[v];
    code.insert(code.end(), by_pos.begin(), by_pos.end());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
    for (auto [a, b] : edges_) es.emplace_back(std::min(pos[a], pos[b]), std::max(pos[a], pos[b]));
    std::sort(es.begin(), es.end());
    code.push_back(static_cast<std::uint32_t>(es.size()));
    for (auto [a, b] : es) {
      code.push_back(a);
      code.push_back(b);
    }
    return code;
  }

  // Automorphism sending the leaf with positions `from` to the one with `to`.
  std::vector<Vertex> automorphism(const Cells& from, const Cells& to) const {
    std::vector<Vertex> inv(n_);
    for (Vertex v = 0; v < n_; ++v) inv[to[v]] = v;
    std::vector<Vertex> gamma(n_);
    for (Vertex v = 0; v < n_; ++v) gamma[v] = inv[from[v]];
    return gamma;
  }

  std::size_t common_prefix(const std::vector<Vertex>& other) const {
    std::size_t a = 0;
    while (a < path_.size() && a < other.size() && path_[a] == other[a]) ++a;
    return a;
  }

  // Orbit representative of every vertex under the stored generators that fix
  // the first `depth` path vertices.
  std::vector<Vertex> orbits(std::size_t depth) const {
    DisjointSets dsu(n_);
    for (const auto& gamma : generators_) {
      bool fixes = true;
      for (std::size_t i = 0; i < depth && fixes; ++i) fixes = gamma[path_[i]] == path_[i];
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) dsu.unite(v, gamma[v]);
    }
    std::vector<Vertex> rep(n_);
    for (Vertex v = 0; v < n_; ++v) rep[v] = dsu.find(v);
    return rep;
  }

  // Returns the depth at which exploration resumes; a caller at a deeper
  // level unwinds.
  std::size_t search(const Cells& cells, std::size_t depth) {
    const std::size_t cells_n = cell_count(cells);
    if (cells_n == n_) return at_leaf(cells, depth);

    std::vector<std::size_t> sizes(cells_n, 0);
    for (auto c : cells) ++sizes[c];
    std::uint32_t target = 0;
    while (sizes[target] == 1) ++target;
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < n_; ++v) {
      if (cells[v] == target) candidates.push_back(v);
    }

    const bool on_first = have_first_ && common_prefix(first_path_) == depth;
    std::vector<Vertex> tried;
    for (Vertex v : candidates) {
      if (on_first && !tried.empty() && !generators_.empty()) {
        const auto rep = orbits(depth);
        bool seen = false;
        for (Vertex t : tried) seen = seen || rep[t] == rep[v];
        if (seen) continue;
      }
      tried.push_back(v);
      path_.push_back(v);
      const std::size_t resume = search(individualize(cells, v), depth + 1);
      path_.pop_back();
      if (resume < depth) return resume;
    }
    return depth == 0 ? 0 : depth - 1;
  }

  std::size_t at_leaf(const Cells& pos, std::size_t depth) {
    const std::size_t parent = depth == 0 ? 0 : depth - 1;
    auto code = leaf_code(pos);
    if (!have_first_) {
      have_first_ = true;
      first_code_ = best_code_ = code;
      first_pos_ = best_pos_ = pos;
      first_path_ = best_path_ = path_;
      return parent;
    }
    if (code == first_code_) {
      generators_.push_back(automorphism(first_pos_, pos));
      return common_prefix(first_path_);
    }
    if (code < best_code_) {
      best_code_ = std::move(code);
      best_pos_ = pos;
      best_path_ = path_;
      return parent;
    }
    if (code == best_code_) {
      generators_.push_back(automorphism(best_pos_, pos));
      return common_prefix(best_path_);
    }
    return parent;
  }

  std::size_t n_;
  VertexColors colors_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  Cells start_;

  std::vector<Vertex> path_;
  bool have_first_ = false;
  std::vector<std::uint32_t> first_code_, best_code_;
  Cells first_pos_, best_pos_;
  std::vector<Vertex> first_path_, best_path_;
  std::vector<std::vector<Vertex>> generators_;
};

BallCode to_bytes(const std::vector<std::uint32_t>& words) {
  BallCode code;
  code.bytes.reserve(4 * words.size());
  for (auto w : words) {
    for (int shift = 24; shift >= 0; shift -= 8) code.bytes.push_back(static_cast<std::uint8_t>(w >> shift));
  }
  return code;
}

}  // namespace

BallCode canonical_code(const MultiGraph& g, Vertex root, const VertexColors& colors) {
  return to_bytes(Canonizer(g, root, colors).run());
}

BallCode canonical_code(const RootedBall& b) { return canonical_code(b.graph, b.root, b.colors); }

LocalDistribution local_distribution(const MultiGraph& g, std::uint32_t radius,
                                     const VertexColors& colors) {
  const std::size_t n = g.vertex_count();
  std::map<BallCode, std::int64_t> counts;
  for (Vertex v = 0; v < n; ++v) ++counts[canonical_code(ball(g, v, radius, colors))];
  LocalDistribution out;
  for (auto& [code, c] : counts) out.emplace(code, Rational(c, static_cast<std::int64_t>(n)));
  return out;
}

Rational tv_distance(const LocalDistribution& p, const LocalDistribution& q) {
  Rational total = 0;
  auto a = p.begin();
  auto b = q.begin();
  while (a != p.end() || b != q.end()) {
    if (b == q.end() || (a != p.end() && a->first < b->first)) {
      total += a->second;
      ++a;
    } else if (a == p.end() || b->first < a->first) {
      total += b->second;
      ++b;
    } else {
      total += abs(a->second - b->second);
      ++a;
      ++b;
    }
  }
  return total / 2;
}

std::vector<LocalDistribution> sample_qkr(const MultiGraph& g, std::uint32_t k, std::uint32_t radius,
                                          std::size_t colorings, std::uint64_t rng_seed) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (colorings == 0) throw std::invalid_argument("colorings must be positive");
  const std::size_t n = g.vertex_count();
  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, k - 1);
  std::uniform_int_distribution<std::size_t> vertex(0, n - 1);
  std::vector<LocalDistribution> out;
  VertexColors colors(n, 0);
  for (std::size_t s = 0; s < colorings; ++s) {
    if (k > 1 && s % 2 == 0) {
      for (auto& c : colors) c = pick(rng);
    } else if (k > 1) {
      auto& c = colors[vertex(rng)];
      c = (c + 1 + std::uniform_int_distribution<std::uint32_t>(0, k - 2)(rng)) % k;
    }
    out.push_back(local_distribution(g, radius, colors));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<LocalDistribution> enumerate_qkr(const MultiGraph& g, std::uint32_t k,
                                             std::uint32_t radius, std::uint64_t budget) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  const std::size_t n = g.vertex_count();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > budget / k) throw std::length_error("colouring enumeration budget exceeded");
    total *= k;
  }
  std::vector<LocalDistribution> out;
  VertexColors colors(n, 0);
  for (std::uint64_t i = 0; i < total; ++i) {
    out.push_back(local_distribution(g, radius, colors));
    for (auto& c : colors) {
      if (++c < k) break;
      c = 0;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double hausdorff_tv(std::span<const LocalDistribution> a, std::span<const LocalDistribution> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("empty statistics set");
  auto directed = [](std::span<const LocalDistribution> x, std::span<const LocalDistribution> y) {
    Rational worst = 0;
    for (const auto& p : x) {
      Rational best = 1;
      for (const auto& q : y) best = std::min(best, tv_distance(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return to_double(std::max(directed(a, b), directed(b, a)));
}

Subdivision subdivide_edge_coloring(const MultiGraph& g, const EdgePartition& part) {
  if (part.edge_count() != g.edge_count()) throw std::invalid_argument("partition size mismatch");
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::vector<Edge> edges;
  edges.reserve(2 * m);
  Subdivision out;
  out.colors.assign(n, part.k);
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    const auto mid = static_cast<Vertex>(n + e);
    edges.push_back({ed.u, mid});
    edges.push_back({mid, ed.v});
    out.colors.push_back(part.color[e]);
  }
  out.graph = MultiGraph(n + m, std::move(edges));
  return out;
}

}  // namespace mlim
