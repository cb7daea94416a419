#include "matroid_limits/quotient.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace mlim {

std::strong_ordering operator<=>(const QuotientPoint& a, const QuotientPoint& b) {
  if (a.k != b.k) return a.k <=> b.k;
  const std::size_t len = std::min(a.coords.size(), b.coords.size());
  for (std::size_t i = 0; i < len; ++i) {
    if (a.coords[i] < b.coords[i]) return std::strong_ordering::less;
    if (b.coords[i] < a.coords[i]) return std::strong_ordering::greater;
  }
  return a.coords.size() <=> b.coords.size();
}

void QuotientSet::normalize() {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

bool QuotientSet::contains(const QuotientPoint& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

namespace {

void check_k(std::uint32_t k) {
  if (k == 0 || k > 16) throw std::invalid_argument("k must lie in [1, 16]");
}

// Coordinates of the quotient for a colouring, via one union-find per union
// of classes.
QuotientPoint coords_of(const MultiGraph& g, SetFunction fn, std::span<const std::uint32_t> color,
                        std::uint32_t k) {
  const std::uint32_t full = (1u << k) - 1;
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  std::vector<std::int64_t> rank(full + 1, 0);
  std::vector<std::int64_t> edges(full + 1, 0);
  std::vector<std::int64_t> per_class(k, 0);
  for (auto c : color) ++per_class[c];
  for (std::uint32_t x = 1; x <= full; ++x) {
    for (std::uint32_t c = 0; c < k; ++c) {
      if ((x >> c) & 1u) edges[x] += per_class[c];
    }
  }
  if (fn != SetFunction::eta) {
    for (std::uint32_t x = 1; x <= full; ++x) {
      DisjointSets dsu(g.vertex_count());
      std::int64_t r = 0;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if ((x >> color[e]) & 1u) {
          const Edge& ed = g.edge(e);
          r += dsu.unite(ed.u, ed.v);
        }
      }
      rank[x] = r;
    }
  }
  QuotientPoint p{k, std::vector<Rational>(full + 1)};
  for (std::uint32_t x = 0; x <= full; ++x) {
    switch (fn) {
      case SetFunction::rho: p.coords[x] = Rational(rank[x], n); break;
      case SetFunction::eta: p.coords[x] = Rational(edges[x], n); break;
      case SetFunction::rho_star:
        p.coords[x] = Rational(rank[full ^ x] + edges[x] - rank[full], n);
        break;
    }
  }
  return p;
}

// Two-sided Hausdorff: directed distances each way, sup of the mins.
template <class Dist>
Rational directed(const QuotientSet& a, const QuotientSet& b, Dist dist) {
  Rational worst = 0;
  for (const auto& p : a.points) {
    Rational best = dist(p, b.points.front());
    for (const auto& q : b.points) {
      best = std::min(best, dist(p, q));
      if (best <= worst) break;
    }
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

QuotientPoint quotient(const MultiGraph& g, SetFunction fn, const EdgePartition& part) {
  check_k(part.k);
  if (part.edge_count() != g.edge_count()) throw std::invalid_argument("partition size mismatch");
  return coords_of(g, fn, part.color, part.k);
}

QuotientPoint permute_classes(const QuotientPoint& p, std::span<const std::uint32_t> perm) {
  if (perm.size() != p.k) throw std::invalid_argument("permutation size mismatch");
  QuotientPoint out{p.k, std::vector<Rational>(p.coords.size())};
  for (std::uint32_t x = 0; x < p.coords.size(); ++x) {
    std::uint32_t y = 0;
    for (std::uint32_t i = 0; i < p.k; ++i) {
      if ((x >> i) & 1u) y |= 1u << perm[i];
    }
    out.coords[y] = p.coords[x];
  }
  return out;
}

QuotientSet enumerate_qk(const MultiGraph& g, SetFunction fn, std::uint32_t k, std::uint64_t budget) {
  check_k(k);
  const std::size_t m = g.edge_count();
  const bool pin = (k == 2 && m > 0);
  std::uint64_t total = 1;
  for (std::size_t e = pin ? 1 : 0; e < m; ++e) {
    if (total > budget / k) {
      throw std::length_error("enumeration needs more than " + std::to_string(budget) + " colourings");
    }
    total *= k;
  }
  if (total > budget) throw std::length_error("enumeration budget exceeded");

  QuotientSet out{k, QuotientMode::exact, {}};
  std::vector<std::uint32_t> color(m, 0);
  const std::array<std::uint32_t, 2> swap{1, 0};
  for (std::uint64_t i = 0; i < total; ++i) {
    QuotientPoint p = coords_of(g, fn, color, k);
    if (pin) out.points.push_back(permute_classes(p, swap));
    out.points.push_back(std::move(p));
    for (std::size_t e = pin ? 1 : 0; e < m; ++e) {
      if (++color[e] < k) break;
      color[e] = 0;
    }
  }
  out.normalize();
  return out;
}

// ---------------------------------------------------------------------------
// Frontier dynamic programme
//
// A state stores, for every nonempty union X of classes, a restricted-growth
// labelling of the live vertices by X-component. Its values are vectors of
// closed X-component counts, followed by per-class edge counts when the
// setfunction needs them.

namespace {

using Key = std::vector<std::uint8_t>;
using Values = std::set<std::vector<std::uint32_t>>;
using Table = std::map<Key, Values>;

void canonicalize(Key& key, std::size_t unions, std::size_t width) {
  std::array<std::uint8_t, 256> relabel{};
  for (std::size_t u = 0; u < unions; ++u) {
    relabel.fill(0xFF);
    std::uint8_t next = 0;
    for (std::size_t i = 0; i < width; ++i) {
      std::uint8_t& l = key[u * width + i];
      if (relabel[l] == 0xFF) relabel[l] = next++;
      l = relabel[l];
    }
  }
}

void merge_into(Table& t, Key key, const Values& vals) {
  auto& slot = t[std::move(key)];
  slot.insert(vals.begin(), vals.end());
}

std::uint64_t table_size(const Table& t) {
  std::uint64_t s = 0;
  for (const auto& [key, vals] : t) s += vals.size();
  return s;
}

}  // namespace

QuotientSet frontier_qk(const MultiGraph& g, SetFunction fn, std::uint32_t k, std::uint64_t budget) {
  check_k(k);
  const std::size_t n = g.vertex_count();
  const std::uint32_t full = (1u << k) - 1;
  const std::size_t unions = full;  // masks 1..full stored at index mask-1
  const bool track_edges = fn != SetFunction::rho;
  const std::size_t value_len = unions + (track_edges ? k : 0);

  std::vector<Vertex> last(n);
  for (Vertex v = 0; v < n; ++v) last[v] = v;
  std::vector<std::vector<EdgeId>> closing(n);  // edges whose larger endpoint is v
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const Vertex hi = std::max(ed.u, ed.v);
    last[ed.u] = std::max(last[ed.u], hi);
    last[ed.v] = std::max(last[ed.v], hi);
    closing[hi].push_back(e);
  }

  std::vector<Vertex> live;
  Table table;
  table[Key{}].insert(std::vector<std::uint32_t>(value_len, 0));

  for (Vertex v = 0; v < n; ++v) {
    // introduce v as a singleton in every union
    {
      const std::size_t w = live.size();
      if (w + 1 > 255) throw std::length_error("frontier wider than 255 vertices");
      Table next;
      for (auto& [key, vals] : table) {
        Key nk((w + 1) * unions);
        for (std::size_t u = 0; u < unions; ++u) {
          std::uint8_t blocks = 0;
          for (std::size_t i = 0; i < w; ++i) {
            nk[u * (w + 1) + i] = key[u * w + i];
            blocks = std::max<std::uint8_t>(blocks, key[u * w + i] + 1);
          }
          nk[u * (w + 1) + w] = blocks;
        }
        next[std::move(nk)] = std::move(vals);
      }
      table = std::move(next);
      live.push_back(v);
    }
    const std::size_t w = live.size();
    auto pos = [&](Vertex x) {
      return static_cast<std::size_t>(std::find(live.begin(), live.end(), x) - live.begin());
    };

    for (EdgeId e : closing[v]) {
      const Edge& ed = g.edge(e);
      const std::size_t a = pos(ed.u);
      const std::size_t b = pos(ed.v);
      Table next;
      for (const auto& [key, vals] : table) {
        for (std::uint32_t c = 0; c < k; ++c) {
          Key nk = key;
          for (std::uint32_t x = 1; x <= full; ++x) {
            if (!((x >> c) & 1u)) continue;
            const std::size_t base = (x - 1) * w;
            const std::uint8_t la = nk[base + a];
            const std::uint8_t lb = nk[base + b];
            if (la == lb) continue;
            for (std::size_t i = 0; i < w; ++i) {
              if (nk[base + i] == lb) nk[base + i] = la;
            }
          }
          canonicalize(nk, unions, w);
          if (track_edges) {
            Values shifted;
            for (auto val : vals) {
              ++val[unions + c];
              shifted.insert(std::move(val));
            }
            merge_into(next, std::move(nk), shifted);
          } else {
            merge_into(next, std::move(nk), vals);
          }
        }
      }
      table = std::move(next);
      if (table_size(table) > budget) throw std::length_error("frontier state budget exceeded");
    }

    // forget vertices with no remaining edges
    for (std::size_t i = live.size(); i-- > 0;) {
      if (last[live[i]] > v) continue;
      const std::size_t width = live.size();
      Table next;
      for (const auto& [key, vals] : table) {
        std::vector<std::uint32_t> closed(unions, 0);
        Key nk;
        nk.reserve((width - 1) * unions);
        for (std::size_t u = 0; u < unions; ++u) {
          const std::uint8_t l = key[u * width + i];
          bool alone = true;
          for (std::size_t j = 0; j < width; ++j) {
            if (j != i && key[u * width + j] == l) alone = false;
          }
          closed[u] = alone;
          for (std::size_t j = 0; j < width; ++j) {
            if (j != i) nk.push_back(key[u * width + j]);
          }
        }
        canonicalize(nk, unions, width - 1);
        Values shifted;
        for (auto val : vals) {
          for (std::size_t u = 0; u < unions; ++u) val[u] += closed[u];
          shifted.insert(std::move(val));
        }
        merge_into(next, std::move(nk), shifted);
      }
      table = std::move(next);
      live.erase(live.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  QuotientSet out{k, QuotientMode::exact, {}};
  const auto nn = static_cast<std::int64_t>(n);
  for (const auto& [key, vals] : table) {
    for (const auto& val : vals) {
      std::vector<std::int64_t> rank(full + 1, 0);
      std::vector<std::int64_t> edges(full + 1, 0);
      for (std::uint32_t x = 1; x <= full; ++x) {
        rank[x] = nn - static_cast<std::int64_t>(val[x - 1]);
        if (track_edges) {
          for (std::uint32_t c = 0; c < k; ++c) {
            if ((x >> c) & 1u) edges[x] += val[unions + c];
          }
        }
      }
      QuotientPoint p{k, std::vector<Rational>(full + 1)};
      for (std::uint32_t x = 0; x <= full; ++x) {
        switch (fn) {
          case SetFunction::rho: p.coords[x] = Rational(rank[x], nn); break;
          case SetFunction::eta: p.coords[x] = Rational(edges[x], nn); break;
          case SetFunction::rho_star:
            p.coords[x] = Rational(rank[full ^ x] + edges[x] - rank[full], nn);
            break;
        }
      }
      out.points.push_back(std::move(p));
    }
  }
  out.normalize();
  return out;
}

QuotientSet sample_qk(const MultiGraph& g, SetFunction fn, std::uint32_t k, std::size_t samples,
                      std::uint64_t rng_seed) {
  check_k(k);
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, k - 1);
  QuotientSet out{k, QuotientMode::sampled, {}};
  std::vector<std::uint32_t> color(g.edge_count());
  for (std::size_t s = 0; s < samples; ++s) {
    for (auto& c : color) c = pick(rng);
    out.points.push_back(coords_of(g, fn, color, k));
  }
  out.normalize();
  return out;
}

Rational distance(const QuotientPoint& a, const QuotientPoint& b, Norm norm) {
  if (a.k != b.k || a.coords.size() != b.coords.size()) {
    throw std::invalid_argument("quotient points have different k");
  }
  Rational d = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    const Rational diff = abs(a.coords[i] - b.coords[i]);
    d = norm == Norm::sup ? std::max(d, diff) : d + diff;
  }
  return d;
}

Rational hausdorff_exact(const QuotientSet& a, const QuotientSet& b, Norm norm) {
  if (a.k != b.k) throw std::invalid_argument("quotient sets have different k");
  if (a.points.empty() || b.points.empty()) throw std::invalid_argument("quotient set is empty");
  auto dist = [norm](const QuotientPoint& p, const QuotientPoint& q) { return distance(p, q, norm); };
  return std::max(directed(a, b, dist), directed(b, a, dist));
}

double hausdorff(const QuotientSet& a, const QuotientSet& b, Norm norm) {
  return to_double(hausdorff_exact(a, b, norm));
}

std::vector<double> profile_cauchy_diagnostics(std::span<const QuotientSet> sequence, Norm norm) {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    out.push_back(hausdorff(sequence[i], sequence[i + 1], norm));
  }
  return out;
}

Rational min_distance(const QuotientSet& set, const QuotientPoint& target, Norm norm) {
  if (set.points.empty()) throw std::invalid_argument("quotient set is empty");
  Rational best = distance(set.points.front(), target, norm);
  for (const auto& p : set.points) best = std::min(best, distance(p, target, norm));
  return best;
}

SearchResult nearest_quotient_search(const MultiGraph& g, SetFunction fn, std::uint32_t k,
                                     const QuotientPoint& target, std::size_t restarts,
                                     std::uint64_t rng_seed, std::span<const EdgePartition> initial) {
  check_k(k);
  if (target.k != k || target.coords.size() != (std::size_t{1} << k)) {
    throw std::invalid_argument("target has the wrong k");
  }
  if (restarts == 0) throw std::invalid_argument("restarts must be positive");
  const std::size_t m = g.edge_count();
  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, k - 1);

  SearchResult best;
  bool have_best = false;
  std::vector<std::uint32_t> color(m);
  for (std::size_t r = 0; r < restarts; ++r) {
    if (r < initial.size()) {
      if (initial[r].k != k || initial[r].edge_count() != m) {
        throw std::invalid_argument("initial partition does not fit the graph");
      }
      color = initial[r].color;
    } else {
      for (auto& c : color) c = pick(rng);
    }
    QuotientPoint current = coords_of(g, fn, color, k);
    Rational d = distance(current, target);
    ++best.evaluations;
    for (;;) {
      EdgeId move_edge = 0;
      std::uint32_t move_class = 0;
      Rational move_d = d;
      QuotientPoint move_point;
      for (EdgeId e = 0; e < m; ++e) {
        const std::uint32_t old = color[e];
        for (std::uint32_t c = 0; c < k; ++c) {
          if (c == old) continue;
          color[e] = c;
          QuotientPoint p = coords_of(g, fn, color, k);
          ++best.evaluations;
          const Rational nd = distance(p, target);
          if (nd < move_d) {
            move_d = nd;
            move_edge = e;
            move_class = c;
            move_point = std::move(p);
          }
        }
        color[e] = old;
      }
      if (!(move_d < d)) break;
      color[move_edge] = move_class;
      current = std::move(move_point);
      d = move_d;
    }
    if (!have_best || d < best.distance) {
      have_best = true;
      best.distance = d;
      best.point = current;
      best.partition = EdgePartition(color, k);
    }
    if (best.distance == Rational(0)) break;
  }
  return best;
}

QuotientPoint doubled_copy_target(std::size_t vertices_per_copy) {
  if (vertices_per_copy == 0) throw std::invalid_argument("copies need at least one vertex");
  const auto n = static_cast<std::int64_t>(vertices_per_copy);
  return QuotientPoint{2, {Rational(0), Rational(n - 1, 2 * n), Rational(n - 1, 2 * n), Rational(n - 1, n)}};
}

EdgePartition copy_partition(std::size_t edges_per_copy) {
  std::vector<std::uint32_t> color(2 * edges_per_copy, 0);
  std::fill(color.begin() + static_cast<std::ptrdiff_t>(edges_per_copy), color.end(), 1u);
  return EdgePartition(std::move(color), 2);
}

}  // namespace mlim
