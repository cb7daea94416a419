#include "matroid_limits/rank.hpp"

#include <bit>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mlim {

std::string_view to_string(SetFunction fn) {
  switch (fn) {
    case SetFunction::rho: return "rho";
    case SetFunction::rho_star: return "rho_star";
    case SetFunction::eta: return "eta";
  }
  return "?";
}

SetFunction parse_set_function(std::string_view name) {
  if (name == "rho") return SetFunction::rho;
  if (name == "rho_star" || name == "rho*") return SetFunction::rho_star;
  if (name == "eta") return SetFunction::eta;
  throw std::invalid_argument("unknown setfunction '" + std::string(name) + "'");
}

namespace {

std::int64_t as_int(std::size_t x) { return static_cast<std::int64_t>(x); }

// Component count of the edges selected by `mask`, m <= 64.
std::size_t component_count_mask(const MultiGraph& g, std::uint64_t mask) {
  DisjointSets ds(g.vertex_count());
  while (mask) {
    const auto e = static_cast<EdgeId>(std::countr_zero(mask));
    ds.unite(g.edge(e).u, g.edge(e).v);
    mask &= mask - 1;
  }
  return ds.set_count();
}

bool acyclic_mask(const MultiGraph& g, std::uint64_t mask) {
  DisjointSets ds(g.vertex_count());
  while (mask) {
    const auto e = static_cast<EdgeId>(std::countr_zero(mask));
    if (!ds.unite(g.edge(e).u, g.edge(e).v)) return false;
    mask &= mask - 1;
  }
  return true;
}

std::string mask_string(std::uint64_t mask, std::size_t m) {
  std::string s = "{";
  bool first = true;
  for (std::size_t e = 0; e < m; ++e) {
    if ((mask >> e) & 1u) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
  }
  return s + "}";
}

}  // namespace

Rational eta(const MultiGraph& g, const EdgeSet& f) {
  return Rational(as_int(f.count()), as_int(g.vertex_count()));
}

Rational rho(const MultiGraph& g, const EdgeSet& f) {
  const Components comps = components(g, f);
  Rational expectation(0);
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    expectation += Rational(1, as_int(comps.size_of_vertex(x)));
  }
  return Rational(1) - expectation / as_int(g.vertex_count());
}

std::size_t rank_abs(const MultiGraph& g, const EdgeSet& f) {
  return g.vertex_count() - component_count(g, f);
}

Rational cocycle_rho(const MultiGraph& g, const EdgeSet& f) {
  const auto n = as_int(g.vertex_count());
  const auto full = EdgeSet::full(g.edge_count());
  const auto r_complement = as_int(rank_abs(g, f.complement()));
  const auto r_full = as_int(rank_abs(g, full));
  return Rational(r_complement + as_int(f.count()) - r_full, n);
}

Rational evaluate(SetFunction fn, const MultiGraph& g, const EdgeSet& f) {
  switch (fn) {
    case SetFunction::rho: return Rational(as_int(rank_abs(g, f)), as_int(g.vertex_count()));
    case SetFunction::rho_star: return cocycle_rho(g, f);
    case SetFunction::eta: return eta(g, f);
  }
  throw std::logic_error("unreachable");
}

bool is_independent(const MultiGraph& g, const EdgeSet& f) {
  DisjointSets ds(g.vertex_count());
  for (EdgeId e : f.ids()) {
    if (!ds.unite(g.edge(e).u, g.edge(e).v)) return false;
  }
  return true;
}

bool is_base(const MultiGraph& g, const EdgeSet& f) {
  return is_independent(g, f) &&
         component_count(g, f) == component_count(g, EdgeSet::full(g.edge_count()));
}

std::vector<Rational> tabulate(SetFunction fn, const MultiGraph& g) {
  const std::size_t m = g.edge_count();
  if (m > 24) throw std::length_error("tabulate needs m <= 24");
  const std::uint64_t subsets = std::uint64_t{1} << m;
  const auto n = as_int(g.vertex_count());
  std::vector<std::int64_t> rank(subsets);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    rank[mask] = n - as_int(component_count_mask(g, mask));
  }
  std::vector<Rational> out(subsets);
  const std::uint64_t all = subsets - 1;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const auto size = static_cast<std::int64_t>(std::popcount(mask));
    switch (fn) {
      case SetFunction::rho: out[mask] = Rational(rank[mask], n); break;
      case SetFunction::eta: out[mask] = Rational(size, n); break;
      case SetFunction::rho_star:
        out[mask] = Rational(rank[all & ~mask] + size - rank[all], n);
        break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

SubmodularityReport check_submodular(const MultiGraph& g, std::size_t trials,
                                     std::uint64_t rng_seed, SetFunction fn) {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  const std::size_t m = g.edge_count();
  std::mt19937_64 rng(rng_seed);
  std::bernoulli_distribution coin(0.5);
  SubmodularityReport report;
  for (std::size_t t = 0; t < trials; ++t) {
    EdgeSet x(m), y(m);
    for (EdgeId e = 0; e < m; ++e) {
      x.set(e, coin(rng));
      y.set(e, coin(rng));
    }
    const Rational lhs = evaluate(fn, g, x) + evaluate(fn, g, y);
    const Rational rhs = evaluate(fn, g, x & y) + evaluate(fn, g, x | y);
    ++report.pairs_checked;
    if (lhs < rhs) report.violations.push_back({x, y, lhs, rhs});
  }
  return report;
}

SubmodularityReport check_submodular_exhaustive(const MultiGraph& g, SetFunction fn) {
  const std::size_t m = g.edge_count();
  if (m > 12) throw std::length_error("exhaustive submodularity check needs m <= 12");
  const auto values = tabulate(fn, g);
  const std::uint64_t subsets = std::uint64_t{1} << m;
  SubmodularityReport report;
  for (std::uint64_t x = 0; x < subsets; ++x) {
    for (std::uint64_t y = 0; y < subsets; ++y) {
      ++report.pairs_checked;
      const Rational lhs = values[x] + values[y];
      const Rational rhs = values[x & y] + values[x | y];
      if (lhs < rhs) {
        report.violations.push_back(
            {EdgeSet::from_mask(m, x), EdgeSet::from_mask(m, y), lhs, rhs});
      }
    }
  }
  return report;
}

bool AxiomReport::ok() const {
  for (const auto& r : results) {
    if (r.status == AxiomStatus::failed) return false;
  }
  return true;
}

std::optional<AxiomResult> AxiomReport::first_failure() const {
  for (const auto& r : results) {
    if (r.status == AxiomStatus::failed) return r;
  }
  return std::nullopt;
}

AxiomReport check_matroid_axioms(const MultiGraph& g, std::size_t exhaustive_limit) {
  const std::size_t m = g.edge_count();
  if (exhaustive_limit > 12) exhaustive_limit = 12;
  if (m > exhaustive_limit) {
    throw std::length_error("graph has " + std::to_string(m) + " edges, exhaustive limit is " +
                            std::to_string(exhaustive_limit));
  }
  const std::uint64_t subsets = std::uint64_t{1} << m;
  const auto n = as_int(g.vertex_count());
  std::vector<std::int64_t> r(subsets);
  std::vector<bool> acyclic(subsets);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    r[mask] = n - as_int(component_count_mask(g, mask));
    acyclic[mask] = acyclic_mask(g, mask);
  }

  AxiomReport report;
  auto fail = [&](const char* axiom, std::string detail) {
    report.results.push_back({axiom, AxiomStatus::failed, std::move(detail)});
  };
  auto pass = [&](const char* axiom) { report.results.push_back({axiom, AxiomStatus::passed, ""}); };

  // R1
  if (r[0] != 0) fail("R1", "r(empty) = " + std::to_string(r[0]));
  else pass("R1");

  // R2 over all pairs X subset Y
  {
    std::string bad;
    for (std::uint64_t y = 0; y < subsets && bad.empty(); ++y) {
      for (std::uint64_t x = y;; x = (x - 1) & y) {
        if (r[x] > r[y]) {
          bad = "r(" + mask_string(x, m) + ") > r(" + mask_string(y, m) + ")";
          break;
        }
        if (x == 0) break;
      }
    }
    bad.empty() ? pass("R2") : fail("R2", bad);
  }

  // R3
  {
    std::string bad;
    for (std::uint64_t x = 0; x < subsets; ++x) {
      if (r[x] > std::popcount(x)) {
        bad = "r(" + mask_string(x, m) + ") > |X|";
        break;
      }
    }
    bad.empty() ? pass("R3") : fail("R3", bad);
  }

  // R4
  {
    std::string bad;
    for (std::uint64_t x = 0; x < subsets && bad.empty(); ++x) {
      for (std::uint64_t y = 0; y < subsets; ++y) {
        if (r[x] + r[y] < r[x & y] + r[x | y]) {
          bad = "X=" + mask_string(x, m) + " Y=" + mask_string(y, m);
          break;
        }
      }
    }
    bad.empty() ? pass("R4") : fail("R4", bad);
  }

  // Independence: r(X) == |X| must agree with acyclicity.
  {
    std::string bad;
    for (std::uint64_t x = 0; x < subsets; ++x) {
      if ((r[x] == std::popcount(x)) != acyclic[x]) {
        bad = mask_string(x, m);
        break;
      }
    }
    bad.empty() ? pass("independence") : fail("independence", "rank/acyclicity disagree on " + bad);
  }

  // I0
  {
    std::string bad;
    for (std::uint64_t y = 0; y < subsets && bad.empty(); ++y) {
      if (!acyclic[y]) continue;
      for (std::uint64_t x = y;; x = (x - 1) & y) {
        if (!acyclic[x]) {
          bad = mask_string(x, m) + " inside forest " + mask_string(y, m);
          break;
        }
        if (x == 0) break;
      }
    }
    bad.empty() ? pass("I0") : fail("I0", bad);
  }

  report.results.push_back(
      {"I1", AxiomStatus::skipped, "increasing chains stabilize on a finite ground set"});

  // I2': for forests I1, I2 some forest I3 with I1 <= I3 <= I1 | I2 has |I3| >= |I2|.
  {
    std::string bad;
    for (std::uint64_t a = 0; a < subsets && bad.empty(); ++a) {
      if (!acyclic[a]) continue;
      for (std::uint64_t b = 0; b < subsets; ++b) {
        if (!acyclic[b]) continue;
        const std::uint64_t extra = b & ~a;
        bool found = false;
        for (std::uint64_t s = extra;; s = (s - 1) & extra) {
          const std::uint64_t c = a | s;
          if (acyclic[c] && std::popcount(c) >= std::popcount(b)) {
            found = true;
            break;
          }
          if (s == 0) break;
        }
        if (!found) {
          bad = "I1=" + mask_string(a, m) + " I2=" + mask_string(b, m);
          break;
        }
      }
    }
    bad.empty() ? pass("I2'") : fail("I2'", bad);
  }
  return report;
}

// ---------------------------------------------------------------------------

EdgeMeasure::EdgeMeasure(std::vector<Rational> weights) : weights_(std::move(weights)) {
  for (const auto& w : weights_) {
    if (w < 0) throw std::invalid_argument("edge measure weights must be nonnegative");
  }
}

EdgeMeasure EdgeMeasure::restricted_eta(const MultiGraph& g, const EdgeSet& f) {
  std::vector<Rational> w(g.edge_count(), Rational(0));
  for (EdgeId e : f.ids()) w[e] = Rational(1, as_int(g.vertex_count()));
  return EdgeMeasure(std::move(w));
}

EdgeMeasure EdgeMeasure::uniform(std::size_t m, Rational w) {
  return EdgeMeasure(std::vector<Rational>(m, w));
}

Rational EdgeMeasure::operator()(const EdgeSet& f) const {
  Rational total(0);
  for (EdgeId e : f.ids()) total += weights_[e];
  return total;
}

EdgeMeasure EdgeMeasure::complement_in(const MultiGraph& g) const {
  if (weights_.size() != g.edge_count()) throw std::invalid_argument("measure/graph size mismatch");
  EdgeMeasure out;
  out.weights_.reserve(weights_.size());
  const Rational unit(1, as_int(g.vertex_count()));
  for (const auto& w : weights_) out.weights_.push_back(unit - w);
  return out;
}

EdgeMeasure parse_edge_measure(std::string_view text) {
  std::vector<Rational> weights;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto end = text.find('\n', pos);
    const auto line = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    pos = end == std::string_view::npos ? text.size() : end + 1;
    ++line_no;
    try {
      weights.push_back(parse_rational(line));
    } catch (const std::invalid_argument& ex) {
      throw ParseError(line_no, ex.what());
    }
  }
  return EdgeMeasure(std::move(weights));
}

std::string serialize_edge_measure(const EdgeMeasure& alpha) {
  std::string out;
  for (const auto& w : alpha.weights()) out += to_string(w) + "\n";
  return out;
}

bool is_minorizing(const MultiGraph& g, const EdgeMeasure& alpha, bool base, SetFunction fn) {
  const std::size_t m = g.edge_count();
  if (alpha.edge_count() != m) throw std::invalid_argument("measure/graph size mismatch");
  if (m > 20) throw std::length_error("is_minorizing enumerates 2^m subsets; needs m <= 20");
  for (const auto& w : alpha.weights()) {
    if (w < 0) return false;
  }
  const auto values = tabulate(fn, g);
  const std::uint64_t subsets = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    Rational a(0);
    for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
      a += alpha.weight(static_cast<EdgeId>(std::countr_zero(bits)));
    }
    if (a > values[mask]) return false;
  }
  if (base) {
    return alpha(EdgeSet::full(m)) == values[subsets - 1];
  }
  return true;
}

// ---------------------------------------------------------------------------

void FiniteComponentGraphing::validate() const {
  if (components.empty()) throw std::invalid_argument("graphing has no components");
  Rational total(0);
  for (const auto& c : components) {
    if (c.weight <= 0) throw std::invalid_argument("component weights must be positive");
    if (component_count(c.graph, EdgeSet::full(c.graph.edge_count())) != 1) {
      throw std::invalid_argument("graphing components must be connected");
    }
    total += c.weight;
  }
  if (total != Rational(1)) throw std::invalid_argument("component weights sum to " + to_string(total));
}

Rational graphing_rho(const FiniteComponentGraphing& graphing, std::span<const EdgeSet> edge_sets) {
  graphing.validate();
  if (edge_sets.size() != graphing.components.size()) {
    throw std::invalid_argument("need one edge set per component");
  }
  Rational mass(0);
  for (const auto& c : graphing.components) mass += c.weight * as_int(c.graph.vertex_count());
  Rational total(0);
  for (std::size_t i = 0; i < edge_sets.size(); ++i) {
    const auto& c = graphing.components[i];
    if (edge_sets[i].universe() != c.graph.edge_count()) {
      throw std::invalid_argument("edge set " + std::to_string(i) + " does not match its component");
    }
    const Rational share = c.weight * as_int(c.graph.vertex_count()) / mass;
    total += share * rho(c.graph, edge_sets[i]);
  }
  return total;
}

}  // namespace mlim
