#include "matroid_limits/experiments.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "matroid_limits/forest.hpp"
#include "matroid_limits/graphgen.hpp"
#include "matroid_limits/local_stats.hpp"
#include "matroid_limits/planar.hpp"
#include "matroid_limits/quotient.hpp"
#include "matroid_limits/rank.hpp"
#include "matroid_limits/serialization.hpp"

namespace mlim {

using nlohmann::json;
namespace fs = std::filesystem;

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"convergence", "expander-gap", "duality", "forests"};
  return names;
}

std::size_t worker_limit() {
  if (const char* env = std::getenv("MATROID_LIMITS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (std::uint64_t{out[0]} << 32) | out[1];
}

ExperimentConfig load_config(const fs::path& file, const std::string& experiment,
                             std::optional<std::uint64_t> seed_override, const fs::path& out_dir) {
  if (std::find(experiment_names().begin(), experiment_names().end(), experiment) ==
      experiment_names().end()) {
    throw ConfigError("unknown experiment '" + experiment + "'");
  }
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot open config " + file.string());
  ExperimentConfig cfg;
  try {
    cfg.params = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + file.string() + " is not valid JSON: " + e.what());
  }
  if (!cfg.params.is_object()) throw ConfigError("config must be a JSON object");
  if (cfg.params.contains("experiment") && cfg.params.at("experiment") != experiment) {
    throw ConfigError("config is for experiment " + cfg.params.at("experiment").dump() + ", not '" +
                      experiment + "'");
  }
  cfg.experiment = experiment;
  if (seed_override) {
    cfg.seed = *seed_override;
  } else if (cfg.params.contains("seed")) {
    cfg.seed = cfg.params.at("seed").get<std::uint64_t>();
  } else {
    throw ConfigError("no seed: set \"seed\" in the config or pass --seed");
  }
  cfg.out_dir = out_dir;
  return cfg;
}

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

std::string join(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    // labels may contain commas
    if (cells[i].find(',') != std::string::npos) {
      line += '"' + cells[i] + '"';
    } else {
      line += cells[i];
    }
  }
  return line;
}

class Writer {
 public:
  Writer(const fs::path& dir, ExperimentReport& report) : dir_(dir), report_(report) {
    fs::create_directories(dir_);
  }

  void csv(const std::string& name, const std::vector<std::string>& header,
           const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(dir_ / name, std::ios::binary);
    out << join(header) << '\n';
    for (const auto& row : rows) out << join(row) << '\n';
    finish(out, name);
  }

  void json_file(const std::string& name, const json& value) {
    std::ofstream out(dir_ / name, std::ios::binary);
    out << value.dump(2) << '\n';
    finish(out, name);
  }

 private:
  void finish(std::ofstream& out, const std::string& name) {
    if (!out) throw std::runtime_error("failed to write " + (dir_ / name).string());
    report_.artifacts.push_back(dir_ / name);
  }

  fs::path dir_;
  ExperimentReport& report_;
};

template <class T>
T param(const json& p, const char* key, T fallback) {
  if (!p.contains(key)) return fallback;
  try {
    return p.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad value for \"") + key + "\": " + e.what());
  }
}

std::vector<GenSpec> spec_list(const json& p, const char* key) {
  if (!p.contains(key)) throw ConfigError(std::string("config needs \"") + key + "\"");
  std::vector<GenSpec> specs;
  try {
    for (const auto& item : p.at(key)) specs.push_back(item.get<GenSpec>());
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad entry in \"") + key + "\": " + e.what());
  }
  if (specs.empty()) throw ConfigError(std::string("\"") + key + "\" is empty");
  return specs;
}

Norm parse_norm(const std::string& name) {
  if (name == "sup") return Norm::sup;
  if (name == "l1") return Norm::l1;
  throw ConfigError("unknown norm '" + name + "'");
}

SetFunction setfunction_param(const json& p) {
  try {
    return parse_set_function(param<std::string>(p, "setfunction", "rho"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

// ---------------------------------------------------------------------------
// convergence

struct QuotientOutcome {
  QuotientSet set;
  std::string method;
};

QuotientOutcome compute_qk(const MultiGraph& g, SetFunction fn, std::uint32_t k, const std::string& method,
                           std::uint64_t budget, std::size_t samples, std::uint64_t seed) {
  if (method == "enumerate") return {enumerate_qk(g, fn, k, budget), "enumerate"};
  if (method == "frontier") return {frontier_qk(g, fn, k, budget), "frontier"};
  if (method == "sample") return {sample_qk(g, fn, k, samples, seed), "sample"};
  if (method != "auto") throw ConfigError("unknown quotient method '" + method + "'");
  try {
    return {enumerate_qk(g, fn, k, budget), "enumerate"};
  } catch (const std::length_error&) {
  }
  try {
    return {frontier_qk(g, fn, k, budget), "frontier"};
  } catch (const std::length_error&) {
  }
  return {sample_qk(g, fn, k, samples, seed), "sample"};
}

std::vector<std::string> check_quotient_set(const MultiGraph& g, SetFunction fn, const QuotientSet& s) {
  std::vector<std::string> bad;
  const std::uint32_t full = (1u << s.k) - 1;
  const Rational whole = evaluate(fn, g, EdgeSet::full(g.edge_count()));
  for (const auto& p : s.points) {
    if (p.coords[0] != Rational(0)) bad.push_back("quotient coordinate at the empty set is nonzero");
    if (p.coords[full] != whole) bad.push_back("quotient coordinate at [k] differs from phi(E)");
    if (fn == SetFunction::rho) {
      for (std::uint32_t x = 0; x <= full; ++x) {
        for (std::uint32_t y = x; y <= full; y = (y + 1) | x) {
          if (p.coords[y] < p.coords[x]) bad.push_back("rho quotient is not monotone");
        }
      }
    }
    if (!bad.empty()) return bad;
  }
  if (s.mode == QuotientMode::exact && s.k <= 4) {
    std::vector<std::uint32_t> perm(s.k);
    std::iota(perm.begin(), perm.end(), 0u);
    while (std::next_permutation(perm.begin(), perm.end())) {
      for (const auto& p : s.points) {
        if (!s.contains(permute_classes(p, perm))) {
          bad.push_back("exact quotient set is not closed under permuting classes");
          return bad;
        }
      }
    }
  }
  return bad;
}

void run_convergence(const ExperimentConfig& cfg, ExperimentReport& report) {
  const json& p = cfg.params;
  const auto specs = spec_list(p, "graphs");
  const auto ks = param<std::vector<std::uint32_t>>(p, "k", {2});
  const auto radii = param<std::vector<std::uint32_t>>(p, "radii", {1});
  const SetFunction fn = setfunction_param(p);
  const Norm norm = parse_norm(param<std::string>(p, "norm", "sup"));
  const auto method = param<std::string>(p, "method", "auto");
  const auto budget = param<std::uint64_t>(p, "budget", 10'000'000);
  const auto samples = param<std::size_t>(p, "samples", 2000);
  const auto subset_samples = param<std::size_t>(p, "subset_check_samples", 64);
  const bool write_sets = param<bool>(p, "write_sets", true);
  for (auto k : ks) {
    if (k == 0 || k > 4) throw ConfigError("k must lie in [1, 4]");
  }

  struct Item {
    std::vector<QuotientOutcome> sets;  // per k
    std::vector<LocalDistribution> local;  // per radius
    std::vector<bool> contained_in_doubled;  // per k
    std::vector<std::string> violations;
  };
  std::vector<Generated> graphs;
  for (const auto& s : specs) graphs.push_back(generate(s));

  auto items = parallel_map(specs.size(), [&](std::size_t i) {
    Item item;
    const MultiGraph& g = graphs[i].graph;
    const MultiGraph twice = doubled(g);
    for (std::size_t ki = 0; ki < ks.size(); ++ki) {
      const std::uint64_t seed = derive_seed(cfg.seed, i * 16 + ki);
      auto q = compute_qk(g, fn, ks[ki], method, budget, samples, seed);
      for (auto& v : check_quotient_set(g, fn, q.set)) item.violations.push_back(specs[i].label() + ": " + v);
      if (q.set.mode == QuotientMode::exact && subset_samples > 0) {
        const auto sampled = sample_qk(g, fn, ks[ki], subset_samples, seed ^ 0x5bd1e995u);
        for (const auto& pt : sampled.points) {
          if (!q.set.contains(pt)) {
            item.violations.push_back(specs[i].label() + ": sampled quotient missing from the exact set");
            break;
          }
        }
      }
      // Colouring both copies alike gives every quotient of g again.
      bool contained = true;
      if (q.set.mode == QuotientMode::exact) {
        try {
          const auto q2 = compute_qk(twice, fn, ks[ki], method, budget, samples, seed);
          if (q2.set.mode == QuotientMode::exact) {
            for (const auto& pt : q.set.points) contained = contained && q2.set.contains(pt);
            if (!contained) {
              item.violations.push_back(specs[i].label() + ": a quotient is missing from the doubled graph");
            }
          }
        } catch (const std::length_error&) {
        }
      }
      item.contained_in_doubled.push_back(contained);
      item.sets.push_back(std::move(q));
    }
    for (auto r : radii) {
      auto d = local_distribution(g, r);
      Rational total = 0;
      for (const auto& [code, prob] : d) total += prob;
      if (total != Rational(1)) item.violations.push_back(specs[i].label() + ": local distribution does not sum to 1");
      item.local.push_back(std::move(d));
    }
    return item;
  });

  std::vector<std::vector<std::string>> qrows, trows;
  json summary = json::object();
  json per_k = json::array();
  for (std::size_t ki = 0; ki < ks.size(); ++ki) {
    std::vector<double> dists;
    for (std::size_t i = 0; i + 1 < items.size(); ++i) {
      const double d = hausdorff(items[i].sets[ki].set, items[i + 1].sets[ki].set, norm);
      dists.push_back(d);
      qrows.push_back({std::to_string(ks[ki]), specs[i].label(), specs[i + 1].label(), fmt(d)});
    }
    bool nonincreasing = true;
    for (std::size_t i = 1; i < dists.size(); ++i) nonincreasing = nonincreasing && dists[i] <= dists[i - 1];
    per_k.push_back({{"k", ks[ki]},
                     {"distances", dists},
                     {"nonincreasing", nonincreasing},
                     {"last_le_first", dists.empty() || dists.back() <= dists.front()}});
  }
  for (std::size_t ri = 0; ri < radii.size(); ++ri) {
    for (std::size_t i = 0; i + 1 < items.size(); ++i) {
      const Rational tv = tv_distance(items[i].local[ri], items[i + 1].local[ri]);
      trows.push_back({std::to_string(radii[ri]), specs[i].label(), specs[i + 1].label(), to_string(tv),
                       fmt(to_double(tv))});
    }
  }
  json graphs_json = json::array();
  for (std::size_t i = 0; i < items.size(); ++i) {
    json entry{{"graph", specs[i].label()},
               {"n", graphs[i].graph.vertex_count()},
               {"m", graphs[i].graph.edge_count()}};
    json sets = json::array();
    for (std::size_t ki = 0; ki < ks.size(); ++ki) {
      json s{{"k", ks[ki]},
             {"method", items[i].sets[ki].method},
             {"points", items[i].sets[ki].set.size()},
             {"contained_in_doubled", static_cast<bool>(items[i].contained_in_doubled[ki])}};
      if (write_sets) s["set"] = items[i].sets[ki].set;
      sets.push_back(std::move(s));
    }
    entry["quotients"] = std::move(sets);
    json local = json::array();
    for (std::size_t ri = 0; ri < radii.size(); ++ri) {
      local.push_back({{"radius", radii[ri]}, {"distribution", local_distribution_to_json(items[i].local[ri])}});
    }
    entry["local"] = std::move(local);
    graphs_json.push_back(std::move(entry));
    for (auto& v : items[i].violations) report.violations.push_back(std::move(v));
  }
  summary["setfunction"] = std::string(to_string(fn));
  summary["norm"] = norm == Norm::sup ? "sup" : "l1";
  summary["per_k"] = per_k;
  report.summary = summary;
  report.items = items.size();

  Writer w(cfg.out_dir, report);
  w.csv("convergence_quotients.csv", {"k", "from", "to", "hausdorff"}, qrows);
  w.csv("convergence_local_tv.csv", {"radius", "from", "to", "tv", "tv_decimal"}, trows);
  w.json_file("convergence.json", {{"summary", summary}, {"graphs", graphs_json}});
}

// ---------------------------------------------------------------------------
// expander-gap

void run_expander_gap(const ExperimentConfig& cfg, ExperimentReport& report) {
  const json& p = cfg.params;
  const auto specs = spec_list(p, "graphs");
  const auto restarts = param<std::size_t>(p, "restarts", 100);
  const auto exhaustive_max_edges = param<std::size_t>(p, "exhaustive_max_edges", 8);
  if (restarts == 0) throw ConfigError("restarts must be positive");

  struct Item {
    std::vector<std::string> row;
    json detail;
    std::vector<std::string> violations;
  };
  auto items = parallel_map(specs.size(), [&](std::size_t i) {
    Item item;
    const std::string label = specs[i].label();
    const MultiGraph g = generate(specs[i]).graph;
    const std::size_t n = g.vertex_count();
    const std::size_t comps = component_count(g, EdgeSet::full(g.edge_count()));
    const QuotientPoint target = doubled_copy_target(n);
    auto bad = [&](const std::string& what) { item.violations.push_back(label + ": " + what); };
    if (comps != 1) bad("base graph is not connected; the target assumes it is");

    const MultiGraph twice = doubled(g);
    const EdgePartition copies = copy_partition(g.edge_count());
    const Rational copy_distance = distance(quotient(twice, SetFunction::rho, copies), target);
    if (copy_distance != Rational(0)) bad("copy partition misses the target by " + to_string(copy_distance));
    const std::uint64_t seed = derive_seed(cfg.seed, i);
    const std::vector<EdgePartition> seeds{copies};
    const SearchResult doubled_search =
        nearest_quotient_search(twice, SetFunction::rho, 2, target, 1, seed, seeds);

    const SearchResult search = nearest_quotient_search(g, SetFunction::rho, 2, target, restarts, seed);
    // For even n the {1} coordinate is an integer over n against (n-1)/(2n).
    const Rational floor_bound(1, static_cast<std::int64_t>(2 * n));
    if (comps == 1 && n % 2 == 0 && search.distance < floor_bound) {
      bad("search distance " + to_string(search.distance) + " is below the parity bound");
    }

    std::optional<Rational> exhaustive;
    if (g.edge_count() <= exhaustive_max_edges) {
      exhaustive = min_distance(enumerate_qk(g, SetFunction::rho, 2), target);
      if (*exhaustive != search.distance) {
        bad("heuristic distance " + to_string(search.distance) + " differs from exhaustive minimum " +
            to_string(*exhaustive));
      }
    }

    const auto gir = girth(g);
    ExpansionEstimate expansion;
    std::string expansion_method = "spectral";
    if (n <= 16) {
      expansion = estimate_edge_expansion(g, ExpansionMethod::exact);
      expansion_method = "exact";
    } else {
      expansion = estimate_edge_expansion(g, ExpansionMethod::spectral);
    }
    item.row = {label,
                std::to_string(n),
                std::to_string(g.edge_count()),
                gir ? std::to_string(*gir) : "inf",
                expansion_method,
                fmt(expansion.lower),
                fmt(expansion.upper),
                to_string(copy_distance),
                to_string(doubled_search.distance),
                to_string(search.distance),
                exhaustive ? to_string(*exhaustive) : "",
                fmt(to_double(search.distance))};
    item.detail = {{"graph", label},
                   {"target", target},
                   {"copy_partition_distance", copy_distance},
                   {"expander_distance", search.distance},
                   {"expander_point", search.point},
                   {"expander_partition", search.partition.color},
                   {"evaluations", search.evaluations}};
    if (exhaustive) item.detail["exhaustive_distance"] = *exhaustive;
    return item;
  });

  std::vector<std::vector<std::string>> rows;
  json details = json::array();
  for (auto& item : items) {
    rows.push_back(item.row);
    details.push_back(item.detail);
    for (auto& v : item.violations) report.violations.push_back(std::move(v));
  }
  report.items = items.size();
  report.summary = {{"restarts", restarts}};
  Writer w(cfg.out_dir, report);
  w.csv("expander_gap.csv",
        {"graph", "n", "m", "girth", "expansion_method", "expansion_lower", "expansion_upper",
         "copy_partition_distance", "doubled_search_distance", "expander_distance", "exhaustive_distance",
         "expander_distance_decimal"},
        rows);
  w.json_file("expander_gap.json", {{"restarts", restarts}, {"graphs", details}});
}

// ---------------------------------------------------------------------------
// duality

std::vector<GenSpec> map_corpus(const json& p) {
  std::vector<GenSpec> specs;
  if (p.contains("maps")) specs = spec_list(p, "maps");
  if (p.contains("random_maps")) {
    const json& r = p.at("random_maps");
    const auto count = param<std::size_t>(r, "count", 0);
    const auto lo = param<std::size_t>(r, "min_operations", 1);
    const auto hi = param<std::size_t>(r, "max_operations", 12);
    const auto base_seed = param<std::uint64_t>(r, "seed", 1);
    if (lo > hi) throw ConfigError("random_maps: min_operations > max_operations");
    for (std::size_t i = 0; i < count; ++i) {
      GenSpec s;
      s.family = Family::random_planar;
      s.operations = lo + i % (hi - lo + 1);
      s.seed = derive_seed(base_seed, i);
      specs.push_back(s);
    }
  }
  if (specs.empty()) throw ConfigError("config needs \"maps\" or \"random_maps\"");
  return specs;
}

void run_duality(const ExperimentConfig& cfg, ExperimentReport& report) {
  const json& p = cfg.params;
  const auto specs = map_corpus(p);
  const auto trials = param<std::size_t>(p, "trials", 50);

  struct Item {
    std::vector<std::string> row;
    std::vector<std::string> violations;
  };
  auto items = parallel_map(specs.size(), [&](std::size_t i) {
    Item item;
    const std::string label = specs[i].label();
    const Generated gen = generate(specs[i]);
    if (!gen.map) {
      item.violations.push_back(label + ": family has no embedding");
      item.row = {label, "", "", "", "", "", "", "", "", "", "false"};
      return item;
    }
    const PlanarMap& m = *gen.map;
    try {
      const DualityReport r = check_duality(m, trials, derive_seed(cfg.seed, i));
      for (const auto& f : r.failures) item.violations.push_back(label + ": " + f);
      item.row = {label,
                  std::to_string(m.graph().vertex_count()),
                  std::to_string(m.graph().edge_count()),
                  std::to_string(faces(m).size()),
                  std::to_string(r.subsets_checked),
                  std::to_string(r.trees_checked),
                  r.cocycle_exhaustive ? "exhaustive" : "sampled",
                  r.trees_exhaustive ? "exhaustive" : "sampled",
                  std::to_string(r.primal_spanning_trees),
                  std::to_string(r.dual_spanning_trees),
                  r.ok() ? "true" : "false"};
    } catch (const MapError& e) {
      item.violations.push_back(label + ": " + e.what());
      item.row = {label, "", "", "", "", "", "", "", "", "", "false"};
    }
    return item;
  });
  std::vector<std::vector<std::string>> rows;
  for (auto& item : items) {
    rows.push_back(item.row);
    for (auto& v : item.violations) report.violations.push_back(std::move(v));
  }
  report.items = items.size();
  report.summary = {{"maps", items.size()}, {"trials", trials}};
  Writer w(cfg.out_dir, report);
  w.csv("duality.csv",
        {"map", "n", "m", "faces", "subsets_checked", "trees_checked", "cocycle_mode", "tree_mode",
         "primal_trees", "dual_trees", "ok"},
        rows);
  w.json_file("duality.json", {{"summary", report.summary}, {"violations", report.violations}});
}

// ---------------------------------------------------------------------------
// forests

WeightList random_weights(std::size_t m, std::size_t keys, const std::string& mode, std::int64_t max_weight,
                          std::mt19937_64& rng) {
  std::vector<std::vector<Rational>> levels(keys, std::vector<Rational>(m));
  for (auto& level : levels) {
    if (mode == "distinct") {
      std::vector<std::int64_t> values(m);
      std::iota(values.begin(), values.end(), 0);
      std::shuffle(values.begin(), values.end(), rng);
      for (std::size_t e = 0; e < m; ++e) level[e] = values[e];
    } else {
      std::uniform_int_distribution<std::int64_t> pick(0, max_weight);
      for (auto& x : level) x = pick(rng);
    }
  }
  std::vector<EdgeId> order(m);
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::shuffle(order.begin(), order.end(), rng);
  return WeightList(std::move(levels), std::move(order));
}

void run_forests(const ExperimentConfig& cfg, ExperimentReport& report) {
  const json& p = cfg.params;
  const auto specs = spec_list(p, "graphs");
  const auto trials = param<std::size_t>(p, "trials", 10);
  const auto keys = param<std::size_t>(p, "keys", 1);
  const auto mode = param<std::string>(p, "weights", "ties");
  const auto max_weight = param<std::int64_t>(p, "max_weight", 5);
  const auto boundary_mode = param<std::string>(p, "boundary", "outer");
  if (mode != "ties" && mode != "distinct") throw ConfigError("weights must be \"ties\" or \"distinct\"");
  if (boundary_mode != "outer" && boundary_mode != "none") throw ConfigError("boundary must be \"outer\" or \"none\"");
  if (keys == 0) throw ConfigError("keys must be positive");

  struct Item {
    std::vector<std::vector<std::string>> rows;
    json first_run;
    std::vector<std::string> violations;
  };
  auto items = parallel_map(specs.size(), [&](std::size_t i) {
    Item item;
    const std::string label = specs[i].label();
    const Generated gen = generate(specs[i]);
    const MultiGraph& g = gen.graph;
    std::mt19937_64 rng(derive_seed(cfg.seed, i));
    std::optional<DualResult> dual_map;
    const bool use_outer = boundary_mode == "outer" && gen.map && gen.map->outer_half_edge();
    if (use_outer && component_count(g, EdgeSet::full(g.edge_count())) == 1) dual_map = dual(*gen.map);

    for (std::size_t t = 0; t < trials; ++t) {
      auto bad = [&](const std::string& what) {
        item.violations.push_back(label + " trial " + std::to_string(t) + ": " + what);
      };
      const WeightList w = random_weights(g.edge_count(), keys, mode, max_weight, rng);
      const ForestResult res = invasion(g, w);
      if (t == 0) item.first_run = res;
      if (!is_base(g, res.forest)) bad("invasion output is not a spanning forest");
      if (!trace_replays(g, res)) bad("trace does not replay to the forest");
      const CheckReport ledger = verify_token_ledger(res, g);
      for (const auto& f : ledger.failures) bad(f);
      std::string layer = "n/a";
      if (keys == 1) {
        const CheckReport lr = check_layer_property(g, w, res);
        for (const auto& f : lr.failures) bad(f);
        layer = lr.ok() ? "true" : "false";
      }
      const BoundarySpec b = use_outer ? outer_boundary(*gen.map) : BoundarySpec{};
      const WiredFree wf = wired_free_forests(g, b, w);
      if (wf.free != res.forest) bad("cycle-criterion forest differs from the invasion forest");
      const bool subset = wf.wired.is_subset_of(wf.free);
      if (!subset) bad("wired forest is not contained in the free forest");
      const std::size_t contracted_rank =
          rank_abs(contract(g, b).graph, EdgeSet::full(g.edge_count()));
      if (wf.wired.count() != contracted_rank) bad("wired forest size differs from the contracted rank");

      std::string complement = "n/a";
      if (dual_map) {
        // Same order on the dual edges (sigma is the identity on ids); minimal
        // forest = maximal forest of the reversed order, wired at the outer face.
        const BoundarySpec dual_b(std::vector<Vertex>{*dual_map->outer_vertex});
        const WiredFree dual_wf = wired_free_forests(dual_map->map.graph(), dual_b, w.reversed());
        const bool ok = res.forest == dual_wf.wired.complement();
        if (!ok) bad("free forest is not the complement of the dual wired minimal forest");
        complement = ok ? "true" : "false";
      }
      item.rows.push_back({label, std::to_string(t), std::to_string(res.rounds),
                           std::to_string(res.forest.count()), std::to_string(wf.wired.count()),
                           ledger.ok() ? "true" : "false", layer, subset ? "true" : "false", complement});
    }
    return item;
  });

  std::vector<std::vector<std::string>> rows;
  json runs = json::array();
  for (std::size_t i = 0; i < items.size(); ++i) {
    rows.insert(rows.end(), items[i].rows.begin(), items[i].rows.end());
    runs.push_back({{"graph", specs[i].label()}, {"first_trial", items[i].first_run}});
    for (auto& v : items[i].violations) report.violations.push_back(std::move(v));
  }
  report.items = items.size();
  report.summary = {{"graphs", items.size()}, {"trials", trials}, {"keys", keys}, {"weights", mode},
                    {"boundary", boundary_mode}};
  Writer w(cfg.out_dir, report);
  w.csv("forests.csv",
        {"graph", "trial", "rounds", "forest_size", "wired_size", "ledger_ok", "layer_ok", "wired_subset_free",
         "dual_complement_ok"},
        rows);
  w.json_file("forests.json", {{"summary", report.summary}, {"runs", runs}});
}

}  // namespace

// Top-level keys each experiment reads; anything else is a typo.
void reject_unknown_keys(const ExperimentConfig& cfg) {
  static const std::map<std::string, std::set<std::string>> known{
      {"convergence",
       {"graphs", "k", "radii", "setfunction", "norm", "method", "budget", "samples",
        "subset_check_samples", "write_sets"}},
      {"expander-gap", {"graphs", "restarts", "exhaustive_max_edges"}},
      {"duality", {"maps", "random_maps", "trials"}},
      {"forests", {"graphs", "trials", "keys", "weights", "max_weight", "boundary"}},
  };
  const auto it = known.find(cfg.experiment);
  if (it == known.end() || !cfg.params.is_object()) return;
  for (const auto& [key, value] : cfg.params.items()) {
    if (key == "experiment" || key == "seed") continue;
    if (!it->second.count(key)) throw ConfigError("unknown key \"" + key + "\" for " + cfg.experiment);
  }
  if (cfg.params.contains("random_maps")) {
    for (const auto& [key, value] : cfg.params.at("random_maps").items()) {
      if (key != "count" && key != "min_operations" && key != "max_operations" && key != "seed") {
        throw ConfigError("unknown key \"" + key + "\" in random_maps");
      }
    }
  }
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  ExperimentReport report;
  try {
    reject_unknown_keys(cfg);
    if (cfg.experiment == "convergence") {
      run_convergence(cfg, report);
    } else if (cfg.experiment == "expander-gap") {
      run_expander_gap(cfg, report);
    } else if (cfg.experiment == "duality") {
      run_duality(cfg, report);
    } else if (cfg.experiment == "forests") {
      run_forests(cfg, report);
    } else {
      throw ConfigError("unknown experiment '" + cfg.experiment + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return report;
}

}  // namespace mlim
