#pragma once

#include <nlohmann/json.hpp>

#include "matroid_limits/forest.hpp"
#include "matroid_limits/graphgen.hpp"
#include "matroid_limits/local_stats.hpp"
#include "matroid_limits/planar.hpp"
#include "matroid_limits/quotient.hpp"

// JSON encodings. Rationals are written as "p/q" strings (or "p").
//
// QuotientSet:  {"k": 2, "mode": "exact", "points": [["0", "1/3", ...], ...]}
//               sampled sets carry decimals instead of strings.
// LocalDistribution: {"<hex ball code>": "p/q", ...}
// ForestResult: {"forest": [ids], "rounds": r, "trace": [[round, component, edge], ...],
//                "ledger": {"vertex_paid": [...], "edge_received": [...], "anomalies": [...]}}
// PlanarMap:    {"n": n, "edges": [[u, v], ...], "rotation": [[half-edge, ...] per vertex],
//                "twin": [...], "outer": half-edge or null}
//               Half-edge 2e sits at edges[e][0], 2e+1 at edges[e][1]; rotation lists are
//               written starting from the stored first entry, so output is reproducible.
// GenSpec:      {"family": "cycle", "n": 6, ...}; "base" holds the inner spec of "doubled".

template <>
struct nlohmann::adl_serializer<mlim::Rational> {
  static void to_json(json& j, const mlim::Rational& r);
  /// Accepts "p/q" strings, integers, and decimals (recovered by continued fractions).
  static void from_json(const json& j, mlim::Rational& r);
};

namespace mlim {

void to_json(nlohmann::json& j, const QuotientPoint& p);
void to_json(nlohmann::json& j, const QuotientSet& s);
void from_json(const nlohmann::json& j, QuotientSet& s);

nlohmann::json local_distribution_to_json(const LocalDistribution& d);
LocalDistribution local_distribution_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const ForestResult& r);

void to_json(nlohmann::json& j, const PlanarMap& m);
void from_json(const nlohmann::json& j, PlanarMap& m);

void to_json(nlohmann::json& j, const GenSpec& s);
/// Rejects unknown keys so typos in configs fail loudly.
void from_json(const nlohmann::json& j, GenSpec& s);

}  // namespace mlim
