#include "matroid_limits/serialization.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

using nlohmann::json;

namespace {

using mlim::Rational;

// Continued-fraction recovery of a decimal; exact for the small denominators
// quotient coordinates have.
Rational from_decimal(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite coordinate");
  constexpr std::int64_t max_den = 1 << 24;
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double rest = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(rest);
    const auto ai = static_cast<std::int64_t>(a);
    const std::int64_t p2 = ai * p1 + p0;
    const std::int64_t q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (std::abs(static_cast<double>(p1) / static_cast<double>(q1) - x) < 1e-12) break;
    rest = 1.0 / (rest - a);
  }
  return Rational(p1, q1);
}

}  // namespace

void nlohmann::adl_serializer<mlim::Rational>::to_json(json& j, const mlim::Rational& r) {
  j = mlim::to_string(r);
}

void nlohmann::adl_serializer<mlim::Rational>::from_json(const json& j, mlim::Rational& r) {
  using mlim::Rational;
  if (j.is_string()) {
    r = mlim::parse_rational(j.get<std::string>());
  } else if (j.is_number_integer()) {
    r = Rational(j.get<std::int64_t>());
  } else if (j.is_number()) {
    r = from_decimal(j.get<double>());
  } else {
    throw std::invalid_argument("expected a rational, got " + j.dump());
  }
}

namespace mlim {

void to_json(json& j, const QuotientPoint& p) {
  j = json::array();
  for (const auto& c : p.coords) j.push_back(to_string(c));
}

void to_json(json& j, const QuotientSet& s) {
  const bool exact = s.mode == QuotientMode::exact;
  json points = json::array();
  for (const auto& p : s.points) {
    json row = json::array();
    for (const auto& c : p.coords) {
      if (exact) {
        row.push_back(to_string(c));
      } else {
        row.push_back(to_double(c));
      }
    }
    points.push_back(std::move(row));
  }
  j = json{{"k", s.k}, {"mode", exact ? "exact" : "sampled"}, {"points", std::move(points)}};
}

void from_json(const json& j, QuotientSet& s) {
  s.k = j.at("k").get<std::uint32_t>();
  const auto mode = j.at("mode").get<std::string>();
  if (mode == "exact") {
    s.mode = QuotientMode::exact;
  } else if (mode == "sampled") {
    s.mode = QuotientMode::sampled;
  } else {
    throw std::invalid_argument("unknown quotient set mode '" + mode + "'");
  }
  s.points.clear();
  for (const auto& row : j.at("points")) {
    QuotientPoint p{s.k, {}};
    for (const auto& c : row) p.coords.push_back(c.get<Rational>());
    if (p.coords.size() != (std::size_t{1} << s.k)) throw std::invalid_argument("point has wrong length");
    s.points.push_back(std::move(p));
  }
  s.normalize();
}

json local_distribution_to_json(const LocalDistribution& d) {
  json j = json::object();
  for (const auto& [code, prob] : d) j[code.hex()] = to_string(prob);
  return j;
}

LocalDistribution local_distribution_from_json(const json& j) {
  LocalDistribution d;
  for (const auto& [key, value] : j.items()) d.emplace(BallCode::from_hex(key), value.get<Rational>());
  return d;
}

void to_json(json& j, const ForestResult& r) {
  json trace = json::array();
  for (const auto& step : r.trace) trace.push_back({step.round, step.component, step.edge});
  j = json{{"forest", r.forest.ids()},
           {"rounds", r.rounds},
           {"trace", std::move(trace)},
           {"ledger",
            {{"vertex_paid", r.ledger.vertex_paid},
             {"edge_received", r.ledger.edge_received},
             {"anomalies", r.ledger.anomalies}}}};
}

void to_json(json& j, const PlanarMap& m) {
  const MultiGraph& g = m.graph();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  json twins = json::array();
  for (HalfEdge h = 0; h < m.half_edge_count(); ++h) twins.push_back(twin(h));
  j = json{{"n", g.vertex_count()},
           {"edges", std::move(edges)},
           {"rotation", m.rotations()},
           {"twin", std::move(twins)},
           {"outer", m.outer_half_edge() ? json(*m.outer_half_edge()) : json(nullptr)}};
}

void from_json(const json& j, PlanarMap& m) {
  const auto n = j.at("n").get<std::size_t>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<Vertex>(), e.at(1).get<Vertex>()});
  if (j.contains("twin")) {
    const auto twins = j.at("twin").get<std::vector<HalfEdge>>();
    if (twins.size() != 2 * edges.size()) throw MapError("twin array has the wrong length");
    for (HalfEdge h = 0; h < twins.size(); ++h) {
      if (twins[h] != twin(h)) throw MapError("twin array must pair 2e with 2e+1");
    }
  }
  std::optional<HalfEdge> outer;
  if (j.contains("outer") && !j.at("outer").is_null()) outer = j.at("outer").get<HalfEdge>();
  m = PlanarMap(MultiGraph(n, std::move(edges)), j.at("rotation").get<std::vector<std::vector<HalfEdge>>>(),
                outer);
}

void to_json(json& j, const GenSpec& s) {
  j = json{{"family", std::string(to_string(s.family))}};
  switch (s.family) {
    case Family::cycle:
    case Family::path:
    case Family::complete: j["n"] = s.n; break;
    case Family::grid:
    case Family::torus:
      j["width"] = s.width;
      j["height"] = s.height;
      break;
    case Family::random_regular:
      j["n"] = s.n;
      j["degree"] = s.degree;
      j["seed"] = s.seed;
      break;
    case Family::doubled:
      if (!s.base.empty()) j["base"] = s.base.front();
      break;
    case Family::hyperbolic_patch:
      j["p"] = s.p;
      j["q"] = s.q;
      j["layers"] = s.layers;
      break;
    case Family::tetrahedron: break;
    case Family::random_planar:
      j["operations"] = s.operations;
      j["seed"] = s.seed;
      break;
  }
}

void from_json(const json& j, GenSpec& s) {
  static const std::set<std::string> known{"family", "n",      "width",      "height", "degree", "p",
                                           "q",      "layers", "operations", "seed",   "base"};
  if (!j.is_object()) throw std::invalid_argument("graph spec must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw std::invalid_argument("unknown graph spec key '" + key + "'");
  }
  s = GenSpec{};
  s.family = parse_family(j.at("family").get<std::string>());
  s.n = j.value("n", std::size_t{0});
  s.width = j.value("width", std::size_t{0});
  s.height = j.value("height", std::size_t{0});
  s.degree = j.value("degree", std::size_t{3});
  s.p = j.value("p", std::uint32_t{0});
  s.q = j.value("q", std::uint32_t{0});
  s.layers = j.value("layers", std::uint32_t{0});
  s.operations = j.value("operations", std::size_t{0});
  s.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("base")) s.base.push_back(j.at("base").get<GenSpec>());
}

}  // namespace mlim
