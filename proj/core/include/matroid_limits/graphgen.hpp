#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matroid_limits/graph.hpp"
#include "matroid_limits/planar.hpp"
#include "matroid_limits/rational.hpp"

namespace mlim {

enum class Family {
  cycle,
  path,
  complete,
  grid,
  torus,
  random_regular,
  doubled,
  hyperbolic_patch,
  tetrahedron,
  random_planar,
};

std::string_view to_string(Family f);
Family parse_family(std::string_view name);

/// Generator parameters. Fields that a family does not use are ignored.
///   cycle, path, complete: n
///   grid, torus: width, height
///   random_regular: n, degree, seed
///   doubled: base (exactly one entry)
///   hyperbolic_patch: p, q, layers
///   random_planar: operations, seed
struct GenSpec {
  Family family = Family::cycle;
  std::size_t n = 0;
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t degree = 3;
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  std::uint32_t layers = 0;
  std::size_t operations = 0;
  std::uint64_t seed = 0;
  std::vector<GenSpec> base;

  std::string label() const;
};

struct Generated {
  MultiGraph graph;
  std::optional<PlanarMap> map;  // present for embedded families
};

/// Deterministic for a fixed spec. Throws std::invalid_argument on
/// infeasible parameters and std::runtime_error when random_regular keeps
/// producing loops or multi-edges.
Generated generate(const GenSpec& spec);

MultiGraph cycle_graph(std::size_t n);
MultiGraph path_graph(std::size_t n);
MultiGraph complete_graph(std::size_t n);
MultiGraph torus_graph(std::size_t width, std::size_t height);
/// Configuration model conditioned on simplicity by rejection.
MultiGraph random_regular(std::size_t n, std::size_t degree, std::uint64_t rng_seed,
                          std::size_t max_attempts = 1000);
MultiGraph doubled(const MultiGraph& g);

enum class ExpansionMethod { exact, spectral };

/// Bounds on min |boundary(S)| / |S| over 1 <= |S| <= n/2. Exact mode
/// enumerates subsets (n <= 20 and 2^n <= budget, else std::length_error);
/// spectral mode reports lambda_2 / 2 <= h <= sqrt(2 d_max lambda_2) from
/// the Laplacian. Loops never cross a cut and are ignored.
struct ExpansionEstimate {
  double lower = 0;
  double upper = 0;
  std::optional<Rational> exact;
};
ExpansionEstimate estimate_edge_expansion(const MultiGraph& g, ExpansionMethod method,
                                          std::uint64_t budget = std::uint64_t{1} << 20);

/// Shortest cycle length (loops have length 1, parallel pairs 2); nullopt for forests.
std::optional<std::size_t> girth(const MultiGraph& g);

}  // namespace mlim
