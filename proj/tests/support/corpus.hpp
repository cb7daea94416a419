#pragma once

// Fixed test corpora shared by the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "matroid_limits/graph.hpp"
#include "matroid_limits/planar.hpp"
#include "oracles.hpp"

namespace corpus {

using mlim::MultiGraph;
using mlim::PlanarMap;

struct Named {
  std::string name;
  MultiGraph graph;
};

/// 50 multigraphs with at most 8 edges: hand-picked shapes (loops, parallel
/// edges, bridges, isolated vertices) followed by seeded random multigraphs.
inline std::vector<Named> small_graphs() {
  std::vector<Named> out{
      {"single vertex", MultiGraph(1, {})},
      {"two isolated", MultiGraph(2, {})},
      {"one loop", MultiGraph(1, {{0, 0}})},
      {"two loops", MultiGraph(1, {{0, 0}, {0, 0}})},
      {"edge", MultiGraph(2, {{0, 1}})},
      {"parallel pair", MultiGraph(2, {{0, 1}, {0, 1}})},
      {"parallel triple", MultiGraph(2, {{0, 1}, {1, 0}, {0, 1}})},
      {"path P4", MultiGraph(4, {{0, 1}, {1, 2}, {2, 3}})},
      {"triangle", MultiGraph(3, {{0, 1}, {1, 2}, {2, 0}})},
      {"triangle with loop", MultiGraph(3, {{0, 1}, {1, 2}, {2, 0}, {1, 1}})},
      {"square", MultiGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})},
      {"C5", MultiGraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})},
      {"K4", MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})},
      {"K4 minus edge", MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})},
      {"bowtie", MultiGraph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}})},
      {"two triangles apart", MultiGraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})},
      {"triangle plus K2", MultiGraph(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}})},
      {"star K1,4", MultiGraph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})},
      {"K2,3", MultiGraph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})},
      {"theta", MultiGraph(2, {{0, 1}, {0, 1}, {0, 1}, {0, 0}})},
      {"cube fragment", MultiGraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}, {4, 5}, {2, 2}})},
      {"C8", MultiGraph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}})},
  };
  std::mt19937_64 rng(20240601);
  while (out.size() < 50) {
    out.push_back({"random " + std::to_string(out.size()), oracle::random_multigraph(rng, 7, 8)});
  }
  return out;
}

struct NamedMap {
  std::string name;
  PlanarMap map;
};

/// 100 connected genus-0 maps: classical shapes, maps with loops, parallel
/// edges and bridges, tiling patches up to three layers, and seeded random maps.
inline std::vector<NamedMap> genus0_maps() {
  std::vector<NamedMap> out;
  out.push_back({"tetrahedron", mlim::tetrahedron_map()});
  out.push_back({"single vertex", mlim::path_map(1)});
  out.push_back({"one loop", PlanarMap(MultiGraph(1, {{0, 0}}), {{0, 1}}, 0)});
  out.push_back({"nested loops", PlanarMap(MultiGraph(1, {{0, 0}, {0, 0}}), {{0, 2, 3, 1}}, 0)});
  out.push_back({"side by side loops", PlanarMap(MultiGraph(1, {{0, 0}, {0, 0}}), {{0, 1, 2, 3}}, 0)});
  out.push_back({"loop on a bridge", PlanarMap(MultiGraph(2, {{0, 1}, {1, 1}}), {{0}, {1, 2, 3}}, 0)});
  out.push_back({"theta", mlim::dual(mlim::cycle_map(3)).map});
  out.push_back({"bond of four", mlim::dual(mlim::cycle_map(4)).map});
  for (std::size_t n = 3; n <= 7; ++n) out.push_back({"cycle " + std::to_string(n), mlim::cycle_map(n)});
  for (std::size_t n = 2; n <= 6; ++n) out.push_back({"path " + std::to_string(n), mlim::path_map(n)});
  out.push_back({"grid 2x2", mlim::grid_map(2, 2)});
  out.push_back({"grid 2x3", mlim::grid_map(2, 3)});
  out.push_back({"grid 3x3", mlim::grid_map(3, 3)});
  out.push_back({"grid 3x4", mlim::grid_map(3, 4)});
  out.push_back({"grid 4x4", mlim::grid_map(4, 4)});
  out.push_back({"dual of tetrahedron", mlim::dual(mlim::tetrahedron_map()).map});
  out.push_back({"dual of grid 3x3", mlim::dual(mlim::grid_map(3, 3)).map});
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> tilings{{4, 4}, {3, 7}, {5, 4}, {4, 5}, {3, 6}, {6, 3}};
  for (auto [p, q] : tilings) {
    for (std::uint32_t layers = 0; layers <= 3; ++layers) {
      if (layers == 0 && p != 4) continue;
      out.push_back({"patch {" + std::to_string(p) + "," + std::to_string(q) + "}x" + std::to_string(layers),
                     mlim::hyperbolic_patch(p, q, layers)});
    }
  }
  for (std::uint64_t seed = 1; out.size() < 100; ++seed) {
    const std::size_t ops = 1 + seed % 18;
    out.push_back({"random map " + std::to_string(seed), mlim::random_planar_map(ops, seed)});
  }
  return out;
}

}  // namespace corpus
