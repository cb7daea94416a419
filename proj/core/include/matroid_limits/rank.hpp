#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matroid_limits/graph.hpp"
#include "matroid_limits/rational.hpp"

namespace mlim {

/// The three setfunctions on edge sets the library works with.
enum class SetFunction {
  rho,       // normalized cycle-matroid rank
  rho_star,  // normalized cocycle rank
  eta,       // edge measure |F|/n
};

std::string_view to_string(SetFunction fn);
SetFunction parse_set_function(std::string_view name);

/// Edge measure: |F|/n, i.e. half the average F-degree.
Rational eta(const MultiGraph& g, const EdgeSet& f);

/// Normalized rank 1 - E_x[1/|component of x in (V,F)|], accumulated vertex
/// by vertex in exact arithmetic.
Rational rho(const MultiGraph& g, const EdgeSet& f);

/// Cycle-matroid rank n - #components(F).
std::size_t rank_abs(const MultiGraph& g, const EdgeSet& f);

/// Cocycle rank rho(E \ F) + eta(F) - rho(E).
Rational cocycle_rho(const MultiGraph& g, const EdgeSet& f);

Rational evaluate(SetFunction fn, const MultiGraph& g, const EdgeSet& f);

/// F is acyclic. Loops are cycles of length one, parallel pairs of length two.
bool is_independent(const MultiGraph& g, const EdgeSet& f);

/// F is a spanning forest: acyclic with the same components as E.
bool is_base(const MultiGraph& g, const EdgeSet& f);

/// Values of `fn` on every subset of E, indexed by bitmask. Requires m <= 24.
std::vector<Rational> tabulate(SetFunction fn, const MultiGraph& g);

// ---------------------------------------------------------------------------
// Property checkers

struct SubmodularityViolation {
  EdgeSet x;
  EdgeSet y;
  Rational lhs;  // f(X) + f(Y)
  Rational rhs;  // f(X & Y) + f(X | Y)
};

struct SubmodularityReport {
  std::size_t pairs_checked = 0;
  std::vector<SubmodularityViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Samples `trials` uniformly random pairs (X, Y) and checks
/// f(X) + f(Y) >= f(X & Y) + f(X | Y) exactly.
SubmodularityReport check_submodular(const MultiGraph& g, std::size_t trials,
                                     std::uint64_t rng_seed,
                                     SetFunction fn = SetFunction::rho);

/// Same inequality over all 4^m pairs; m <= 12.
SubmodularityReport check_submodular_exhaustive(const MultiGraph& g,
                                                SetFunction fn = SetFunction::rho);

enum class AxiomStatus { passed, failed, skipped };

struct AxiomResult {
  std::string axiom;
  AxiomStatus status = AxiomStatus::passed;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  bool ok() const;
  /// First failed axiom, if any.
  std::optional<AxiomResult> first_failure() const;
};

/// Exhaustive check of the rank axioms R1-R4 for rank_abs and of I0 / I2'
/// for the family of acyclic edge sets. I1 (increasing chains) has no content
/// on a finite ground set and is reported as skipped.
/// Throws std::length_error when m exceeds `exhaustive_limit` (capped at 12).
AxiomReport check_matroid_axioms(const MultiGraph& g, std::size_t exhaustive_limit = 10);

// ---------------------------------------------------------------------------
// Measures

/// Nonnegative rational weight per edge; the measure of a set is its weight sum.
class EdgeMeasure {
 public:
  EdgeMeasure() = default;
  explicit EdgeMeasure(std::vector<Rational> weights);

  /// eta restricted to F: 1/n on edges of F, 0 elsewhere.
  static EdgeMeasure restricted_eta(const MultiGraph& g, const EdgeSet& f);
  static EdgeMeasure uniform(std::size_t m, Rational w);

  std::size_t edge_count() const { return weights_.size(); }
  const Rational& weight(EdgeId e) const { return weights_[e]; }
  std::span<const Rational> weights() const { return weights_; }
  Rational operator()(const EdgeSet& f) const;
  /// eta - this, edge by edge (not validated for nonnegativity).
  EdgeMeasure complement_in(const MultiGraph& g) const;

  friend bool operator==(const EdgeMeasure&, const EdgeMeasure&) = default;

 private:
  std::vector<Rational> weights_;
};

/// One "p/q" line per edge, in edge-id order.
EdgeMeasure parse_edge_measure(std::string_view text);
std::string serialize_edge_measure(const EdgeMeasure& alpha);

/// alpha(F) <= fn(F) for every F (and alpha(E) == fn(E) when `base`).
/// Exhaustive over 2^m subsets; throws std::length_error for m > 20.
bool is_minorizing(const MultiGraph& g, const EdgeMeasure& alpha, bool base,
                   SetFunction fn = SetFunction::rho);

// ---------------------------------------------------------------------------
// Graphings with finite components

/// Disjoint union of connected finite graphs, component i occurring with
/// frequency weight_i. The vertex measure is size-biased: a uniform random
/// vertex lies in component i with probability w_i n_i / sum_j w_j n_j.
struct FiniteComponentGraphing {
  struct Component {
    MultiGraph graph;
    Rational weight;
  };
  std::vector<Component> components;

  /// Checks connectivity and that the weights are positive and sum to 1.
  void validate() const;
};

/// Normalized rank of the edge set that restricts to `edge_sets[i]` on
/// component i. Throws std::invalid_argument on a count or weight mismatch.
Rational graphing_rho(const FiniteComponentGraphing& graphing, std::span<const EdgeSet> edge_sets);

}  // namespace mlim
