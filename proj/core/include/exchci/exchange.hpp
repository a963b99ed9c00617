#pragma once

#include "exchci/graph.hpp"
#include "exchci/ground.hpp"
#include "exchci/model.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace exchci {

// Smallest superset of m closed under the symmetry action of the ground set:
// node permutations for network grounds, variable permutations for vectors.
IndependenceModel orbit_closure(const IndependenceModel& m);

// True iff every statement's image under the symmetry generators is present.
bool is_exchangeable_model(const IndependenceModel& m);

// A deterministic conditional-independence query backend.
struct CIOracle {
  GroundSet ground;
  std::function<bool(VarSet, VarSet, VarSet)> query;

  bool operator()(VarSet a, VarSet b, VarSet c) const { return query(a, b, c); }
};

CIOracle oracle_from_model(IndependenceModel m);
CIOracle oracle_from_graph(MixedGraph g);

enum class RegimeTag {
  Empty,
  UndirectedIncidence,
  BidirectedIncidence,
  UndirectedComplement,
  BidirectedComplement,
  Complete,
  Inconsistent,
};

std::string_view regime_name(RegimeTag);
std::optional<RegimeTag> regime_from_name(std::string_view);

// The canonical graph of a (consistent) regime on n nodes.
GraphFamily family_for_regime(RegimeTag);

struct Regime {
  RegimeTag tag = RegimeTag::Inconsistent;
  // lex-least witnesses per branch, when the branch is non-empty
  std::optional<VarSet> disjoint_witness;  // C with 1-2 ci 3-4 | C
  std::optional<VarSet> sharing_witness;   // C' with 1-2 ci 1-3 | C'
  // for Inconsistent: two witnesses whose sub-branch tests disagree
  std::optional<std::pair<VarSet, VarSet>> conflict;
};

// The six-regime classifier over fixed nodes 1..5: searches every
// C in D\{1-2,3-4} for 1-2 ci 3-4 | C and every C' in D\{1-2,1-3} for
// 1-2 ci 1-3 | C'; sub-branch membership tests (1-3 in C, 4-5 in C') are
// evaluated over all witnesses and any disagreement yields Inconsistent.
// Three seeded permuted-query spot-checks guard against non-exchangeable
// oracles (mismatch -> invalid-argument). Requires a network oracle, n >= 5.
Regime classify_regime(const CIOracle& oracle, int n, std::uint64_t seed = kDefaultSeed);

struct FaithfulnessFailure {
  Statement triple;
  bool separated_in_graph = false;  // the side that holds; the other side fails
};

struct FaithfulnessReport {
  MixedGraph graph;
  bool markovian = false;  // every separation is in the model
  bool faithful = false;   // two-way agreement on every disjoint triple
  std::optional<FaithfulnessFailure> failing_triple;  // first disagreement
};

// Exhaustive faithfulness comparison of a model against a purely undirected
// or purely bidirected graph over every disjoint triple (A, B, C).
FaithfulnessReport faithfulness_report(const IndependenceModel& m, const MixedGraph& g);

enum class SeparationKind { Undirected, Bidirected };

struct CharacterizationReport {
  SeparationKind kind = SeparationKind::Undirected;
  // undirected: intersection, singleton-transitivity, upward-stability;
  // bidirected: composition, singleton-transitivity, downward-stability
  std::array<PropertyReport, 3> properties;
  bool all_hold = false;
};

// The three-property faithfulness characterization for the given separation
// semantics. Requires a semigraphoid-closed model.
CharacterizationReport characterization_check(const IndependenceModel& m, SeparationKind kind);

struct HypothesisReport {
  std::string name;
  bool holds = false;
  std::string detail;  // witness description on failure
};

struct AssumptionCheck {
  RegimeTag regime = RegimeTag::Empty;
  bool all_hold = false;
  std::vector<HypothesisReport> hypotheses;
};

// Verifies the per-regime sufficiency hypotheses on the fixed representative
// statements (1-2 ci 3-4 for incidence regimes, 1-2 ci 1-3 for complement
// regimes): conditioning-set shape (containment of / disjointness from the
// named separator) and literal swap-invariance of every inclusion-minimal
// (undirected) or inclusion-maximal (bidirected) conditioning set under node
// swaps moving the statement's nodes to fresh ones; for the empty regime,
// presence of the unconditional or fully-conditioned forms of both statements.
// Requires an exchangeable, semigraphoid-closed network model; the regime must
// not be Complete or Inconsistent.
AssumptionCheck structured_assumption_check(const IndependenceModel& m, RegimeTag regime);

}  // namespace exchci
