#pragma once

#include "exchci/exchange.hpp"
#include "exchci/ground.hpp"
#include "exchci/model.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace exchci {

inline constexpr double kTableTolerance = 1e-12;  // normalization / exchangeability
inline constexpr double kCiTolerance = 1e-9;      // conditional-independence decisions

// An exact joint probability table of binary variables over (a subset of) a
// ground set. `support` lists the live elements; state bit r is the r-th
// smallest support element, so marginal tables keep the element order of the
// ground set. A freshly built table has full support.
class JointTable {
public:
  // probs.size() must equal 2^|support|; entries non-negative, summing to 1
  // within 1e-12 (violations: invalid-argument with the residual).
  JointTable(GroundSet ground, VarSet support, std::vector<double> probs);
  static JointTable full(GroundSet ground, std::vector<double> probs);

  const GroundSet& ground() const { return ground_; }
  VarSet support() const { return support_; }
  int width() const { return support_.size(); }
  const std::vector<double>& probs() const { return probs_; }
  double prob(std::uint32_t state) const { return probs_[state]; }

  int rank_of(int element) const;  // position of a support element
  int element_at(int rank) const;

private:
  GroundSet ground_;
  VarSet support_;
  std::vector<double> probs_;
};

// Exchangeable-table constructor input: one weight per node-permutation orbit
// of states, keyed by the orbit's canonical (numerically least) state.
struct OrbitWeighting {
  GroundSet ground;  // network kind
  std::map<std::uint32_t, double> weights;  // canonical state -> per-state probability
};

// Numerically least image of the state under all node permutations.
std::uint32_t canonical_state(const GroundSet&, std::uint32_t state);

// All states in the orbit, ascending.
std::vector<std::uint32_t> orbit_states(const GroundSet&, std::uint32_t state);

// Expands per-orbit weights to a full table; every state receives its orbit's
// weight. Keys must be canonical; the total mass must normalize.
JointTable table_from_orbits(const OrbitWeighting&);

// Invariance of the table under the symmetry action: variable permutations of
// the support for vector grounds; node permutations for network grounds. A
// network table whose support is a proper non-empty subset of the dyads is
// never exchangeable (node relabelings do not preserve its index set).
bool is_exchangeable_table(const JointTable&, double tol = kTableTolerance);

// Exact CI test: for every conditioning state c with P(c) > 0 and all a, b:
// |P(a,b|c) - P(a|c) P(b|c)| <= tol. Zero-probability conditioning states are
// skipped (almost-sure semantics).
bool ci_holds(const JointTable&, VarSet a, VarSet b, VarSet c, double tol = kCiTolerance);

struct InducedTableModel {
  IndependenceModel model;
  bool semigraphoid_consistent = false;
  std::optional<std::string> violation;  // numerical-guard report
};

// All elementary statements of the table via ci_holds (full support required),
// plus a closedness guard on the result.
InducedTableModel induced_model_of_table(const JointTable&, double tol = kCiTolerance);

// Marginal over the kept elements (no renormalization needed).
JointTable marginalize(const JointTable&, VarSet keep);

// Condition on the event (elements of c) = (bits of values), renormalizing.
// Null events: invalid-argument.
JointTable condition(const JointTable&, VarSet c, VarSet values);

// Induced sub-network: marginalize a network table to the dyads within the
// given 1-based nodes and re-ground onto network_on(|nodes|), nodes renumbered
// in ascending order.
JointTable restrict_to_nodes(const JointTable&, const std::vector<int>& nodes);

// Re-ground a vector table onto vector_of(width), dropping dead elements.
JointTable compact(const JointTable&);

// CI oracle backed by an exact table (full support required).
CIOracle oracle_from_table(JointTable, double tol = kCiTolerance);

}  // namespace exchci
