#pragma once

#include "exchci/ground.hpp"
#include "exchci/model.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

namespace exchci {

// A simple mixed graph over a ground set: at most one edge per vertex pair,
// each a line (no arrowheads), an arrow (one head), or an arc (two heads).
class MixedGraph {
public:
  explicit MixedGraph(GroundSet ground);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }

  bool adjacent(int u, int v) const;
  bool line(int u, int v) const;
  bool arc(int u, int v) const;
  bool arrow(int u, int v) const;    // u -> v: tail at u, head at v
  bool head_at(int u, int v) const;  // edge u~v carries an arrowhead at v

  void set_line(int u, int v);
  void set_arc(int u, int v);
  void set_arrow(int u, int v);  // u -> v
  void clear_edge(int u, int v);

  std::size_t edge_count() const { return edges_; }
  bool has_arrowheads() const;  // any arrow or arc present
  VarSet neighbors(int v) const { return adj_[v]; }

  friend bool operator==(const MixedGraph&, const MixedGraph&);

private:
  enum class Cell : std::uint8_t { None, Line, FwdArrow, BackArrow, Arc };
  int pair_index(int u, int v) const;  // canonical u < v
  Cell cell(int u, int v) const;
  void set_cell(int u, int v, Cell c);

  GroundSet ground_;
  std::vector<Cell> cells_;
  std::vector<VarSet> adj_;
  std::size_t edges_ = 0;
};

MixedGraph skeleton(const MixedGraph&);
MixedGraph complete_graph(GroundSet, bool bidirected = false);
MixedGraph permuted_graph(const MixedGraph&, const std::vector<int>& element_perm);

// The four canonical network families plus the two trivial ones, all on the
// dyad ground of n nodes. The incidence graph joins dyads sharing a node; its
// complement joins node-disjoint dyads.
enum class GraphFamily { Empty, UndIncidence, BidIncidence, UndComplement, BidComplement, Complete };

std::string_view family_name(GraphFamily);  // empty, L-, Lbi, Lc-, Lcbi, complete
std::optional<GraphFamily> family_from_name(std::string_view);
MixedGraph family_graph(GraphFamily, int n);
MixedGraph incidence_graph(int n, bool bidirected = false);
MixedGraph complement_incidence_graph(int n, bool bidirected = false);

// Walk-based separation: A and B are separated by C when no walk between them
// is connecting, where a walk connects iff every collider section meets C and
// every non-collider section avoids C. Implemented as a finite reachability
// search over states (vertex, head-into-section, section-met-C).
bool separates(const MixedGraph&, VarSet a, VarSet b, VarSet c);

// A connecting walk as a vertex sequence, or nullopt when separated.
std::optional<std::vector<int>> connecting_walk(const MixedGraph&, VarSet a, VarSet b, VarSet c);

// All elementary statements <u,v|C> with u, v separated by C.
IndependenceModel induced_model(const MixedGraph&);

// Undirected graph joining u, v iff no statement <u,v|C> is present.
MixedGraph skeleton_of_model(const IndependenceModel&);

bool markov_equivalent(const MixedGraph&, const MixedGraph&);

// Every non-adjacent pair has at least one separator.
bool is_maximal(const MixedGraph&);

// A trisection <left, section, right>: a walk entering and leaving a connected
// line-section. Collider: arrowheads into the section at both entry edges.
// Unshielded: distinct, non-adjacent endpoints.
struct Trisection {
  int left = 0;
  int right = 0;  // left < right
  VarSet section;
  bool collider = false;
  bool shielded = false;
  friend bool operator==(const Trisection&, const Trisection&) = default;
};

// All unshielded collider trisections, sorted by (left, right, section bits).
std::vector<Trisection> unshielded_collider_trisections(const MixedGraph&);

enum class SeparatorMode { All, Minimal, Maximal };

struct SeparatorList {
  std::vector<VarSet> separators;  // sorted by (cardinality, lex)
  bool adjacent = false;           // u ~ v: no separators by definition
};

// Exhaustive enumeration of all C in V\{u,v} separating u from v, optionally
// filtered to inclusion-minimal or inclusion-maximal sets.
SeparatorList enumerate_separators(const MixedGraph&, int u, int v, SeparatorMode);

// Named conditioning-set shapes on a network ground (1-based node ids).
VarSet pairwise_separator(const GroundSet&, const Dyad& ij, const Dyad& kl);  // {ik,il,jk,jl}
VarSet star_separator(const GroundSet&, const Dyad& ij);   // every dyad meeting i or j, bar ij
VarSet far_separator(const GroundSet&, const Dyad& ij);    // every dyad avoiding i and j
VarSet node_star(const GroundSet&, int node);              // every dyad at one node
VarSet far_separator3(const GroundSet&, int i, int j, int k);  // every dyad avoiding i, j, k

// Uniform random mixed graph: each pair is independently absent (prob
// 1 - edge_prob) or one of line / arrow / reversed arrow / arc.
MixedGraph random_mixed_graph(const GroundSet&, std::mt19937_64& rng, double edge_prob);

}  // namespace exchci
