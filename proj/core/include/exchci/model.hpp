#pragma once

#include "exchci/ground.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace exchci {

// A conditional-independence statement <A,B|C> with pairwise disjoint parts.
// Canonical form: the side with the smaller bit-encoding is stored as A.
struct Statement {
  VarSet a, b, c;
  Statement() = default;
  Statement(VarSet a_, VarSet b_, VarSet c_);  // canonicalizes; throws on overlap
  bool elementary() const { return a.size() == 1 && b.size() == 1; }
  friend bool operator==(const Statement&, const Statement&) = default;
  friend bool operator<(const Statement& x, const Statement& y) {
    if (x.a != y.a) return x.a.bits() < y.a.bits();
    if (x.b != y.b) return x.b.bits() < y.b.bits();
    return x.c.bits() < y.c.bits();
  }
};

enum class Property {
  Symmetry,
  Decomposition,
  WeakUnion,
  Contraction,
  Intersection,
  Composition,
  SingletonTransitivity,
  UpwardStability,
  DownwardStability,
};

std::string_view property_name(Property);
std::optional<Property> property_from_name(std::string_view);

struct PropertyWitness {
  std::vector<Statement> antecedents;  // hold in the model
  std::vector<Statement> consequents;  // required but absent (any one suffices)
};

struct PropertyReport {
  Property property{};
  bool holds = false;
  std::optional<PropertyWitness> witness;  // present iff !holds
};

// A conditional-independence model over a ground set. Only elementary
// statements <u,v|C> (singletons on both sides) are stored; symmetry is
// implicit in the unordered pair, and statements with an empty side are
// implicitly true. A general statement holds iff all its elementary
// expansions are present:
//   <A,B|C> holds  <=>  <u,v | C u A' u B'> stored for every u in A, v in B,
//                       A' subseteq A\{u}, B' subseteq B\{v}.
class IndependenceModel {
public:
  explicit IndependenceModel(GroundSet ground);

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return count_; }

  bool contains(int u, int v, VarSet c) const;
  // Insert one elementary statement; returns true when new. Throws when the
  // parts overlap or fall outside the ground set.
  bool insert(int u, int v, VarSet c);
  // Insert every elementary expansion of a general statement.
  void insert(const Statement&);

  bool holds(VarSet a, VarSet b, VarSet c) const;
  bool holds(const Statement& s) const { return holds(s.a, s.b, s.c); }

  void for_each_elementary(const std::function<void(int, int, VarSet)>&) const;
  std::vector<Statement> statements() const;  // sorted by (u, v, C) encoding

  friend bool operator==(const IndependenceModel&, const IndependenceModel&);

private:
  void check_elem(int u, int v, VarSet c) const;
  std::uint64_t key(int u, int v, VarSet c) const;

  GroundSet ground_;
  int pair_count_ = 0;
  bool dense_ = true;
  std::vector<std::uint64_t> dense_bits_;
  std::set<std::uint64_t> sparse_;
  std::size_t count_ = 0;
};

// True when the exchange rule adds nothing:
//   <u,v|Cw> and <u,w|C>  =>  <u,w|Cv> and <u,v|C>.
// A model closed under it is closed under the four semigraphoid axioms at the
// level of general statements read through holds().
bool is_semigraphoid_closed(const IndependenceModel&);

IndependenceModel semigraphoid_closure(const IndependenceModel&);

// Semigraphoid closure extended with the given properties as inference rules.
// Allowed: Intersection, Composition, SingletonTransitivity, UpwardStability,
// DownwardStability. Singleton-transitivity has a disjunctive consequent and
// thus no least fixpoint; the rule deterministically adds the disjunct with
// the smaller (u, v, C) encoding.
IndependenceModel closure_with(const IndependenceModel&, const std::vector<Property>& extra);

// Checks one property by exhaustive quantification (general disjoint subsets
// for intersection/composition and the four axioms; elementary statements for
// the stability/transitivity properties). Requires a semigraphoid-closed
// model; throws std::domain_error otherwise. The witness, when present, is
// the first violation in deterministic enumeration order.
PropertyReport check_property(const IndependenceModel&, Property);

// Replaces every conditioning set C by V \ (u,v,C). An involution.
IndependenceModel dual(const IndependenceModel&);

// Relabels every statement through an element permutation.
IndependenceModel permuted_model(const IndependenceModel&, const std::vector<int>& element_perm);

}  // namespace exchci
