#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace exchci {

// Every ground set in this library has at most 32 elements: random vectors of
// up to 32 variables, or random networks on up to 8 nodes (28 dyads). Subsets
// are bit-indexed by element index, so they fit in one machine word.
inline constexpr int kMaxElements = 32;

// Default seed for every randomized routine that takes one.
inline constexpr std::uint64_t kDefaultSeed = 1729;

// A subset of ground elements; bit k is element k.
class VarSet {
public:
  constexpr VarSet() = default;

  static constexpr VarSet of_bits(std::uint32_t bits) {
    VarSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr VarSet single(int e) { return of_bits(std::uint32_t{1} << e); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  int lowest() const { return std::countr_zero(bits_); }  // undefined when empty

  constexpr VarSet with(int e) const { return of_bits(bits_ | (std::uint32_t{1} << e)); }
  constexpr VarSet without(int e) const { return of_bits(bits_ & ~(std::uint32_t{1} << e)); }

  constexpr bool subset_of(VarSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool disjoint(VarSet o) const { return (bits_ & o.bits_) == 0; }

  friend constexpr VarSet operator|(VarSet a, VarSet b) { return of_bits(a.bits_ | b.bits_); }
  friend constexpr VarSet operator&(VarSet a, VarSet b) { return of_bits(a.bits_ & b.bits_); }
  friend constexpr VarSet operator-(VarSet a, VarSet b) { return of_bits(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VarSet a, VarSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(VarSet a, VarSet b) { return a.bits_ != b.bits_; }

  template <class F>
  void for_each(F f) const {
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }
  std::vector<int> elements() const {
    std::vector<int> out;
    for_each([&](int e) { out.push_back(e); });
    return out;
  }

private:
  std::uint32_t bits_ = 0;
};

// Strict "lexicographically less" when sets are read as sorted element lists,
// e.g. {0,5} < {1,2}. Used wherever a deterministic witness must be picked.
bool lex_less(VarSet a, VarSet b);

// An unordered node pair i-j with 1-based node ids; normalized to i < j.
struct Dyad {
  int i = 0;
  int j = 0;
  Dyad() = default;
  Dyad(int a, int b);  // throws std::invalid_argument unless 1 <= a != b
  friend bool operator==(const Dyad&, const Dyad&) = default;
  bool meets(const Dyad& o) const { return i == o.i || i == o.j || j == o.i || j == o.j; }
  bool contains_node(int v) const { return i == v || j == v; }
  std::string to_string() const;
};

// All dyads on nodes 1..n in lexicographic order: 1-2, 1-3, ..., (n-1)-n.
std::vector<Dyad> dyad_universe(int n);

enum class GroundKind { Vector, Network };

// The index set a model/graph/table lives on. Vector grounds have elements
// 1..n (variables); network grounds have one element per dyad of n nodes.
class GroundSet {
public:
  static GroundSet vector_of(int n);   // n in [1, 32]
  static GroundSet network_on(int n);  // n in [1, 8]

  GroundKind kind() const { return kind_; }
  // Variable count for vector grounds, node count for network grounds.
  int nodes() const { return n_; }
  int size() const { return kind_ == GroundKind::Vector ? n_ : int(dyads_.size()); }
  VarSet all() const;

  Dyad dyad_at(int e) const;       // network only
  int index_of(const Dyad&) const; // network only
  const std::vector<Dyad>& dyads() const { return dyads_; }

  std::string element_name(int e) const;
  std::optional<int> parse_element(std::string_view token) const;
  std::string set_name(VarSet s) const;  // "{a,b,...}" in element order

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

private:
  GroundSet(GroundKind k, int n, std::vector<Dyad> d)
      : kind_(k), n_(n), dyads_(std::move(d)) {}
  GroundKind kind_ = GroundKind::Vector;
  int n_ = 0;
  std::vector<Dyad> dyads_;
};

// A bijection of nodes 1..n.
class NodePermutation {
public:
  static NodePermutation identity(int n);
  static NodePermutation transposition(int n, int a, int b);
  static NodePermutation rotation(int n);  // 1 -> 2 -> ... -> n -> 1
  static NodePermutation of_map(std::vector<int> image_of);  // image_of[k] = image of node k+1

  int size() const { return int(map_.size()); }
  int operator()(int node) const { return map_[node - 1]; }
  NodePermutation then(const NodePermutation& next) const;  // apply *this, then next
  NodePermutation inverse() const;
  friend bool operator==(const NodePermutation&, const NodePermutation&) = default;

private:
  explicit NodePermutation(std::vector<int> m) : map_(std::move(m)) {}
  std::vector<int> map_;
};

// The action of a node permutation on ground elements: for vector grounds the
// variables are permuted directly; for network grounds each dyad i-j maps to
// perm(i)-perm(j). Returns the element-index map.
std::vector<int> element_permutation(const GroundSet&, const NodePermutation&);

VarSet apply_elements(const std::vector<int>& element_perm, VarSet s);
VarSet act(const GroundSet&, const NodePermutation&, VarSet s);

}  // namespace exchci
