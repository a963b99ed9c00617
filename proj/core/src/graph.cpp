#include "exchci/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace exchci {

namespace {

constexpr int kSubsetScanCap = 22;  // largest popcount we exhaustively enumerate

void check_vertex(const GroundSet& g, int v) {
  if (v < 0 || v >= g.size()) throw std::invalid_argument("vertex index out of range");
}

void check_parts(const GroundSet& g, VarSet a, VarSet b, VarSet c) {
  if (!a.subset_of(g.all()) || !b.subset_of(g.all()) || !c.subset_of(g.all()))
    throw std::invalid_argument("separation query leaves the ground set");
  if (!a.disjoint(b) || !a.disjoint(c) || !b.disjoint(c))
    throw std::invalid_argument("separation query parts must be pairwise disjoint");
}

}  // namespace

MixedGraph::MixedGraph(GroundSet ground) : ground_(std::move(ground)) {
  int s = ground_.size();
  cells_.assign(std::size_t(s) * (s - 1) / 2, Cell::None);
  adj_.assign(std::size_t(s), VarSet{});
}

int MixedGraph::pair_index(int u, int v) const {
  int s = ground_.size();
  return u * s - u * (u + 1) / 2 + (v - u - 1);
}

MixedGraph::Cell MixedGraph::cell(int u, int v) const {
  check_vertex(ground_, u);
  check_vertex(ground_, v);
  if (u == v) throw std::invalid_argument("no loops in simple graphs");
  if (u < v) return cells_[pair_index(u, v)];
  Cell c = cells_[pair_index(v, u)];
  if (c == Cell::FwdArrow) return Cell::BackArrow;
  if (c == Cell::BackArrow) return Cell::FwdArrow;
  return c;
}

void MixedGraph::set_cell(int u, int v, Cell c) {
  check_vertex(ground_, u);
  check_vertex(ground_, v);
  if (u == v) throw std::invalid_argument("no loops in simple graphs");
  if (u > v) {
    std::swap(u, v);
    if (c == Cell::FwdArrow) c = Cell::BackArrow;
    else if (c == Cell::BackArrow) c = Cell::FwdArrow;
  }
  Cell& slot = cells_[pair_index(u, v)];
  if (slot == Cell::None && c != Cell::None) ++edges_;
  if (slot != Cell::None && c == Cell::None) --edges_;
  slot = c;
  if (c == Cell::None) {
    adj_[u] = adj_[u].without(v);
    adj_[v] = adj_[v].without(u);
  } else {
    adj_[u] = adj_[u].with(v);
    adj_[v] = adj_[v].with(u);
  }
}

bool MixedGraph::adjacent(int u, int v) const { return cell(u, v) != Cell::None; }
bool MixedGraph::line(int u, int v) const { return cell(u, v) == Cell::Line; }
bool MixedGraph::arc(int u, int v) const { return cell(u, v) == Cell::Arc; }
bool MixedGraph::arrow(int u, int v) const { return cell(u, v) == Cell::FwdArrow; }

bool MixedGraph::head_at(int u, int v) const {
  Cell c = cell(u, v);
  return c == Cell::Arc || c == Cell::FwdArrow;
}

void MixedGraph::set_line(int u, int v) { set_cell(u, v, Cell::Line); }
void MixedGraph::set_arc(int u, int v) { set_cell(u, v, Cell::Arc); }
void MixedGraph::set_arrow(int u, int v) { set_cell(u, v, Cell::FwdArrow); }
void MixedGraph::clear_edge(int u, int v) { set_cell(u, v, Cell::None); }

bool MixedGraph::has_arrowheads() const {
  for (Cell c : cells_)
    if (c != Cell::None && c != Cell::Line) return true;
  return false;
}

bool operator==(const MixedGraph& x, const MixedGraph& y) {
  return x.ground_ == y.ground_ && x.cells_ == y.cells_;
}

MixedGraph skeleton(const MixedGraph& g) {
  MixedGraph r(g.ground());
  int s = g.size();
  for (int u = 0; u < s; ++u)
    for (int v = u + 1; v < s; ++v)
      if (g.adjacent(u, v)) r.set_line(u, v);
  return r;
}

MixedGraph complete_graph(GroundSet ground, bool bidirected) {
  MixedGraph r(std::move(ground));
  int s = r.size();
  for (int u = 0; u < s; ++u)
    for (int v = u + 1; v < s; ++v)
      bidirected ? r.set_arc(u, v) : r.set_line(u, v);
  return r;
}

MixedGraph permuted_graph(const MixedGraph& g, const std::vector<int>& element_perm) {
  if (int(element_perm.size()) != g.size())
    throw std::invalid_argument("element permutation does not match ground");
  MixedGraph r(g.ground());
  int s = g.size();
  for (int u = 0; u < s; ++u)
    for (int v = u + 1; v < s; ++v) {
      if (!g.adjacent(u, v)) continue;
      int pu = element_perm[u], pv = element_perm[v];
      if (g.line(u, v)) r.set_line(pu, pv);
      else if (g.arc(u, v)) r.set_arc(pu, pv);
      else if (g.arrow(u, v)) r.set_arrow(pu, pv);
      else r.set_arrow(pv, pu);
    }
  return r;
}

namespace {

const char* kFamilyNames[] = {"empty", "L-", "Lbi", "Lc-", "Lcbi", "complete"};

}  // namespace

std::string_view family_name(GraphFamily f) { return kFamilyNames[int(f)]; }

std::optional<GraphFamily> family_from_name(std::string_view s) {
  for (int k = 0; k < 6; ++k)
    if (s == kFamilyNames[k]) return GraphFamily(k);
  return std::nullopt;
}

MixedGraph incidence_graph(int n, bool bidirected) {
  MixedGraph g(GroundSet::network_on(n));
  const auto& dy = g.ground().dyads();
  for (int u = 0; u < int(dy.size()); ++u)
    for (int v = u + 1; v < int(dy.size()); ++v)
      if (dy[u].meets(dy[v])) bidirected ? g.set_arc(u, v) : g.set_line(u, v);
  return g;
}

MixedGraph complement_incidence_graph(int n, bool bidirected) {
  MixedGraph g(GroundSet::network_on(n));
  const auto& dy = g.ground().dyads();
  for (int u = 0; u < int(dy.size()); ++u)
    for (int v = u + 1; v < int(dy.size()); ++v)
      if (!dy[u].meets(dy[v])) bidirected ? g.set_arc(u, v) : g.set_line(u, v);
  return g;
}

MixedGraph family_graph(GraphFamily f, int n) {
  switch (f) {
    case GraphFamily::Empty: return MixedGraph(GroundSet::network_on(n));
    case GraphFamily::UndIncidence: return incidence_graph(n, false);
    case GraphFamily::BidIncidence: return incidence_graph(n, true);
    case GraphFamily::UndComplement: return complement_incidence_graph(n, false);
    case GraphFamily::BidComplement: return complement_incidence_graph(n, true);
    case GraphFamily::Complete: return complete_graph(GroundSet::network_on(n));
  }
  throw std::invalid_argument("unknown graph family");
}

namespace {

// Reachability over states (vertex, head-into-current-section, section-met-C).
// A new section starts at every non-line edge; a section closing at v against
// an edge with head mark m_v is a collider iff the section was entered with a
// head and m_v holds; colliders must have met C, non-colliders must not.
// Returns the found state sequence as vertices, or nullopt.
std::optional<std::vector<int>> search_walk(const MixedGraph& g, VarSet a, VarSet b, VarSet c) {
  if (a.empty() || b.empty()) return std::nullopt;
  int s = g.size();
  auto idx = [](int v, bool lh, bool t) { return v * 4 + int(lh) * 2 + int(t); };
  std::vector<int> parent(std::size_t(s) * 4, -2);  // -2 unseen, -1 start
  std::deque<int> queue;
  std::optional<int> accept;
  auto visit = [&](int v, bool lh, bool t, int from) {
    int k = idx(v, lh, t);
    if (parent[k] != -2) return;
    parent[k] = from;
    if (b.contains(v) && !t) {
      if (!accept) accept = k;
      return;
    }
    queue.push_back(k);
  };
  a.for_each([&](int v) { visit(v, false, c.contains(v), -1); });
  while (!queue.empty() && !accept) {
    int k = queue.front();
    queue.pop_front();
    int v = k / 4;
    bool lh = (k / 2) & 1, t = k & 1;
    VarSet nb = g.neighbors(v);
    nb.for_each([&](int u) {
      if (accept) return;
      if (g.line(v, u)) {
        visit(u, lh, t || c.contains(u), k);
        return;
      }
      bool collider = lh && g.head_at(u, v);  // head at v closes the section
      if (collider != t) return;              // section fails its C requirement
      visit(u, g.head_at(v, u), c.contains(u), k);
    });
  }
  if (!accept) return std::nullopt;
  std::vector<int> walk;
  for (int k = *accept; k != -1; k = parent[k]) walk.push_back(k / 4);
  std::reverse(walk.begin(), walk.end());
  return walk;
}

}  // namespace

bool separates(const MixedGraph& g, VarSet a, VarSet b, VarSet c) {
  check_parts(g.ground(), a, b, c);
  return !search_walk(g, a, b, c).has_value();
}

std::optional<std::vector<int>> connecting_walk(const MixedGraph& g, VarSet a, VarSet b,
                                                VarSet c) {
  check_parts(g.ground(), a, b, c);
  return search_walk(g, a, b, c);
}

IndependenceModel induced_model(const MixedGraph& g) {
  int s = g.size();
  if (s > 16) throw std::length_error("induced-model enumeration is limited to 16 vertices");
  IndependenceModel m(g.ground());
  for (int u = 0; u < s; ++u)
    for (int v = u + 1; v < s; ++v) {
      if (g.adjacent(u, v)) continue;  // an edge is itself a connecting walk
      VarSet su = VarSet::single(u), sv = VarSet::single(v);
      std::uint32_t rest = (g.ground().all() - su - sv).bits();
      std::uint32_t cb = 0;
      while (true) {
        if (!search_walk(g, su, sv, VarSet::of_bits(cb))) m.insert(u, v, VarSet::of_bits(cb));
        if (cb == rest) break;
        cb = (cb - rest) & rest;
      }
    }
  return m;
}

MixedGraph skeleton_of_model(const IndependenceModel& m) {
  int s = m.ground().size();
  std::vector<bool> cut(std::size_t(s) * s, false);
  m.for_each_elementary([&](int u, int v, VarSet) { cut[u * s + v] = true; });
  MixedGraph g(m.ground());
  for (int u = 0; u < s; ++u)
    for (int v = u + 1; v < s; ++v)
      if (!cut[u * s + v]) g.set_line(u, v);
  return g;
}

bool markov_equivalent(const MixedGraph& g, const MixedGraph& h) {
  if (!(g.ground() == h.ground()))
    throw std::invalid_argument("Markov equivalence needs a common ground set");
  return induced_model(g) == induced_model(h);
}

bool is_maximal(const MixedGraph& g) {
  int s = g.size();
  if (s > 16) throw std::length_error("maximality check is limited to 16 vertices");
  for (int u = 0; u < s; ++u)
    for (int v = u + 1; v < s; ++v) {
      if (g.adjacent(u, v)) continue;
      VarSet su = VarSet::single(u), sv = VarSet::single(v);
      std::uint32_t rest = (g.ground().all() - su - sv).bits();
      std::uint32_t cb = 0;
      bool found = false;
      while (true) {
        if (!search_walk(g, su, sv, VarSet::of_bits(cb))) {
          found = true;
          break;
        }
        if (cb == rest) break;
        cb = (cb - rest) & rest;
      }
      if (!found) return false;
    }
  return true;
}

namespace {

bool line_connected(const MixedGraph& g, VarSet set) {
  if (set.empty()) return false;
  VarSet seen = VarSet::single(set.lowest());
  VarSet frontier = seen;
  while (!frontier.empty()) {
    VarSet next;
    frontier.for_each([&](int v) {
      (g.neighbors(v) & set).for_each([&](int u) {
        if (!seen.contains(u) && g.line(v, u)) next = next.with(u);
      });
    });
    seen = seen | next;
    frontier = next;
  }
  return seen == set;
}

}  // namespace

std::vector<Trisection> unshielded_collider_trisections(const MixedGraph& g) {
  std::vector<Trisection> out;
  if (!g.has_arrowheads()) return out;
  int s = g.size();
  // line-components; a section is a line-connected set, hence lives in one
  VarSet seen;
  std::vector<VarSet> components;
  for (int v = 0; v < s; ++v) {
    if (seen.contains(v)) continue;
    VarSet comp = VarSet::single(v), frontier = comp;
    while (!frontier.empty()) {
      VarSet next;
      frontier.for_each([&](int x) {
        g.neighbors(x).for_each([&](int u) {
          if (!comp.contains(u) && g.line(x, u)) next = next.with(u);
        });
      });
      comp = comp | next;
      frontier = next;
    }
    seen = seen | comp;
    components.push_back(comp);
  }
  for (VarSet comp : components) {
    if (comp.size() > kSubsetScanCap)
      throw std::length_error("trisection enumeration is limited to line components of 22");
    std::uint32_t mask = comp.bits();
    std::uint32_t sb = mask & (~mask + 1);  // start from the lowest nonempty submask
    for (std::uint32_t sub = sb;; sub = (sub - mask) & mask) {
      if (sub == 0) break;
      VarSet sec = VarSet::of_bits(sub);
      if (line_connected(g, sec)) {
        VarSet heads;  // endpoints with an edge carrying a head into the section
        for (int x = 0; x < s; ++x) {
          bool in = false;
          (g.neighbors(x) & sec).for_each([&](int v) { in = in || g.head_at(x, v); });
          if (in) heads = heads.with(x);
        }
        heads.for_each([&](int a) {
          heads.for_each([&](int b) {
            if (a < b && !g.adjacent(a, b))
              out.push_back(Trisection{a, b, sec, true, false});
          });
        });
      }
      if (sub == mask) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const Trisection& x, const Trisection& y) {
    if (x.left != y.left) return x.left < y.left;
    if (x.right != y.right) return x.right < y.right;
    return x.section.bits() < y.section.bits();
  });
  return out;
}

SeparatorList enumerate_separators(const MixedGraph& g, int u, int v, SeparatorMode mode) {
  check_vertex(g.ground(), u);
  check_vertex(g.ground(), v);
  if (u == v) throw std::invalid_argument("separator endpoints must differ");
  SeparatorList out;
  if (g.adjacent(u, v)) {
    out.adjacent = true;
    return out;
  }
  VarSet su = VarSet::single(u), sv = VarSet::single(v);
  VarSet rest = g.ground().all() - su - sv;
  if (rest.size() > kSubsetScanCap)
    throw std::length_error("separator enumeration is limited to 22 free vertices");
  std::uint32_t mask = rest.bits();
  std::vector<VarSet> all;
  std::uint32_t cb = 0;
  while (true) {
    if (!search_walk(g, su, sv, VarSet::of_bits(cb))) all.push_back(VarSet::of_bits(cb));
    if (cb == mask) break;
    cb = (cb - mask) & mask;
  }
  auto order = [](VarSet x, VarSet y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return lex_less(x, y);
  };
  std::sort(all.begin(), all.end(), order);
  if (mode == SeparatorMode::Minimal) {
    std::vector<VarSet> kept;
    for (VarSet c : all) {
      bool dominated = false;
      for (VarSet k : kept)
        if (k.subset_of(c)) {
          dominated = true;
          break;
        }
      if (!dominated) kept.push_back(c);
    }
    all = std::move(kept);
  } else if (mode == SeparatorMode::Maximal) {
    std::vector<VarSet> kept;
    for (auto it = all.rbegin(); it != all.rend(); ++it) {
      bool dominated = false;
      for (VarSet k : kept)
        if (it->subset_of(k)) {
          dominated = true;
          break;
        }
      if (!dominated) kept.push_back(*it);
    }
    std::sort(kept.begin(), kept.end(), order);
    all = std::move(kept);
  }
  out.separators = std::move(all);
  return out;
}

namespace {

void check_network(const GroundSet& g) {
  if (g.kind() != GroundKind::Network)
    throw std::invalid_argument("named conditioning sets need a network ground");
}

void check_node(const GroundSet& g, int node) {
  if (node < 1 || node > g.nodes()) throw std::invalid_argument("node id out of range");
}

}  // namespace

VarSet pairwise_separator(const GroundSet& g, const Dyad& ij, const Dyad& kl) {
  check_network(g);
  if (ij.meets(kl)) throw std::invalid_argument("pairwise separator needs disjoint dyads");
  VarSet c;
  for (int a : {ij.i, ij.j})
    for (int b : {kl.i, kl.j}) c = c.with(g.index_of(Dyad(a, b)));
  return c;
}

VarSet star_separator(const GroundSet& g, const Dyad& ij) {
  check_network(g);
  check_node(g, ij.i);
  check_node(g, ij.j);
  VarSet c;
  for (int e = 0; e < g.size(); ++e) {
    const Dyad& d = g.dyad_at(e);
    if (d.meets(ij) && !(d == ij)) c = c.with(e);
  }
  return c;
}

VarSet far_separator(const GroundSet& g, const Dyad& ij) {
  check_network(g);
  check_node(g, ij.i);
  check_node(g, ij.j);
  VarSet c;
  for (int e = 0; e < g.size(); ++e)
    if (!g.dyad_at(e).meets(ij)) c = c.with(e);
  return c;
}

VarSet node_star(const GroundSet& g, int node) {
  check_network(g);
  check_node(g, node);
  VarSet c;
  for (int e = 0; e < g.size(); ++e)
    if (g.dyad_at(e).contains_node(node)) c = c.with(e);
  return c;
}

VarSet far_separator3(const GroundSet& g, int i, int j, int k) {
  check_network(g);
  check_node(g, i);
  check_node(g, j);
  check_node(g, k);
  if (i == j || i == k || j == k) throw std::invalid_argument("nodes must be distinct");
  VarSet c;
  for (int e = 0; e < g.size(); ++e) {
    const Dyad& d = g.dyad_at(e);
    if (!d.contains_node(i) && !d.contains_node(j) && !d.contains_node(k)) c = c.with(e);
  }
  return c;
}

MixedGraph random_mixed_graph(const GroundSet& ground, std::mt19937_64& rng, double edge_prob) {
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw std::invalid_argument("edge probability must lie in [0,1]");
  MixedGraph g(ground);
  int s = ground.size();
  for (int u = 0; u < s; ++u)
    for (int v = u + 1; v < s; ++v) {
      double r = double(rng() >> 11) * 0x1.0p-53;
      if (r >= edge_prob) continue;
      switch (rng() & 3) {
        case 0: g.set_line(u, v); break;
        case 1: g.set_arrow(u, v); break;
        case 2: g.set_arrow(v, u); break;
        default: g.set_arc(u, v); break;
      }
    }
  return g;
}

}  // namespace exchci
