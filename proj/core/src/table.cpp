#include "exchci/table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace exchci {

namespace {

constexpr int kMaxWidth = 22;

std::vector<int> support_elements(VarSet s) { return s.elements(); }

// state permutation induced by an element permutation, restricted to support
std::uint32_t map_state(const std::vector<int>& rank_image, std::uint32_t state) {
  std::uint32_t out = 0;
  for (std::size_t r = 0; r < rank_image.size(); ++r)
    if ((state >> r) & 1u) out |= std::uint32_t{1} << rank_image[r];
  return out;
}

}  // namespace

JointTable::JointTable(GroundSet ground, VarSet support, std::vector<double> probs)
    : ground_(std::move(ground)), support_(support), probs_(std::move(probs)) {
  if (!support_.subset_of(ground_.all()))
    throw std::invalid_argument("table support leaves the ground set");
  if (support_.size() > kMaxWidth)
    throw std::length_error("joint tables are limited to 22 elements");
  if (probs_.size() != (std::size_t{1} << support_.size()))
    throw std::invalid_argument("table length must be 2^|support|");
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw std::invalid_argument("table entries must be non-negative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kTableTolerance) {
    std::ostringstream os;
    os << "table mass must be 1: got " << sum << " (residual " << sum - 1.0 << ")";
    throw std::invalid_argument(os.str());
  }
}

JointTable JointTable::full(GroundSet ground, std::vector<double> probs) {
  VarSet all = ground.all();
  return JointTable(std::move(ground), all, std::move(probs));
}

int JointTable::rank_of(int element) const {
  if (!support_.contains(element))
    throw std::invalid_argument("element is not in the table support");
  return VarSet::of_bits(support_.bits() & ((std::uint32_t{1} << element) - 1)).size();
}

int JointTable::element_at(int rank) const {
  auto els = support_elements(support_);
  if (rank < 0 || rank >= int(els.size()))
    throw std::invalid_argument("support rank out of range");
  return els[std::size_t(rank)];
}

std::uint32_t canonical_state(const GroundSet& g, std::uint32_t state) {
  int n = g.nodes();
  int s = g.size();
  if (s < 32 && (state >> s) != 0)
    throw std::invalid_argument("state has bits outside the ground set");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::uint32_t best = state;
  do {
    auto p = element_permutation(g, NodePermutation::of_map(img));
    std::uint32_t mapped = 0;
    for (int e = 0; e < s; ++e)
      if ((state >> e) & 1u) mapped |= std::uint32_t{1} << p[std::size_t(e)];
    best = std::min(best, mapped);
  } while (std::next_permutation(img.begin(), img.end()));
  return best;
}

std::vector<std::uint32_t> orbit_states(const GroundSet& g, std::uint32_t state) {
  int n = g.nodes();
  int s = g.size();
  if (s < 32 && (state >> s) != 0)
    throw std::invalid_argument("state has bits outside the ground set");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<std::uint32_t> out;
  do {
    auto p = element_permutation(g, NodePermutation::of_map(img));
    std::uint32_t mapped = 0;
    for (int e = 0; e < s; ++e)
      if ((state >> e) & 1u) mapped |= std::uint32_t{1} << p[std::size_t(e)];
    out.push_back(mapped);
  } while (std::next_permutation(img.begin(), img.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

JointTable table_from_orbits(const OrbitWeighting& w) {
  if (w.ground.kind() != GroundKind::Network)
    throw std::invalid_argument("orbit weightings are defined on network grounds");
  int s = w.ground.size();
  if (s > kMaxWidth) throw std::length_error("joint tables are limited to 22 elements");
  std::vector<double> probs(std::size_t{1} << s, 0.0);
  for (const auto& [key, weight] : w.weights) {
    if (!(weight >= 0.0)) throw std::invalid_argument("orbit weights must be non-negative");
    if (canonical_state(w.ground, key) != key)
      throw std::invalid_argument("orbit key " + std::to_string(key) +
                                  " is not the canonical state of its orbit");
    for (std::uint32_t st : orbit_states(w.ground, key)) probs[st] = weight;
  }
  return JointTable::full(w.ground, std::move(probs));  // normalization checked here
}

bool is_exchangeable_table(const JointTable& t, double tol) {
  const GroundSet& g = t.ground();
  int w = t.width();
  std::vector<std::vector<int>> rank_perms;
  if (g.kind() == GroundKind::Vector) {
    // symmetry acts on the support slots themselves
    if (w < 2) return true;
    std::vector<int> swap01(static_cast<std::size_t>(w)), rot(static_cast<std::size_t>(w));
    for (int r = 0; r < w; ++r) {
      swap01[r] = r == 0 ? 1 : r == 1 ? 0 : r;
      rot[r] = (r + 1) % w;
    }
    rank_perms = {swap01, rot};
  } else {
    if (t.support().empty()) return true;  // single state
    if (t.support() != g.all()) return false;  // partial dyad support breaks relabeling
    int n = g.nodes();
    if (n < 2) return true;
    for (const auto& np :
         {NodePermutation::transposition(n, 1, 2), NodePermutation::rotation(n)}) {
      auto p = element_permutation(g, np);
      rank_perms.push_back(p);  // full support: rank == element
    }
  }
  for (const auto& p : rank_perms)
    for (std::uint32_t st = 0; st < (std::uint32_t{1} << w); ++st)
      if (std::abs(t.prob(st) - t.prob(map_state(p, st))) > tol) return false;
  return true;
}

bool ci_holds(const JointTable& t, VarSet a, VarSet b, VarSet c, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (!a.disjoint(b) || !a.disjoint(c) || !b.disjoint(c))
    throw std::invalid_argument("CI query parts must be pairwise disjoint");
  if (!a.subset_of(t.support()) || !b.subset_of(t.support()) || !c.subset_of(t.support()))
    throw std::invalid_argument("CI query leaves the table support");
  if (a.empty() || b.empty()) return true;
  JointTable m = marginalize(t, a | b | c);
  int p = a.size(), q = b.size(), r = c.size();
  // within m, ranks are ordered by element; build per-part rank extractors
  std::vector<int> part(std::size_t(p + q + r));
  {
    auto els = (a | b | c).elements();
    for (std::size_t k = 0; k < els.size(); ++k)
      part[k] = a.contains(els[k]) ? 0 : b.contains(els[k]) ? 1 : 2;
  }
  std::vector<double> pabc(std::size_t{1} << (p + q + r), 0.0);
  for (std::uint32_t st = 0; st < (std::uint32_t{1} << m.width()); ++st) {
    std::uint32_t ab = 0, bb = 0, cb = 0;
    int ia = 0, ib = 0, ic = 0;
    for (int k = 0; k < m.width(); ++k) {
      bool bit = (st >> k) & 1u;
      if (part[std::size_t(k)] == 0) ab |= std::uint32_t(bit) << ia++;
      else if (part[std::size_t(k)] == 1) bb |= std::uint32_t(bit) << ib++;
      else cb |= std::uint32_t(bit) << ic++;
    }
    pabc[(std::size_t(cb) << (p + q)) | (std::size_t(bb) << p) | ab] += m.prob(st);
  }
  std::size_t na = std::size_t{1} << p, nb = std::size_t{1} << q, nc = std::size_t{1} << r;
  for (std::size_t cv = 0; cv < nc; ++cv) {
    double pc = 0.0;
    for (std::size_t bv = 0; bv < nb; ++bv)
      for (std::size_t av = 0; av < na; ++av) pc += pabc[(cv << (p + q)) | (bv << p) | av];
    if (pc <= 0.0) continue;  // almost-sure semantics
    for (std::size_t av = 0; av < na; ++av) {
      double pac = 0.0;
      for (std::size_t bv = 0; bv < nb; ++bv) pac += pabc[(cv << (p + q)) | (bv << p) | av];
      for (std::size_t bv = 0; bv < nb; ++bv) {
        double pbc = 0.0;
        for (std::size_t av2 = 0; av2 < na; ++av2)
          pbc += pabc[(cv << (p + q)) | (bv << p) | av2];
        double joint = pabc[(cv << (p + q)) | (bv << p) | av] / pc;
        if (std::abs(joint - (pac / pc) * (pbc / pc)) > tol) return false;
      }
    }
  }
  return true;
}

InducedTableModel induced_model_of_table(const JointTable& t, double tol) {
  if (t.support() != t.ground().all())
    throw std::invalid_argument("induced models need a full-support table");
  int s = t.width();
  IndependenceModel m(t.ground());
  for (int u = 0; u < s; ++u)
    for (int v = u + 1; v < s; ++v) {
      VarSet su = VarSet::single(u), sv = VarSet::single(v);
      std::uint32_t rest = (t.ground().all() - su - sv).bits();
      std::uint32_t cb = 0;
      while (true) {
        if (ci_holds(t, su, sv, VarSet::of_bits(cb), tol)) m.insert(u, v, VarSet::of_bits(cb));
        if (cb == rest) break;
        cb = (cb - rest) & rest;
      }
    }
  InducedTableModel out{std::move(m), true, std::nullopt};
  if (!is_semigraphoid_closed(out.model)) {
    out.semigraphoid_consistent = false;
    IndependenceModel closed = semigraphoid_closure(out.model);
    for (const auto& st : closed.statements())
      if (!out.model.contains(st.a.lowest(), st.b.lowest(), st.c)) {
        out.violation = "closure adds <" + t.ground().set_name(st.a) + "," +
                        t.ground().set_name(st.b) + "|" + t.ground().set_name(st.c) + ">";
        break;
      }
  }
  return out;
}

JointTable marginalize(const JointTable& t, VarSet keep) {
  if (!keep.subset_of(t.support()))
    throw std::invalid_argument("marginal elements must lie in the table support");
  int w = t.width();
  auto els = support_elements(t.support());
  std::vector<int> dest(std::size_t(w), -1);
  int kept = 0;
  for (int r = 0; r < w; ++r)
    if (keep.contains(els[std::size_t(r)])) dest[std::size_t(r)] = kept++;
  std::vector<double> probs(std::size_t{1} << kept, 0.0);
  for (std::uint32_t st = 0; st < (std::uint32_t{1} << w); ++st) {
    std::uint32_t out = 0;
    for (int r = 0; r < w; ++r)
      if (dest[std::size_t(r)] >= 0 && ((st >> r) & 1u))
        out |= std::uint32_t{1} << dest[std::size_t(r)];
    probs[out] += t.prob(st);
  }
  return JointTable(t.ground(), keep, std::move(probs));
}

JointTable condition(const JointTable& t, VarSet c, VarSet values) {
  if (!c.subset_of(t.support()))
    throw std::invalid_argument("conditioning elements must lie in the table support");
  if (!values.subset_of(c))
    throw std::invalid_argument("conditioning values must assign only conditioned elements");
  int w = t.width();
  auto els = support_elements(t.support());
  std::uint32_t cmask = 0, cvals = 0;
  std::vector<int> dest(std::size_t(w), -1);
  int kept = 0;
  for (int r = 0; r < w; ++r) {
    int e = els[std::size_t(r)];
    if (c.contains(e)) {
      cmask |= std::uint32_t{1} << r;
      if (values.contains(e)) cvals |= std::uint32_t{1} << r;
    } else {
      dest[std::size_t(r)] = kept++;
    }
  }
  std::vector<double> probs(std::size_t{1} << kept, 0.0);
  double mass = 0.0;
  for (std::uint32_t st = 0; st < (std::uint32_t{1} << w); ++st) {
    if ((st & cmask) != cvals) continue;
    std::uint32_t out = 0;
    for (int r = 0; r < w; ++r)
      if (dest[std::size_t(r)] >= 0 && ((st >> r) & 1u))
        out |= std::uint32_t{1} << dest[std::size_t(r)];
    probs[out] += t.prob(st);
    mass += t.prob(st);
  }
  if (mass <= 0.0) throw std::invalid_argument("conditioning on a null event");
  for (double& p : probs) p /= mass;
  return JointTable(t.ground(), t.support() - c, std::move(probs));
}

JointTable restrict_to_nodes(const JointTable& t, const std::vector<int>& nodes) {
  const GroundSet& g = t.ground();
  if (g.kind() != GroundKind::Network)
    throw std::invalid_argument("node restriction is defined on network tables");
  std::vector<int> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty() || std::unique(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("node restriction needs distinct nodes");
  for (int v : sorted)
    if (v < 1 || v > g.nodes()) throw std::invalid_argument("node id out of range");
  int k = int(sorted.size());
  GroundSet sub = GroundSet::network_on(k);
  VarSet keep;
  std::vector<int> old_of_new(std::size_t(sub.size()));
  for (int e = 0; e < sub.size(); ++e) {
    Dyad d = sub.dyad_at(e);
    int old = g.index_of(Dyad(sorted[std::size_t(d.i - 1)], sorted[std::size_t(d.j - 1)]));
    old_of_new[std::size_t(e)] = old;
    keep = keep.with(old);
  }
  if (!keep.subset_of(t.support()))
    throw std::invalid_argument("restricted dyads must lie in the table support");
  JointTable m = marginalize(t, keep);
  // re-ground: new element e pulls the bit of its old dyad's rank
  std::vector<double> probs(std::size_t{1} << sub.size(), 0.0);
  for (std::uint32_t st = 0; st < (std::uint32_t{1} << m.width()); ++st) {
    std::uint32_t out = 0;
    for (int e = 0; e < sub.size(); ++e)
      if ((st >> m.rank_of(old_of_new[std::size_t(e)])) & 1u) out |= std::uint32_t{1} << e;
    probs[out] += m.prob(st);
  }
  return JointTable::full(std::move(sub), std::move(probs));
}

JointTable compact(const JointTable& t) {
  if (t.ground().kind() != GroundKind::Vector)
    throw std::invalid_argument("compaction re-grounds vector tables only");
  if (t.width() == 0) throw std::invalid_argument("cannot compact an empty-support table");
  return JointTable::full(GroundSet::vector_of(t.width()), t.probs());
}

CIOracle oracle_from_table(JointTable t, double tol) {
  if (t.support() != t.ground().all())
    throw std::invalid_argument("CI oracles need a full-support table");
  GroundSet g = t.ground();
  return CIOracle{std::move(g), [t = std::move(t), tol](VarSet a, VarSet b, VarSet c) {
                    return ci_holds(t, a, b, c, tol);
                  }};
}

}  // namespace exchci
