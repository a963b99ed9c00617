#include "exchci/exchange.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace exchci {

namespace {

struct Generators {
  std::vector<std::vector<int>> perms;  // element permutations generating the action
};

Generators symmetry_generators(const GroundSet& g) {
  Generators out;
  int n = g.nodes();
  if (n >= 2) {
    out.perms.push_back(element_permutation(g, NodePermutation::transposition(n, 1, 2)));
    out.perms.push_back(element_permutation(g, NodePermutation::rotation(n)));
  }
  return out;
}

}  // namespace

IndependenceModel orbit_closure(const IndependenceModel& m) {
  Generators gens = symmetry_generators(m.ground());
  IndependenceModel r = m;
  std::vector<Statement> work = r.statements();
  while (!work.empty()) {
    Statement st = work.back();
    work.pop_back();
    int u = st.a.lowest(), v = st.b.lowest();
    for (const auto& p : gens.perms) {
      int pu = p[u], pv = p[v];
      VarSet pc = apply_elements(p, st.c);
      if (r.insert(pu, pv, pc))
        work.push_back(Statement(VarSet::single(pu), VarSet::single(pv), pc));
    }
  }
  return r;
}

bool is_exchangeable_model(const IndependenceModel& m) {
  Generators gens = symmetry_generators(m.ground());
  bool ok = true;
  m.for_each_elementary([&](int u, int v, VarSet c) {
    if (!ok) return;
    for (const auto& p : gens.perms)
      if (!m.contains(p[u], p[v], apply_elements(p, c))) {
        ok = false;
        return;
      }
  });
  return ok;
}

CIOracle oracle_from_model(IndependenceModel m) {
  GroundSet g = m.ground();
  return CIOracle{std::move(g), [m = std::move(m)](VarSet a, VarSet b, VarSet c) {
                    return m.holds(a, b, c);
                  }};
}

CIOracle oracle_from_graph(MixedGraph g) {
  GroundSet gr = g.ground();
  return CIOracle{std::move(gr), [g = std::move(g)](VarSet a, VarSet b, VarSet c) {
                    return separates(g, a, b, c);
                  }};
}

namespace {

const char* kRegimeNames[] = {
    "empty",
    "undirected-incidence",
    "bidirected-incidence",
    "undirected-complement",
    "bidirected-complement",
    "complete",
    "inconsistent",
};

}  // namespace

std::string_view regime_name(RegimeTag t) { return kRegimeNames[int(t)]; }

std::optional<RegimeTag> regime_from_name(std::string_view s) {
  for (int k = 0; k < 7; ++k)
    if (s == kRegimeNames[k]) return RegimeTag(k);
  return std::nullopt;
}

GraphFamily family_for_regime(RegimeTag t) {
  switch (t) {
    case RegimeTag::Empty: return GraphFamily::Empty;
    case RegimeTag::UndirectedIncidence: return GraphFamily::UndIncidence;
    case RegimeTag::BidirectedIncidence: return GraphFamily::BidIncidence;
    case RegimeTag::UndirectedComplement: return GraphFamily::UndComplement;
    case RegimeTag::BidirectedComplement: return GraphFamily::BidComplement;
    case RegimeTag::Complete: return GraphFamily::Complete;
    case RegimeTag::Inconsistent: break;
  }
  throw std::invalid_argument("no canonical graph for an inconsistent regime");
}

namespace {

bool card_lex_less(VarSet x, VarSet y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return lex_less(x, y);
}

VarSet least_of(const std::vector<VarSet>& w) {
  return *std::min_element(w.begin(), w.end(), card_lex_less);
}

}  // namespace

Regime classify_regime(const CIOracle& oracle, int n, std::uint64_t seed) {
  const GroundSet& g = oracle.ground;
  if (g.kind() != GroundKind::Network)
    throw std::invalid_argument("the regime classifier needs a network oracle");
  if (n != g.nodes()) throw std::invalid_argument("node count does not match the oracle ground");
  if (n < 5) throw std::invalid_argument("the regime classifier needs at least five nodes");

  // spot-check exchangeability: three random queries must be permutation-stable
  std::mt19937_64 rng(seed);
  int s = g.size();
  for (int t = 0; t < 3; ++t) {
    VarSet a, b, c;
    do {
      std::uint32_t parts[3] = {0, 0, 0};
      for (int e = 0; e < s; ++e) {
        std::uint64_t r = rng() & 3;
        if (r < 3) parts[r] |= std::uint32_t{1} << e;
      }
      a = VarSet::of_bits(parts[0]);
      b = VarSet::of_bits(parts[1]);
      c = VarSet::of_bits(parts[2]);
    } while (a.empty() || b.empty());
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    for (int i = n - 1; i > 0; --i) std::swap(img[i], img[rng() % std::uint64_t(i + 1)]);
    auto perm = element_permutation(g, NodePermutation::of_map(img));
    bool base = oracle(a, b, c);
    bool mapped = oracle(apply_elements(perm, a), apply_elements(perm, b),
                         apply_elements(perm, c));
    if (base != mapped)
      throw std::invalid_argument("oracle failed the exchangeability spot-check");
  }

  auto elem = [&](int i, int j) { return g.index_of(Dyad(i, j)); };
  auto collect = [&](int x, int y) {
    VarSet sx = VarSet::single(x), sy = VarSet::single(y);
    std::uint32_t rest = (g.all() - sx - sy).bits();
    std::vector<VarSet> found;
    std::uint32_t cb = 0;
    while (true) {
      if (oracle(sx, sy, VarSet::of_bits(cb))) found.push_back(VarSet::of_bits(cb));
      if (cb == rest) break;
      cb = (cb - rest) & rest;
    }
    return found;
  };
  auto w1 = collect(elem(1, 2), elem(3, 4));
  auto w2 = collect(elem(1, 2), elem(1, 3));

  Regime r;
  if (!w1.empty()) r.disjoint_witness = least_of(w1);
  if (!w2.empty()) r.sharing_witness = least_of(w2);
  if (!w1.empty() && !w2.empty()) {
    r.tag = RegimeTag::Empty;
    return r;
  }
  if (w1.empty() && w2.empty()) {
    r.tag = RegimeTag::Complete;
    return r;
  }

  // one skeleton branch: the probe element decides undirected vs bidirected,
  // evaluated over all witnesses
  const auto& wits = w1.empty() ? w2 : w1;
  int probe = w1.empty() ? elem(4, 5) : elem(1, 3);
  std::vector<VarSet> with, without;
  for (VarSet c : wits) (c.contains(probe) ? with : without).push_back(c);
  if (!with.empty() && !without.empty()) {
    r.tag = RegimeTag::Inconsistent;
    r.conflict = std::make_pair(least_of(with), least_of(without));
    return r;
  }
  if (w1.empty())
    r.tag = without.empty() ? RegimeTag::UndirectedComplement : RegimeTag::BidirectedComplement;
  else
    r.tag = without.empty() ? RegimeTag::UndirectedIncidence : RegimeTag::BidirectedIncidence;
  return r;
}

FaithfulnessReport faithfulness_report(const IndependenceModel& m, const MixedGraph& g) {
  if (!(m.ground() == g.ground()))
    throw std::invalid_argument("model and graph must share a ground set");
  int s = g.size();
  bool pure_line = true, pure_arc = true;
  for (int u = 0; u < s; ++u)
    for (int v = u + 1; v < s; ++v) {
      if (!g.adjacent(u, v)) continue;
      if (!g.line(u, v)) pure_line = false;
      if (!g.arc(u, v)) pure_arc = false;
    }
  if (!pure_line && !pure_arc)
    throw std::invalid_argument("faithfulness needs a purely undirected or bidirected graph");
  if (s > 12) throw std::length_error("faithfulness scan is limited to 12 elements");

  // separation factorizes over vertex pairs at a fixed C in both pure kinds,
  // so one induced model answers every set-level separation query
  IndependenceModel im = induced_model(g);
  FaithfulnessReport rep{g, true, true, std::nullopt};
  std::uint32_t parts[3] = {0, 0, 0};
  std::function<bool(int)> rec = [&](int e) -> bool {
    if (e == s) {
      VarSet a = VarSet::of_bits(parts[0]), b = VarSet::of_bits(parts[1]);
      VarSet c = VarSet::of_bits(parts[2]);
      if (a.empty() || b.empty() || a.lowest() > b.lowest()) return true;
      bool sep = true;
      a.for_each([&](int u) {
        if (!sep) return;
        b.for_each([&](int v) { sep = sep && im.contains(std::min(u, v), std::max(u, v), c); });
      });
      bool held = m.holds(a, b, c);
      if (sep == held) return true;
      rep.faithful = false;
      if (!rep.failing_triple) rep.failing_triple = FaithfulnessFailure{Statement(a, b, c), sep};
      if (sep && !held) {
        rep.markovian = false;
        return false;  // both flags settled; first witness already recorded
      }
      return true;
    }
    for (int k = 0; k < 3; ++k) {
      parts[k] |= std::uint32_t{1} << e;
      if (!rec(e + 1)) return false;
      parts[k] &= ~(std::uint32_t{1} << e);
    }
    return rec(e + 1);
  };
  rec(0);
  return rep;
}

CharacterizationReport characterization_check(const IndependenceModel& m, SeparationKind kind) {
  std::array<Property, 3> props =
      kind == SeparationKind::Undirected
          ? std::array<Property, 3>{Property::Intersection, Property::SingletonTransitivity,
                                    Property::UpwardStability}
          : std::array<Property, 3>{Property::Composition, Property::SingletonTransitivity,
                                    Property::DownwardStability};
  CharacterizationReport rep;
  rep.kind = kind;
  rep.all_hold = true;
  for (int k = 0; k < 3; ++k) {
    rep.properties[k] = check_property(m, props[k]);
    rep.all_hold = rep.all_hold && rep.properties[k].holds;
  }
  return rep;
}

namespace {

// Inclusion-minimal or -maximal conditioning sets of <x,y|.>, (card, lex) sorted.
std::vector<VarSet> extremal_conditions(const IndependenceModel& m, int x, int y, bool minimal) {
  VarSet sx = VarSet::single(x), sy = VarSet::single(y);
  std::uint32_t rest = (m.ground().all() - sx - sy).bits();
  std::vector<VarSet> all;
  std::uint32_t cb = 0;
  while (true) {
    if (m.contains(x, y, VarSet::of_bits(cb))) all.push_back(VarSet::of_bits(cb));
    if (cb == rest) break;
    cb = (cb - rest) & rest;
  }
  std::sort(all.begin(), all.end(), card_lex_less);
  std::vector<VarSet> kept;
  if (minimal) {
    for (VarSet c : all) {
      bool dominated = false;
      for (VarSet k : kept) dominated = dominated || k.subset_of(c);
      if (!dominated) kept.push_back(c);
    }
  } else {
    for (auto it = all.rbegin(); it != all.rend(); ++it) {
      bool dominated = false;
      for (VarSet k : kept) dominated = dominated || it->subset_of(k);
      if (!dominated) kept.push_back(*it);
    }
    std::sort(kept.begin(), kept.end(), card_lex_less);
  }
  return kept;
}

NodePermutation two_swaps(int n, int a1, int b1, int a2, int b2) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::swap(img[a1 - 1], img[b1 - 1]);
  std::swap(img[a2 - 1], img[b2 - 1]);
  return NodePermutation::of_map(std::move(img));
}

NodePermutation one_swap(int n, int a, int b) {
  return NodePermutation::transposition(n, a, b);
}

}  // namespace

AssumptionCheck structured_assumption_check(const IndependenceModel& m, RegimeTag regime) {
  const GroundSet& g = m.ground();
  if (g.kind() != GroundKind::Network)
    throw std::invalid_argument("structured assumptions are defined on network models");
  if (regime == RegimeTag::Complete || regime == RegimeTag::Inconsistent)
    throw std::invalid_argument("no structured hypotheses for this regime");
  if (!is_semigraphoid_closed(m))
    throw std::domain_error("structured assumptions need a semigraphoid-closed model");
  if (!is_exchangeable_model(m))
    throw std::domain_error("structured assumptions need an exchangeable model");
  int n = g.nodes();

  AssumptionCheck out;
  out.regime = regime;
  auto elem = [&](int i, int j) { return g.index_of(Dyad(i, j)); };
  auto add = [&](std::string name, bool holds, std::string detail) {
    out.hypotheses.push_back(HypothesisReport{std::move(name), holds, std::move(detail)});
  };

  if (regime == RegimeTag::Empty) {
    if (n < 4) throw std::invalid_argument("the empty-regime hypotheses need four nodes");
    auto either_form = [&](int x, int y) {
      VarSet full = g.all() - VarSet::single(x) - VarSet::single(y);
      return m.contains(x, y, VarSet{}) || m.contains(x, y, full);
    };
    bool h1 = either_form(elem(1, 2), elem(3, 4));
    bool h2 = either_form(elem(1, 2), elem(1, 3));
    add("disjoint-pair-statement", h1,
        h1 ? "" : "neither <1-2,3-4|{}> nor its fully-conditioned form is present");
    add("sharing-pair-statement", h2,
        h2 ? "" : "neither <1-2,1-3|{}> nor its fully-conditioned form is present");
    out.all_hold = h1 && h2;
    return out;
  }

  bool incidence = regime == RegimeTag::UndirectedIncidence ||
                   regime == RegimeTag::BidirectedIncidence;
  bool minimal = regime == RegimeTag::UndirectedIncidence ||
                 regime == RegimeTag::UndirectedComplement;
  if (incidence && n < 4)
    throw std::invalid_argument("the incidence-regime hypotheses need four nodes");
  if (!incidence && n < 3)
    throw std::invalid_argument("the complement-regime hypotheses need three nodes");

  int x = elem(1, 2);
  int y = incidence ? elem(3, 4) : elem(1, 3);
  VarSet shape = incidence ? pairwise_separator(g, Dyad(1, 2), Dyad(3, 4))
                           : far_separator3(g, 1, 2, 3);
  std::vector<VarSet> conds = extremal_conditions(m, x, y, minimal);

  bool shape_ok = true;
  std::string shape_detail;
  for (VarSet c : conds) {
    bool ok = minimal ? shape.subset_of(c) : shape.disjoint(c);
    if (!ok) {
      shape_ok = false;
      shape_detail = (minimal ? "set does not contain " : "set meets ") + g.set_name(shape) +
                     ": " + g.set_name(c);
      break;
    }
  }
  add(minimal ? "named-separator-containment" : "named-separator-disjointness", shape_ok,
      shape_detail);

  bool swap_ok = true;
  std::string swap_detail;
  for (VarSet c : conds) {
    bool some_role = false;
    std::string first_fail;
    int roles = 2;
    for (int role = 0; role < roles && !some_role; ++role) {
      bool role_ok = true;
      if (incidence) {
        int k = role == 0 ? 3 : 1, l = role == 0 ? 4 : 2;
        for (int mm = 1; mm <= n && role_ok; ++mm) {
          if (mm <= 4) continue;  // fresh nodes only
          for (int hh = 1; hh <= n && role_ok; ++hh) {
            if (hh <= 4 || hh == mm) continue;
            bool in_c = c.contains(elem(mm, hh));
            if (minimal ? in_c : !in_c) continue;  // only the stated dyads trigger a swap
            VarSet image = act(g, two_swaps(n, k, mm, l, hh), c);
            if (image != c) {
              role_ok = false;
              if (first_fail.empty())
                first_fail = "C=" + g.set_name(c) + " moves under the (" + std::to_string(k) +
                             " " + std::to_string(mm) + ")(" + std::to_string(l) + " " +
                             std::to_string(hh) + ") node swap";
            }
          }
        }
      } else {
        int k = role == 0 ? 3 : 2;
        for (int mm = 1; mm <= n && role_ok; ++mm) {
          if (mm <= 3) continue;  // fresh nodes only
          bool has_l = false;
          for (int ll = 1; ll <= n && !has_l; ++ll) {
            if (ll == mm) continue;
            bool in_c = c.contains(elem(ll, mm));
            has_l = minimal ? !in_c : in_c;
          }
          if (!has_l) continue;
          VarSet image = act(g, one_swap(n, k, mm), c);
          if (image != c) {
            role_ok = false;
            if (first_fail.empty())
              first_fail = "C=" + g.set_name(c) + " moves under the (" + std::to_string(k) +
                           " " + std::to_string(mm) + ") node swap";
          }
        }
      }
      some_role = role_ok;
    }
    if (!some_role) {
      swap_ok = false;
      swap_detail = first_fail;
      break;
    }
  }
  add("swap-invariance", swap_ok, swap_detail);

  out.all_hold = shape_ok && swap_ok;
  return out;
}

}  // namespace exchci
