#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include <exchci/exchange.hpp>
#include <exchci/gaussian.hpp>
#include <exchci/graph.hpp>
#include <exchci/model.hpp>
#include <exchci/table.hpp>
#include <exchci/verify.hpp>
#include "checks_internal.hpp"

namespace exchci::checks {
namespace {

std::string statement_text(const GroundSet& g, VarSet a, VarSet b, VarSet c) {
  return "<" + g.set_name(a) + "," + g.set_name(b) + "|" + g.set_name(c) + ">";
}

bool property_verdict(const IndependenceModel& m, Property p) {
  return check_property(m, p).holds;
}

// --- singleton-transitivity is automatic under exchangeability ------------

CheckOutcome check_prop4(const CheckParams& params) {
  CheckOutcome out;
  std::mt19937_64 rng(params.seed);
  int models = 0;
  for (int k = 4; k <= std::min(params.nmax, 5); ++k) {
    const GroundSet g = GroundSet::vector_of(k);
    for (int i = 0; i < 12; ++i) {
      auto m = random_exchangeable_model(g, rng, 1 + rand_below(rng, 3));
      ++models;
      auto report = check_property(m, Property::SingletonTransitivity);
      if (!report.holds) {
        out.fail("exchangeable closed model over " + str(k) +
                 " variables violates singleton-transitivity");
      }
    }
  }
  out.note(str(models) + " exchangeable closed models checked");
  return out;
}

// --- the skeleton of an exchangeable model is empty or complete -----------

CheckOutcome check_prop5(const CheckParams& params) {
  CheckOutcome out;
  std::mt19937_64 rng(params.seed);
  int models = 0, empty = 0;
  for (int k = 4; k <= std::min(params.nmax, 5); ++k) {
    const GroundSet g = GroundSet::vector_of(k);
    const int complete_edges = k * (k - 1) / 2;
    for (int i = 0; i < 12; ++i) {
      auto m = random_exchangeable_model(g, rng, 1 + rand_below(rng, 3));
      ++models;
      MixedGraph sk = skeleton_of_model(m);
      if (m.size() > 0) {
        ++empty;
        out.expect(sk.edge_count() == 0,
                   "nonempty exchangeable model must have an empty skeleton");
      } else {
        out.expect(sk.edge_count() == complete_edges,
                   "statement-free model must have a complete skeleton");
      }
    }
  }
  out.note(str(models) + " models, " + str(empty) + " with an empty skeleton");
  return out;
}

// --- upward <=> composition and downward <=> intersection -----------------

CheckOutcome check_prop3(const CheckParams& params) {
  CheckOutcome out;
  std::mt19937_64 rng(params.seed);
  int models = 0;
  for (int k = 4; k <= std::min(params.nmax, 5); ++k) {
    const GroundSet g = GroundSet::vector_of(k);
    for (int i = 0; i < 10; ++i) {
      auto m = random_exchangeable_model(g, rng, 1 + rand_below(rng, 3));
      ++models;
      out.expect(property_verdict(m, Property::UpwardStability) ==
                     property_verdict(m, Property::Composition),
                 "upward-stability and composition verdicts differ on an "
                 "exchangeable closed model");
      out.expect(property_verdict(m, Property::DownwardStability) ==
                     property_verdict(m, Property::Intersection),
                 "downward-stability and intersection verdicts differ on an "
                 "exchangeable closed model");
      auto up = closure_with(m, {Property::UpwardStability});
      out.expect(property_verdict(up, Property::Composition),
                 "upward-stability closure of an exchangeable model fails composition");
      auto comp = closure_with(m, {Property::Composition});
      out.expect(property_verdict(comp, Property::UpwardStability),
                 "composition closure of an exchangeable model fails upward-stability");
      auto down = closure_with(m, {Property::DownwardStability});
      out.expect(property_verdict(down, Property::Intersection),
                 "downward-stability closure of an exchangeable model fails intersection");
      auto inter = closure_with(m, {Property::Intersection});
      out.expect(property_verdict(inter, Property::DownwardStability),
                 "intersection closure of an exchangeable model fails downward-stability");
    }
  }
  out.note(str(models) + " models, both equivalences plus four closure directions");
  return out;
}

// --- the four-variable worked example --------------------------------------

CheckOutcome check_example1(const CheckParams&) {
  CheckOutcome out;
  const GroundSet g = GroundSet::vector_of(4);
  IndependenceModel seed(g);
  seed.insert(0, 1, VarSet::single(2));  // 1 _||_ 2 | {3}
  auto orb = orbit_closure(seed);
  out.expect(orb.size() == 12, "orbit of <1,2|{3}> must hold 12 statements, got " +
                                   str(orb.size()));
  out.expect(semigraphoid_closure(orb) == orb,
             "semi-graphoid closure must add nothing to the orbit");
  out.expect(is_exchangeable_model(orb), "orbit closure must be exchangeable");

  auto inter = closure_with(orb, {Property::Intersection});
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) {
      out.expect(inter.contains(u, v, VarSet{}),
                 "intersection closure must contain " +
                     statement_text(g, VarSet::single(u), VarSet::single(v), VarSet{}));
    }
  }
  auto comp = closure_with(orb, {Property::Composition});
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) {
      VarSet rest = g.all().without(u).without(v);
      out.expect(comp.contains(u, v, rest),
                 "composition closure must contain " +
                     statement_text(g, VarSet::single(u), VarSet::single(v), rest));
    }
  }
  out.note("orbit size 12; marginal and fully-conditioned families derived");
  return out;
}

// --- equicorrelated Gaussian: all-or-nothing conditional independence -----

CheckOutcome check_gaussian(const CheckParams&) {
  CheckOutcome out;
  const int n = 5;
  const GroundSet g = GroundSet::vector_of(n);
  const double rhos[] = {-0.24, -0.1, 0.0, 0.1, 0.3, 0.5, 0.9};
  int queries = 0;
  for (double rho : rhos) {
    Equicorrelation model(n, rho);
    auto oracle = oracle_from_gaussian(model);
    const bool expect_ci = rho == 0.0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        VarSet rest = g.all().without(u).without(v);
        const std::uint32_t rb = rest.bits();
        for (std::uint32_t sub = 0;; sub = (sub - rb) & rb) {
          VarSet c = VarSet::of_bits(sub);
          ++queries;
          auto pc = equicorrelation_ci(model, u + 1, v + 1, c);
          const int m = c.size();
          const double closed = rho * (1.0 - rho) / (1.0 + (m - 1) * rho);
          out.expect(std::fabs(pc.value - closed) <= 1e-12,
                     "partial covariance drifts from the closed form at rho=" + str(rho));
          out.expect(pc.independent == expect_ci,
                     "independence verdict wrong at rho=" + str(rho) +
                         " C=" + g.set_name(c));
          out.expect(oracle(VarSet::single(u), VarSet::single(v), c) == expect_ci,
                     "oracle verdict wrong at rho=" + str(rho));
          if (sub == rb) break;
        }
      }
    }
  }
  for (double bad : {-0.25, 1.0, -0.9}) {
    bool threw = false;
    try {
      Equicorrelation model(n, bad);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    out.expect(threw, "rho=" + str(bad) + " must be rejected at n=5");
  }
  out.note(str(queries) + " grid queries, verdict is all-CI iff rho=0");
  return out;
}

// --- reduction semantics of holds() against a naive general closure -------

// Independent oracle: a literal fixpoint of the four semi-graphoid axioms
// over general triples, with symmetry folded into the key.
std::uint64_t triple_key(VarSet a, VarSet b, VarSet c) {
  std::uint32_t x = a.bits(), y = b.bits();
  if (y < x) std::swap(x, y);
  return (std::uint64_t{x} << 40) | (std::uint64_t{y} << 20) | c.bits();
}

std::set<std::uint64_t> naive_general_closure(const IndependenceModel& m) {
  std::set<std::uint64_t> found;
  std::vector<std::array<std::uint32_t, 3>> items;
  auto add = [&](VarSet a, VarSet b, VarSet c) {
    if (found.insert(triple_key(a, b, c)).second) {
      std::uint32_t x = a.bits(), y = b.bits();
      if (y < x) std::swap(x, y);
      items.push_back({x, y, c.bits()});
      return true;
    }
    return false;
  };
  m.for_each_elementary([&](int u, int v, VarSet c) {
    add(VarSet::single(u), VarSet::single(v), c);
  });

  bool changed = true;
  while (changed) {
    changed = false;
    // one-statement rules: decomposition and weak union on either side
    for (std::size_t k = 0; k < items.size(); ++k) {
      auto [xa, xb, xc] = items[k];
      for (int side = 0; side < 2; ++side) {
        const std::uint32_t keep = side == 0 ? xa : xb;
        const std::uint32_t shrink = side == 0 ? xb : xa;
        for (std::uint32_t sub = (shrink - 1) & shrink; sub;
             sub = (sub - 1) & shrink) {
          // sub is a proper nonempty subset of the shrinking side
          changed |= add(VarSet::of_bits(keep), VarSet::of_bits(sub),
                         VarSet::of_bits(xc));
          changed |= add(VarSet::of_bits(keep), VarSet::of_bits(sub),
                         VarSet::of_bits(xc | (shrink & ~sub)));
        }
      }
    }
    // contraction: <X,Y|C u D> and <X,D|C> give <X, Y u D | C>
    for (std::size_t i = 0; i < items.size(); ++i) {
      for (std::size_t j = 0; j < items.size(); ++j) {
        for (int oi = 0; oi < 2; ++oi) {
          for (int oj = 0; oj < 2; ++oj) {
            const std::uint32_t x1 = oi == 0 ? items[i][0] : items[i][1];
            const std::uint32_t y1 = oi == 0 ? items[i][1] : items[i][0];
            const std::uint32_t c1 = items[i][2];
            const std::uint32_t x2 = oj == 0 ? items[j][0] : items[j][1];
            const std::uint32_t d2 = oj == 0 ? items[j][1] : items[j][0];
            const std::uint32_t c2 = items[j][2];
            if (x1 != x2) continue;
            if ((d2 & c1) != d2) continue;      // D must sit inside C u D
            if ((c1 & ~d2) != c2) continue;     // and strip back to C
            changed |= add(VarSet::of_bits(x1), VarSet::of_bits(y1 | d2),
                           VarSet::of_bits(c2));
          }
        }
      }
    }
  }
  return found;
}

void compare_closures(CheckOutcome& out, const GroundSet& g,
                      const IndependenceModel& seed) {
  auto closed = semigraphoid_closure(seed);
  auto naive = naive_general_closure(seed);
  const std::uint32_t full = g.all().bits();
  for (std::uint32_t ab = 1; ab <= full; ++ab) {
    if ((ab & full) != ab) continue;
    // split ab into the two sides: enumerate nonempty a with lowest bit of ab
    const std::uint32_t lowest = ab & (0u - ab);
    for (std::uint32_t a = ab; a; a = (a - 1) & ab) {
      if (!(a & lowest)) continue;  // fix the lowest element on side a
      const std::uint32_t b = ab & ~a;
      if (!b) continue;
      const std::uint32_t rest = full & ~ab;
      for (std::uint32_t c = 0;; c = (c - rest) & rest) {
        const bool lhs = closed.holds(VarSet::of_bits(a), VarSet::of_bits(b),
                                      VarSet::of_bits(c));
        const bool rhs = naive.count(triple_key(VarSet::of_bits(a),
                                                VarSet::of_bits(b),
                                                VarSet::of_bits(c))) > 0;
        if (lhs != rhs) {
          out.fail("holds() disagrees with the naive closure on " +
                   statement_text(g, VarSet::of_bits(a), VarSet::of_bits(b),
                                  VarSet::of_bits(c)));
          return;
        }
        if (c == rest) break;
      }
    }
  }
}

CheckOutcome check_holds_vs_naive(const CheckParams& params) {
  CheckOutcome out;
  // exhaustive at |V| = 3: all subsets of the six elementary statements
  const GroundSet g3 = GroundSet::vector_of(3);
  std::vector<std::array<int, 2>> pairs3 = {{0, 1}, {0, 2}, {1, 2}};
  for (int mask = 0; mask < 64; ++mask) {
    IndependenceModel m(g3);
    int bit = 0;
    for (auto [u, v] : pairs3) {
      const int w = 3 - u - v;
      if (mask >> bit & 1) m.insert(u, v, VarSet{});
      ++bit;
      if (mask >> bit & 1) m.insert(u, v, VarSet::single(w));
      ++bit;
    }
    compare_closures(out, g3, m);
    if (!out.pass) return out;
  }
  // seeded at |V| = 4
  std::mt19937_64 rng(params.seed);
  const GroundSet g4 = GroundSet::vector_of(4);
  for (int i = 0; i < 100; ++i) {
    auto m = random_elementary_model(g4, rng, 1 + rand_below(rng, 4));
    compare_closures(out, g4, m);
    if (!out.pass) return out;
  }
  out.note("64 exhaustive 3-variable models plus 100 seeded 4-variable models");
  return out;
}

// --- duality carries each stability property to its partner ---------------

CheckOutcome check_lemma_dual(const CheckParams& params) {
  CheckOutcome out;
  std::mt19937_64 rng(params.seed);
  const int kmax = std::min(params.nmax, 5);
  int models = 0;
  for (int i = 0; i < 200; ++i) {
    const int k = 3 + (kmax > 3 ? rand_below(rng, kmax - 2) : 0);
    const GroundSet g = GroundSet::vector_of(k);
    auto m = random_closed_model(g, rng, 1 + rand_below(rng, 4));
    ++models;
    auto d = dual(m);
    out.expect(is_semigraphoid_closed(d),
               "dual of a semi-graphoid-closed model must be closed");
    out.expect(dual(d) == m, "duality must be an involution");
    out.expect(property_verdict(m, Property::Intersection) ==
                   property_verdict(d, Property::Composition),
               "intersection(J) must match composition(dual J)");
    out.expect(property_verdict(m, Property::Composition) ==
                   property_verdict(d, Property::Intersection),
               "composition(J) must match intersection(dual J)");
    out.expect(property_verdict(m, Property::SingletonTransitivity) ==
                   property_verdict(d, Property::SingletonTransitivity),
               "singleton-transitivity must be self-dual");
    out.expect(property_verdict(m, Property::UpwardStability) ==
                   property_verdict(d, Property::DownwardStability),
               "upward-stability(J) must match downward-stability(dual J)");
    out.expect(property_verdict(m, Property::DownwardStability) ==
                   property_verdict(d, Property::UpwardStability),
               "downward-stability(J) must match upward-stability(dual J)");
    if (!out.pass) return out;
  }
  out.note(str(models) + " seeded closed models over 3..=" + str(kmax) + " variables");
  return out;
}

// --- same-skeleton undirected/bidirected graphs induce dual models --------

CheckOutcome check_lemma5_random(const CheckParams& params) {
  CheckOutcome out;
  std::mt19937_64 rng(params.seed);
  const int kmax = std::min(params.nmax, 5);
  int graphs = 0;
  for (int i = 0; i < 100; ++i) {
    const int k = 3 + (kmax > 3 ? rand_below(rng, kmax - 2) : 0);
    const GroundSet g = GroundSet::vector_of(k);
    MixedGraph lines(g), arcs(g);
    for (int u = 0; u < k; ++u) {
      for (int v = u + 1; v < k; ++v) {
        if (rng() & 1u) {
          lines.set_line(u, v);
          arcs.set_arc(u, v);
        }
      }
    }
    ++graphs;
    if (!(induced_model(arcs) == dual(induced_model(lines)))) {
      out.fail("bidirected model must be the dual of the undirected model on a shared skeleton (" +
               str(k) + " vertices, " + str(lines.edge_count()) + " edges)");
      return out;
    }
  }
  out.note(str(graphs) + " random shared skeletons up to " + str(kmax) + " vertices");
  return out;
}

// --- exchangeability survives marginalization and conditioning ------------

CheckOutcome check_prop3n_tables(const CheckParams& params) {
  CheckOutcome out;
  std::mt19937_64 rng(params.seed);
  int tables = 0;
  for (int n = 3; n <= std::min(params.nmax, 4); ++n) {
    const GroundSet g = GroundSet::vector_of(n);
    for (int i = 0; i < 10; ++i) {
      // weight by population count: exchangeable by construction
      std::vector<double> level(n + 1);
      for (auto& w : level) w = 1.0 + rand_below(rng, 1000) / 100.0;
      std::vector<double> probs(std::size_t{1} << n);
      double total = 0.0;
      for (std::size_t s = 0; s < probs.size(); ++s) {
        probs[s] = level[VarSet::of_bits(static_cast<std::uint32_t>(s)).size()];
        total += probs[s];
      }
      for (auto& p : probs) p /= total;
      JointTable t = JointTable::full(g, probs);
      ++tables;
      out.expect(is_exchangeable_table(t), "constructed table must be exchangeable");

      std::uint32_t keep_bits = rand_mask(rng, g.all());
      if (keep_bits == 0) keep_bits = 1;
      JointTable tm = marginalize(t, VarSet::of_bits(keep_bits));
      out.expect(is_exchangeable_table(tm),
                 "marginal of an exchangeable vector must stay exchangeable");

      std::uint32_t cond_bits = rand_mask(rng, g.all());
      if (cond_bits == g.all().bits()) cond_bits &= ~1u;
      if (cond_bits != 0) {
        VarSet c = VarSet::of_bits(cond_bits);
        VarSet values = VarSet::of_bits(rand_mask(rng, c));
        JointTable tc = condition(t, c, values);
        out.expect(is_exchangeable_table(tc),
                   "conditional of an exchangeable vector must stay exchangeable");
        out.expect(is_exchangeable_table(compact(tc)),
                   "compacting must preserve exchangeability");
      }
    }
  }
  out.note(str(tables) + " level-weighted tables, marginals and conditionals");
  return out;
}

}  // namespace

void append_vector_checks(std::vector<VerifyCheck>& out) {
  out.push_back({"prop4", "vector", 4, check_prop4});
  out.push_back({"prop5", "vector", 4, check_prop5});
  out.push_back({"prop3", "vector", 4, check_prop3});
  out.push_back({"example1", "vector", 4, check_example1});
  out.push_back({"gaussian-corollary", "vector", 5, check_gaussian});
  out.push_back({"holds-vs-naive", "vector", 4, check_holds_vs_naive});
  out.push_back({"lemma-dual-random", "vector", 3, check_lemma_dual});
  out.push_back({"lemma5-random", "vector", 3, check_lemma5_random});
  out.push_back({"prop3n-tables", "vector", 3, check_prop3n_tables});
}

}  // namespace exchci::checks
