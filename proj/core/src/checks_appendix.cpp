#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include <exchci/exchange.hpp>
#include <exchci/graph.hpp>
#include <exchci/model.hpp>
#include <exchci/verify.hpp>
#include "checks_internal.hpp"

namespace exchci::checks {
namespace {

// ---------------------------------------------------------------------------
// Independent separation oracles.

// Pure undirected: separated iff every path hits C.
bool und_separated(const MixedGraph& g, int a, int b, VarSet c) {
  const int s = g.size();
  std::vector<bool> seen(s, false);
  std::vector<int> queue{a};
  seen[a] = true;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    if (v == b) return false;
    VarSet nb = g.neighbors(v);
    for (int u = 0; u < s; ++u) {
      if (!nb.contains(u) || seen[u]) continue;
      if (c.contains(u) && u != b) continue;
      seen[u] = true;
      queue.push_back(u);
    }
  }
  return true;
}

// Pure bidirected: separated iff every path leaves {a,b} u C.
bool bid_separated(const MixedGraph& g, int a, int b, VarSet c) {
  const int s = g.size();
  std::vector<bool> seen(s, false);
  std::vector<int> queue{a};
  seen[a] = true;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    if (v == b) return false;
    VarSet nb = g.neighbors(v);
    for (int u = 0; u < s; ++u) {
      if (!nb.contains(u) || seen[u]) continue;
      if (u != b && !c.contains(u)) continue;
      seen[u] = true;
      queue.push_back(u);
    }
  }
  return true;
}

// Literal walk enumeration for general mixed graphs: grow walks edge by edge,
// validating each section as soon as it is complete, and accept a walk whose
// sections all conform.  A connecting walk, if any exists, can be chosen with
// at most 4|V| - 1 edges, so the depth cap loses nothing.
struct WalkSearch {
  const MixedGraph& g;
  VarSet c;
  int target;
  long budget;
  bool found = false;
  bool exhausted = false;

  // section state: entry-head flag and whether the running section touches C
  void extend(int v, bool entry_head, bool touched, int depth) {
    if (found || exhausted) return;
    if (--budget < 0) {
      exhausted = true;
      return;
    }
    // closing the walk at v: the final section must be a non-collider, i.e.
    // disjoint from C
    if (v == target && !touched) found = true;
    if (depth == 0) return;
    const int s = g.size();
    for (int u = 0; u < s; ++u) {
      if (u == v || !g.adjacent(v, u)) continue;
      if (g.line(v, u)) {
        // the section keeps growing
        extend(u, entry_head, touched || c.contains(u), depth - 1);
      } else {
        // the section ends here: collider iff heads on both boundary edges
        const bool collider = entry_head && g.head_at(u, v);
        if (collider != touched) continue;  // completed section violates C
        extend(u, g.head_at(v, u), c.contains(u), depth - 1);
      }
      if (found || exhausted) return;
    }
  }

  bool run(int a) {
    extend(a, false, c.contains(a), 4 * g.size() - 1);
    return found;
  }
};

CheckOutcome check_separation_oracles(const CheckParams& params) {
  CheckOutcome out;
  std::mt19937_64 rng(params.seed);

  // pure undirected and pure bidirected graphs against path criteria
  int pure_queries = 0;
  for (int i = 0; i < 40 && out.pass; ++i) {
    const int k = 3 + rand_below(rng, std::max(1, std::min(params.nmax, 5) - 2));
    const GroundSet gr = GroundSet::vector_of(k);
    MixedGraph lines(gr), arcs(gr);
    for (int u = 0; u < k; ++u) {
      for (int v = u + 1; v < k; ++v) {
        if (rng() & 1u) {
          lines.set_line(u, v);
          arcs.set_arc(u, v);
        }
      }
    }
    for (int u = 0; u < k && out.pass; ++u) {
      for (int v = u + 1; v < k && out.pass; ++v) {
        VarSet rest = gr.all().without(u).without(v);
        const std::uint32_t rb = rest.bits();
        for (std::uint32_t sub = 0;; sub = (sub - rb) & rb) {
          VarSet c = VarSet::of_bits(sub);
          ++pure_queries;
          out.expect(separates(lines, VarSet::single(u), VarSet::single(v), c) ==
                         und_separated(lines, u, v, c),
                     "undirected separation disagrees with the path criterion");
          out.expect(separates(arcs, VarSet::single(u), VarSet::single(v), c) ==
                         bid_separated(arcs, u, v, c),
                     "bidirected separation disagrees with the path criterion");
          if (sub == rb || !out.pass) break;
        }
      }
    }
  }

  // exhaustive mixed graphs on three vertices against literal walk search
  int mixed_queries = 0;
  const GroundSet g3 = GroundSet::vector_of(3);
  for (int code = 0; code < 125 && out.pass; ++code) {
    MixedGraph g(g3);
    int rem = code;
    for (auto [u, v] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
      switch (rem % 5) {
        case 1: g.set_line(u, v); break;
        case 2: g.set_arrow(u, v); break;
        case 3: g.set_arrow(v, u); break;
        case 4: g.set_arc(u, v); break;
        default: break;
      }
      rem /= 5;
    }
    for (int u = 0; u < 3 && out.pass; ++u) {
      for (int v = u + 1; v < 3 && out.pass; ++v) {
        const int w = 3 - u - v;
        for (VarSet c : {VarSet{}, VarSet::single(w)}) {
          WalkSearch search{g, c, v, 1'000'000};
          const bool connected = search.run(u);
          ++mixed_queries;
          if (search.exhausted) {
            out.fail("walk-search budget exhausted on a 3-vertex graph");
            break;
          }
          out.expect(separates(g, VarSet::single(u), VarSet::single(v), c) ==
                         !connected,
                     "mixed separation disagrees with literal walk enumeration "
                     "(3-vertex graph code " + str(code) + ")");
          if (!out.pass) break;
        }
      }
    }
  }

  // seeded mixed graphs on four vertices
  for (int i = 0; i < 25 && out.pass; ++i) {
    const GroundSet g4 = GroundSet::vector_of(4);
    MixedGraph g = random_mixed_graph(g4, rng, 0.55);
    for (int u = 0; u < 4 && out.pass; ++u) {
      for (int v = u + 1; v < 4 && out.pass; ++v) {
        VarSet rest = g4.all().without(u).without(v);
        const std::uint32_t rb = rest.bits();
        for (std::uint32_t sub = 0;; sub = (sub - rb) & rb) {
          VarSet c = VarSet::of_bits(sub);
          WalkSearch search{g, c, v, 4'000'000};
          const bool connected = search.run(u);
          ++mixed_queries;
          if (search.exhausted) {
            out.fail("walk-search budget exhausted on a 4-vertex graph");
            break;
          }
          out.expect(separates(g, VarSet::single(u), VarSet::single(v), c) ==
                         !connected,
                     "mixed separation disagrees with literal walk enumeration "
                     "(4-vertex seeded graph)");
          if (sub == rb || !out.pass) break;
        }
      }
    }
  }
  out.note(str(pure_queries) + " pure-graph queries, " + str(mixed_queries) +
           " literal walk queries");
  return out;
}

// ---------------------------------------------------------------------------
// Maximal graphs without unshielded collider trisections collapse to their
// skeleton.  Maximality matters: in 1 <-> 2 <-> 3 <- 4 with shield edges 1~3
// and 2~4, both collider sections are shielded, yet conditioning on {2,3}
// (plus any other common neighbours) opens the double-collider walk while
// every skeleton path is blocked, so the pair (1,4) has no separator at all.

CheckOutcome check_lemma3nn(const CheckParams& params) {
  CheckOutcome out;
  std::mt19937_64 rng(params.seed);
  int graphs = 0, collapsible = 0;
  const int kmax = std::min(params.nmax, 5);
  for (int i = 0; i < 100; ++i) {
    const int k = 3 + (kmax > 3 ? rand_below(rng, kmax - 2) : 0);
    const GroundSet gr = GroundSet::vector_of(k);
    MixedGraph g = random_mixed_graph(gr, rng, 0.5);
    ++graphs;
    if (!unshielded_collider_trisections(g).empty()) continue;
    if (!is_maximal(g)) continue;
    ++collapsible;
    if (!markov_equivalent(g, skeleton(g))) {
      out.fail("a maximal graph without unshielded collider trisections must match its skeleton (" +
               str(k) + " vertices, " + str(g.edge_count()) + " edges)");
      return out;
    }
  }
  out.expect(collapsible > 0, "the sample must contain collapsible graphs");
  out.note(str(collapsible) + " of " + str(graphs) +
           " sampled graphs were maximal and trisection-free");
  return out;
}

// ---------------------------------------------------------------------------
// Markov-equivalent maximal graphs share their trisection endpoint pairs.

std::vector<std::pair<int, int>> endpoint_pairs(const MixedGraph& g) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& t : unshielded_collider_trisections(g)) {
    pairs.emplace_back(t.left, t.right);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

CheckOutcome check_lemma3n(const CheckParams& params) {
  CheckOutcome out;
  std::mt19937_64 rng(params.seed);
  std::map<std::vector<Statement>, std::vector<MixedGraph>> buckets;

  // every mixed graph on three vertices, then a seeded sample on four and five
  const GroundSet g3 = GroundSet::vector_of(3);
  for (int code = 0; code < 125; ++code) {
    MixedGraph g(g3);
    int rem = code;
    for (auto [u, v] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
      switch (rem % 5) {
        case 1: g.set_line(u, v); break;
        case 2: g.set_arrow(u, v); break;
        case 3: g.set_arrow(v, u); break;
        case 4: g.set_arc(u, v); break;
        default: break;
      }
      rem /= 5;
    }
    if (is_maximal(g)) buckets[induced_model(g).statements()].push_back(g);
  }
  const int kmax = std::min(params.nmax, 5);
  for (int i = 0; i < 100; ++i) {
    const int k = 4 + (kmax > 4 ? rand_below(rng, kmax - 3) : 0);
    const GroundSet gr = GroundSet::vector_of(k);
    MixedGraph g = random_mixed_graph(gr, rng, 0.5);
    if (is_maximal(g)) {
      // keep buckets keyed by ground size as well: statements embed it via keys,
      // but two grounds of equal size could collide, which is fine — equal
      // statement sets over equal-sized grounds are Markov equivalent
      buckets[induced_model(g).statements()].push_back(g);
    }
  }

  long pairs_compared = 0;
  for (const auto& [key, graphs] : buckets) {
    if (graphs.size() < 2) continue;
    auto reference = endpoint_pairs(graphs.front());
    for (std::size_t i = 1; i < graphs.size(); ++i) {
      if (graphs[i].size() != graphs.front().size()) continue;
      ++pairs_compared;
      if (endpoint_pairs(graphs[i]) != reference) {
        out.fail("Markov-equivalent maximal graphs with different trisection endpoints (" +
                 str(graphs.front().size()) + " vertices)");
        return out;
      }
    }
  }
  out.expect(pairs_compared > 0, "the sample must contain Markov-equivalent maximal pairs");
  out.note(str(pairs_compared) + " equivalent maximal pairs compared");
  return out;
}

// ---------------------------------------------------------------------------
// Relabeling commutes with the induced model.

CheckOutcome check_lemma3(const CheckParams& params) {
  CheckOutcome out;
  std::mt19937_64 rng(params.seed);
  const int kmax = std::min(params.nmax, 5);
  int graphs = 0;
  for (int i = 0; i < 100; ++i) {
    const int k = 3 + (kmax > 3 ? rand_below(rng, kmax - 2) : 0);
    const GroundSet gr = GroundSet::vector_of(k);
    MixedGraph g = random_mixed_graph(gr, rng, 0.5);
    std::vector<int> image(k);
    std::iota(image.begin(), image.end(), 1);
    for (int j = k - 1; j > 0; --j) std::swap(image[j], image[rand_below(rng, j + 1)]);
    auto perm = element_permutation(gr, NodePermutation::of_map(image));
    ++graphs;
    if (!(induced_model(permuted_graph(g, perm)) ==
          permuted_model(induced_model(g), perm))) {
      out.fail("relabeling a graph must permute its model (" + str(k) + " vertices)");
      return out;
    }
  }

  // network grounds: node permutations act on dyads
  const GroundSet g4 = GroundSet::network_on(4);
  for (int i = 0; i < 20; ++i) {
    MixedGraph g = random_mixed_graph(g4, rng, 0.4);
    std::vector<int> image{1, 2, 3, 4};
    for (int j = 3; j > 0; --j) std::swap(image[j], image[rand_below(rng, j + 1)]);
    auto perm = element_permutation(g4, NodePermutation::of_map(image));
    ++graphs;
    if (!(induced_model(permuted_graph(g, perm)) ==
          permuted_model(induced_model(g), perm))) {
      out.fail("relabeling nodes must permute the dyad model");
      return out;
    }
  }

  // exchangeable family graphs are Markov equivalent to their relabelings
  for (GraphFamily f : {GraphFamily::Empty, GraphFamily::UndIncidence,
                        GraphFamily::BidIncidence, GraphFamily::UndComplement,
                        GraphFamily::BidComplement, GraphFamily::Complete}) {
    MixedGraph fam = family_graph(f, 4);
    auto perm = element_permutation(g4, NodePermutation::rotation(4));
    out.expect(markov_equivalent(permuted_graph(fam, perm), fam),
               std::string("relabeled family ") + std::string(family_name(f)) +
                   " must stay Markov equivalent");
  }
  out.note(str(graphs) + " relabeled graphs");
  return out;
}

// ---------------------------------------------------------------------------
// Exchangeable graph models collapse onto the six families.

CheckOutcome check_thm2_families(const CheckParams& params) {
  CheckOutcome out;
  std::mt19937_64 rng(params.seed);
  const int n = 4;
  const GroundSet gr = GroundSet::network_on(n);
  const GraphFamily families[] = {GraphFamily::Empty, GraphFamily::UndIncidence,
                                  GraphFamily::BidIncidence, GraphFamily::UndComplement,
                                  GraphFamily::BidComplement, GraphFamily::Complete};
  for (GraphFamily f : families) {
    out.expect(is_exchangeable_model(induced_model(family_graph(f, n))),
               std::string("family ") + std::string(family_name(f)) +
                   " must induce an exchangeable model");
  }
  // Purely random graphs are almost never node-symmetric, so mix in graphs
  // built per dyad-pair orbit (always exchangeable) and families with one
  // mark flipped (exchangeable only when the flip is separation-invisible).
  int sampled = 0, exchangeable = 0;
  for (int i = 0; i < 60; ++i) {
    MixedGraph g(gr);
    switch (i % 3) {
      case 0:
        g = random_mixed_graph(gr, rng, 0.4);
        break;
      case 1: {
        const int share_kind = rand_below(rng, 3);
        const int apart_kind = rand_below(rng, 3);
        for (int u = 0; u < gr.size(); ++u) {
          for (int v = u + 1; v < gr.size(); ++v) {
            const int kind = gr.dyad_at(u).meets(gr.dyad_at(v)) ? share_kind : apart_kind;
            if (kind == 1) g.set_line(u, v);
            if (kind == 2) g.set_arc(u, v);
          }
        }
        break;
      }
      default: {
        g = family_graph(families[rand_below(rng, 6)], n);
        const int u = rand_below(rng, gr.size());
        const int v = rand_below(rng, gr.size());
        if (u != v && g.adjacent(u, v)) {
          if (g.line(u, v)) g.set_arc(u, v); else g.set_line(u, v);
        }
        break;
      }
    }
    ++sampled;
    if (!is_exchangeable_model(induced_model(g))) continue;
    ++exchangeable;
    bool matched = false;
    for (GraphFamily f : families) {
      matched = matched || markov_equivalent(g, family_graph(f, n));
    }
    if (!matched) {
      out.fail("an exchangeable graph model escaped the six families (" +
               str(g.edge_count()) + " edges)");
      return out;
    }
  }
  out.expect(exchangeable > 0, "the sample must contain exchangeable graphs");
  out.note(str(exchangeable) + " of " + str(sampled) +
           " sampled graphs induced exchangeable models");
  return out;
}

}  // namespace

void append_appendix_checks(std::vector<VerifyCheck>& out) {
  out.push_back({"separation-oracles", "appendix", 3, check_separation_oracles});
  out.push_back({"lemma3nn", "appendix", 3, check_lemma3nn});
  out.push_back({"lemma3n", "appendix", 3, check_lemma3n});
  out.push_back({"lemma3", "appendix", 3, check_lemma3});
  out.push_back({"thm2-families", "appendix", 4, check_thm2_families});
}

}  // namespace exchci::checks
