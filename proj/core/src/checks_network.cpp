#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include <exchci/exchange.hpp>
#include <exchci/graph.hpp>
#include <exchci/model.hpp>
#include <exchci/table.hpp>
#include <exchci/verify.hpp>
#include "checks_internal.hpp"

namespace exchci::checks {
namespace {

int di(const GroundSet& g, int a, int b) { return g.index_of(Dyad(a, b)); }

VarSet dyad_set(const GroundSet& g, std::initializer_list<std::pair<int, int>> list) {
  VarSet out;
  for (auto [a, b] : list) out = out.with(di(g, a, b));
  return out;
}

bool contains_set(const std::vector<VarSet>& sets, VarSet c) {
  return std::find(sets.begin(), sets.end(), c) != sets.end();
}

// --- the incidence graph on four nodes ------------------------------------

CheckOutcome check_fig1(const CheckParams&) {
  CheckOutcome out;
  MixedGraph g = incidence_graph(4);
  out.expect(g.size() == 6, "incidence graph on 4 nodes must have 6 vertices");
  out.expect(g.edge_count() == 12, "incidence graph on 4 nodes must have 12 edges, got " +
                                       str(g.edge_count()));
  for (int v = 0; v < 6; ++v) {
    out.expect(g.neighbors(v).size() == 4,
               "vertex " + g.ground().element_name(v) + " must have degree 4");
  }
  MixedGraph gc = complement_incidence_graph(4);
  out.expect(gc.edge_count() == 3, "complement must have exactly 3 edges");
  const GroundSet& gr = g.ground();
  for (auto [a, b] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{1, 4}}) {
    // the complement pairs up each dyad with its node-disjoint partner
    int u = di(gr, a, b);
    int v = -1;
    for (int w = 0; w < 6; ++w) {
      if (w != u && !gr.dyad_at(w).meets(gr.dyad_at(u))) v = w;
    }
    out.expect(gc.adjacent(u, v) && gc.line(u, v), "complement edge missing");
  }
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) {
      out.expect(g.adjacent(u, v) != gc.adjacent(u, v),
                 "incidence and complement must partition the pairs");
    }
  }
  return out;
}

// --- separators of two node-disjoint dyads in the undirected incidence ----

CheckOutcome prop12_1(int n, CheckOutcome out) {
  const GroundSet gr = GroundSet::network_on(n);
  MixedGraph g = incidence_graph(n);
  const int e12 = di(gr, 1, 2), e34 = di(gr, 3, 4);
  auto list = enumerate_separators(g, e12, e34, SeparatorMode::All);
  out.expect(!list.adjacent, "1-2 and 3-4 must be non-adjacent");
  const VarSet star12 = star_separator(gr, Dyad(1, 2));
  const VarSet star34 = star_separator(gr, Dyad(3, 4));
  const VarSet pw = pairwise_separator(gr, Dyad(1, 2), Dyad(3, 4));
  const int bound = 2 * (n - 2);
  out.expect(contains_set(list.separators, star12), "the 1-2 star must separate");
  out.expect(contains_set(list.separators, star34), "the 3-4 star must separate");
  int at_bound = 0;
  for (VarSet c : list.separators) {
    if (c.size() < bound) {
      out.fail("separator below the 2(n-2) bound: " + gr.set_name(c));
      break;
    }
    if (!pw.subset_of(c)) {
      out.fail("separator missing a common neighbour: " + gr.set_name(c));
      break;
    }
    if (c.size() == bound) {
      ++at_bound;
      if (!(c == star12 || c == star34)) {
        out.fail("minimum-size separator other than the two stars: " + gr.set_name(c));
        break;
      }
    }
  }
  const int star_count = star12 == star34 ? 1 : 2;  // the stars coincide at n=4
  out.expect(at_bound == star_count, "exactly the stars must attain the bound, got " +
                                str(at_bound));
  out.note(str(list.separators.size()) + " separators, bound " + str(bound));
  return out;
}

CheckOutcome check_prop12_1_n4(const CheckParams&) { return prop12_1(4, {}); }
CheckOutcome check_prop12_1_n5(const CheckParams&) { return prop12_1(5, {}); }
CheckOutcome check_prop12_1_n6(const CheckParams&) { return prop12_1(6, {}); }

// --- separators of two node-disjoint dyads in the bidirected incidence ----

CheckOutcome prop12_2(int n, CheckOutcome out) {
  const GroundSet gr = GroundSet::network_on(n);
  MixedGraph g = incidence_graph(n, true);
  const int e12 = di(gr, 1, 2), e34 = di(gr, 3, 4);
  auto list = enumerate_separators(g, e12, e34, SeparatorMode::All);
  out.expect(!list.adjacent, "1-2 and 3-4 must be non-adjacent");
  const VarSet m1 = far_separator(gr, Dyad(1, 2)).without(e34);
  const VarSet m2 = far_separator(gr, Dyad(3, 4)).without(e12);
  const int bound = (n - 2) * (n - 3) / 2 - 1;
  int at_bound = 0;
  for (VarSet c : list.separators) {
    if (c.size() > bound) {
      out.fail("separator above the |far set|-1 bound: " + gr.set_name(c));
      break;
    }
    if (c.size() == bound) {
      ++at_bound;
      if (!(c == m1 || c == m2)) {
        out.fail("maximum-size separator other than the punctured far sets: " +
                 gr.set_name(c));
        break;
      }
    }
  }
  const int expected_max = m1 == m2 ? 1 : 2;
  out.expect(at_bound == expected_max,
             "expected " + str(expected_max) + " separators at the bound, got " +
                 str(at_bound));
  // the same facts through duality
  out.expect(induced_model(g) == dual(induced_model(incidence_graph(n))),
             "bidirected incidence model must equal the dual of the undirected one");
  out.note(str(list.separators.size()) + " separators, bound " + str(bound));
  return out;
}

CheckOutcome check_prop12_2_n4(const CheckParams&) { return prop12_2(4, {}); }
CheckOutcome check_prop12_2_n5(const CheckParams&) { return prop12_2(5, {}); }

// --- separators of two node-sharing dyads in the undirected complement ----

CheckOutcome prop12n_1(int n, CheckOutcome out) {
  const GroundSet gr = GroundSet::network_on(n);
  MixedGraph g = complement_incidence_graph(n);
  const int e12 = di(gr, 1, 2), e13 = di(gr, 1, 3);
  auto list = enumerate_separators(g, e12, e13, SeparatorMode::All);
  out.expect(!list.adjacent, "1-2 and 1-3 must be non-adjacent in the complement");
  const VarSet far12 = far_separator(gr, Dyad(1, 2));
  const VarSet far13 = far_separator(gr, Dyad(1, 3));
  const VarSet common = far_separator3(gr, 1, 2, 3);
  const int bound = (n - 2) * (n - 3) / 2;
  out.expect(contains_set(list.separators, far12), "the far set of 1-2 must separate");
  out.expect(contains_set(list.separators, far13), "the far set of 1-3 must separate");
  int at_bound = 0;
  for (VarSet c : list.separators) {
    if (c.size() < bound) {
      out.fail("separator below the far-set bound: " + gr.set_name(c));
      break;
    }
    if (!common.subset_of(c)) {
      out.fail("separator missing a common neighbour: " + gr.set_name(c));
      break;
    }
    if (c.size() == bound) {
      ++at_bound;
      if (!(c == far12 || c == far13)) {
        out.fail("minimum-size separator other than the two far sets: " + gr.set_name(c));
        break;
      }
    }
  }
  out.expect(at_bound == 2, "exactly the two far sets must attain the bound, got " +
                                str(at_bound));
  out.note(str(list.separators.size()) + " separators, bound " + str(bound));
  return out;
}

CheckOutcome check_prop12n_1_n5(const CheckParams&) { return prop12n_1(5, {}); }
CheckOutcome check_prop12n_1_n6(const CheckParams&) { return prop12n_1(6, {}); }

// --- separators of two node-sharing dyads in the bidirected complement ----

CheckOutcome prop12n_2(int n, CheckOutcome out) {
  const GroundSet gr = GroundSet::network_on(n);
  MixedGraph g = complement_incidence_graph(n, true);
  const int e12 = di(gr, 1, 2), e13 = di(gr, 1, 3);
  auto list = enumerate_separators(g, e12, e13, SeparatorMode::All);
  out.expect(!list.adjacent, "1-2 and 1-3 must be non-adjacent in the complement");
  const VarSet m1 = star_separator(gr, Dyad(1, 2)).without(e13);
  const VarSet m2 = star_separator(gr, Dyad(1, 3)).without(e12);
  const int bound = 2 * (n - 2) - 1;
  int at_bound = 0;
  for (VarSet c : list.separators) {
    if (c.size() > bound) {
      out.fail("separator above the 2(n-2)-1 bound: " + gr.set_name(c));
      break;
    }
    if (c.size() == bound) {
      ++at_bound;
      if (!(c == m1 || c == m2)) {
        out.fail("maximum-size separator other than the punctured stars: " +
                 gr.set_name(c));
        break;
      }
    }
  }
  out.expect(at_bound == 2, "exactly the two punctured stars must attain the bound, got " +
                                str(at_bound));
  out.note(str(list.separators.size()) + " separators, bound " + str(bound));
  return out;
}

CheckOutcome check_prop12n_2_n5(const CheckParams&) { return prop12n_2(5, {}); }
CheckOutcome check_prop12n_2_n6(const CheckParams&) { return prop12n_2(6, {}); }

// --- the two separators quoted with the propositions ----------------------

CheckOutcome check_named_L6(const CheckParams&) {
  CheckOutcome out;
  const GroundSet gr = GroundSet::network_on(6);
  MixedGraph g = incidence_graph(6);
  const VarSet c = dyad_set(gr, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5},
                                 {3, 6}, {4, 6}, {5, 6}});
  const VarSet a = VarSet::single(di(gr, 1, 2));
  const VarSet b = VarSet::single(di(gr, 3, 4));
  out.expect(separates(g, a, b, c), "the quoted 9-dyad set must separate 1-2 from 3-4");
  bool minimal = true;
  c.for_each([&](int d) {
    if (separates(g, a, b, c.without(d))) minimal = false;
  });
  out.expect(minimal, "the quoted set must be inclusion-minimal");
  out.expect(c.size() == 9 && c.size() > 2 * (6 - 2),
             "the quoted set exceeds the minimum separator size");
  return out;
}

CheckOutcome check_named_Lc5(const CheckParams&) {
  CheckOutcome out;
  const GroundSet gr = GroundSet::network_on(5);
  MixedGraph g = complement_incidence_graph(5);
  const VarSet c = node_star(gr, 4);
  out.expect(c == dyad_set(gr, {{1, 4}, {2, 4}, {3, 4}, {4, 5}}),
             "node star of 4 must be {1-4,2-4,3-4,4-5}");
  const VarSet a = VarSet::single(di(gr, 1, 2));
  const VarSet b = VarSet::single(di(gr, 1, 3));
  out.expect(separates(g, a, b, c), "the node star of 4 must separate 1-2 from 1-3");
  bool minimal = true;
  c.for_each([&](int d) {
    if (separates(g, a, b, c.without(d))) minimal = false;
  });
  out.expect(minimal, "the node star must be inclusion-minimal");
  out.expect(c.size() == 4 && c.size() > (5 - 2) * (5 - 3) / 2,
             "the node star exceeds the minimum separator size");
  return out;
}

// --- family-level duality --------------------------------------------------

CheckOutcome check_lemma5_families(const CheckParams& params) {
  CheckOutcome out;
  for (int n = 4; n <= std::min(params.nmax, 5); ++n) {
    out.expect(induced_model(incidence_graph(n, true)) ==
                   dual(induced_model(incidence_graph(n))),
               "incidence duality fails at n=" + str(n));
    out.expect(induced_model(complement_incidence_graph(n, true)) ==
                   dual(induced_model(complement_incidence_graph(n))),
               "complement duality fails at n=" + str(n));
    const GroundSet gr = GroundSet::network_on(n);
    out.expect(induced_model(complete_graph(gr, true)) ==
                   dual(induced_model(complete_graph(gr))),
               "complete-graph duality fails at n=" + str(n));
    MixedGraph empty_graph(gr);
    out.expect(induced_model(empty_graph) == dual(induced_model(empty_graph)),
               "empty-graph duality fails at n=" + str(n));
  }
  return out;
}

// --- skeletons of exchangeable network models ------------------------------

CheckOutcome check_prop7(const CheckParams& params) {
  CheckOutcome out;
  std::mt19937_64 rng(params.seed);
  int models = 0;
  for (int n = 4; n <= std::min(params.nmax, 5); ++n) {
    const GroundSet gr = GroundSet::network_on(n);
    std::vector<MixedGraph> shapes = {
        MixedGraph(gr), skeleton(incidence_graph(n)),
        skeleton(complement_incidence_graph(n)), complete_graph(gr)};
    for (int i = 0; i < 10; ++i) {
      auto m = random_exchangeable_model(gr, rng, 1 + rand_below(rng, 2));
      ++models;
      MixedGraph sk = skeleton_of_model(m);
      bool matched = false;
      for (const auto& shape : shapes) matched = matched || sk == shape;
      if (!matched) {
        out.fail("skeleton of an exchangeable network model is not one of the four shapes (n=" +
                 str(n) + ")");
        return out;
      }
    }
    for (GraphFamily f : {GraphFamily::Empty, GraphFamily::UndIncidence,
                          GraphFamily::BidIncidence, GraphFamily::UndComplement,
                          GraphFamily::BidComplement, GraphFamily::Complete}) {
      if (n > 4) continue;  // families at n=4 suffice; duals are covered above
      MixedGraph fam = family_graph(f, n);
      out.expect(skeleton_of_model(induced_model(fam)) == skeleton(fam),
                 std::string("family ") + std::string(family_name(f)) +
                     " skeleton must be recovered from its model");
    }
  }
  out.note(str(models) + " random exchangeable models plus the six families");
  return out;
}

// --- statement shapes conform to the skeleton class ------------------------

CheckOutcome check_lemma2_forms(const CheckParams& params) {
  CheckOutcome out;
  std::mt19937_64 rng(params.seed);
  int models = 0, incidence_like = 0, complement_like = 0;
  for (int n = 4; n <= std::min(params.nmax, 5); ++n) {
    const GroundSet gr = GroundSet::network_on(n);
    const MixedGraph sk_inc = skeleton(incidence_graph(n));
    const MixedGraph sk_comp = skeleton(complement_incidence_graph(n));
    for (int i = 0; i < 10; ++i) {
      auto m = random_exchangeable_model(gr, rng, 1 + rand_below(rng, 2));
      ++models;
      MixedGraph sk = skeleton_of_model(m);
      const bool inc = sk == sk_inc;
      const bool comp = sk == sk_comp;
      if (inc) ++incidence_like;
      if (comp) ++complement_like;
      bool ok = true;
      m.for_each_elementary([&](int u, int v, VarSet) {
        const bool share = gr.dyad_at(u).meets(gr.dyad_at(v));
        if (inc && share) ok = false;
        if (comp && !share) ok = false;
      });
      out.expect(ok, "statement shape contradicts the skeleton class at n=" + str(n));
    }
  }
  out.note(str(models) + " models (" + str(incidence_like) + " incidence-shaped, " +
           str(complement_like) + " complement-shaped)");
  return out;
}

// --- the five-node running example -----------------------------------------

CheckOutcome check_example2(const CheckParams&) {
  CheckOutcome out;
  const GroundSet gr = GroundSet::network_on(5);
  const int e12 = di(gr, 1, 2), e34 = di(gr, 3, 4);
  const VarSet pw = pairwise_separator(gr, Dyad(1, 2), Dyad(3, 4));
  IndependenceModel seed(gr);
  seed.insert(e12, e34, pw);
  auto m = closure_with(orbit_closure(seed), {Property::UpwardStability});
  out.expect(m.size() == 240, "the upward orbit closure must hold 240 statements, got " +
                                  str(m.size()));
  out.expect(is_exchangeable_model(m), "the model must be exchangeable");
  out.expect(is_semigraphoid_closed(m), "the model must be semi-graphoid-closed");
  out.expect(check_property(m, Property::Composition).holds, "composition must hold");
  out.expect(check_property(m, Property::Intersection).holds, "intersection must hold");
  out.expect(!check_property(m, Property::SingletonTransitivity).holds,
             "singleton-transitivity must fail");
  out.expect(skeleton_of_model(m) == skeleton(incidence_graph(5)),
             "the skeleton must be the incidence skeleton");

  auto fr = faithfulness_report(m, incidence_graph(5));
  out.expect(fr.markovian, "the model must be Markovian for the incidence graph");
  out.expect(!fr.faithful, "the model must not be faithful to the incidence graph");
  out.expect(fr.failing_triple.has_value() && !fr.failing_triple->separated_in_graph,
             "the failing triple must be held by the model yet connected in the graph");

  auto assumptions = structured_assumption_check(m, RegimeTag::UndirectedIncidence);
  out.expect(assumptions.all_hold, "the incidence-regime hypotheses must all hold");

  auto regime = classify_regime(oracle_from_model(m), 5);
  out.expect(regime.tag == RegimeTag::UndirectedIncidence,
             "the classifier must report the undirected incidence regime");
  out.expect(regime.disjoint_witness && *regime.disjoint_witness == pw,
             "the least conditioning set must be the pairwise separator");
  return out;
}

// --- the six-regime classifier ---------------------------------------------

CheckOutcome check_algorithm1(const CheckParams& params) {
  CheckOutcome out;
  const int n = 5;
  const GroundSet gr = GroundSet::network_on(n);

  struct Case {
    GraphFamily family;
    RegimeTag tag;
  };
  const Case cases[] = {
      {GraphFamily::Empty, RegimeTag::Empty},
      {GraphFamily::UndIncidence, RegimeTag::UndirectedIncidence},
      {GraphFamily::BidIncidence, RegimeTag::BidirectedIncidence},
      {GraphFamily::UndComplement, RegimeTag::UndirectedComplement},
      {GraphFamily::BidComplement, RegimeTag::BidirectedComplement},
      {GraphFamily::Complete, RegimeTag::Complete},
  };
  for (const auto& c : cases) {
    auto regime = classify_regime(oracle_from_graph(family_graph(c.family, n)), n,
                                  params.seed);
    out.expect(regime.tag == c.tag,
               std::string("family ") + std::string(family_name(c.family)) +
                   " classified as " + std::string(regime_name(regime.tag)));
  }

  // least witnesses on three representatives
  auto empty_regime = classify_regime(oracle_from_graph(family_graph(GraphFamily::Empty, n)), n,
                                      params.seed);
  out.expect(empty_regime.disjoint_witness == VarSet{} &&
                 empty_regime.sharing_witness == VarSet{},
             "empty regime witnesses must be the empty set");
  auto li = classify_regime(oracle_from_graph(incidence_graph(n)), n, params.seed);
  out.expect(li.disjoint_witness == star_separator(gr, Dyad(1, 2)),
             "undirected incidence witness must be the 1-2 star");
  auto lci = classify_regime(oracle_from_graph(complement_incidence_graph(n)), n,
                             params.seed);
  out.expect(lci.sharing_witness == far_separator(gr, Dyad(1, 3)),
             "undirected complement witness must be the 1-3 far set");

  // the iid product table sits in the empty regime
  std::vector<double> probs(std::size_t{1} << gr.size(),
                            1.0 / double(std::size_t{1} << gr.size()));
  auto table_regime =
      classify_regime(oracle_from_table(JointTable::full(gr, probs)), n, params.seed);
  out.expect(table_regime.tag == RegimeTag::Empty, "iid table must classify as Empty");

  // a designed inconsistent model: two incompatible separator shapes
  IndependenceModel seed_model(gr);
  seed_model.insert(di(gr, 1, 2), di(gr, 3, 4),
                    pairwise_separator(gr, Dyad(1, 2), Dyad(3, 4)));
  seed_model.insert(di(gr, 1, 2), di(gr, 3, 4), dyad_set(gr, {{3, 5}, {4, 5}}));
  auto inconsistent = classify_regime(oracle_from_model(orbit_closure(seed_model)), n,
                                      params.seed);
  out.expect(inconsistent.tag == RegimeTag::Inconsistent,
             "the designed model must classify as Inconsistent");
  out.expect(inconsistent.conflict.has_value() &&
                 inconsistent.conflict->first ==
                     pairwise_separator(gr, Dyad(1, 2), Dyad(3, 4)) &&
                 inconsistent.conflict->second == dyad_set(gr, {{1, 5}, {2, 5}}),
             "the conflict pair must be the least witnesses with and without 1-3");

  // usage errors
  bool threw = false;
  try {
    classify_regime(oracle_from_graph(incidence_graph(4)), 4, params.seed);
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  out.expect(threw, "n=4 must be rejected");

  // an order-sensitive oracle is not exchangeable; some spot-check seed in a
  // short run must catch it
  CIOracle biased{gr, [](VarSet a, VarSet b, VarSet) { return a.bits() < b.bits(); }};
  threw = false;
  for (std::uint64_t t = 0; t < 10 && !threw; ++t) {
    try {
      classify_regime(biased, n, params.seed + t);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
  }
  out.expect(threw, "a non-exchangeable oracle must fail the spot-check");
  return out;
}

// --- conditioning a network: node-disjoint is safe, node-sharing is not ----

CheckOutcome check_network_conditioning(const CheckParams& params) {
  CheckOutcome out;
  std::mt19937_64 rng(params.seed);

  // n=4 cherry table: uniform on the orbit of {1-2, 1-4}
  const GroundSet g4 = GroundSet::network_on(4);
  const std::uint32_t cherry =
      (std::uint32_t{1} << di(g4, 1, 2)) | (std::uint32_t{1} << di(g4, 1, 4));
  OrbitWeighting w{g4, {{canonical_state(g4, cherry), 1.0 / 12.0}}};
  JointTable t = table_from_orbits(w);
  out.expect(is_exchangeable_table(t), "the cherry table must be exchangeable");

  // conditioning on a node-sharing dyad breaks exchangeability, with an
  // explicit probability witness
  const int e14 = di(g4, 1, 4);
  JointTable tc = condition(t, VarSet::single(e14), VarSet::single(e14));
  JointTable tr = restrict_to_nodes(tc, {1, 2, 3});
  out.expect(!is_exchangeable_table(tr),
             "conditioning on a shared-node dyad must break exchangeability");
  const GroundSet& g3 = tr.ground();
  const double p12 = tr.prob(std::uint32_t{1} << di(g3, 1, 2));
  const double p23 = tr.prob(std::uint32_t{1} << di(g3, 2, 3));
  out.expect(std::fabs(p12 - 0.25) <= 1e-12, "P(only 1-2) must be 1/4, got " + str(p12));
  out.expect(std::fabs(p23 - 0.0) <= 1e-12, "P(only 2-3) must be 0, got " + str(p23));
  out.expect(std::fabs(p12 - p23) > 1e-12, "the witness states must disagree");

  // node-disjoint conditioning keeps the marginal exchangeable
  JointTable tc2 = condition(t, VarSet::single(di(g4, 3, 4)), VarSet{});
  JointTable tr2 = restrict_to_nodes(tc2, {1, 2});
  out.expect(is_exchangeable_table(tr2),
             "conditioning on a node-disjoint dyad must keep exchangeability");

  if (params.nmax >= 5) {
    const GroundSet g5 = GroundSet::network_on(5);
    for (int i = 0; i < 10; ++i) {
      OrbitWeighting w5{g5, {}};
      double total = 0.0;
      for (std::uint32_t state = 0; state < (std::uint32_t{1} << g5.size()); ++state) {
        if (canonical_state(g5, state) == state) {
          double weight = 1.0 + rand_below(rng, 1000) / 50.0;
          w5.weights[state] = weight;
        }
      }
      for (std::uint32_t state = 0; state < (std::uint32_t{1} << g5.size()); ++state) {
        total += w5.weights[canonical_state(g5, state)];
      }
      for (auto& [state, weight] : w5.weights) weight /= total;
      JointTable t5 = table_from_orbits(w5);
      out.expect(is_exchangeable_table(t5), "orbit table must be exchangeable");
      JointTable t5c = condition(t5, VarSet::single(di(g5, 4, 5)),
                                 (rng() & 1u) ? VarSet::single(di(g5, 4, 5)) : VarSet{});
      JointTable t5r = restrict_to_nodes(t5c, {1, 2, 3});
      out.expect(is_exchangeable_table(t5r),
                 "node-disjoint conditioning at n=5 must keep exchangeability");
    }
    out.note("cherry counterexample plus 10 random node-disjoint cases at n=5");
  } else {
    out.note("cherry counterexample at n=4");
  }
  return out;
}

}  // namespace

void append_network_checks(std::vector<VerifyCheck>& out) {
  out.push_back({"fig1", "network", 4, check_fig1});
  out.push_back({"prop12.1-n4", "network", 4, check_prop12_1_n4});
  out.push_back({"prop12.1-n5", "network", 5, check_prop12_1_n5});
  out.push_back({"prop12.1-n6", "network", 6, check_prop12_1_n6});
  out.push_back({"prop12.2-n4", "network", 4, check_prop12_2_n4});
  out.push_back({"prop12.2-n5", "network", 5, check_prop12_2_n5});
  out.push_back({"prop12n.1-n5", "network", 5, check_prop12n_1_n5});
  out.push_back({"prop12n.1-n6", "network", 6, check_prop12n_1_n6});
  out.push_back({"prop12n.2-n5", "network", 5, check_prop12n_2_n5});
  out.push_back({"prop12n.2-n6", "network", 6, check_prop12n_2_n6});
  out.push_back({"named-separator-L6", "network", 6, check_named_L6});
  out.push_back({"named-separator-Lc5", "network", 5, check_named_Lc5});
  out.push_back({"lemma5-families", "network", 4, check_lemma5_families});
  out.push_back({"prop7-skeletons", "network", 4, check_prop7});
  out.push_back({"lemma2-forms", "network", 4, check_lemma2_forms});
  out.push_back({"example2-n5", "network", 5, check_example2});
  out.push_back({"algorithm1-n5", "network", 5, check_algorithm1});
  out.push_back({"network-conditioning", "network", 4, check_network_conditioning});
}

}  // namespace exchci::checks
