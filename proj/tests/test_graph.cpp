#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include <exchci/graph.hpp>
#include "oracles.hpp"

using namespace exchci;

namespace {

int di(const GroundSet& g, int a, int b) { return g.index_of(Dyad(a, b)); }

}  // namespace

TEST_CASE("mixed graph edge kinds are exclusive per pair") {
  MixedGraph g(GroundSet::vector_of(4));
  g.set_line(0, 1);
  CHECK(g.adjacent(1, 0));
  CHECK(g.line(0, 1));
  CHECK_FALSE(g.arc(0, 1));
  CHECK_FALSE(g.head_at(0, 1));

  g.set_arrow(0, 1);  // overwrite: 0 -> 1
  CHECK(g.arrow(0, 1));
  CHECK_FALSE(g.arrow(1, 0));
  CHECK(g.head_at(0, 1));
  CHECK_FALSE(g.head_at(1, 0));
  CHECK_FALSE(g.line(0, 1));

  g.set_arc(2, 3);
  CHECK(g.head_at(2, 3));
  CHECK(g.head_at(3, 2));
  CHECK(g.edge_count() == 2);
  CHECK(g.has_arrowheads());
  CHECK(g.neighbors(0) == VarSet::single(1));

  g.clear_edge(0, 1);
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(g.set_line(1, 1), std::invalid_argument);

  MixedGraph sk = skeleton(g);
  CHECK(sk.line(2, 3));
  CHECK_FALSE(sk.has_arrowheads());
}

TEST_CASE("graph families have the advertised shapes") {
  CHECK(family_from_name("L-") == GraphFamily::UndIncidence);
  CHECK(family_from_name("Lcbi") == GraphFamily::BidComplement);
  CHECK_FALSE(family_from_name("line").has_value());
  for (GraphFamily f : {GraphFamily::Empty, GraphFamily::UndIncidence, GraphFamily::BidIncidence,
                        GraphFamily::UndComplement, GraphFamily::BidComplement,
                        GraphFamily::Complete}) {
    CHECK(family_from_name(family_name(f)) == f);
  }

  MixedGraph l4 = family_graph(GraphFamily::UndIncidence, 4);
  CHECK(l4.size() == 6);
  CHECK(l4.edge_count() == 12);  // dyad pairs sharing a node
  CHECK_FALSE(l4.has_arrowheads());
  const GroundSet& g4 = l4.ground();
  CHECK(l4.adjacent(di(g4, 1, 2), di(g4, 1, 3)));
  CHECK_FALSE(l4.adjacent(di(g4, 1, 2), di(g4, 3, 4)));

  MixedGraph lc4 = family_graph(GraphFamily::UndComplement, 4);
  CHECK(lc4.edge_count() == 3);  // disjoint dyad pairs
  CHECK(lc4.adjacent(di(g4, 1, 2), di(g4, 3, 4)));
  CHECK_FALSE(lc4.adjacent(di(g4, 1, 2), di(g4, 1, 3)));

  MixedGraph lbi5 = family_graph(GraphFamily::BidIncidence, 5);
  CHECK(lbi5.size() == 10);
  CHECK(lbi5.edge_count() == 30);
  CHECK(lbi5.arc(0, 1));

  CHECK(family_graph(GraphFamily::Empty, 5).edge_count() == 0);
  CHECK(family_graph(GraphFamily::Complete, 5).edge_count() == 45);
  CHECK_THROWS_AS(family_graph(GraphFamily::UndIncidence, 9), std::length_error);
}

TEST_CASE("separation matches the path criteria on pure graphs") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 3 + int(rng() % 3);
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
    for (int u = 0; u < k; ++u) {
      for (int v = u + 1; v < k; ++v) {
        const std::uint32_t rest = gr.all().without(u).without(v).bits();
        for (std::uint32_t sub = 0;; sub = (sub - rest) & rest) {
          VarSet c = VarSet::of_bits(sub);
          CAPTURE(trial);
          CHECK(separates(lines, VarSet::single(u), VarSet::single(v), c) ==
                oracles::und_path_separated(lines, u, v, c));
          CHECK(separates(arcs, VarSet::single(u), VarSet::single(v), c) ==
                oracles::bid_path_separated(arcs, u, v, c));
          if (sub == rest) break;
        }
      }
    }
  }
}

TEST_CASE("separation handles set arguments and validates them") {
  MixedGraph g(GroundSet::vector_of(5));
  g.set_line(0, 2);
  g.set_line(1, 2);
  g.set_line(2, 3);
  CHECK(separates(g, VarSet::of_bits(0b00011), VarSet::of_bits(0b11000), VarSet::single(2)));
  CHECK_FALSE(separates(g, VarSet::of_bits(0b00011), VarSet::of_bits(0b01000), VarSet{}));
  CHECK(separates(g, VarSet{}, VarSet::of_bits(0b11000), VarSet{}));  // empty side
  CHECK_THROWS_AS(separates(g, VarSet::single(0), VarSet::single(0), VarSet{}),
                  std::invalid_argument);

  auto walk = connecting_walk(g, VarSet::single(0), VarSet::single(3), VarSet{});
  REQUIRE(walk.has_value());
  CHECK(walk->front() == 0);
  CHECK(walk->back() == 3);
  CHECK(walk->size() == 3);  // 0 ~ 2 ~ 3
  CHECK_FALSE(connecting_walk(g, VarSet::single(0), VarSet::single(3), VarSet::single(2))
                  .has_value());
}

TEST_CASE("colliders block until conditioned") {
  // 0 -> 1 <- 2: the classic collider
  MixedGraph g(GroundSet::vector_of(3));
  g.set_arrow(0, 1);
  g.set_arrow(2, 1);
  CHECK(separates(g, VarSet::single(0), VarSet::single(2), VarSet{}));
  CHECK_FALSE(separates(g, VarSet::single(0), VarSet::single(2), VarSet::single(1)));

  // bidirected pair through a line section: 0 <-> 1 - 2 <-> 3
  MixedGraph h(GroundSet::vector_of(4));
  h.set_arc(0, 1);
  h.set_line(1, 2);
  h.set_arc(2, 3);
  // the section {1,2} is a collider section of the only 0..3 walk
  CHECK(separates(h, VarSet::single(0), VarSet::single(3), VarSet{}));
  CHECK_FALSE(separates(h, VarSet::single(0), VarSet::single(3), VarSet::single(1)));
  CHECK_FALSE(separates(h, VarSet::single(0), VarSet::single(3), VarSet::single(2)));
}

TEST_CASE("induced models and Markov equivalence") {
  const GroundSet g3 = GroundSet::vector_of(3);
  MixedGraph empty(g3);
  IndependenceModel m = induced_model(empty);
  CHECK(m.holds(VarSet::single(0), VarSet::of_bits(0b110), VarSet{}));
  CHECK(is_semigraphoid_closed(m));

  CHECK(markov_equivalent(complete_graph(g3), complete_graph(g3, true)));
  CHECK_FALSE(markov_equivalent(complete_graph(g3), empty));
  CHECK(induced_model(complete_graph(g3)).size() == 0);

  // a single arrow is Markov equivalent to its skeleton
  MixedGraph one(g3);
  one.set_arrow(0, 1);
  CHECK(markov_equivalent(one, skeleton(one)));
  CHECK(is_maximal(one));

  // skeleton of a model recovers the non-separable pairs
  MixedGraph path(g3);
  path.set_line(0, 1);
  path.set_line(1, 2);
  CHECK(skeleton_of_model(induced_model(path)) == path);
}

TEST_CASE("unshielded collider trisections") {
  // L_bi(4) contains <1-2, {1-3}, 3-4>: both edges arcs into the section
  MixedGraph lbi4 = family_graph(GraphFamily::BidIncidence, 4);
  auto uct = unshielded_collider_trisections(lbi4);
  Trisection expected{0, 5, VarSet::single(1), true, false};
  bool found = false;
  for (const auto& t : uct) found = found || (t == expected);
  CHECK(found);
  for (const auto& t : uct) {
    CHECK(t.collider);
    CHECK_FALSE(t.shielded);
    CHECK(t.left < t.right);
  }

  // no collider can exist without arrowheads
  CHECK(unshielded_collider_trisections(family_graph(GraphFamily::UndIncidence, 4)).empty());
  // a single arc has no third vertex to trisect through
  MixedGraph one(GroundSet::vector_of(3));
  one.set_arc(0, 1);
  CHECK(unshielded_collider_trisections(one).empty());
}

TEST_CASE("separator enumeration modes") {
  MixedGraph l4 = family_graph(GraphFamily::UndIncidence, 4);
  const GroundSet& gr = l4.ground();
  const int e12 = di(gr, 1, 2), e34 = di(gr, 3, 4);

  SeparatorList all = enumerate_separators(l4, e12, e34, SeparatorMode::All);
  CHECK_FALSE(all.adjacent);
  REQUIRE_FALSE(all.separators.empty());
  // minimum size 2(n-2) = 4; the two stars are the only minimum separators
  CHECK(all.separators.front().size() == 4);
  SeparatorList mins = enumerate_separators(l4, e12, e34, SeparatorMode::Minimal);
  for (const VarSet& c : mins.separators) {
    // dropping any element must break separation
    c.for_each([&](int e) {
      CHECK_FALSE(separates(l4, VarSet::single(e12), VarSet::single(e34), c.without(e)));
    });
  }
  CHECK(mins.separators.front() == star_separator(gr, Dyad(1, 2)));

  SeparatorList maxs = enumerate_separators(l4, e12, e34, SeparatorMode::Maximal);
  for (const VarSet& c : maxs.separators) {
    VarSet rest = gr.all().without(e12).without(e34) - c;
    rest.for_each([&](int e) {
      CHECK_FALSE(separates(l4, VarSet::single(e12), VarSet::single(e34), c.with(e)));
    });
  }

  SeparatorList adj = enumerate_separators(l4, e12, di(gr, 1, 3), SeparatorMode::All);
  CHECK(adj.adjacent);
  CHECK(adj.separators.empty());
  CHECK_THROWS_AS(enumerate_separators(l4, e12, e12, SeparatorMode::All),
                  std::invalid_argument);
}

TEST_CASE("named conditioning sets") {
  const GroundSet g5 = GroundSet::network_on(5);
  auto set = [&](std::initializer_list<std::pair<int, int>> dyads) {
    VarSet s;
    for (auto [a, b] : dyads) s = s.with(di(g5, a, b));
    return s;
  };
  CHECK(pairwise_separator(g5, Dyad(1, 2), Dyad(3, 4)) ==
        set({{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  CHECK(star_separator(g5, Dyad(1, 2)) ==
        set({{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}));
  CHECK(far_separator(g5, Dyad(1, 2)) == set({{3, 4}, {3, 5}, {4, 5}}));
  CHECK(node_star(g5, 4) == set({{1, 4}, {2, 4}, {3, 4}, {4, 5}}));
  CHECK(far_separator3(g5, 1, 2, 3) == set({{4, 5}}));
  CHECK_THROWS_AS(pairwise_separator(g5, Dyad(1, 2), Dyad(2, 3)), std::invalid_argument);
}

TEST_CASE("random graphs are reproducible") {
  const GroundSet g = GroundSet::vector_of(5);
  std::mt19937_64 r1(99), r2(99);
  MixedGraph a = random_mixed_graph(g, r1, 0.5);
  MixedGraph b = random_mixed_graph(g, r2, 0.5);
  CHECK(a == b);
  CHECK_THROWS_AS(random_mixed_graph(g, r1, 1.5), std::invalid_argument);
}
