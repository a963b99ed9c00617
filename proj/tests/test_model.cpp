#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include <exchci/model.hpp>
#include "oracles.hpp"

using namespace exchci;

namespace {

// all assignments of the k elements to {out, A, B, C}
template <class F>
void for_each_triple(int k, F f) {
  const int total = 1 << (2 * k);
  for (int code = 0; code < total; ++code) {
    VarSet a, b, c;
    for (int e = 0; e < k; ++e) {
      switch ((code >> (2 * e)) & 3) {
        case 1: a = a.with(e); break;
        case 2: b = b.with(e); break;
        case 3: c = c.with(e); break;
        default: break;
      }
    }
    f(a, b, c);
  }
}

// the 6 elementary statements on a 3-element ground, in a fixed order
IndependenceModel model3_from_mask(unsigned mask) {
  IndependenceModel m(GroundSet::vector_of(3));
  int bit = 0;
  for (int u = 0; u < 3; ++u) {
    for (int v = u + 1; v < 3; ++v) {
      const int w = 3 - u - v;
      for (VarSet c : {VarSet{}, VarSet::single(w)}) {
        if (mask & (1u << bit)) m.insert(u, v, c);
        ++bit;
      }
    }
  }
  return m;
}

}  // namespace

TEST_CASE("statements canonicalize and reject overlap") {
  Statement s(VarSet::of_bits(0b0100), VarSet::of_bits(0b0011), VarSet::of_bits(0b1000));
  CHECK(s.a == VarSet::of_bits(0b0011));  // smaller encoding first
  CHECK(s.b == VarSet::of_bits(0b0100));
  CHECK_FALSE(s.elementary());
  CHECK(Statement(VarSet::single(0), VarSet::single(2), VarSet{}).elementary());
  CHECK_THROWS_AS(Statement(VarSet::of_bits(3), VarSet::of_bits(6), VarSet{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Statement(VarSet::single(0), VarSet::single(1), VarSet::single(1)),
                  std::invalid_argument);
}

TEST_CASE("property names round-trip") {
  for (Property p : {Property::Symmetry, Property::Decomposition, Property::WeakUnion,
                     Property::Contraction, Property::Intersection, Property::Composition,
                     Property::SingletonTransitivity, Property::UpwardStability,
                     Property::DownwardStability}) {
    CHECK(property_from_name(property_name(p)) == p);
  }
  CHECK(property_name(Property::WeakUnion) == "weak-union");
  CHECK(property_name(Property::SingletonTransitivity) == "singleton-transitivity");
  CHECK_FALSE(property_from_name("transitivity").has_value());
}

TEST_CASE("models store unordered elementary statements") {
  IndependenceModel m(GroundSet::vector_of(4));
  CHECK(m.insert(2, 0, VarSet::single(1)));
  CHECK_FALSE(m.insert(0, 2, VarSet::single(1)));  // same statement
  CHECK(m.contains(0, 2, VarSet::single(1)));
  CHECK(m.contains(2, 0, VarSet::single(1)));
  CHECK(m.size() == 1);
  CHECK_THROWS_AS(m.insert(1, 1, VarSet{}), std::invalid_argument);
  CHECK_THROWS_AS(m.insert(0, 2, VarSet::single(2)), std::invalid_argument);

  // empty sides hold vacuously; membership drives general statements
  CHECK(m.holds(VarSet{}, VarSet::of_bits(0b1111), VarSet{}));
  CHECK(m.holds(VarSet::single(0), VarSet::single(2), VarSet::single(1)));
  CHECK_FALSE(m.holds(VarSet::single(0), VarSet::single(2), VarSet{}));
  CHECK_FALSE(m.holds(VarSet::of_bits(0b0101), VarSet::single(1), VarSet{}));
}

TEST_CASE("general statements expand to all elementary instances") {
  IndependenceModel m(GroundSet::vector_of(3));
  // insert <{0,1}, {2} | {}> as a general statement
  m.insert(Statement(VarSet::of_bits(0b011), VarSet::single(2), VarSet{}));
  CHECK(m.size() == 4);  // 0-2|{}, 0-2|{1}, 1-2|{}, 1-2|{0}
  CHECK(m.contains(0, 2, VarSet{}));
  CHECK(m.contains(0, 2, VarSet::single(1)));
  CHECK(m.contains(1, 2, VarSet{}));
  CHECK(m.contains(1, 2, VarSet::single(0)));
  CHECK(m.holds(VarSet::of_bits(0b011), VarSet::single(2), VarSet{}));
  CHECK(m.holds(VarSet::single(2), VarSet::of_bits(0b011), VarSet{}));  // symmetry
}

TEST_CASE("closure membership equals the brute-force fixpoint on 3 elements") {
  for (unsigned mask = 0; mask < 64; ++mask) {
    IndependenceModel m = model3_from_mask(mask);
    IndependenceModel closed = semigraphoid_closure(m);
    CHECK(is_semigraphoid_closed(closed));
    auto brute = oracles::brute_closure(m);
    for_each_triple(3, [&](VarSet a, VarSet b, VarSet c) {
      if (a.empty() || b.empty()) return;
      CAPTURE(mask);
      CAPTURE(a.bits());
      CAPTURE(b.bits());
      CAPTURE(c.bits());
      CHECK(closed.holds(a, b, c) == oracles::brute_contains(brute, a, b, c));
    });
  }
}

TEST_CASE("closure membership equals the brute-force fixpoint on seeded 4-element models") {
  std::mt19937_64 rng(7);
  const GroundSet g = GroundSet::vector_of(4);
  for (int trial = 0; trial < 60; ++trial) {
    IndependenceModel m(g);
    const int k = 1 + int(rng() % 4);
    for (int s = 0; s < k; ++s) {
      int u = int(rng() % 4), v = int(rng() % 4);
      if (u == v) continue;
      std::uint32_t rest = g.all().without(u).without(v).bits();
      m.insert(u, v, VarSet::of_bits(std::uint32_t(rng()) & rest));
    }
    IndependenceModel closed = semigraphoid_closure(m);
    auto brute = oracles::brute_closure(m);
    for_each_triple(4, [&](VarSet a, VarSet b, VarSet c) {
      if (a.empty() || b.empty()) return;
      CAPTURE(trial);
      CHECK(closed.holds(a, b, c) == oracles::brute_contains(brute, a, b, c));
    });
  }
}

TEST_CASE("failed properties carry a checkable witness") {
  IndependenceModel m(GroundSet::vector_of(3));
  m.insert(0, 1, VarSet::single(2));
  m.insert(0, 2, VarSet::single(1));
  REQUIRE(is_semigraphoid_closed(m));

  PropertyReport rep = check_property(m, Property::Intersection);
  CHECK(rep.property == Property::Intersection);
  CHECK_FALSE(rep.holds);
  REQUIRE(rep.witness.has_value());
  for (const Statement& s : rep.witness->antecedents) CHECK(m.holds(s.a, s.b, s.c));
  for (const Statement& s : rep.witness->consequents) CHECK_FALSE(m.holds(s.a, s.b, s.c));
  REQUIRE_FALSE(rep.witness->consequents.empty());

  IndependenceModel fixed = closure_with(m, {Property::Intersection});
  bool some_consequent = false;
  for (const Statement& s : rep.witness->consequents) {
    some_consequent = some_consequent || fixed.holds(s.a, s.b, s.c);
  }
  CHECK(some_consequent);
  CHECK(check_property(fixed, Property::Intersection).holds);

  // symmetry, decomposition, weak union, contraction hold in any closed model
  for (Property p : {Property::Symmetry, Property::Decomposition, Property::WeakUnion,
                     Property::Contraction}) {
    CHECK(check_property(m, p).holds);
  }
}

TEST_CASE("property checks require a closed model") {
  IndependenceModel m(GroundSet::vector_of(4));
  m.insert(0, 1, VarSet::of_bits(0b1100));
  m.insert(0, 2, VarSet::of_bits(0b1000));  // exchange rule applies; not closed
  REQUIRE_FALSE(is_semigraphoid_closed(m));
  CHECK_THROWS_AS(check_property(m, Property::Composition), std::domain_error);
}

TEST_CASE("closure with extra properties is order-insensitive") {
  std::mt19937_64 rng(11);
  const GroundSet g = GroundSet::vector_of(4);
  for (int trial = 0; trial < 20; ++trial) {
    IndependenceModel m(g);
    for (int s = 0; s < 3; ++s) {
      int u = int(rng() % 4), v = int(rng() % 4);
      if (u == v) continue;
      std::uint32_t rest = g.all().without(u).without(v).bits();
      m.insert(u, v, VarSet::of_bits(std::uint32_t(rng()) & rest));
    }
    IndependenceModel x = closure_with(m, {Property::Intersection, Property::Composition});
    IndependenceModel y = closure_with(m, {Property::Composition, Property::Intersection});
    CHECK(x == y);
    CHECK(check_property(x, Property::Intersection).holds);
    CHECK(check_property(x, Property::Composition).holds);
  }
}

TEST_CASE("duality complements conditioning sets and swaps property pairs") {
  const GroundSet g = GroundSet::vector_of(4);
  IndependenceModel m(g);
  m.insert(0, 1, VarSet::single(2));
  IndependenceModel d = dual(m);
  CHECK(d.size() == 1);
  CHECK(d.contains(0, 1, VarSet::single(3)));  // complement of {2} within {2,3}
  CHECK(dual(d) == m);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    IndependenceModel r(g);
    for (int s = 0; s < 3; ++s) {
      int u = int(rng() % 4), v = int(rng() % 4);
      if (u == v) continue;
      std::uint32_t rest = g.all().without(u).without(v).bits();
      r.insert(u, v, VarSet::of_bits(std::uint32_t(rng()) & rest));
    }
    IndependenceModel c = semigraphoid_closure(r);
    IndependenceModel dc = dual(c);
    CHECK(is_semigraphoid_closed(dc));
    CHECK(check_property(c, Property::Intersection).holds ==
          check_property(dc, Property::Composition).holds);
    CHECK(check_property(c, Property::UpwardStability).holds ==
          check_property(dc, Property::DownwardStability).holds);
    CHECK(check_property(c, Property::SingletonTransitivity).holds ==
          check_property(dc, Property::SingletonTransitivity).holds);
  }
}

TEST_CASE("relabeling a model relabels its statements") {
  const GroundSet g = GroundSet::vector_of(4);
  IndependenceModel m(g);
  m.insert(0, 1, VarSet::single(2));
  auto ep = element_permutation(g, NodePermutation::rotation(4));
  IndependenceModel p = permuted_model(m, ep);
  CHECK(p.size() == 1);
  CHECK(p.contains(1, 2, VarSet::single(3)));
  auto inv = element_permutation(g, NodePermutation::rotation(4).inverse());
  CHECK(permuted_model(p, inv) == m);
}
