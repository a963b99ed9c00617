#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include <exchci/gaussian.hpp>
#include <exchci/table.hpp>
#include "oracles.hpp"

using namespace exchci;

namespace {

int di(const GroundSet& g, int a, int b) { return g.index_of(Dyad(a, b)); }

// uniform probability over the 12-state orbit of the 2-star {1-2, 1-4}
JointTable cherry_table() {
  const GroundSet g = GroundSet::network_on(4);
  OrbitWeighting w{g, {}};
  const std::uint32_t star = (1u << di(g, 1, 2)) | (1u << di(g, 1, 4));
  w.weights[canonical_state(g, star)] = 1.0 / 12.0;
  return table_from_orbits(w);
}

JointTable product_table(int n, double p) {
  const GroundSet g = GroundSet::vector_of(n);
  std::vector<double> probs(std::size_t(1) << n);
  for (std::uint32_t s = 0; s < probs.size(); ++s) {
    double q = 1.0;
    for (int e = 0; e < n; ++e) q *= ((s >> e) & 1u) ? p : 1.0 - p;
    probs[s] = q;
  }
  return JointTable::full(g, std::move(probs));
}

}  // namespace

TEST_CASE("tables validate their construction") {
  const GroundSet g2 = GroundSet::vector_of(2);
  CHECK_THROWS_AS(JointTable::full(g2, {0.5, 0.5}), std::invalid_argument);  // wrong length
  CHECK_THROWS_AS(JointTable::full(g2, {0.5, 0.5, 0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(JointTable::full(g2, {1.5, -0.5, 0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(JointTable(GroundSet::vector_of(23), GroundSet::vector_of(23).all(), {}),
                  std::length_error);

  JointTable t = JointTable::full(g2, {0.25, 0.25, 0.25, 0.25});
  CHECK(t.width() == 2);
  CHECK(t.support() == g2.all());
  CHECK(t.prob(3) == 0.25);
  CHECK(t.rank_of(1) == 1);
  CHECK(t.element_at(0) == 0);
}

TEST_CASE("orbits enumerate node relabelings of a state") {
  const GroundSet g = GroundSet::network_on(4);
  const std::uint32_t star = (1u << di(g, 1, 2)) | (1u << di(g, 1, 4));
  // least relabeled image is the star at node 1 with leaves 2, 3
  const std::uint32_t least = (1u << di(g, 1, 2)) | (1u << di(g, 1, 3));
  CHECK(canonical_state(g, star) == least);
  auto orbit = orbit_states(g, star);
  CHECK(orbit.size() == 12);
  CHECK(orbit.front() == least);
  for (std::size_t i = 1; i < orbit.size(); ++i) CHECK(orbit[i - 1] < orbit[i]);

  OrbitWeighting bad{g, {{star, 1.0 / 12.0}}};  // star is not canonical
  CHECK_THROWS_AS(table_from_orbits(bad), std::invalid_argument);
}

TEST_CASE("the cherry table conditions and restricts exactly") {
  JointTable t = cherry_table();
  const GroundSet& g = t.ground();
  CHECK(is_exchangeable_table(t));
  CHECK(t.prob((1u << di(g, 1, 2)) | (1u << di(g, 1, 4))) == doctest::Approx(1.0 / 12.0));
  CHECK(t.prob(0) == 0.0);

  // condition on the edge 1-4 being present: four states stay
  JointTable c = condition(t, VarSet::single(di(g, 1, 4)), VarSet::single(di(g, 1, 4)));
  const double quarter = 0.25;
  int live = 0;
  for (std::uint32_t s = 0; s < (1u << c.width()); ++s) {
    if (c.prob(s) > 0) {
      ++live;
      CHECK(c.prob(s) == doctest::Approx(quarter));
    }
  }
  CHECK(live == 4);

  // dropping node 4 leaves a non-exchangeable 3-node distribution
  JointTable r = restrict_to_nodes(c, {1, 2, 3});
  const GroundSet& g3 = r.ground();
  CHECK(g3.nodes() == 3);
  CHECK(r.prob(1u << di(g3, 1, 2)) == doctest::Approx(quarter));
  CHECK(r.prob(1u << di(g3, 1, 3)) == doctest::Approx(quarter));
  CHECK(r.prob(0) == doctest::Approx(0.5));
  CHECK(r.prob(1u << di(g3, 2, 3)) == 0.0);
  CHECK_FALSE(is_exchangeable_table(r, 1e-12));

  // conditioning on a null event is rejected
  CHECK_THROWS_AS(condition(t, g.all(), g.all()), std::invalid_argument);
  CHECK_THROWS_AS(restrict_to_nodes(t, {1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(restrict_to_nodes(t, {1, 2, 5}), std::invalid_argument);
}

TEST_CASE("marginals keep support identity until compacted") {
  JointTable t = product_table(4, 0.25);
  JointTable m = marginalize(t, VarSet::of_bits(0b1010));
  CHECK(m.width() == 2);
  CHECK(m.support() == VarSet::of_bits(0b1010));
  CHECK(m.ground().size() == 4);
  CHECK(m.prob(0b00) == doctest::Approx(0.5625));
  CHECK(m.prob(0b11) == doctest::Approx(0.0625));
  CHECK(is_exchangeable_table(m));  // vector marginals stay exchangeable

  JointTable c = compact(m);
  CHECK(c.ground().size() == 2);
  CHECK(c.support() == c.ground().all());
  CHECK(c.prob(0b01) == doctest::Approx(0.1875));
  CHECK_THROWS_AS(marginalize(t, VarSet::single(17)), std::invalid_argument);

  // a proper dyad subset is never an exchangeable network table
  JointTable nm = marginalize(cherry_table(), VarSet::single(0));
  CHECK_FALSE(is_exchangeable_table(nm));
}

TEST_CASE("exact conditional independence on tables") {
  JointTable prod = product_table(3, 0.3);
  CHECK(ci_holds(prod, VarSet::single(0), VarSet::single(1), VarSet{}));
  CHECK(ci_holds(prod, VarSet::single(0), VarSet::of_bits(0b110), VarSet{}));
  CHECK(ci_holds(prod, VarSet::single(0), VarSet::single(1), VarSet::single(2)));

  // perfectly correlated pair: dependent marginally and given the third
  const GroundSet g3 = GroundSet::vector_of(3);
  std::vector<double> probs(8, 0.0);
  probs[0b000] = 0.25;
  probs[0b011] = 0.25;
  probs[0b100] = 0.25;
  probs[0b111] = 0.25;
  JointTable twin = JointTable::full(g3, probs);
  CHECK_FALSE(ci_holds(twin, VarSet::single(0), VarSet::single(1), VarSet{}));
  CHECK(ci_holds(twin, VarSet::single(0), VarSet::single(2), VarSet{}));
  CHECK(ci_holds(twin, VarSet::single(2), VarSet::single(0), VarSet::single(1)));
  CHECK_THROWS_AS(ci_holds(twin, VarSet::single(0), VarSet::single(0), VarSet{}),
                  std::invalid_argument);

  InducedTableModel itm = induced_model_of_table(prod);
  CHECK(itm.semigraphoid_consistent);
  CHECK(itm.model.holds(VarSet::single(0), VarSet::of_bits(0b110), VarSet{}));
  CHECK(itm.model.size() == 6);  // every pair under both conditioning sets

  CIOracle oracle = oracle_from_table(twin);
  CHECK(oracle(VarSet::single(0), VarSet::single(2), VarSet{}));
  CHECK_FALSE(oracle(VarSet::single(0), VarSet::single(1), VarSet{}));
}

TEST_CASE("equicorrelation validity interval") {
  CHECK_THROWS_AS(Equicorrelation(1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Equicorrelation(33, 0.0), std::length_error);
  CHECK_THROWS_AS(Equicorrelation(5, -0.25), std::invalid_argument);
  CHECK_THROWS_AS(Equicorrelation(5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Equicorrelation(6, -0.24), std::invalid_argument);
  CHECK_NOTHROW(Equicorrelation(5, -0.24));
  CHECK_NOTHROW(Equicorrelation(2, -0.99));
}

TEST_CASE("partial covariance matches explicit matrix inversion") {
  const double grid[] = {-0.24, -0.1, 0.0, 0.1, 0.3, 0.5, 0.9};
  for (int n = 3; n <= 6; ++n) {
    for (double rho : grid) {
      if (!(rho > -1.0 / (n - 1))) continue;
      Equicorrelation model(n, rho);
      const GroundSet g = GroundSet::vector_of(n);
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          const std::uint32_t rest = g.all().without(i - 1).without(j - 1).bits();
          std::uint32_t sub = 0;
          while (true) {
            VarSet c = VarSet::of_bits(sub);
            PartialCovariance pc = equicorrelation_ci(model, i, j, c);
            const double oracle = oracles::partial_cov_by_inversion(n, rho, i, j, c);
            CAPTURE(n);
            CAPTURE(rho);
            CHECK(std::abs(pc.value - oracle) <= 1e-12);
            CHECK(pc.independent == (rho == 0.0));
            if (sub == rest) break;
            sub = (sub - rest) & rest;
          }
        }
      }
    }
  }
}

TEST_CASE("gaussian oracles answer set queries as conjunctions") {
  Equicorrelation model(5, 0.0);
  CIOracle o = oracle_from_gaussian(model);
  CHECK(o(VarSet::single(0), VarSet::of_bits(0b00110), VarSet::single(4)));
  CHECK(o(VarSet::of_bits(0b00011), VarSet::of_bits(0b01100), VarSet{}));

  Equicorrelation dep(5, 0.3);
  CIOracle od = oracle_from_gaussian(dep);
  CHECK_FALSE(od(VarSet::single(0), VarSet::single(1), VarSet{}));
  CHECK_FALSE(od(VarSet::single(0), VarSet::single(1), VarSet::of_bits(0b11100)));
  CHECK_THROWS_AS(od(VarSet::single(0), VarSet::of_bits(0b11), VarSet{}),
                  std::invalid_argument);

  CHECK_THROWS_AS(equicorrelation_ci(model, 1, 1, VarSet{}), std::invalid_argument);
  CHECK_THROWS_AS(equicorrelation_ci(model, 0, 2, VarSet{}), std::invalid_argument);
  CHECK_THROWS_AS(equicorrelation_ci(model, 1, 2, VarSet::single(0)), std::invalid_argument);
  CHECK_THROWS_AS(equicorrelation_ci(model, 1, 2, VarSet{}, -1.0), std::invalid_argument);
}
