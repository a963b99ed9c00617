#include <benchmark/benchmark.h>

#include <exchci/exchange.hpp>
#include <exchci/graph.hpp>
#include <exchci/table.hpp>

using namespace exchci;

namespace {

void BM_separation_incidence(benchmark::State& state) {
  MixedGraph g = family_graph(GraphFamily::UndIncidence, int(state.range(0)));
  const GroundSet& gr = g.ground();
  const VarSet a = VarSet::single(gr.index_of(Dyad(1, 2)));
  const VarSet b = VarSet::single(gr.index_of(Dyad(3, 4)));
  const VarSet c = star_separator(gr, Dyad(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(separates(g, a, b, c));
}
BENCHMARK(BM_separation_incidence)->Arg(5)->Arg(6)->Arg(7);

void BM_semigraphoid_closure(benchmark::State& state) {
  const GroundSet g = GroundSet::vector_of(int(state.range(0)));
  IndependenceModel seed(g);
  seed.insert(0, 1, VarSet::single(2));
  seed = orbit_closure(seed);
  for (auto _ : state) benchmark::DoNotOptimize(semigraphoid_closure(seed));
}
BENCHMARK(BM_semigraphoid_closure)->Arg(4)->Arg(5);

void BM_induced_model(benchmark::State& state) {
  MixedGraph g = family_graph(GraphFamily::UndIncidence, 4);
  for (auto _ : state) benchmark::DoNotOptimize(induced_model(g));
}
BENCHMARK(BM_induced_model);

void BM_minimal_separators(benchmark::State& state) {
  MixedGraph g = family_graph(GraphFamily::UndIncidence, int(state.range(0)));
  const GroundSet& gr = g.ground();
  const int u = gr.index_of(Dyad(1, 2)), v = gr.index_of(Dyad(3, 4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_separators(g, u, v, SeparatorMode::Minimal));
  }
}
BENCHMARK(BM_minimal_separators)->Arg(5)->Arg(6);

void BM_table_ci(benchmark::State& state) {
  const GroundSet g = GroundSet::network_on(4);
  std::vector<double> probs(64, 1.0 / 64.0);
  JointTable t = JointTable::full(g, std::move(probs));
  const VarSet a = VarSet::single(g.index_of(Dyad(1, 2)));
  const VarSet b = VarSet::single(g.index_of(Dyad(3, 4)));
  const VarSet c = pairwise_separator(g, Dyad(1, 2), Dyad(3, 4));
  for (auto _ : state) benchmark::DoNotOptimize(ci_holds(t, a, b, c));
}
BENCHMARK(BM_table_ci);

void BM_classify_incidence(benchmark::State& state) {
  CIOracle oracle = oracle_from_graph(family_graph(GraphFamily::UndIncidence, 5));
  for (auto _ : state) benchmark::DoNotOptimize(classify_regime(oracle, 5));
}
BENCHMARK(BM_classify_incidence);

}  // namespace

BENCHMARK_MAIN();
