#pragma once

#include <cstdint>
#include <set>
#include <tuple>

#include <exchci/graph.hpp>
#include <exchci/model.hpp>

// Brute-force reference implementations the tests compare the library against.
namespace oracles {

// (a, b, c) bit-triples with a <= b numerically; symmetry is the swap.
using Triple = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>;

// Fixpoint of the semi-graphoid rules over general statements, seeded with the
// model's elementary statements.
std::set<Triple> brute_closure(const exchci::IndependenceModel& seed);
bool brute_contains(const std::set<Triple>&, exchci::VarSet a, exchci::VarSet b,
                    exchci::VarSet c);

// Path criteria for the two pure graph kinds.
bool und_path_separated(const exchci::MixedGraph&, int a, int b, exchci::VarSet c);
bool bid_path_separated(const exchci::MixedGraph&, int a, int b, exchci::VarSet c);

// Partial covariance of variables i, j (1-based) given the 0-based element set
// c under the n-variable equicorrelation matrix, by explicit matrix inversion.
double partial_cov_by_inversion(int n, double rho, int i, int j, exchci::VarSet c);

}  // namespace oracles
