#include "oracles.hpp"

#include <vector>

#include <Eigen/Dense>

namespace oracles {

using exchci::IndependenceModel;
using exchci::MixedGraph;
using exchci::VarSet;

namespace {

Triple key(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  if (a > b) std::swap(a, b);
  return {a, b, c};
}

// every nonempty proper sub-bitmask of bits
template <class F>
void proper_subsets(std::uint32_t bits, F f) {
  for (std::uint32_t sub = (bits - 1) & bits; sub != 0; sub = (sub - 1) & bits) f(sub);
}

}  // namespace

std::set<Triple> brute_closure(const IndependenceModel& seed) {
  std::set<Triple> out;
  std::vector<Triple> items;
  auto add = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (a == 0 || b == 0) return;
    Triple t = key(a, b, c);
    if (out.insert(t).second) items.push_back(t);
  };
  seed.for_each_elementary([&](int u, int v, VarSet c) {
    add(std::uint32_t{1} << u, std::uint32_t{1} << v, c.bits());
  });

  for (bool changed = true; changed;) {
    changed = false;
    const std::size_t before = items.size();
    for (std::size_t i = 0; i < items.size(); ++i) {
      auto [a, b, c] = items[i];
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        proper_subsets(y, [&](std::uint32_t ysub) {
          add(x, ysub, c);             // decomposition
          add(x, ysub, c | (y ^ ysub));  // weak union
        });
      }
      for (std::size_t j = 0; j < items.size(); ++j) {
        auto [p, q, r] = items[j];
        // contraction: <x,y|c> and <x,d|c u y>  =>  <x, y u d | c>
        for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
          for (auto [w, d] : {std::pair{p, q}, std::pair{q, p}}) {
            if (w == x && r == (c | y) && (d & (x | y | c)) == 0) add(x, y | d, c);
          }
        }
      }
    }
    changed = items.size() != before;
  }
  return out;
}

bool brute_contains(const std::set<Triple>& closure, VarSet a, VarSet b, VarSet c) {
  if (a.empty() || b.empty()) return true;
  return closure.count(key(a.bits(), b.bits(), c.bits())) != 0;
}

bool und_path_separated(const MixedGraph& g, int a, int b, VarSet c) {
  std::vector<int> stack{a};
  VarSet seen = VarSet::single(a);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == b) return false;
    for (int u : g.neighbors(v).elements()) {
      if (seen.contains(u) || (c.contains(u) && u != b)) continue;
      seen = seen.with(u);
      stack.push_back(u);
    }
  }
  return true;
}

bool bid_path_separated(const MixedGraph& g, int a, int b, VarSet c) {
  std::vector<int> stack{a};
  VarSet seen = VarSet::single(a);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == b) return false;
    for (int u : g.neighbors(v).elements()) {
      if (seen.contains(u) || (u != b && !c.contains(u))) continue;
      seen = seen.with(u);
      stack.push_back(u);
    }
  }
  return true;
}

double partial_cov_by_inversion(int n, double rho, int i, int j, VarSet c) {
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Constant(n, n, rho);
  sigma.diagonal().setOnes();
  const std::vector<int> cs = c.elements();
  const int m = int(cs.size());
  if (m == 0) return sigma(i - 1, j - 1);
  Eigen::MatrixXd scc(m, m);
  Eigen::VectorXd sic(m), sjc(m);
  for (int r = 0; r < m; ++r) {
    sic(r) = sigma(i - 1, cs[r]);
    sjc(r) = sigma(j - 1, cs[r]);
    for (int s = 0; s < m; ++s) scc(r, s) = sigma(cs[r], cs[s]);
  }
  return sigma(i - 1, j - 1) - sic.dot(scc.inverse() * sjc);
}

}  // namespace oracles
