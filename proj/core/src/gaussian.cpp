#include <exchci/gaussian.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace exchci {

Equicorrelation::Equicorrelation(int n_in, double rho_in) : n(n_in), rho(rho_in) {
  if (n > kMaxElements) throw std::length_error("equicorrelation is limited to 32 variables");
  if (n < 2) throw std::invalid_argument("equicorrelation needs at least two variables");
  const double low = -1.0 / (n - 1);
  if (!(rho > low) || !(rho < 1.0)) {
    std::ostringstream os;
    os << "equicorrelation rho must lie in (" << low << ", 1), got " << rho;
    throw std::invalid_argument(os.str());
  }
}

PartialCovariance equicorrelation_ci(const Equicorrelation& model, int i,
                                     int j, VarSet c, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const GroundSet g = GroundSet::vector_of(model.n);
  if (i < 1 || i > model.n || j < 1 || j > model.n || i == j) {
    throw std::invalid_argument("equicorrelation_ci needs two distinct variables");
  }
  if (!c.subset_of(g.all()) || c.contains(i - 1) || c.contains(j - 1)) {
    throw std::invalid_argument("conditioning set must avoid the tested pair");
  }
  const int m = c.size();
  // Schur complement of the equicorrelated block: the denominator is
  // positive everywhere on the valid rho interval.
  const double value =
      model.rho * (1.0 - model.rho) / (1.0 + (m - 1) * model.rho);
  return PartialCovariance{std::fabs(value) <= tol, value};
}

CIOracle oracle_from_gaussian(const Equicorrelation& model, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const GroundSet g = GroundSet::vector_of(model.n);
  Equicorrelation copy = model;
  auto query = [copy, g, tol](VarSet a, VarSet b, VarSet c) {
    if (!a.disjoint(b) || !a.disjoint(c) || !b.disjoint(c)) {
      throw std::invalid_argument("query parts must be pairwise disjoint");
    }
    if (!(a | b | c).subset_of(g.all())) {
      throw std::invalid_argument("query outside the ground set");
    }
    bool all = true;
    a.for_each([&](int u) {
      b.for_each([&](int v) {
        if (!equicorrelation_ci(copy, u + 1, v + 1, c, tol).independent) {
          all = false;
        }
      });
    });
    return all;
  };
  return CIOracle{g, query};
}

}  // namespace exchci
