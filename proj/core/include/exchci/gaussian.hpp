#pragma once

#include <exchci/exchange.hpp>
#include <exchci/ground.hpp>

namespace exchci {

// Gaussian vector with unit variances and a common correlation rho.
// Valid exactly when -1/(n-1) < rho < 1, the open interval on which the
// covariance matrix is positive definite.
struct Equicorrelation {
  int n = 2;
  double rho = 0.0;

  Equicorrelation(int n, double rho);
};

struct PartialCovariance {
  bool independent = false;
  double value = 0.0;
};

// Partial covariance of X_i and X_j given X_C, in closed form:
// rho(1-rho)/(1+(m-1)rho) with m = |C|.  The pair is declared independent
// when |value| <= tol.
PartialCovariance equicorrelation_ci(const Equicorrelation& model, int i,
                                     int j, VarSet c, double tol = 1e-9);

// Conditional-independence oracle over vector_of(model.n): a set statement
// holds when every pair (i in A, j in B) has vanishing partial covariance
// given C, which is exact for Gaussians (composition holds).
CIOracle oracle_from_gaussian(const Equicorrelation& model, double tol = 1e-9);

}  // namespace exchci
