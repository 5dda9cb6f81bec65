#pragma once

#include <vector>

#include "delista/measurement.hpp"
#include "delista/types.hpp"

namespace delista {

// Iteration parameters. `lambda` is the per-step soft-threshold applied by
// ista_step; the same iteration minimizes the 1/(2m)-scaled objective of
// lasso_objective with regularization weight lambda * mu / m. Both
// parameterizations are exposed: for_lasso() converts a regularization
// weight into a step threshold, lasso_lambda() goes the other way.
struct IstaConfig {
  double lambda = 0.0;  // soft-threshold applied each step
  double mu = 1.0;      // step parameter; mu >= lambda_max(A^T A) gives monotone descent
  int max_iters = 10000;
  double tol = 1e-10;

  static IstaConfig for_lasso(double lasso_lambda, double mu, Index m,
                              int max_iters = 10000, double tol = 1e-10);
  double lasso_lambda(Index m) const {
    return lambda * mu / static_cast<double>(m);
  }
};

// Config with mu taken from spectral_bound(A), which guarantees monotone
// descent of the objective trace.
IstaConfig default_ista_config(const Matrix& A, double lambda);

// Componentwise sgn(x) * max(|x| - lam, 0).
template <class Derived>
auto soft_threshold(const Eigen::MatrixBase<Derived>& x, double lam) {
  return x.unaryExpr([lam](double v) {
    const double shrunk = std::abs(v) - lam;
    return shrunk > 0.0 ? (v > 0.0 ? shrunk : -shrunk) : 0.0;
  });
}

// (1/(2m)) ||Ax - b||^2 + lambda ||x||_1.
double lasso_objective(const Matrix& A, const Vector& b, const Vector& x,
                       double lambda);

// One shrinkage-thresholding step,
// S_lambda((I - A^T A / mu) x + A^T b / mu), evaluated in residual form.
Vector ista_step(const Matrix& A, const Vector& b, const Vector& x,
                 const IstaConfig& cfg);

struct IstaResult {
  Vector x;
  std::vector<double> objective_trace;  // 1/(2m)-scaled objective, entry per iterate
  int iters = 0;
  bool converged = false;
};

// Iterates ista_step from x = 0 until the iterate difference drops below
// cfg.tol or max_iters is reached. Non-convergence is reported, not thrown.
IstaResult ista_solve(const Matrix& A, const Vector& b, const IstaConfig& cfg);

// Upper bound on lambda_max(A^T A): power iteration (200 rounds, relative
// change < 1e-10) times a 1.01 safety factor.
double spectral_bound(const Matrix& A);

inline double lasso_objective(const MeasurementMatrix& A, const Vector& b,
                              const Vector& x, double lambda) {
  return lasso_objective(A.entries, b, x, lambda);
}
inline IstaResult ista_solve(const MeasurementMatrix& A, const Vector& b,
                             const IstaConfig& cfg) {
  return ista_solve(A.entries, b, cfg);
}
inline double spectral_bound(const MeasurementMatrix& A) {
  return spectral_bound(A.entries);
}

}  // namespace delista
