#include "delista/ista.hpp"

#include <cmath>

#include "delista/rng.hpp"

namespace delista {

IstaConfig IstaConfig::for_lasso(double lasso_lambda, double mu, Index m,
                                 int max_iters, double tol) {
  IstaConfig cfg;
  cfg.lambda = lasso_lambda * static_cast<double>(m) / mu;
  cfg.mu = mu;
  cfg.max_iters = max_iters;
  cfg.tol = tol;
  return cfg;
}

IstaConfig default_ista_config(const Matrix& A, double lambda) {
  IstaConfig cfg;
  cfg.lambda = lambda;
  cfg.mu = spectral_bound(A);
  return cfg;
}

double lasso_objective(const Matrix& A, const Vector& b, const Vector& x,
                       double lambda) {
  if (A.cols() != x.size() || A.rows() != b.size())
    throw DimensionError("lasso_objective: dimension mismatch");
  const double m = static_cast<double>(A.rows());
  return (A * x - b).squaredNorm() / (2.0 * m) + lambda * x.lpNorm<1>();
}

Vector ista_step(const Matrix& A, const Vector& b, const Vector& x,
                 const IstaConfig& cfg) {
  if (A.cols() != x.size() || A.rows() != b.size())
    throw DimensionError("ista_step: dimension mismatch");
  const Vector u = x + (1.0 / cfg.mu) * (A.transpose() * (b - A * x));
  return soft_threshold(u, cfg.lambda);
}

IstaResult ista_solve(const Matrix& A, const Vector& b, const IstaConfig& cfg) {
  IstaResult res;
  res.x = Vector::Zero(A.cols());
  const double lasso_lam = cfg.lasso_lambda(A.rows());
  res.objective_trace.push_back(lasso_objective(A, b, res.x, lasso_lam));

  for (int it = 0; it < cfg.max_iters; ++it) {
    Vector next = ista_step(A, b, res.x, cfg);
    const double diff = (next - res.x).norm();
    res.x = std::move(next);
    res.iters = it + 1;
    res.objective_trace.push_back(lasso_objective(A, b, res.x, lasso_lam));
    if (diff <= cfg.tol) {
      res.converged = true;
      break;
    }
  }
  return res;
}

double spectral_bound(const Matrix& A) {
  if (A.size() == 0) throw DimensionError("spectral_bound: empty matrix");

  // Seeded random start; a deterministic all-ones start could be orthogonal
  // to the dominant eigenvector for structured matrices.
  Rng rng(0x5eedULL);
  Vector v(A.cols());
  for (Index i = 0; i < v.size(); ++i) v[i] = rng.normal();
  v.normalize();

  double estimate = 0.0;
  for (int it = 0; it < 200; ++it) {
    Vector w = A.transpose() * (A * v);
    const double next = v.dot(w);
    const double norm = w.norm();
    if (norm == 0.0) return 0.0;  // A v = 0 for every iterate: zero matrix
    v = w / norm;
    if (it > 0 && std::abs(next - estimate) < 1e-10 * std::abs(next)) {
      estimate = next;
      break;
    }
    estimate = next;
  }
  return 1.01 * estimate;
}

}  // namespace delista
