#include "delista/measurement.hpp"

#include <cmath>

#include "delista/rng.hpp"

namespace delista {

std::string ensemble_name(Ensemble e) {
  switch (e) {
    case Ensemble::Gaussian:
      return "gaussian";
    case Ensemble::HadamardSubsampled:
      return "hadamard";
  }
  throw ParameterError("unknown ensemble tag");
}

Ensemble ensemble_from_name(const std::string& name) {
  if (name == "gaussian") return Ensemble::Gaussian;
  if (name == "hadamard") return Ensemble::HadamardSubsampled;
  throw ParameterError("unknown ensemble name: " + name);
}

MeasurementMatrix gen_gaussian(Index m, Index N, std::uint64_t seed) {
  if (m <= 0 || N <= 0) throw DimensionError("gen_gaussian: m and N must be positive");
  if (m > N) throw DimensionError("gen_gaussian: underdetermined regime requires m <= N");

  Rng rng(seed);
  Matrix A(m, N);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < N; ++j) A(i, j) = rng.normal();

  // Column norm sqrt(m) makes the sample-covariance diagonal exactly one.
  const double target = std::sqrt(static_cast<double>(m));
  for (Index j = 0; j < N; ++j) {
    const double norm = A.col(j).norm();
    if (norm == 0.0) {
      // Probability zero; a zero column would have an undefined scale.
      A(0, j) = 1.0;
      A.col(j) *= target / A.col(j).norm();
    } else {
      A.col(j) *= target / norm;
    }
  }

  MeasurementMatrix result;
  result.entries = std::move(A);
  result.ensemble = Ensemble::Gaussian;
  result.entry_bound = result.entries.cwiseAbs().maxCoeff();
  result.seed = seed;
  return result;
}

Matrix gen_hadamard(int d, int max_log2) {
  if (d < 0) throw DimensionError("gen_hadamard: order must be nonnegative");
  if (d > max_log2)
    throw ResourceError("gen_hadamard: 2^" + std::to_string(d) +
                        " exceeds the configured cap 2^" + std::to_string(max_log2));

  const Index n = Index(1) << d;
  Matrix H(n, n);
  H(0, 0) = 1.0;
  for (Index h = 1; h < n; h *= 2) {
    H.block(0, h, h, h) = H.block(0, 0, h, h);
    H.block(h, 0, h, h) = H.block(0, 0, h, h);
    H.block(h, h, h, h) = -H.block(0, 0, h, h);
  }
  return H;
}

MeasurementMatrix subsample_rows(const Matrix& H, Index m, std::uint64_t seed,
                                 Index max_rows) {
  if (m <= 0) throw DimensionError("subsample_rows: m must be positive");
  if (m > max_rows)
    throw DimensionError("subsample_rows: m exceeds the configured maximum");
  if (m > H.rows())
    throw DimensionError("subsample_rows: cannot draw more rows than H has");

  Rng rng(seed);
  Matrix A(m, H.cols());
  for (Index r = 0; r < m; ++r) {
    const auto pick = static_cast<Index>(rng.below(static_cast<std::uint64_t>(H.rows())));
    A.row(r) = H.row(pick);
  }

  MeasurementMatrix result;
  result.entries = std::move(A);
  result.ensemble = Ensemble::HadamardSubsampled;
  result.entry_bound = 1.0;
  result.seed = seed;
  return result;
}

SampleCovariance sample_covariance(const MeasurementMatrix& A,
                                   bool materialize_full, Index full_cap) {
  const Matrix& M = A.entries;
  if (M.size() == 0) throw DimensionError("sample_covariance: empty matrix");
  const double inv_m = 1.0 / static_cast<double>(M.rows());

  SampleCovariance cov;
  cov.diagonal = M.colwise().squaredNorm().transpose() * inv_m;
  if (materialize_full && M.cols() <= full_cap) {
    cov.full = (M.transpose() * M) * inv_m;
  }
  return cov;
}

void fwht_inplace(Eigen::Ref<Vector> x) {
  const Index n = x.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw DimensionError("fwht: length must be a power of two");

  for (Index h = 1; h < n; h *= 2) {
    for (Index i = 0; i < n; i += 2 * h) {
      for (Index j = i; j < i + h; ++j) {
        const double a = x[j];
        const double b = x[j + h];
        x[j] = a + b;
        x[j + h] = a - b;
      }
    }
  }
}

Vector fwht(Vector x) {
  fwht_inplace(x);
  return x;
}

}  // namespace delista
