#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "delista/types.hpp"

namespace delista {

enum class Ensemble { Gaussian, HadamardSubsampled };

std::string ensemble_name(Ensemble e);
Ensemble ensemble_from_name(const std::string& name);

// Dense m x N sensing operator with unit sample-covariance diagonal by
// construction. The entries are stored unnormalized; every 1/m or 1/sqrt(m)
// factor lives in the formulas that consume the matrix.
struct MeasurementMatrix {
  Matrix entries;
  Ensemble ensemble = Ensemble::Gaussian;
  // Entry bound K: exactly 1 for +-1 ensembles, the empirical max |A_ij|
  // for Gaussian ones (recorded for the remainder diagnostic; a Gaussian
  // matrix has no uniform bound).
  double entry_bound = 1.0;
  std::uint64_t seed = 0;

  Index rows() const { return entries.rows(); }
  Index cols() const { return entries.cols(); }
};

// Sample covariance A^T A / m. The full matrix is only materialized on
// request and below a size cap; the diagonal is always computed.
struct SampleCovariance {
  std::optional<Matrix> full;
  Vector diagonal;
};

inline constexpr int kMaxHadamardLog2 = 12;
inline constexpr Index kMaxCovMaterialize = 4096;

// i.i.d. standard normal entries, then each column rescaled to Euclidean
// norm sqrt(m) so the sample-covariance diagonal is exactly one.
MeasurementMatrix gen_gaussian(Index m, Index N, std::uint64_t seed);

// Recursive +-1 construction, H_0 = [1] doubled d times. Satisfies
// H_d^T H_d = 2^d I exactly.
Matrix gen_hadamard(int d, int max_log2 = kMaxHadamardLog2);

// m rows of H drawn independently and uniformly at random (with
// replacement), preserving the i.i.d.-rows sampling model.
MeasurementMatrix subsample_rows(const Matrix& H, Index m, std::uint64_t seed,
                                 Index max_rows = 1 << 20);

SampleCovariance sample_covariance(const MeasurementMatrix& A,
                                   bool materialize_full = false,
                                   Index full_cap = kMaxCovMaterialize);

// In-place fast Walsh-Hadamard transform; equals gen_hadamard(d) * x for
// length 2^d in O(d 2^d) operations.
void fwht_inplace(Eigen::Ref<Vector> x);
Vector fwht(Vector x);

}  // namespace delista
