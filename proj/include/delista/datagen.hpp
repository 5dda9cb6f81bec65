#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "delista/measurement.hpp"
#include "delista/types.hpp"

namespace delista {

// Ground-truth sparse vector. Entries are nonzero exactly on `support`.
struct SparseSignal {
  Vector values;
  std::vector<Index> support;

  Index sparsity() const { return static_cast<Index>(support.size()); }
};

struct Observation {
  Vector b;
  double sigma = 0.0;  // noise standard deviation actually used
  std::uint64_t noise_seed = 0;
};

struct Dataset {
  std::vector<SparseSignal> signals;
  std::vector<Observation> observations;
  std::string matrix_ref;
  double p = 0.0;
  double snr_db = 0.0;
  std::uint64_t master_seed = 0;

  Index size() const { return static_cast<Index>(signals.size()); }
};

// Bernoulli(p) support, standard normal values on the support, exact zeros
// elsewhere. An empty support is a valid outcome.
SparseSignal gen_signal(Index N, double p, std::uint64_t seed);

// b = A x + eps with eps ~ N(0, sigma^2 I). sigma is chosen from the realized
// clean signal so that E||eps||_2 / ||Ax||_2 = 10^(-snr_db/20); pass
// snr_db = +infinity for a noiseless observation (sigma = 0).
Observation observe(const MeasurementMatrix& A, const SparseSignal& x,
                    double snr_db, std::uint64_t seed);

// Regenerates the exact noise vector of an Observation from its stored seed
// and sigma.
Vector regenerate_noise(Index m, double sigma, std::uint64_t noise_seed);

// n independent (signal, observation) pairs with per-sample seeds derived
// from master_seed via derive_seed, so generation order does not matter.
Dataset gen_dataset(const MeasurementMatrix& A, Index n, double p,
                    double snr_db, std::uint64_t master_seed);

std::string matrix_ref_string(const MeasurementMatrix& A);

}  // namespace delista
