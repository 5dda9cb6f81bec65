#include "delista/datagen.hpp"

#include <cmath>

#include "delista/rng.hpp"

namespace delista {

SparseSignal gen_signal(Index N, double p, std::uint64_t seed) {
  if (N <= 0) throw DimensionError("gen_signal: N must be positive");
  if (!(p > 0.0 && p < 1.0))
    throw ParameterError("gen_signal: p must lie strictly in (0, 1)");

  Rng rng(seed);
  SparseSignal sig;
  sig.values = Vector::Zero(N);
  for (Index i = 0; i < N; ++i) {
    if (rng.uniform() < p) {
      sig.support.push_back(i);
      sig.values[i] = rng.normal();
      if (sig.values[i] == 0.0) sig.values[i] = 1.0;  // keep support exact; probability zero
    }
  }
  return sig;
}

Observation observe(const MeasurementMatrix& A, const SparseSignal& x,
                    double snr_db, std::uint64_t seed) {
  if (A.cols() != x.values.size())
    throw DimensionError("observe: signal length does not match matrix columns");

  const Vector y = A.entries * x.values;
  Observation obs;
  obs.noise_seed = seed;

  if (std::isinf(snr_db) && snr_db > 0) {
    obs.b = y;
    obs.sigma = 0.0;
    return obs;
  }

  const double y_norm = y.norm();
  if (y_norm == 0.0)
    throw DegenerateSignalError(
        "observe: zero clean signal, noise scale undefined for finite SNR");

  const Index m = A.rows();
  obs.sigma = y_norm * std::pow(10.0, -snr_db / 20.0) /
              std::sqrt(static_cast<double>(m));
  obs.b = y + regenerate_noise(m, obs.sigma, seed);
  return obs;
}

Vector regenerate_noise(Index m, double sigma, std::uint64_t noise_seed) {
  Vector eps(m);
  if (sigma == 0.0) {
    eps.setZero();
    return eps;
  }
  Rng rng(noise_seed);
  for (Index i = 0; i < m; ++i) eps[i] = sigma * rng.normal();
  return eps;
}

Dataset gen_dataset(const MeasurementMatrix& A, Index n, double p,
                    double snr_db, std::uint64_t master_seed) {
  if (n < 1) throw DimensionError("gen_dataset: n must be at least 1");

  Dataset ds;
  ds.matrix_ref = matrix_ref_string(A);
  ds.p = p;
  ds.snr_db = snr_db;
  ds.master_seed = master_seed;
  ds.signals.reserve(static_cast<std::size_t>(n));
  ds.observations.reserve(static_cast<std::size_t>(n));

  for (Index i = 0; i < n; ++i) {
    const std::uint64_t sig_seed = derive_seed(master_seed, 2 * static_cast<std::uint64_t>(i));
    const std::uint64_t noise_seed = derive_seed(master_seed, 2 * static_cast<std::uint64_t>(i) + 1);
    SparseSignal sig = gen_signal(A.cols(), p, sig_seed);
    Observation obs;
    try {
      obs = observe(A, sig, snr_db, noise_seed);
    } catch (const DegenerateSignalError&) {
      // One retry with a perturbed seed; a second zero signal aborts.
      sig = gen_signal(A.cols(), p, splitmix64(sig_seed));
      obs = observe(A, sig, snr_db, noise_seed);
    }
    ds.signals.push_back(std::move(sig));
    ds.observations.push_back(std::move(obs));
  }
  return ds;
}

std::string matrix_ref_string(const MeasurementMatrix& A) {
  return ensemble_name(A.ensemble) + ":m=" + std::to_string(A.rows()) +
         ",N=" + std::to_string(A.cols()) + ",seed=" + std::to_string(A.seed);
}

}  // namespace delista
