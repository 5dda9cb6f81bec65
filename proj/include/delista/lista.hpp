#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "delista/datagen.hpp"
#include "delista/measurement.hpp"
#include "delista/types.hpp"

namespace delista {

// Unrolled network parameters. W[k] is stored m x N and the forward pass
// applies its transpose to the residual:
//   x^{k+1} = S_{lambda[k]}(x^k + W[k]^T (b - A x^k)).
// Each parameter tensor carries a learning multiplier (c_W, c_lambda) that
// scales its effective step size during training; the stage-wise schedule
// decays these multipliers as layers mature.
struct ListaParams {
  std::vector<Matrix> W;
  std::vector<double> lambda;
  std::vector<double> c_W;
  std::vector<double> c_lambda;

  int depth() const { return static_cast<int>(W.size()); }
  Index m() const { return W.empty() ? 0 : W.front().rows(); }
  Index signal_dim() const { return W.empty() ? 0 : W.front().cols(); }
  void validate() const;
};

// W^k = A / mu and lambda^k = lam for every layer, so the untrained forward
// pass reproduces the classical shrinkage-thresholding iteration exactly.
ListaParams init_from_ista(const Matrix& A, double mu, double lam, int K);
inline ListaParams init_from_ista(const MeasurementMatrix& A, double mu,
                                  double lam, int K) {
  return init_from_ista(A.entries, mu, lam, K);
}

// All iterates x^1..x^depth from x^0 (default zero).
std::vector<Vector> forward(const Matrix& A, const ListaParams& params,
                            const Vector& b, const Vector* x0 = nullptr,
                            int depth = -1);

// Column-stacked training batch: one sample per column.
struct Batch {
  Matrix x_star;  // N x B
  Matrix b;       // m x B
  Index size() const { return b.cols(); }
};

Batch batch_from_dataset(const Dataset& data, Index first, Index count);

// Final iterate only, batched over columns; used for loss and validation.
Matrix forward_final(const Matrix& A, const ListaParams& params,
                     const Matrix& b, int depth, const Matrix* x0 = nullptr);

// Mean over the batch of || x^depth_i - x*_i ||_2^2.
double loss(const Matrix& A, const ListaParams& params, const Batch& batch,
            int depth = -1);

struct Gradients {
  std::vector<Matrix> W;
  std::vector<double> lambda;
};

// Exact reverse-mode gradients of loss() through the unrolled recursion.
// The soft-threshold derivative is 1{|u| > lambda} w.r.t. its argument and
// -sgn(u) 1{|u| > lambda} w.r.t. the threshold; the subgradient 0 is chosen
// at |u| = lambda. Layers below `first_trainable` get zero gradients and the
// downward sweep stops early.
Gradients backward(const Matrix& A, const ListaParams& params,
                   const Batch& batch, int depth = -1,
                   int first_trainable = 0);

struct AdamState {
  std::vector<Matrix> m_w, v_w;
  std::vector<double> m_lambda, v_lambda;
  long step = 0;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;

  static AdamState for_params(const ListaParams& params);
};

// Bias-corrected Adam over layers [first_layer, last_layer); the effective
// rate of each tensor is rate times its learning multiplier.
void adam_update(AdamState& state, ListaParams& params, const Gradients& grads,
                 double rate, int first_layer = 0, int last_layer = -1);

struct TrainConfig {
  double alpha0 = 5e-4;                        // stage learning rate
  std::array<double, 2> rate_decays{0.2, 0.02};  // fine-tune rates as fractions of alpha0
  double gamma = 0.3;                          // multiplier decay per stage
  int patience = 400;                          // updates without improvement before a phase ends
  int max_stage_iters = 5000;                  // hard cap per phase
  int batch_size = 64;
  std::uint64_t seed = 0;
  double val_fraction = 0.1;   // tail of the dataset held out for validation
  int val_every = 1;           // validation cadence in updates
  double divergence_db = 50.0; // validation NMSE above this aborts the stage
  double init_lambda_scale = 0.1;  // initial threshold relative to ||A^T b||_inf / mu

  // Full-scale preset values; the defaults above are sized for desk runs.
  static TrainConfig paper_scale();
};

// 10 log10(||x - x*||^2 / ||x*||^2), floored at -300 dB.
double nmse(const Vector& x, const Vector& x_star);
double nmse(const Matrix& x, const Matrix& x_star);

struct TraceEntry {
  int stage = 0;      // 1-based layer stage
  int phase = 0;      // 0 = stage baseline, 1..3 = training phases
  long update = 0;    // update count within the phase
  double val_nmse_db = 0.0;
  double best_val_nmse_db = 0.0;  // best seen anywhere so far
};

struct TrainResult {
  ListaParams params;
  std::vector<TraceEntry> trace;
  double best_val_nmse_db = 0.0;
  bool diverged = false;
  double mu = 0.0;           // step bound used for initialization
  double init_lambda = 0.0;  // initial threshold used
};

// Stage-wise schedule: for each stage tau, train the new layer at alpha0,
// then fine-tune all unlocked layers at the two decayed rates, then multiply
// the learning multipliers of every unlocked tensor by gamma. Each phase
// stops once validation NMSE has not improved for cfg.patience updates or at
// cfg.max_stage_iters. Returns the best-validation parameters.
TrainResult train_stagewise(const MeasurementMatrix& A, const Dataset& data,
                            const TrainConfig& cfg, int K);

}  // namespace delista
