#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace delista {

// Finalizer of the splitmix64 generator. Used as a seed mixer so that child
// streams derived from (master, index) are decorrelated.
constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Child seed for stream `index` under `master`. Counter-mixed, so samples can
// be generated in any order (or concurrently) with identical results.
constexpr std::uint64_t derive_seed(std::uint64_t master,
                                    std::uint64_t index) noexcept {
  return splitmix64(master ^ splitmix64(index + 1));
}

// Deterministic random stream: mt19937_64 (bit-exact sequence fixed by the
// standard) with hand-rolled uniform and normal transforms. The standard
// library distributions are implementation-defined and are avoided on purpose,
// so pinned regression constants stay valid.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Marsaglia's polar method; the spare value is cached
  // so the stream is a pure function of seed and call count.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

  // Uniform integer in [0, n), rejection-sampled to avoid modulo bias.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t bound = max - max % n;  // largest multiple of n
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= bound);
    return x % n;
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace delista
