#ifndef POPTRADE_RNG_HPP
#define POPTRADE_RNG_HPP

#include <array>
#include <cstdint>

namespace poptrade {

/// Deterministic PRNG for the simulation: xoshiro256++ seeded through
/// splitmix64. Hand-rolled so that a given seed produces the same stream on
/// every platform and standard library, which keeps emitted logs
/// byte-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Sub-stream derivation used for per-trader streams: the stream with
  /// index i is seeded with splitmix64_mix(master_seed XOR (i+1)*GOLDEN),
  /// GOLDEN = 0x9E3779B97F4A7C15. Streams for distinct indices are
  /// independent for all practical purposes and independent of scheduling.
  static Rng stream(std::uint64_t master_seed, std::uint64_t stream_index);

  std::uint64_t next_u64();

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform01();

  /// Gaussian via Box-Muller (two uniforms per call, no cached spare).
  double normal(double mean, double stddev);

  /// Exact Binomial(n, p) sample by geometric waiting times; O(n*min(p,1-p))
  /// expected work, no underflow for any n.
  int binomial(int n, double p);

 private:
  std::array<std::uint64_t, 4> state_{};
};

}  // namespace poptrade

#endif  // POPTRADE_RNG_HPP
