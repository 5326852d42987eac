#include "poptrade/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace poptrade {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += kGolden);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t s = seed;
  for (auto& word : state_) word = splitmix64(s);
}

Rng Rng::stream(std::uint64_t master_seed, std::uint64_t stream_index) {
  std::uint64_t s = master_seed ^ ((stream_index + 1) * kGolden);
  return Rng(splitmix64(s));
}

std::uint64_t Rng::next_u64() {
  // xoshiro256++ step.
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Rng::uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::normal(double mean, double stddev) {
  double u1 = uniform01();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  return mean + stddev * r * std::cos(2.0 * 3.14159265358979323846 * u2);
}

int Rng::binomial(int n, double p) {
  if (n < 0 || !(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("binomial: need n >= 0 and p in [0, 1]");
  }
  if (n == 0 || p == 0.0) return 0;
  if (p == 1.0) return n;
  if (p > 0.5) return n - binomial(n, 1.0 - p);

  // Count successes whose geometric waiting times fit into n trials.
  const double log_q = std::log1p(-p);
  int successes = 0;
  double trials = 0.0;
  for (;;) {
    double u = uniform01();
    if (u <= 0.0) u = 0x1.0p-53;
    trials += std::floor(std::log(u) / log_q) + 1.0;
    if (trials > static_cast<double>(n)) break;
    ++successes;
  }
  return successes;
}

}  // namespace poptrade
