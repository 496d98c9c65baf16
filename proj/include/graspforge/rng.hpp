#ifndef GRASPFORGE_RNG_HPP_
#define GRASPFORGE_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace gf {

// Deterministic random stream. All randomness in the project flows through
// this class so that runs are reproducible from a single seed and parallel
// workers can draw from independent child streams via split().
//
// uniform()/normal() are implemented directly on top of the mt19937_64 output
// rather than <random> distributions; the standard does not pin down
// distribution algorithms, and we want identical streams across toolchains.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t next_u64();

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform();
  // Uniform on [a, b).
  double uniform(double a, double b);
  // Uniform integer in [0, n). n must be > 0.
  uint64_t uniform_index(uint64_t n);
  // Standard normal (Box-Muller; the spare value is cached in the stream).
  double normal();
  double normal(double mu, double sigma);

  // Independent child stream. Children of the same parent with distinct
  // stream ids (or labels) are statistically independent for our purposes.
  Rng split(uint64_t stream) const;
  Rng split(std::string_view label) const;

  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
  std::mt19937_64 gen_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

// SplitMix64 finalizer; used for seed derivation and config hashing.
uint64_t mix64(uint64_t x);
// FNV-1a over a byte string.
uint64_t fnv1a(std::string_view bytes);

}  // namespace gf

#endif  // GRASPFORGE_RNG_HPP_
