#pragma once

#include <cstdint>

namespace xasim {

/// Counter-based random stream (SplitMix64 output function evaluated in
/// counter mode). Every (seed, stream) pair owns an independent sequence, so
/// sampling workers can draw per-shot streams without shared state and merges
/// stay order-independent.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1).
  double next_unit();

  bool bernoulli(double p);

 private:
  std::uint64_t base_;
  std::uint64_t count_ = 0;
};

/// Deterministic sub-seed derivation, e.g. one seed per dipole component.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag);

}  // namespace xasim
