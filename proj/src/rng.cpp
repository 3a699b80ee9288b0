#include "xasim/rng.hpp"

namespace xasim {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kStreamStride = 0xC2B2AE3D27D4EB4FULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : base_(mix64(seed + kGolden) + stream * kStreamStride) {}

std::uint64_t CounterRng::next_u64() {
  return mix64(base_ + (++count_) * kGolden);
}

double CounterRng::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

bool CounterRng::bernoulli(double p) { return next_unit() < p; }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  return mix64(mix64(seed + kGolden) ^ (tag * kStreamStride + kGolden));
}

}  // namespace xasim
