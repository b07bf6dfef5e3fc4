#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace eaga {

/// Seeded 64-bit random stream. Bounded draws use rejection sampling on the
/// raw engine output, so a seed produces the same sequence on every platform
/// (std::uniform_int_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::size_t uniform_index(std::size_t bound);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for one (k, repetition) run: mix64(mix64(master ^ mix64(k)) + repetition).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t k, std::uint64_t repetition) noexcept;

}  // namespace eaga
