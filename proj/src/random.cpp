#include "eaga/random.hpp"

#include "eaga/error.hpp"

namespace eaga {

std::size_t Rng::uniform_index(std::size_t bound) {
  if (bound == 0) throw ContractViolation("uniform_index: empty range");
  const std::uint64_t n = bound;
  // Reject the low (2^64 mod n) values so every residue is equally likely.
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return static_cast<std::size_t>(x % n);
  }
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t k, std::uint64_t repetition) noexcept {
  return mix64(mix64(master ^ mix64(k)) + repetition);
}

}  // namespace eaga
