#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace delcode {

/// Deterministic random source. A master seed plus a purpose label yields an
/// independent stream, so the schemes, channels, and samplers can share one
/// user-facing seed without their draws interleaving. All sampling is done
/// with our own rejection loops so results are identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Independent stream for a named purpose; same (seed, purpose) always
  // yields the same stream.
  Rng derive(std::string_view purpose) const;
  Rng derive(std::uint64_t salt) const;

  std::uint64_t next_u64();
  // Uniform in [0, n), unbiased via rejection. n must be > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi] inclusive.
  std::uint64_t in_range(std::uint64_t lo, std::uint64_t hi);
  bool coin();

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; used for seed mixing and stable string hashing.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t hash_string(std::string_view s);

}  // namespace delcode
