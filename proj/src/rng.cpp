#include "delcode/rng.hpp"

#include <stdexcept>

namespace delcode {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_string(std::string_view s) {
  // FNV-1a, then one mixing round to spread short labels.
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return mix64(h);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(mix64(seed)) {}

Rng Rng::derive(std::string_view purpose) const { return derive(hash_string(purpose)); }

Rng Rng::derive(std::uint64_t salt) const { return Rng(mix64(seed_ ^ mix64(salt))); }

std::uint64_t Rng::next_u64() { return engine_(); }

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
  // Rejection sampling over the largest multiple of n that fits in 64 bits.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = next_u64();
  } while (v >= limit);
  return v % n;
}

std::uint64_t Rng::in_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw std::invalid_argument("Rng::in_range: empty range");
  return lo + below(hi - lo + 1);
}

bool Rng::coin() { return (next_u64() & 1) != 0; }

}  // namespace delcode
