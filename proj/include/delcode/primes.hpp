#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "delcode/bits.hpp"
#include "delcode/rational.hpp"
#include "delcode/rng.hpp"

namespace delcode {

struct PrimeRange {
  std::int64_t lo = 2;
  std::int64_t hi = 2;

  PrimeRange() = default;
  PrimeRange(std::int64_t lo_, std::int64_t hi_);
  // The canonical window for modulus bound M: [M/2, M].
  static PrimeRange half_to(std::int64_t m) { return PrimeRange(m / 2, m); }

  bool operator==(const PrimeRange&) const = default;
};

struct SampledPrimeSet {
  PrimeRange range;
  std::vector<std::int64_t> primes;  // multiset, in draw order
  std::uint64_t seed = 0;
};

// Deterministic Miller-Rabin, valid for all inputs below 2^63.
bool is_prime(std::uint64_t x);

// Ascending primes in [r.lo, r.hi] by segmented sieve. The window width
// counts against the enumeration budget.
std::vector<std::int64_t> primes_in_range(const PrimeRange& r,
                                          std::uint64_t budget = kDefaultEnumBudget);

// Empirical density floor: true iff [M/2, M] holds at least M/(10 ln M)
// primes. Constructions assert this instead of assuming an analytic
// threshold for where the density kicks in.
bool pnt_floor_check(std::int64_t m, std::uint64_t budget = kDefaultEnumBudget);

// `count` independent uniform draws (with replacement) from the primes in r,
// by rejection sampling on uniform integers. Deterministic given seed.
SampledPrimeSet sample_prime_multiset(const PrimeRange& r, int count, std::uint64_t seed,
                                      std::uint64_t budget = kDefaultEnumBudget);

// Fraction of candidates dividing at least one diff, candidates counted with
// multiplicity. Exact.
Ratio dividing_prime_fraction(const std::vector<std::uint64_t>& diffs,
                              const std::vector<std::int64_t>& candidates);

// Distinct prime factors of d > 0, ascending (trial division; desk scale).
std::vector<std::uint64_t> prime_factors(std::uint64_t d);

/// Memoized map from difference values to their prime factors inside a fixed
/// window. Grid verifications see the same few-thousand hash differences
/// millions of times, so each value is factored once.
class WindowFactorCache {
 public:
  explicit WindowFactorCache(const PrimeRange& window) : window_(window) {}

  // Distinct primes in the window dividing diff, ascending. diff > 0.
  const std::vector<std::int64_t>& factors(std::uint64_t diff);

 private:
  PrimeRange window_;
  std::unordered_map<std::uint64_t, std::vector<std::int64_t>> memo_;
};

}  // namespace delcode
