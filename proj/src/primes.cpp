#include "delcode/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace delcode {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) acc = mulmod(acc, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return acc;
}

// One strong-probable-prime round; x odd, x > 2, x-1 = d * 2^s.
bool sprp(std::uint64_t x, std::uint64_t a, std::uint64_t d, int s) {
  a %= x;
  if (a == 0) return true;
  std::uint64_t v = powmod(a, d, x);
  if (v == 1 || v == x - 1) return true;
  for (int i = 1; i < s; ++i) {
    v = mulmod(v, v, x);
    if (v == x - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t x) {
  if (x >= (std::uint64_t{1} << 63)) {
    throw std::invalid_argument("is_prime: inputs must fit in 63 bits");
  }
  if (x < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (x == p) return true;
    if (x % p == 0) return false;
  }
  std::uint64_t d = x - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first twelve primes are a complete witness set below 3.3 * 10^24,
  // which covers the 63-bit domain.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (!sprp(x, a, d, s)) return false;
  }
  return true;
}

PrimeRange::PrimeRange(std::int64_t lo_, std::int64_t hi_) : lo(lo_), hi(hi_) {
  if (lo < 2 || lo > hi) throw std::invalid_argument("PrimeRange: need 2 <= lo <= hi");
}

std::vector<std::int64_t> primes_in_range(const PrimeRange& r, std::uint64_t budget) {
  const std::uint64_t width = static_cast<std::uint64_t>(r.hi - r.lo) + 1;
  if (width > budget) {
    throw budget_error("primes_in_range: window of " + std::to_string(width) +
                       " integers exceeds enumeration budget");
  }
  // Base primes up to sqrt(hi), then mark their multiples in the window.
  const std::int64_t root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(r.hi))) + 1;
  std::vector<std::uint8_t> base(static_cast<std::size_t>(root) + 1, 1);
  base[0] = 0;
  if (root >= 1) base[1] = 0;
  for (std::int64_t p = 2; p * p <= root; ++p) {
    if (!base[static_cast<std::size_t>(p)]) continue;
    for (std::int64_t q = p * p; q <= root; q += p) base[static_cast<std::size_t>(q)] = 0;
  }

  std::vector<std::uint8_t> window(width, 1);
  for (std::int64_t p = 2; p <= root; ++p) {
    if (!base[static_cast<std::size_t>(p)]) continue;
    std::int64_t start = std::max(p * p, (r.lo + p - 1) / p * p);
    for (std::int64_t q = start; q <= r.hi; q += p) {
      window[static_cast<std::size_t>(q - r.lo)] = 0;
    }
  }
  std::vector<std::int64_t> out;
  for (std::uint64_t i = 0; i < width; ++i) {
    const std::int64_t v = r.lo + static_cast<std::int64_t>(i);
    if (v >= 2 && window[i]) out.push_back(v);
  }
  return out;
}

bool pnt_floor_check(std::int64_t m, std::uint64_t budget) {
  if (m < 100) throw std::invalid_argument("pnt_floor_check: M must be at least 100");
  const auto ps = primes_in_range(PrimeRange::half_to(m), budget);
  const double floor_bound = static_cast<double>(m) / (10.0 * std::log(static_cast<double>(m)));
  return static_cast<double>(ps.size()) >= floor_bound;
}

SampledPrimeSet sample_prime_multiset(const PrimeRange& r, int count, std::uint64_t seed,
                                      std::uint64_t budget) {
  if (count < 0) throw std::invalid_argument("sample_prime_multiset: negative count");
  if (r.hi >= 100 && r.lo == r.hi / 2) {
    if (!pnt_floor_check(r.hi, budget)) {
      throw std::runtime_error("sample_prime_multiset: prime density floor fails for range");
    }
  } else if (primes_in_range(r, budget).empty()) {
    throw std::runtime_error("sample_prime_multiset: range contains no primes");
  }
  SampledPrimeSet out;
  out.range = r;
  out.seed = seed;
  out.primes.reserve(static_cast<std::size_t>(count));
  Rng rng = Rng(seed).derive("prime-multiset");
  // Expected tries per draw is ~ln(hi); this cap only trips on misuse.
  const std::uint64_t max_tries = 10000ULL * (static_cast<std::uint64_t>(count) + 1);
  std::uint64_t tries = 0;
  while (out.primes.size() < static_cast<std::size_t>(count)) {
    if (++tries > max_tries) {
      throw std::runtime_error("sample_prime_multiset: rejection budget exhausted");
    }
    const std::uint64_t v =
        rng.in_range(static_cast<std::uint64_t>(r.lo), static_cast<std::uint64_t>(r.hi));
    if (is_prime(v)) out.primes.push_back(static_cast<std::int64_t>(v));
  }
  return out;
}

Ratio dividing_prime_fraction(const std::vector<std::uint64_t>& diffs,
                              const std::vector<std::int64_t>& candidates) {
  if (candidates.empty()) {
    throw std::invalid_argument("dividing_prime_fraction: no candidates");
  }
  long long hits = 0;
  for (std::int64_t p : candidates) {
    if (p <= 0) throw std::invalid_argument("dividing_prime_fraction: nonpositive candidate");
    for (std::uint64_t d : diffs) {
      if (d == 0) throw std::invalid_argument("dividing_prime_fraction: diffs must be positive");
      if (d % static_cast<std::uint64_t>(p) == 0) {
        ++hits;
        break;
      }
    }
  }
  return Ratio(hits, static_cast<long long>(candidates.size()));
}

const std::vector<std::int64_t>& WindowFactorCache::factors(std::uint64_t diff) {
  auto it = memo_.find(diff);
  if (it != memo_.end()) return it->second;
  std::vector<std::int64_t> in_window;
  for (std::uint64_t q : prime_factors(diff)) {
    if (q >= static_cast<std::uint64_t>(window_.lo) &&
        q <= static_cast<std::uint64_t>(window_.hi)) {
      in_window.push_back(static_cast<std::int64_t>(q));
    }
  }
  return memo_.emplace(diff, std::move(in_window)).first->second;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("prime_factors: zero input");
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= d; p += (p == 2 ? 1 : 2)) {
    if (d % p == 0) {
      out.push_back(p);
      while (d % p == 0) d /= p;
    }
  }
  if (d > 1) out.push_back(d);
  return out;
}

}  // namespace delcode
