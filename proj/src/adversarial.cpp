#include "delcode/adversarial.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "delcode/bitseq.hpp"

namespace delcode {

namespace {

int ceil_log2(std::uint64_t count) {
  return count <= 1 ? 0 : std::bit_width(count - 1);
}

}  // namespace

BitString rep_encode(const BitString& x, int k) {
  if (k < 1) throw std::invalid_argument("rep_encode: k must be >= 1");
  BitString out;
  for (int i = 0; i < x.size(); ++i) {
    for (int j = 0; j < k; ++j) out.push_back(x[i]);
  }
  return out;
}

BitString rep_decode(const BitString& z, int k) {
  if (k < 1) throw std::invalid_argument("rep_decode: k must be >= 1");
  BitString out;
  for (const Run& r : run_lengths(z)) {
    const int copies = (r.length + k - 1) / k;
    for (int j = 0; j < copies; ++j) out.push_back(r.bit);
  }
  return out;
}

BitString vt_decode(const BitString& z, std::uint64_t syndrome_target, int n) {
  if (z.size() != n - 1) {
    throw std::invalid_argument("vt_decode: received word must have length n-1");
  }
  return vt_reinsert(z, syndrome_target);
}

AdversarialDescriptor adversarial_build(const CodeParams& params, const InnerHashSpec& inner,
                                        std::uint64_t seed, bool verify_exhaustive,
                                        std::uint64_t budget) {
  const int n = params.n;
  const int t = params.t;
  if (t < 1 || t >= n) throw std::invalid_argument("adversarial_build: need 1 <= t < n");
  if (inner.n != n || inner.t != t) {
    throw std::invalid_argument("adversarial_build: inner hash built for different (n, t)");
  }

  AdversarialDescriptor d;
  d.params = params;
  d.inner = inner;
  const std::uint64_t weight = deletion_ball_bound(n, 2 * t);  // n^{2t} confusable strings
  d.m_bound = choose_modulus_bound(weight, inner.f, Ratio(1, 2), budget);
  d.nominal_m0 = 2.0 * static_cast<double>(weight) * std::log2(static_cast<double>(n));
  d.range_primes = primes_in_range(PrimeRange::half_to(d.m_bound), budget);
  d.sampled = sample_prime_multiset(PrimeRange::half_to(d.m_bound), 10 * n,
                                    Rng(seed).derive("adversarial-primes").seed(), budget);

  if (verify_exhaustive) {
    if (n > packed::kMaxLen || (std::uint64_t{1} << n) > budget) {
      throw budget_error("adversarial_build: exhaustive verification exceeds budget");
    }
    d.good_prime_index.assign(std::size_t{1} << n, -1);
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
      const BitString m = BitString::from_value(w, n);
      const std::uint64_t hm = inner_hash(inner, m);
      // First prime in stored order separating m from its whole
      // confusability class.
      const auto others = confusable_set(m, t, budget);
      for (std::size_t i = 0; i < d.sampled.primes.size(); ++i) {
        const auto p = static_cast<std::uint64_t>(d.sampled.primes[i]);
        bool good = true;
        for (const BitString& other : others) {
          if (other == m) continue;
          if (inner_hash(inner, other) % p == hm % p) {
            good = false;
            break;
          }
        }
        if (good) {
          d.good_prime_index[w] = static_cast<std::int32_t>(i);
          break;
        }
      }
      if (d.good_prime_index[w] < 0) {
        throw std::runtime_error("adversarial_build: message " + m.str() +
                                 " has no good prime in the sampled multiset");
      }
    }
  }
  return d;
}

namespace {

std::int32_t find_good_prime(const AdversarialDescriptor& d, const BitString& m) {
  const std::uint64_t hm = inner_hash(d.inner, m);
  const auto others = confusable_set(m, d.params.t);
  for (std::size_t i = 0; i < d.sampled.primes.size(); ++i) {
    const auto p = static_cast<std::uint64_t>(d.sampled.primes[i]);
    bool good = true;
    for (const BitString& other : others) {
      if (other == m) continue;
      if (inner_hash(d.inner, other) % p == hm % p) {
        good = false;
        break;
      }
    }
    if (good) return static_cast<std::int32_t>(i);
  }
  throw std::runtime_error("adversarial_encode_hash: message " + m.str() +
                           " has no good prime in the sampled multiset");
}

}  // namespace

HashTag adversarial_encode_hash(const AdversarialDescriptor& d, const BitString& m) {
  if (m.size() != d.params.n) {
    throw std::invalid_argument("adversarial_encode_hash: message length mismatch");
  }
  std::int32_t idx;
  if (!d.good_prime_index.empty()) {
    idx = d.good_prime_index[m.value()];
  } else {
    idx = find_good_prime(d, m);
  }
  HashTag tag;
  tag.prime_index = idx;
  tag.prime_value = d.sampled.primes.at(static_cast<std::size_t>(idx));
  tag.residue = static_cast<std::int64_t>(inner_hash(d.inner, m) %
                                          static_cast<std::uint64_t>(tag.prime_value));
  return tag;
}

BitString adversarial_decode(const AdversarialDescriptor& d, const BitString& z,
                             const HashTag& tag) {
  const int n = d.params.n;
  const int t = d.params.t;
  if (tag.prime_index < 0 ||
      tag.prime_index >= static_cast<std::int64_t>(d.sampled.primes.size())) {
    throw std::runtime_error("adversarial_decode: tag prime index out of range");
  }
  const auto p = static_cast<std::uint64_t>(
      d.sampled.primes[static_cast<std::size_t>(tag.prime_index)]);
  if (tag.residue < 0 || static_cast<std::uint64_t>(tag.residue) >= p) {
    throw std::runtime_error("adversarial_decode: tag residue not reduced mod its prime");
  }
  BitString zz = z;
  if (zz.size() > n - t) zz = zz.prefix(n - t);  // extra length = extra deletions, trailing
  if (zz.size() != n - t) {
    throw std::invalid_argument("adversarial_decode: received word too short");
  }

  BitString found;
  int matches = 0;
  for (std::uint64_t w : enumerate_supersequences_packed(zz.value(), n - t, n)) {
    const BitString cand = BitString::from_value(w, n);
    if (inner_hash(d.inner, cand) % p == static_cast<std::uint64_t>(tag.residue)) {
      found = cand;
      ++matches;
    }
  }
  if (matches != 1) {
    throw std::runtime_error("adversarial_decode: " + std::to_string(matches) +
                             " residue matches; corrupted tag or mismatched descriptor");
  }
  return found;
}

int adversarial_tag_width_bits(const AdversarialDescriptor& d) {
  return ceil_log2(static_cast<std::uint64_t>(d.m_bound)) +
         ceil_log2(d.sampled.primes.size());
}

}  // namespace delcode
