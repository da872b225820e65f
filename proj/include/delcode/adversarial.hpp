#pragma once

#include <cstdint>
#include <vector>

#include "delcode/bits.hpp"
#include "delcode/inner_hash.hpp"
#include "delcode/oblivious.hpp"
#include "delcode/primes.hpp"
#include "delcode/rng.hpp"

namespace delcode {

// Repeats each bit k times. Rep_k corrects any k-1 deletions.
BitString rep_encode(const BitString& x, int k);

// Inverse under <= k-1 deletions: each maximal run of length len decodes to
// ceil(len/k) copies of its symbol. Outputs of the wrong total length signal
// more deletions than the code tolerates; callers check length.
BitString rep_decode(const BitString& z, int k);

// The unique length-n supersequence of z whose weighted-sum syndrome equals
// syndrome_target, via the classical constant-space reinsertion argument.
// Throws std::runtime_error when no reinsertion is consistent.
BitString vt_decode(const BitString& z, std::uint64_t syndrome_target, int n);

/// Deterministic-decoding code built from a sampled prime multiset: each
/// message is tagged with its residue under the first prime that separates
/// it from everything confusable with it, so decoding never fails under
/// <= t deletions.
struct AdversarialDescriptor {
  CodeParams params;  // eps plays no role; kept for uniform reporting
  InnerHashSpec inner;
  std::int64_t m_bound = 0;
  double nominal_m0 = 0.0;  // closed-form reference value, reporting only
  std::vector<std::int64_t> range_primes;
  SampledPrimeSet sampled;  // |P| = 10n draws
  // good_prime_index[m] = index into sampled.primes of m's first good prime;
  // filled when the build verifies exhaustively, else empty.
  std::vector<std::int32_t> good_prime_index;
};

// Doubling-search modulus bound with absolute slack 1/2 against the n^{2t}
// confusability weight, then 10n sampled primes. With verify_exhaustive the
// build proves every message has a good prime (and caches which), throwing
// otherwise.
AdversarialDescriptor adversarial_build(const CodeParams& params, const InnerHashSpec& inner,
                                        std::uint64_t seed, bool verify_exhaustive = true,
                                        std::uint64_t budget = kDefaultEnumBudget);

// Deterministic: residue of m under its first good prime, transmitted as
// (prime index, residue).
HashTag adversarial_encode_hash(const AdversarialDescriptor& d, const BitString& m);

// Always recovers the transmitted message when z came from <= t deletions of
// it; zero or multiple residue matches mean a corrupted tag or mismatched
// descriptor and throw.
BitString adversarial_decode(const AdversarialDescriptor& d, const BitString& z,
                             const HashTag& tag);

int adversarial_tag_width_bits(const AdversarialDescriptor& d);

}  // namespace delcode
