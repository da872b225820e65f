#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "delcode/bits.hpp"
#include "delcode/inner_hash.hpp"
#include "delcode/primes.hpp"
#include "delcode/rational.hpp"
#include "delcode/rng.hpp"

namespace delcode {

enum class ObliviousScheme { explicit_primes, randomized_primes, list_wrapped, existential };

std::string scheme_str(ObliviousScheme s);
ObliviousScheme parse_scheme(const std::string& s);

/// The transmitted redundancy of the prime-residue schemes: the inner hash
/// reduced mod a random prime, together with that prime. The prime travels
/// either by value (explicit scheme) or as an index into a stored prime list
/// (randomized and list-wrapped schemes).
struct HashTag {
  std::int64_t residue = 0;
  std::int64_t prime_value = 0;  // always resolved, for arithmetic
  std::int64_t prime_index = -1;  // >= 0 when the scheme transmits an index

  bool operator==(const HashTag&) const = default;
};

/// Brute-force (t, L) list-decodable code: a greedily built codebook in
/// which every length-(n+r_list-t) received word has at most L codeword
/// supersequences. Desk-scale stand-in for an efficient list-decodable code.
struct ListCode {
  int n = 0;
  int t = 0;
  int L = 0;
  int r_list = 0;
  std::vector<BitString> codewords;  // indexed by message value, size 2^n

  BitString encode(const BitString& m) const;
  // All messages whose codewords contain z; at most L of them, and the
  // transmitted message is always among them when z came from <= t deletions.
  std::vector<BitString> list_decode(const BitString& z) const;
};

// Smallest r_list (searched incrementally) at which the lexicographic greedy
// codebook reaches 2^n codewords under the ball-occupancy constraint.
ListCode build_brute_force_list_code(int n, int t, int L,
                                     std::uint64_t budget = kDefaultEnumBudget);

struct ObliviousDescriptor {
  ObliviousScheme scheme = ObliviousScheme::explicit_primes;
  CodeParams params;
  InnerHashSpec inner;  // built at length n (or n + r_list for list_wrapped)

  // Prime-residue schemes. m_bound is the chosen power-of-two modulus cap;
  // range_primes caches the ascending primes in [m_bound/2, m_bound].
  std::int64_t m_bound = 0;
  double nominal_m = 0.0;  // closed-form reference value, reporting only
  std::vector<std::int64_t> range_primes;

  SampledPrimeSet sampled;  // randomized scheme only

  ListCode listcode;  // list_wrapped only
  int list_size = 0;  // L

  // existential only
  int s = 0;
  std::vector<std::vector<BitString>> codebook;    // E_i, one multiset per message
  std::vector<std::uint8_t> surviving;             // per-message keep flag
  std::uint64_t build_seed = 0;
};

// --- explicit scheme: prime by value ---------------------------------------
ObliviousDescriptor explicit_build(const CodeParams& params, const InnerHashSpec& inner,
                                   std::uint64_t budget = kDefaultEnumBudget);
HashTag explicit_encode_hash(const ObliviousDescriptor& d, const BitString& m, Rng& coins);
std::optional<BitString> explicit_decode(const ObliviousDescriptor& d, const BitString& z,
                                         const HashTag& tag);

// Diagnostic variant that pins the modulus cap instead of searching for it,
// skipping the failure-bound guard. Exists to demonstrate what the guard
// buys (nonzero failures, negative-path tests); never used for real codes.
ObliviousDescriptor explicit_build_forced(const CodeParams& params, const InnerHashSpec& inner,
                                          std::int64_t forced_m_bound,
                                          std::uint64_t budget = kDefaultEnumBudget);

// --- randomized scheme: prime by index into a sampled multiset -------------
ObliviousDescriptor randomized_build(const CodeParams& params, const InnerHashSpec& inner,
                                     std::uint64_t seed, bool verify_exact = true,
                                     std::uint64_t budget = kDefaultEnumBudget);
HashTag randomized_encode_hash(const ObliviousDescriptor& d, const BitString& m, Rng& coins);
std::optional<BitString> randomized_decode(const ObliviousDescriptor& d, const BitString& z,
                                           const HashTag& tag);

// --- list-decodable wrapper -------------------------------------------------
ObliviousDescriptor list_wrap_build(ListCode listcode, const CodeParams& params,
                                    const InnerHashSpec& inner,
                                    std::uint64_t budget = kDefaultEnumBudget);
BitString list_wrap_encode(const ObliviousDescriptor& d, const BitString& m, Rng& coins);
std::optional<BitString> list_wrap_decode(const ObliviousDescriptor& d, const BitString& z);

// --- existential random-codebook sampler ------------------------------------
// Message space is the index set {0..codebook_size-1}; messages that fail
// pruning are flagged out. Throws if fewer than half survive.
ObliviousDescriptor existential_build(const CodeParams& params, int s, int codebook_size,
                                      std::uint64_t seed,
                                      std::uint64_t budget = kDefaultEnumBudget);
BitString existential_encode(const ObliviousDescriptor& d, int message, Rng& coins);
std::optional<int> existential_decode(const ObliviousDescriptor& d, const BitString& z);

// --- systematic wrapper around a prime-residue scheme -----------------------
// Enc(m) = m followed by Rep_{t+1} of the packed tag; the first n bits of
// every codeword equal the message.
BitString systematic_encode(const ObliviousDescriptor& d, const BitString& m, Rng& coins);
std::optional<BitString> systematic_decode(const ObliviousDescriptor& d, const BitString& z);
int systematic_codeword_length(const ObliviousDescriptor& d);

// --- accounting and serialization -------------------------------------------
// Widths of the two tag fields as transmitted: prime field first, residue
// second, both fixed-width big-endian.
int tag_prime_field_bits(const ObliviousDescriptor& d);
int tag_residue_bits(const ObliviousDescriptor& d);
int tag_width_bits(const ObliviousDescriptor& d);

// Total redundancy in bits added on top of the n message bits.
int redundancy_bits(const ObliviousDescriptor& d);

// Nominal random bits the encoder consumes per encoding.
int randomness_bits(const ObliviousDescriptor& d);

BitString pack_tag(const ObliviousDescriptor& d, const HashTag& tag);
HashTag unpack_tag(const ObliviousDescriptor& d, const BitString& bits);

// Shared doubling search: the smallest power of two M >= 2^10 whose window
// [M/2, M] holds enough primes that weight * ceil(f / log2(M/2)) <=
// slack * |primes|. Returns M; the caller re-sieves for the prime list.
std::int64_t choose_modulus_bound(std::uint64_t weight, int f, const Ratio& slack,
                                  std::uint64_t budget = kDefaultEnumBudget);

}  // namespace delcode
