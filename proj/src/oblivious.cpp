#include "delcode/oblivious.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "delcode/adversarial.hpp"
#include "delcode/bitseq.hpp"

namespace delcode {

namespace {

int ceil_log2(std::uint64_t count) {
  return count <= 1 ? 0 : std::bit_width(count - 1);
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

void check_params(const CodeParams& params) {
  if (params.n < 1) throw std::invalid_argument("code params: n must be positive");
  if (params.t < 1) throw std::invalid_argument("code params: t = 0 is out of model");
  if (params.t >= params.n) throw std::invalid_argument("code params: need t < n");
  if (params.eps_num <= 0 || params.eps_den <= 0 || params.eps_num >= params.eps_den) {
    throw std::invalid_argument("code params: eps must lie strictly in (0,1)");
  }
}

Ratio eps_of(const CodeParams& params) { return Ratio(params.eps_num, params.eps_den); }

// Decodes the prime-residue schemes: the unique supersequence of z whose
// inner hash matches the residue mod p.
std::optional<BitString> residue_decode(const InnerHashSpec& inner, int n, int t,
                                        BitString z, std::uint64_t p, std::int64_t residue) {
  if (residue < 0 || static_cast<std::uint64_t>(residue) >= p) {
    throw std::runtime_error("decode: tag residue not reduced mod its prime");
  }
  if (z.size() > n - t) z = z.prefix(n - t);  // extra length = extra deletions, trailing
  if (z.size() != n - t) {
    throw std::invalid_argument("decode: received word shorter than n - t");
  }
  BitString found;
  int matches = 0;
  for (std::uint64_t w : enumerate_supersequences_packed(z.value(), n - t, n)) {
    const BitString cand = BitString::from_value(w, n);
    if (inner_hash(inner, cand) % p == static_cast<std::uint64_t>(residue)) {
      found = cand;
      ++matches;
      if (matches > 1) return std::nullopt;
    }
  }
  if (matches != 1) return std::nullopt;
  return found;
}

}  // namespace

std::string scheme_str(ObliviousScheme s) {
  switch (s) {
    case ObliviousScheme::explicit_primes: return "explicit";
    case ObliviousScheme::randomized_primes: return "randomized";
    case ObliviousScheme::list_wrapped: return "list-wrapped";
    case ObliviousScheme::existential: return "existential";
  }
  throw std::logic_error("scheme_str: bad enum");
}

ObliviousScheme parse_scheme(const std::string& s) {
  if (s == "explicit") return ObliviousScheme::explicit_primes;
  if (s == "randomized") return ObliviousScheme::randomized_primes;
  if (s == "list-wrapped") return ObliviousScheme::list_wrapped;
  if (s == "existential") return ObliviousScheme::existential;
  throw std::invalid_argument("parse_scheme: unknown scheme \"" + s + "\"");
}

std::int64_t choose_modulus_bound(std::uint64_t weight, int f, const Ratio& slack,
                                  std::uint64_t budget) {
  if (f < 1) throw std::invalid_argument("choose_modulus_bound: hash bit length must be >= 1");
  if (slack <= Ratio(0)) throw std::invalid_argument("choose_modulus_bound: slack must be > 0");
  for (std::int64_t m = 1024; m > 0 && m < (std::int64_t{1} << 62); m <<= 1) {
    const auto primes = primes_in_range(PrimeRange::half_to(m), budget);
    const int k = std::bit_width(static_cast<std::uint64_t>(m)) - 1;  // m = 2^k
    const std::uint64_t lhs = weight * static_cast<std::uint64_t>(ceil_div(f, k - 1));
    // weight * ceil(f / log2(m/2)) <= slack * |primes|, compared exactly.
    const auto lhs_scaled = static_cast<unsigned __int128>(lhs) *
                            static_cast<unsigned __int128>(slack.denominator());
    const auto rhs_scaled = static_cast<unsigned __int128>(slack.numerator()) *
                            static_cast<unsigned __int128>(primes.size());
    if (lhs_scaled <= rhs_scaled) return m;
  }
  throw std::runtime_error("choose_modulus_bound: no feasible modulus bound in 63 bits");
}

// ---------------------------------------------------------------------------
// explicit scheme

ObliviousDescriptor explicit_build(const CodeParams& params, const InnerHashSpec& inner,
                                   std::uint64_t budget) {
  check_params(params);
  if (inner.n != params.n || inner.t != params.t) {
    throw std::invalid_argument("explicit_build: inner hash built for different (n, t)");
  }
  ObliviousDescriptor d;
  d.scheme = ObliviousScheme::explicit_primes;
  d.params = params;
  d.inner = inner;
  const std::uint64_t weight = deletion_ball_bound(params.n, params.t);
  d.m_bound = choose_modulus_bound(weight, inner.f, eps_of(params) / 2, budget);
  d.nominal_m = 100.0 * static_cast<double>(weight) * inner.f / ratio_double(eps_of(params));
  d.range_primes = primes_in_range(PrimeRange::half_to(d.m_bound), budget);
  return d;
}

ObliviousDescriptor explicit_build_forced(const CodeParams& params, const InnerHashSpec& inner,
                                          std::int64_t forced_m_bound, std::uint64_t budget) {
  check_params(params);
  if (inner.n != params.n || inner.t != params.t) {
    throw std::invalid_argument("explicit_build_forced: inner hash built for different (n, t)");
  }
  if (forced_m_bound < 4) {
    throw std::invalid_argument("explicit_build_forced: modulus cap too small");
  }
  ObliviousDescriptor d;
  d.scheme = ObliviousScheme::explicit_primes;
  d.params = params;
  d.inner = inner;
  d.m_bound = forced_m_bound;
  d.nominal_m = 100.0 * static_cast<double>(deletion_ball_bound(params.n, params.t)) *
                inner.f / ratio_double(eps_of(params));
  d.range_primes = primes_in_range(PrimeRange::half_to(forced_m_bound), budget);
  if (d.range_primes.empty()) {
    throw std::runtime_error("explicit_build_forced: no primes in [M/2, M]");
  }
  return d;
}

HashTag explicit_encode_hash(const ObliviousDescriptor& d, const BitString& m, Rng& coins) {
  if (d.scheme != ObliviousScheme::explicit_primes) {
    throw std::invalid_argument("explicit_encode_hash: descriptor is not the explicit scheme");
  }
  if (m.size() != d.params.n) {
    throw std::invalid_argument("explicit_encode_hash: message length mismatch");
  }
  HashTag tag;
  tag.prime_value = d.range_primes[coins.below(d.range_primes.size())];
  tag.residue = static_cast<std::int64_t>(inner_hash(d.inner, m) %
                                          static_cast<std::uint64_t>(tag.prime_value));
  return tag;
}

std::optional<BitString> explicit_decode(const ObliviousDescriptor& d, const BitString& z,
                                         const HashTag& tag) {
  if (tag.prime_value < d.m_bound / 2 || tag.prime_value > d.m_bound ||
      !is_prime(static_cast<std::uint64_t>(tag.prime_value))) {
    throw std::runtime_error("explicit_decode: tag prime outside the descriptor's range");
  }
  return residue_decode(d.inner, d.params.n, d.params.t, z,
                        static_cast<std::uint64_t>(tag.prime_value), tag.residue);
}

// ---------------------------------------------------------------------------
// randomized scheme

namespace {

// Distinct primes in [M/2, M] dividing some inner-hash difference between m
// and another supersequence of z = tau(m). These are exactly the encoder
// coins that make the decoder see an ambiguity.
std::vector<std::int64_t> bad_primes_for(const InnerHashSpec& inner, int n, int t,
                                         const BitString& m, const DeletionPattern& tau,
                                         WindowFactorCache& cache) {
  const BitString z = apply_pattern(m, tau);
  const std::uint64_t hm = inner_hash(inner, m);
  std::vector<std::int64_t> bad;
  for (std::uint64_t w : enumerate_supersequences_packed(z.value(), n - t, n)) {
    const BitString cand = BitString::from_value(w, n);
    if (cand == m) continue;
    const std::uint64_t hc = inner_hash(inner, cand);
    // The reconciliation property guarantees hc != hm here.
    const std::uint64_t diff = hc > hm ? hc - hm : hm - hc;
    for (std::int64_t q : cache.factors(diff)) bad.push_back(q);
  }
  std::sort(bad.begin(), bad.end());
  bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
  return bad;
}

}  // namespace

ObliviousDescriptor randomized_build(const CodeParams& params, const InnerHashSpec& inner,
                                     std::uint64_t seed, bool verify_exact,
                                     std::uint64_t budget) {
  check_params(params);
  if (inner.n != params.n || inner.t != params.t) {
    throw std::invalid_argument("randomized_build: inner hash built for different (n, t)");
  }
  ObliviousDescriptor d;
  d.scheme = ObliviousScheme::randomized_primes;
  d.params = params;
  d.inner = inner;
  const std::uint64_t weight = deletion_ball_bound(params.n, params.t);
  const Ratio eps = eps_of(params);
  d.m_bound = choose_modulus_bound(weight, inner.f, eps / 2, budget);
  const double m0 = 4.0 / ratio_double(eps) * static_cast<double>(weight) *
                    std::log2(static_cast<double>(params.n));
  d.nominal_m = 100.0 * m0 * std::log(m0);
  d.range_primes = primes_in_range(PrimeRange::half_to(d.m_bound), budget);

  // |P| = ceil(100 n / eps) draws with replacement.
  const long long p_count =
      (100LL * params.n * eps.denominator() + eps.numerator() - 1) / eps.numerator();
  d.sampled = sample_prime_multiset(PrimeRange::half_to(d.m_bound),
                                    static_cast<int>(p_count),
                                    Rng(seed).derive("randomized-primes").seed(), budget);

  if (verify_exact) {
    const int n = params.n;
    const int t = params.t;
    if (n > packed::kMaxLen ||
        (std::uint64_t{1} << n) * binomial(n, t) > budget * 8) {
      throw budget_error("randomized_build: exact verification grid exceeds budget");
    }
    // Multiplicity of each prime value in P.
    std::unordered_map<std::int64_t, long long> multiplicity;
    for (std::int64_t p : d.sampled.primes) ++multiplicity[p];
    WindowFactorCache cache(PrimeRange::half_to(d.m_bound));
    const auto taus = all_patterns(n, t, budget);
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
      const BitString m = BitString::from_value(w, n);
      for (const DeletionPattern& tau : taus) {
        long long bad_in_p = 0;
        for (std::int64_t q : bad_primes_for(inner, n, t, m, tau, cache)) {
          auto it = multiplicity.find(q);
          if (it != multiplicity.end()) bad_in_p += it->second;
        }
        if (Ratio(bad_in_p, static_cast<long long>(d.sampled.primes.size())) > eps) {
          throw std::runtime_error(
              "randomized_build: sampled prime set exceeds the failure bound at message " +
              m.str() + ", pattern " + tau.str() + " (seed retry is the caller's call)");
        }
      }
    }
  }
  return d;
}

HashTag randomized_encode_hash(const ObliviousDescriptor& d, const BitString& m, Rng& coins) {
  if (d.scheme != ObliviousScheme::randomized_primes) {
    throw std::invalid_argument("randomized_encode_hash: descriptor is not the randomized scheme");
  }
  if (m.size() != d.params.n) {
    throw std::invalid_argument("randomized_encode_hash: message length mismatch");
  }
  HashTag tag;
  tag.prime_index = static_cast<std::int64_t>(coins.below(d.sampled.primes.size()));
  tag.prime_value = d.sampled.primes[static_cast<std::size_t>(tag.prime_index)];
  tag.residue = static_cast<std::int64_t>(inner_hash(d.inner, m) %
                                          static_cast<std::uint64_t>(tag.prime_value));
  return tag;
}

std::optional<BitString> randomized_decode(const ObliviousDescriptor& d, const BitString& z,
                                           const HashTag& tag) {
  if (tag.prime_index < 0 ||
      tag.prime_index >= static_cast<std::int64_t>(d.sampled.primes.size())) {
    throw std::runtime_error("randomized_decode: tag prime index out of range");
  }
  const std::int64_t p = d.sampled.primes[static_cast<std::size_t>(tag.prime_index)];
  return residue_decode(d.inner, d.params.n, d.params.t, z, static_cast<std::uint64_t>(p),
                        tag.residue);
}

// ---------------------------------------------------------------------------
// brute-force (t, L) list code

BitString ListCode::encode(const BitString& m) const {
  if (m.size() != n) throw std::invalid_argument("ListCode::encode: message length mismatch");
  return codewords[m.value()];
}

std::vector<BitString> ListCode::list_decode(const BitString& z) const {
  if (z.size() != n + r_list - t) {
    throw std::invalid_argument("ListCode::list_decode: received word length mismatch");
  }
  std::vector<BitString> out;
  for (std::size_t idx = 0; idx < codewords.size(); ++idx) {
    if (is_subsequence(z, codewords[idx])) {
      out.push_back(BitString::from_value(idx, n));
    }
  }
  return out;
}

namespace {

// Greedy fill at a fixed redundancy; returns the codebook if it reaches 2^n
// codewords, nullopt otherwise.
std::optional<std::vector<BitString>> try_greedy_codebook(int n, int t, int L, int r) {
  const int len = n + r;
  const int zlen = len - t;
  const std::uint64_t want = std::uint64_t{1} << n;
  std::vector<std::uint8_t> occupancy(std::size_t{1} << zlen, 0);
  std::vector<BitString> codebook;
  codebook.reserve(want);

  std::vector<int> del(static_cast<std::size_t>(t));
  std::vector<std::uint64_t> ball;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << len); ++w) {
    // Distinct t-deletion results of w, via the packed combination walk.
    ball.clear();
    for (int i = 0; i < t; ++i) del[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
      std::uint64_t z = w;
      for (int i = t - 1; i >= 0; --i) {
        z = packed::erase_bit(z, len - (t - 1 - i), del[static_cast<std::size_t>(i)]);
      }
      ball.push_back(z);
      int i = t - 1;
      while (i >= 0 && del[static_cast<std::size_t>(i)] == len - (t - 1 - i)) --i;
      if (i < 0) break;
      ++del[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < t; ++j) {
        del[static_cast<std::size_t>(j)] = del[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
    std::sort(ball.begin(), ball.end());
    ball.erase(std::unique(ball.begin(), ball.end()), ball.end());

    bool fits = true;
    for (std::uint64_t z : ball) {
      if (occupancy[z] >= L) {
        fits = false;
        break;
      }
    }
    if (!fits) continue;
    for (std::uint64_t z : ball) ++occupancy[z];
    codebook.push_back(BitString::from_value(w, len));
    if (codebook.size() == want) return codebook;
  }
  return std::nullopt;
}

}  // namespace

ListCode build_brute_force_list_code(int n, int t, int L, std::uint64_t budget) {
  if (n < 1 || t < 0 || L < 1) throw std::invalid_argument("list code: bad parameters");
  for (int r = 0;; ++r) {
    const int len = n + r;
    if (len > packed::kMaxLen || (std::uint64_t{1} << len) > budget) {
      throw budget_error("list code: no feasible redundancy within enumeration budget");
    }
    if (auto codebook = try_greedy_codebook(n, t, L, r)) {
      ListCode code;
      code.n = n;
      code.t = t;
      code.L = L;
      code.r_list = r;
      code.codewords = std::move(*codebook);
      return code;
    }
  }
}

// ---------------------------------------------------------------------------
// list-to-oblivious wrapper

ObliviousDescriptor list_wrap_build(ListCode listcode, const CodeParams& params,
                                    const InnerHashSpec& inner, std::uint64_t budget) {
  check_params(params);
  if (listcode.n != params.n || listcode.t != params.t) {
    throw std::invalid_argument("list_wrap_build: list code built for different (n, t)");
  }
  if (inner.n != params.n + listcode.r_list || inner.t != params.t) {
    throw std::invalid_argument("list_wrap_build: inner hash must cover length n + r_list");
  }
  ObliviousDescriptor d;
  d.scheme = ObliviousScheme::list_wrapped;
  d.params = params;
  d.inner = inner;
  d.list_size = listcode.L;
  d.m_bound = choose_modulus_bound(static_cast<std::uint64_t>(listcode.L), inner.f,
                                   eps_of(params), budget);
  const double log2n2 = std::log2(2.0 * params.n);
  d.nominal_m = 100.0 * params.t * (static_cast<double>(listcode.L) /
                                    ratio_double(eps_of(params))) * log2n2 * log2n2;
  d.range_primes = primes_in_range(PrimeRange::half_to(d.m_bound), budget);
  d.listcode = std::move(listcode);
  return d;
}

BitString list_wrap_encode(const ObliviousDescriptor& d, const BitString& m, Rng& coins) {
  if (d.scheme != ObliviousScheme::list_wrapped) {
    throw std::invalid_argument("list_wrap_encode: descriptor is not the list-wrapped scheme");
  }
  const BitString c = d.listcode.encode(m);
  HashTag tag;
  tag.prime_index = static_cast<std::int64_t>(coins.below(d.range_primes.size()));
  tag.prime_value = d.range_primes[static_cast<std::size_t>(tag.prime_index)];
  tag.residue = static_cast<std::int64_t>(inner_hash(d.inner, c) %
                                          static_cast<std::uint64_t>(tag.prime_value));
  BitString out = c;
  out.append(rep_encode(pack_tag(d, tag), d.params.t + 1));
  return out;
}

std::optional<BitString> list_wrap_decode(const ObliviousDescriptor& d, const BitString& z) {
  if (d.scheme != ObliviousScheme::list_wrapped) {
    throw std::invalid_argument("list_wrap_decode: descriptor is not the list-wrapped scheme");
  }
  const int t = d.params.t;
  const int block1 = d.params.n + d.listcode.r_list;
  const int r_rep = (t + 1) * tag_width_bits(d);
  BitString zz = z;
  if (zz.size() > block1 + r_rep - t) zz = zz.prefix(block1 + r_rep - t);
  if (zz.size() != block1 + r_rep - t) {
    throw std::invalid_argument("list_wrap_decode: received word too short");
  }
  const BitString z0 = zz.prefix(block1 - t);
  const BitString z1 = zz.suffix(r_rep - t);

  const BitString tag_bits = rep_decode(z1, t + 1);
  if (tag_bits.size() != tag_width_bits(d)) return std::nullopt;  // mangled beyond budget
  HashTag tag;
  try {
    tag = unpack_tag(d, tag_bits);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  const auto p = static_cast<std::uint64_t>(tag.prime_value);

  BitString found;
  int matches = 0;
  for (const BitString& cand : d.listcode.list_decode(z0)) {
    const std::uint64_t h = inner_hash(d.inner, d.listcode.encode(cand));
    if (h % p == static_cast<std::uint64_t>(tag.residue)) {
      found = cand;
      ++matches;
    }
  }
  if (matches != 1) return std::nullopt;
  return found;
}

// ---------------------------------------------------------------------------
// existential random-codebook sampler

ObliviousDescriptor existential_build(const CodeParams& params, int s, int codebook_size,
                                      std::uint64_t seed, std::uint64_t budget) {
  check_params(params);
  const int n = params.n;
  const int t = params.t;
  if (s < 1 || codebook_size < 1) {
    throw std::invalid_argument("existential_build: s and codebook size must be positive");
  }
  if (n > packed::kMaxLen ||
      static_cast<std::uint64_t>(codebook_size) * static_cast<std::uint64_t>(s) *
              (std::uint64_t{1} << n) > budget) {
    throw budget_error("existential_build: codebook scan exceeds budget");
  }

  ObliviousDescriptor d;
  d.scheme = ObliviousScheme::existential;
  d.params = params;
  d.s = s;
  d.build_seed = seed;
  Rng rng = Rng(seed).derive("existential-codebook");
  d.codebook.resize(static_cast<std::size_t>(codebook_size));
  for (auto& multiset : d.codebook) {
    multiset.reserve(static_cast<std::size_t>(s));
    for (int k = 0; k < s; ++k) {
      multiset.push_back(BitString::from_value(rng.below(std::uint64_t{1} << n), n));
    }
  }

  // Prune: drop message i if, for some pattern, more than an eps fraction of
  // its encodings land inside a rival's supersequence shadow.
  const Ratio eps = eps_of(params);
  d.surviving.assign(static_cast<std::size_t>(codebook_size), 1);
  const auto taus = all_patterns(n, t, budget);
  for (int i = 0; i < codebook_size; ++i) {
    for (const DeletionPattern& tau : taus) {
      long long bad = 0;
      for (const BitString& w : d.codebook[static_cast<std::size_t>(i)]) {
        const BitString zw = apply_pattern(w, tau);
        bool is_bad = false;
        for (int j = 0; j < codebook_size && !is_bad; ++j) {
          if (j == i) continue;
          for (const BitString& u : d.codebook[static_cast<std::size_t>(j)]) {
            if (is_subsequence(zw, u)) {
              is_bad = true;
              break;
            }
          }
        }
        if (is_bad) ++bad;
      }
      if (Ratio(bad, s) > eps) {
        d.surviving[static_cast<std::size_t>(i)] = 0;
        break;
      }
    }
  }

  const long long kept = std::count(d.surviving.begin(), d.surviving.end(), std::uint8_t{1});
  if (2 * kept < codebook_size) {
    throw std::runtime_error("existential_build: only " + std::to_string(kept) + " of " +
                             std::to_string(codebook_size) +
                             " messages survived pruning (need at least half)");
  }
  return d;
}

BitString existential_encode(const ObliviousDescriptor& d, int message, Rng& coins) {
  if (d.scheme != ObliviousScheme::existential) {
    throw std::invalid_argument("existential_encode: descriptor is not the existential scheme");
  }
  if (message < 0 || message >= static_cast<int>(d.codebook.size())) {
    throw std::invalid_argument("existential_encode: message index out of range");
  }
  if (!d.surviving[static_cast<std::size_t>(message)]) {
    throw std::invalid_argument("existential_encode: message was pruned at build time");
  }
  return d.codebook[static_cast<std::size_t>(message)]
                   [static_cast<std::size_t>(coins.below(static_cast<std::uint64_t>(d.s)))];
}

std::optional<int> existential_decode(const ObliviousDescriptor& d, const BitString& z) {
  if (d.scheme != ObliviousScheme::existential) {
    throw std::invalid_argument("existential_decode: descriptor is not the existential scheme");
  }
  BitString zz = z;
  const int want = d.params.n - d.params.t;
  if (zz.size() > want) zz = zz.prefix(want);
  if (zz.size() != want) {
    throw std::invalid_argument("existential_decode: received word too short");
  }
  int found = -1;
  int matches = 0;
  for (std::size_t i = 0; i < d.codebook.size(); ++i) {
    if (!d.surviving[i]) continue;
    for (const BitString& w : d.codebook[i]) {
      if (is_subsequence(zz, w)) {
        found = static_cast<int>(i);
        ++matches;
        break;
      }
    }
  }
  if (matches != 1) return std::nullopt;
  return found;
}

// ---------------------------------------------------------------------------
// systematic wrapper

namespace {

HashTag wrapped_encode_hash(const ObliviousDescriptor& d, const BitString& m, Rng& coins) {
  switch (d.scheme) {
    case ObliviousScheme::explicit_primes: return explicit_encode_hash(d, m, coins);
    case ObliviousScheme::randomized_primes: return randomized_encode_hash(d, m, coins);
    default:
      throw std::invalid_argument("systematic wrapper: needs a prime-residue scheme inside");
  }
}

std::optional<BitString> wrapped_decode(const ObliviousDescriptor& d, const BitString& z,
                                        const HashTag& tag) {
  switch (d.scheme) {
    case ObliviousScheme::explicit_primes: return explicit_decode(d, z, tag);
    case ObliviousScheme::randomized_primes: return randomized_decode(d, z, tag);
    default:
      throw std::invalid_argument("systematic wrapper: needs a prime-residue scheme inside");
  }
}

}  // namespace

int systematic_codeword_length(const ObliviousDescriptor& d) {
  return d.params.n + (d.params.t + 1) * tag_width_bits(d);
}

BitString systematic_encode(const ObliviousDescriptor& d, const BitString& m, Rng& coins) {
  const HashTag tag = wrapped_encode_hash(d, m, coins);
  BitString out = m;
  out.append(rep_encode(pack_tag(d, tag), d.params.t + 1));
  return out;
}

std::optional<BitString> systematic_decode(const ObliviousDescriptor& d, const BitString& z) {
  const int n = d.params.n;
  const int t = d.params.t;
  const int rep_len = (t + 1) * tag_width_bits(d);
  BitString zz = z;
  if (zz.size() > n + rep_len - t) zz = zz.prefix(n + rep_len - t);
  if (zz.size() != n + rep_len - t) {
    throw std::invalid_argument("systematic_decode: received word too short");
  }
  const BitString z0 = zz.prefix(n - t);
  const BitString z1 = zz.suffix(rep_len - t);
  const BitString tag_bits = rep_decode(z1, t + 1);
  if (tag_bits.size() != tag_width_bits(d)) return std::nullopt;
  HashTag tag;
  try {
    tag = unpack_tag(d, tag_bits);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return wrapped_decode(d, z0, tag);
}

// ---------------------------------------------------------------------------
// accounting and serialization

int tag_residue_bits(const ObliviousDescriptor& d) {
  return ceil_log2(static_cast<std::uint64_t>(d.m_bound));
}

int tag_prime_field_bits(const ObliviousDescriptor& d) {
  switch (d.scheme) {
    case ObliviousScheme::explicit_primes:
      return ceil_log2(static_cast<std::uint64_t>(d.m_bound));  // prime by value
    case ObliviousScheme::randomized_primes:
      return ceil_log2(d.sampled.primes.size());  // prime by index into P
    case ObliviousScheme::list_wrapped:
      return ceil_log2(d.range_primes.size());  // prime by index into the window
    case ObliviousScheme::existential:
      throw std::invalid_argument("existential scheme has no hash tag");
  }
  throw std::logic_error("tag_prime_field_bits: bad scheme");
}

int tag_width_bits(const ObliviousDescriptor& d) {
  return tag_prime_field_bits(d) + tag_residue_bits(d);
}

int redundancy_bits(const ObliviousDescriptor& d) {
  switch (d.scheme) {
    case ObliviousScheme::explicit_primes:
    case ObliviousScheme::randomized_primes:
      return tag_width_bits(d);
    case ObliviousScheme::list_wrapped:
      return d.listcode.r_list + (d.params.t + 1) * tag_width_bits(d);
    case ObliviousScheme::existential: {
      // Rate view: n bits carry floor(log2 |C|) message bits.
      const int msg_bits = std::bit_width(d.codebook.size()) - 1;
      return d.params.n - msg_bits;
    }
  }
  throw std::logic_error("redundancy_bits: bad scheme");
}

int randomness_bits(const ObliviousDescriptor& d) {
  switch (d.scheme) {
    case ObliviousScheme::explicit_primes:
      return ceil_log2(d.range_primes.size());
    case ObliviousScheme::randomized_primes:
      return ceil_log2(d.sampled.primes.size());
    case ObliviousScheme::list_wrapped:
      return ceil_log2(d.range_primes.size());
    case ObliviousScheme::existential:
      return ceil_log2(static_cast<std::uint64_t>(d.s));
  }
  throw std::logic_error("randomness_bits: bad scheme");
}

BitString pack_tag(const ObliviousDescriptor& d, const HashTag& tag) {
  const std::uint64_t prime_field =
      d.scheme == ObliviousScheme::explicit_primes
          ? static_cast<std::uint64_t>(tag.prime_value)
          : static_cast<std::uint64_t>(tag.prime_index);
  BitString out = BitString::from_value(prime_field, tag_prime_field_bits(d));
  out.append(BitString::from_value(static_cast<std::uint64_t>(tag.residue),
                                   tag_residue_bits(d)));
  return out;
}

HashTag unpack_tag(const ObliviousDescriptor& d, const BitString& bits) {
  const int pf = tag_prime_field_bits(d);
  const int rf = tag_residue_bits(d);
  if (bits.size() != pf + rf) {
    throw std::invalid_argument("unpack_tag: tag has wrong width");
  }
  const std::uint64_t prime_field = pf == 0 ? 0 : bits.prefix(pf).value();
  HashTag tag;
  tag.residue = static_cast<std::int64_t>(rf == 0 ? 0 : bits.suffix(rf).value());
  switch (d.scheme) {
    case ObliviousScheme::explicit_primes:
      tag.prime_value = static_cast<std::int64_t>(prime_field);
      tag.prime_index = -1;
      break;
    case ObliviousScheme::randomized_primes:
      tag.prime_index = static_cast<std::int64_t>(prime_field);
      if (tag.prime_index >= static_cast<std::int64_t>(d.sampled.primes.size())) {
        throw std::runtime_error("unpack_tag: prime index out of range");
      }
      tag.prime_value = d.sampled.primes[static_cast<std::size_t>(tag.prime_index)];
      break;
    case ObliviousScheme::list_wrapped:
      tag.prime_index = static_cast<std::int64_t>(prime_field);
      if (tag.prime_index >= static_cast<std::int64_t>(d.range_primes.size())) {
        throw std::runtime_error("unpack_tag: prime index out of range");
      }
      tag.prime_value = d.range_primes[static_cast<std::size_t>(tag.prime_index)];
      break;
    case ObliviousScheme::existential:
      throw std::invalid_argument("existential scheme has no hash tag");
  }
  return tag;
}

}  // namespace delcode
