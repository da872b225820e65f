#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "delcode/bitseq.hpp"
#include "delcode/oblivious.hpp"

using namespace delcode;

namespace {

std::vector<BitString> all_words(int n) {
  std::vector<BitString> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    out.push_back(BitString::from_value(v, n));
  }
  return out;
}

int ceil_log2(std::uint64_t v) {
  int b = 0;
  while ((std::uint64_t{1} << b) < v) ++b;
  return b;
}

CodeParams make_params(int n, int t, long long num, long long den) {
  CodeParams p;
  p.n = n;
  p.t = t;
  p.eps_num = num;
  p.eps_den = den;
  return p;
}

// Exact per-(m, tau) failure fraction of the explicit scheme over its own
// encoder coins: the fraction of window primes dividing some inner-hash
// difference between m and a rival supersequence of tau(m).
Ratio explicit_pair_failure(const ObliviousDescriptor& d, const BitString& m,
                            const DeletionPattern& tau) {
  const BitString z = apply_pattern(m, tau);
  const std::uint64_t hm = inner_hash(d.inner, m);
  std::vector<std::uint64_t> diffs;
  for (const auto& cand : enumerate_supersequences(z, d.params.n)) {
    if (cand == m) continue;
    const std::uint64_t hc = inner_hash(d.inner, cand);
    diffs.push_back(hc > hm ? hc - hm : hm - hc);
  }
  return dividing_prime_fraction(diffs, d.range_primes);
}

}  // namespace

TEST_CASE("scheme names round-trip") {
  for (auto s : {ObliviousScheme::explicit_primes, ObliviousScheme::randomized_primes,
                 ObliviousScheme::list_wrapped, ObliviousScheme::existential}) {
    CHECK(parse_scheme(scheme_str(s)) == s);
  }
  CHECK_THROWS_AS(parse_scheme("bogus"), std::invalid_argument);
}

TEST_CASE("parameter validation: t = 0 and degenerate eps are out of model") {
  const auto vt = make_vt_spec(8);
  CHECK_THROWS_AS(explicit_build(make_params(8, 0, 1, 4), vt), std::invalid_argument);
  CHECK_THROWS_AS(explicit_build(make_params(8, 8, 1, 4), vt), std::invalid_argument);
  CHECK_THROWS_AS(explicit_build(make_params(8, 1, 0, 4), vt), std::invalid_argument);
  CHECK_THROWS_AS(explicit_build(make_params(8, 1, 5, 4), vt), std::invalid_argument);
  // Mismatched inner hash.
  CHECK_THROWS_AS(explicit_build(make_params(10, 1, 1, 4), vt), std::invalid_argument);
}

TEST_CASE("choose_modulus_bound returns the smallest admissible power of two") {
  const Ratio slack(1, 8);
  const std::uint64_t weight = 144;
  const int f = 8;
  const std::int64_t m = choose_modulus_bound(weight, f, slack);
  CHECK(m >= 1024);
  CHECK((m & (m - 1)) == 0);  // power of two

  const auto holds = [&](std::int64_t cap) {
    const int k = ceil_log2(static_cast<std::uint64_t>(cap));
    const std::uint64_t lhs = weight * ((f + k - 2) / (k - 1));
    const auto primes = primes_in_range(PrimeRange::half_to(cap));
    return Ratio(static_cast<long long>(lhs)) <=
           slack * Ratio(static_cast<long long>(primes.size()));
  };
  CHECK(holds(m));
  if (m > 1024) CHECK_FALSE(holds(m / 2));  // minimality above the floor
}

TEST_CASE("explicit build populates the window and accounting fields") {
  const auto vt = make_vt_spec(8);
  const auto d = explicit_build(make_params(8, 1, 1, 2), vt);
  CHECK(d.scheme == ObliviousScheme::explicit_primes);
  CHECK((d.m_bound & (d.m_bound - 1)) == 0);
  CHECK(d.range_primes == primes_in_range(PrimeRange::half_to(d.m_bound)));
  CHECK_FALSE(d.range_primes.empty());
  // Nominal closed form: 100 * n^t * f / eps.
  CHECK(d.nominal_m == doctest::Approx(100.0 * 8 * vt.f / 0.5));
  // Tag carries the prime by value plus the residue, both mod-M-width.
  CHECK(tag_prime_field_bits(d) == ceil_log2(static_cast<std::uint64_t>(d.m_bound)));
  CHECK(tag_residue_bits(d) == ceil_log2(static_cast<std::uint64_t>(d.m_bound)));
  CHECK(tag_width_bits(d) == 2 * ceil_log2(static_cast<std::uint64_t>(d.m_bound)));
  CHECK(redundancy_bits(d) == tag_width_bits(d));
  CHECK(randomness_bits(d) == ceil_log2(d.range_primes.size()));
}

TEST_CASE("explicit encode/decode round trip on every (m, tau) pair") {
  const auto d = explicit_build(make_params(8, 1, 1, 2), make_vt_spec(8));
  for (const auto& m : all_words(8)) {
    Rng coins(m.value() * 7 + 1);
    const HashTag tag = explicit_encode_hash(d, m, coins);
    CHECK(is_prime(static_cast<std::uint64_t>(tag.prime_value)));
    CHECK(tag.prime_value >= d.m_bound / 2);
    CHECK(tag.prime_value <= d.m_bound);
    CHECK(tag.residue >= 0);
    CHECK(tag.residue < tag.prime_value);
    for (const auto& tau : all_patterns(8, 1)) {
      const auto got = explicit_decode(d, apply_pattern(m, tau), tag);
      REQUIRE(got.has_value());
      CHECK(*got == m);
    }
    // Degenerate input: z = m (decoder trims the extra trailing bit itself).
    const auto same = explicit_decode(d, m, tag);
    REQUIRE(same.has_value());
    CHECK(*same == m);
  }
}

TEST_CASE("explicit encoder coins are deterministic per seed") {
  const auto d = explicit_build(make_params(8, 1, 1, 4), make_vt_spec(8));
  const BitString m = BitString::parse("10110010");
  Rng a(99), b(99), c(100);
  const auto ta = explicit_encode_hash(d, m, a);
  const auto tb = explicit_encode_hash(d, m, b);
  CHECK(ta == tb);
  bool all_same = true;
  Rng cc(100);
  for (int k = 0; k < 16; ++k) {
    if (!(explicit_encode_hash(d, m, cc) == ta)) all_same = false;
  }
  CHECK_FALSE(all_same);  // the prime really is drawn from the coins
}

TEST_CASE("explicit decode rejects malformed and foreign tags") {
  const auto vt = make_vt_spec(8);
  const auto d = explicit_build(make_params(8, 1, 1, 2), vt);
  const BitString z = BitString::parse("0110100");

  HashTag bad;
  bad.prime_value = 7;  // far below the window
  bad.residue = 3;
  CHECK_THROWS_AS(explicit_decode(d, z, bad), std::runtime_error);

  bad.prime_value = d.m_bound / 2 + 1;
  while (!is_prime(static_cast<std::uint64_t>(bad.prime_value))) ++bad.prime_value;
  bad.residue = bad.prime_value + 5;  // not reduced
  CHECK_THROWS_AS(explicit_decode(d, z, bad), std::runtime_error);

  // A tag minted by a descriptor over a different window.
  const auto d2 = explicit_build_forced(make_params(8, 1, 1, 2), vt, 4 * d.m_bound);
  Rng coins(5);
  const auto foreign = explicit_encode_hash(d2, BitString::parse("10110010"), coins);
  CHECK_THROWS_AS(explicit_decode(d, z, foreign), std::runtime_error);
}

TEST_CASE("every message keeps a majority of good primes in the window") {
  const auto d = explicit_build(make_params(8, 1, 1, 2), make_vt_spec(8));
  for (const auto& m : all_words(8)) {
    const std::uint64_t hm = inner_hash(d.inner, m);
    std::vector<std::uint64_t> diffs;
    for (const auto& w : confusable_set(m, 1)) {
      if (w == m) continue;
      const std::uint64_t hw = inner_hash(d.inner, w);
      diffs.push_back(hw > hm ? hw - hm : hm - hw);
    }
    const Ratio bad = dividing_prime_fraction(diffs, d.range_primes);
    CHECK(Ratio(1) - bad >= Ratio(1, 2));
  }
}

TEST_CASE("randomized build: sampled multiset size, window, and tag accounting") {
  const auto vt = make_vt_spec(8);
  const auto d = randomized_build(make_params(8, 1, 1, 2), vt, 0);
  CHECK(d.scheme == ObliviousScheme::randomized_primes);
  // |P| = ceil(100 n / eps) = 1600 at n = 8, eps = 1/2.
  CHECK(d.sampled.primes.size() == 1600);
  for (auto p : d.sampled.primes) {
    CHECK(is_prime(static_cast<std::uint64_t>(p)));
    CHECK(p >= d.m_bound / 2);
    CHECK(p <= d.m_bound);
  }
  CHECK(tag_prime_field_bits(d) == ceil_log2(1600));
  CHECK(tag_width_bits(d) ==
        ceil_log2(static_cast<std::uint64_t>(d.m_bound)) + ceil_log2(1600));
  CHECK(randomness_bits(d) == ceil_log2(1600));

  // Same seed, same multiset; the build is reproducible.
  const auto d2 = randomized_build(make_params(8, 1, 1, 2), vt, 0, /*verify_exact=*/false);
  CHECK(d2.sampled.primes == d.sampled.primes);
}

TEST_CASE("randomized encode/decode round trip and index validation") {
  const auto d = randomized_build(make_params(8, 1, 1, 2), make_vt_spec(8), 3,
                                  /*verify_exact=*/false);
  for (std::uint64_t v = 0; v < 256; v += 5) {
    const BitString m = BitString::from_value(v, 8);
    Rng coins(v + 17);
    const HashTag tag = randomized_encode_hash(d, m, coins);
    CHECK(tag.prime_index >= 0);
    CHECK(tag.prime_value ==
          d.sampled.primes[static_cast<std::size_t>(tag.prime_index)]);
    for (const auto& tau : all_patterns(8, 1)) {
      const auto got = randomized_decode(d, apply_pattern(m, tau), tag);
      REQUIRE(got.has_value());
      CHECK(*got == m);
    }
  }
  HashTag bad;
  bad.prime_index = static_cast<std::int64_t>(d.sampled.primes.size());
  bad.residue = 0;
  CHECK_THROWS_AS(randomized_decode(d, BitString::parse("0000000"), bad),
                  std::runtime_error);
}

TEST_CASE("tag packing is a fixed-width bijection for all tag-bearing schemes") {
  const auto vt = make_vt_spec(8);
  const auto de = explicit_build(make_params(8, 1, 1, 2), vt);
  const auto dr = randomized_build(make_params(8, 1, 1, 2), vt, 0, false);
  for (const auto* d : {&de, &dr}) {
    for (std::uint64_t seed = 0; seed < 24; ++seed) {
      Rng coins(seed);
      const BitString m = BitString::from_value(seed * 10 % 256, 8);
      const HashTag tag = d->scheme == ObliviousScheme::explicit_primes
                              ? explicit_encode_hash(*d, m, coins)
                              : randomized_encode_hash(*d, m, coins);
      const BitString packed_bits = pack_tag(*d, tag);
      CHECK(packed_bits.size() == tag_width_bits(*d));
      CHECK(unpack_tag(*d, packed_bits) == tag);
    }
  }
}

TEST_CASE("brute-force list code: occupancy never exceeds L") {
  const auto code = build_brute_force_list_code(6, 1, 2);
  CHECK(code.codewords.size() == 64);
  CHECK(code.r_list >= 1);
  const int len = 6 + code.r_list;

  // Every received word has at most L codeword supersequences.
  for (std::uint64_t z = 0; z < (std::uint64_t{1} << (len - 1)); ++z) {
    CHECK(code.list_decode(BitString::from_value(z, len - 1)).size() <= 2);
  }
  // The true message always appears in the list.
  for (const auto& m : all_words(6)) {
    const BitString c = code.encode(m);
    CHECK(c.size() == len);
    for (const auto& tau : all_patterns(len, 1)) {
      const auto list = code.list_decode(apply_pattern(c, tau));
      CHECK(std::find(list.begin(), list.end(), m) != list.end());
    }
  }
}

TEST_CASE("L = 1 list code degenerates to unique decoding") {
  const auto code = build_brute_force_list_code(5, 1, 1);
  for (const auto& m : all_words(5)) {
    const BitString c = code.encode(m);
    for (const auto& tau : all_patterns(c.size(), 1)) {
      const auto list = code.list_decode(apply_pattern(c, tau));
      REQUIRE(list.size() == 1);
      CHECK(list[0] == m);
    }
  }
}

TEST_CASE("list wrapper round trip at n = 6, t = 1") {
  auto code = build_brute_force_list_code(6, 1, 2);
  const int len1 = 6 + code.r_list;
  const auto d = list_wrap_build(std::move(code), make_params(6, 1, 1, 4),
                                 make_vt_spec(len1));
  const int full = len1 + 2 * tag_width_bits(d);
  for (const auto& m : all_words(6)) {
    Rng coins(m.value() + 3);
    const BitString c = list_wrap_encode(d, m, coins);
    CHECK(c.size() == full);
    CHECK(c.prefix(len1) == d.listcode.encode(m));  // outer code is untouched
    for (const auto& tau : all_patterns(full, 1)) {
      const auto got = list_wrap_decode(d, apply_pattern(c, tau));
      REQUIRE(got.has_value());
      CHECK(*got == m);
    }
    // No deletions at all: decoder trims the surplus trailing bit.
    const auto whole = list_wrap_decode(d, c);
    REQUIRE(whole.has_value());
    CHECK(*whole == m);
  }
  CHECK(redundancy_bits(d) == d.listcode.r_list + 2 * tag_width_bits(d));
}

TEST_CASE("systematic wrapper: message rides in the clear") {
  const auto d = explicit_build(make_params(8, 1, 1, 2), make_vt_spec(8));
  CHECK(systematic_codeword_length(d) == 8 + 2 * tag_width_bits(d));
  const int full = systematic_codeword_length(d);
  for (const auto& m : all_words(8)) {
    Rng coins(m.value() ^ 0x5a);
    const BitString c = systematic_encode(d, m, coins);
    CHECK(c.size() == full);
    CHECK(c.prefix(8) == m);
    for (const auto& tau : all_patterns(full, 1)) {
      const auto got = systematic_decode(d, apply_pattern(c, tau));
      REQUIRE(got.has_value());
      CHECK(*got == m);
    }
  }
  CHECK_THROWS_AS(systematic_decode(d, BitString::parse("01")), std::invalid_argument);
}

TEST_CASE("existential sampler: some seed yields a surviving codebook") {
  const CodeParams params = make_params(8, 1, 1, 2);
  ObliviousDescriptor d;
  bool built = false;
  std::uint64_t used_seed = 0;
  for (std::uint64_t seed = 0; seed < 50 && !built; ++seed) {
    try {
      d = existential_build(params, /*s=*/4, /*codebook_size=*/2, seed);
      built = true;
      used_seed = seed;
    } catch (const std::runtime_error&) {
      // Pruning kept fewer than half; try the next seed.
    }
  }
  REQUIRE(built);
  INFO("surviving build found at seed ", used_seed);
  CHECK(d.codebook.size() == 2);
  CHECK(d.s == 4);
  CHECK(randomness_bits(d) == 2);  // ceil(log2 s)

  const auto taus = all_patterns(8, 1);
  int survivors = 0;
  for (std::size_t i = 0; i < d.codebook.size(); ++i) {
    if (!d.surviving[i]) continue;
    ++survivors;
    for (const auto& tau : taus) {
      long long bad = 0;
      for (const auto& w : d.codebook[i]) {
        const auto got = existential_decode(d, apply_pattern(w, tau));
        if (!got.has_value()) {
          ++bad;
        } else {
          CHECK(*got == static_cast<int>(i));  // never wrong, only bottom
        }
      }
      CHECK(Ratio(bad, d.s) <= Ratio(1, 2));
    }
  }
  CHECK(2 * survivors >= static_cast<int>(d.codebook.size()));

  // Encoding draws uniformly from the message's multiset.
  if (d.surviving[0]) {
    Rng coins(1);
    for (int k = 0; k < 8; ++k) {
      const BitString w = existential_encode(d, 0, coins);
      CHECK(std::find(d.codebook[0].begin(), d.codebook[0].end(), w) !=
            d.codebook[0].end());
    }
  }
  Rng probe(0);
  CHECK_THROWS_AS(existential_encode(d, 7, probe), std::invalid_argument);
}

TEST_CASE("existential budget guard") {
  CHECK_THROWS_AS(existential_build(make_params(40, 2, 1, 2), 4, 4, 0), budget_error);
}

TEST_CASE("enlarging the window does not raise failure on this grid") {
  // Pinned diagnostic grid: n = 12, t = 1, syndrome hash (differences <= 12),
  // forced caps 16/32/64. Any violation is reported, not hidden.
  const auto vt = make_vt_spec(12);
  const CodeParams params = make_params(12, 1, 1, 4);
  std::vector<ObliviousDescriptor> ds;
  for (std::int64_t cap : {16, 32, 64}) {
    ds.push_back(explicit_build_forced(params, vt, cap));
  }
  const auto taus = all_patterns(12, 1);
  std::vector<std::string> violations;
  for (std::uint64_t v = 0; v < 4096; v += 37) {
    const BitString m = BitString::from_value(v, 12);
    for (const auto& tau : taus) {
      Ratio prev(2);  // above any probability
      for (const auto& d : ds) {
        const Ratio fail = explicit_pair_failure(d, m, tau);
        if (fail > prev) {
          violations.push_back("m=" + m.str() + " tau=" + tau.str() +
                               " M=" + std::to_string(d.m_bound));
        }
        prev = fail;
      }
    }
  }
  INFO("monotonicity violations: ",
       violations.empty() ? std::string("none") : violations.front());
  CHECK(violations.empty());
}

TEST_CASE("forced caps really do buy nonzero failure (what the guard prevents)") {
  const auto vt = make_vt_spec(12);
  const auto forced = explicit_build_forced(make_params(12, 1, 1, 4), vt, 16);
  const auto taus = all_patterns(12, 1);
  Ratio worst(0);
  for (std::uint64_t v = 0; v < 4096; ++v) {
    const BitString m = BitString::from_value(v, 12);
    for (const auto& tau : taus) {
      worst = std::max(worst, explicit_pair_failure(forced, m, tau));
    }
  }
  CHECK(worst > Ratio(0));

  // The guarded build at the same parameters stays within eps everywhere:
  // its window primes exceed every possible hash difference.
  const auto guarded = explicit_build(make_params(12, 1, 1, 4), vt);
  CHECK(guarded.m_bound / 2 > (1 << vt.f));
}
