#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <set>

#include "delcode/bitseq.hpp"
#include "delcode/channels.hpp"

using namespace delcode;

TEST_CASE("channel serialization round-trips") {
  const auto obl = make_oblivious_channel(DeletionPattern(7, {1, 3, 4, 6, 7}));
  CHECK(obl.str() == "oblivious:7:1,3,4,6,7:0");
  CHECK(ChannelInstance::parse(obl.str()).str() == obl.str());

  const auto uni = make_uniform_channel(10, 2, 42);
  CHECK(uni.str() == "uniform:10:2:42");
  CHECK(ChannelInstance::parse(uni.str()).str() == uni.str());

  const auto iid = make_iid_channel(12, 0.125, 7);
  const auto reparsed = ChannelInstance::parse(iid.str());
  CHECK(reparsed.kind == ChannelKind::iid);
  CHECK(reparsed.n == 12);
  CHECK(reparsed.p == doctest::Approx(0.125));
  CHECK(reparsed.seed == 7);

  CHECK_THROWS_AS(ChannelInstance::parse("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(ChannelInstance::parse("warp:4:1:0"), std::invalid_argument);
  CHECK_THROWS_AS(make_iid_channel(4, 1.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_uniform_channel(4, 5, 0), std::invalid_argument);
}

TEST_CASE("oblivious channel commits to its pattern up front") {
  const DeletionPattern tau = DeletionPattern::from_deleted(7, {2, 5});
  const auto ch = make_oblivious_channel(tau);
  // The pattern exists on the instance before any codeword is seen.
  CHECK(ch.pattern == tau);
  CHECK(channel_pattern(ch) == tau);
  CHECK(channel_pattern(ch, 99) == tau);  // invocation-independent

  const BitString c = BitString::parse("1001011");
  CHECK(corrupt(ch, c) == apply_pattern(c, tau));
  CHECK(corrupt(ch, c).str() == "10111");
  CHECK_THROWS_AS(corrupt(ch, BitString::parse("10")), std::invalid_argument);
}

TEST_CASE("uniform channel draws exactly-t patterns, deterministically per invocation") {
  const auto ch = make_uniform_channel(9, 2, 5);
  std::set<std::string> seen;
  for (std::uint64_t k = 0; k < 40; ++k) {
    const auto tau = channel_pattern(ch, k);
    CHECK(tau.n == 9);
    CHECK(tau.deletions() == 2);
    // corrupt is exactly "apply the reported pattern".
    CHECK(corrupt(ch, BitString::parse("101010101"), k) ==
          apply_pattern(BitString::parse("101010101"), tau));
    // Replays are bit-identical.
    CHECK(channel_pattern(ch, k) == tau);
    seen.insert(tau.str());
  }
  CHECK(seen.size() > 1);  // invocations differ

  // All C(9,2)=36 patterns appear with roughly uniform frequency.
  std::map<std::string, int> freq;
  const int trials = 7200;
  for (std::uint64_t k = 0; k < trials; ++k) ++freq[channel_pattern(ch, k).str()];
  CHECK(freq.size() == 36);
  const double mean = trials / 36.0;
  const double sigma = std::sqrt(trials * (1.0 / 36.0) * (35.0 / 36.0));
  for (const auto& [pat, count] : freq) {
    INFO("pattern ", pat, " count ", count);
    CHECK(std::abs(count - mean) <= 5.0 * sigma);
  }
}

TEST_CASE("iid channel deletes each bit independently with probability p") {
  const int n = 20;
  const double p = 0.1;
  const auto ch = make_iid_channel(n, p, 11);

  // Determinism per invocation.
  CHECK(channel_pattern(ch, 3) == channel_pattern(ch, 3));

  // Mean deletion count over many invocations: 3-sigma band around n*p.
  const int trials = 100000;
  long long total_deletions = 0;
  for (std::uint64_t k = 0; k < trials; ++k) {
    total_deletions += channel_pattern(ch, k).deletions();
  }
  const double expected = static_cast<double>(trials) * n * p;
  const double sigma = std::sqrt(static_cast<double>(trials) * n * p * (1.0 - p));
  INFO("total deletions ", total_deletions, " expected ", expected);
  CHECK(std::abs(static_cast<double>(total_deletions) - expected) <= 3.0 * sigma);

  // Positionwise rates too: each position is deleted about p of the time.
  std::vector<int> pos_deleted(n + 1, 0);
  const int pos_trials = 20000;
  for (std::uint64_t k = 0; k < pos_trials; ++k) {
    for (int d : channel_pattern(ch, k).deleted()) ++pos_deleted[static_cast<std::size_t>(d)];
  }
  const double psigma = std::sqrt(pos_trials * p * (1.0 - p));
  for (int i = 1; i <= n; ++i) {
    CHECK(std::abs(pos_deleted[static_cast<std::size_t>(i)] - pos_trials * p) <= 5.0 * psigma);
  }

  // p=0 deletes nothing; p=1 deletes everything.
  CHECK(channel_pattern(make_iid_channel(6, 0.0, 0)).deletions() == 0);
  CHECK(channel_pattern(make_iid_channel(6, 1.0, 0)).deletions() == 6);
}

TEST_CASE("distinct seeds give distinct streams") {
  const auto a = make_uniform_channel(12, 3, 1);
  const auto b = make_uniform_channel(12, 3, 2);
  int differing = 0;
  for (std::uint64_t k = 0; k < 20; ++k) {
    if (channel_pattern(a, k) != channel_pattern(b, k)) ++differing;
  }
  CHECK(differing > 0);
}
