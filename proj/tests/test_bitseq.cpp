#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "delcode/bits.hpp"
#include "delcode/bitseq.hpp"

using namespace delcode;

namespace {

// Brute-force subsequence test used as an independent oracle below.
bool subseq_oracle(const BitString& z, const BitString& x) {
  int i = 1;
  for (int j = 1; j <= x.size() && i <= z.size(); ++j) {
    if (x.at(j) == z.at(i)) ++i;
  }
  return i > z.size();
}

std::vector<BitString> all_words(int n) {
  std::vector<BitString> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    out.push_back(BitString::from_value(v, n));
  }
  return out;
}

}  // namespace

TEST_CASE("apply_pattern keeps exactly the survivors") {
  const BitString x = BitString::parse("1001011");
  const auto tau = DeletionPattern::from_deleted(7, {2, 5});
  CHECK(apply_pattern(x, tau).str() == "10111");
  CHECK(apply_pattern(x, DeletionPattern::identity(7)) == x);
  CHECK(apply_pattern(x, DeletionPattern(7, {})).str() == "");
  CHECK_THROWS_AS(apply_pattern(BitString::parse("10"), tau), std::invalid_argument);
}

TEST_CASE("apply_pattern output is a subsequence, exhaustively at n=6") {
  for (const auto& x : all_words(6)) {
    for (int t = 0; t <= 3; ++t) {
      for (const auto& tau : all_patterns(6, t)) {
        const BitString z = apply_pattern(x, tau);
        CHECK(z.size() == 6 - t);
        CHECK(is_subsequence(z, x));
      }
    }
  }
}

TEST_CASE("is_subsequence basics") {
  CHECK(is_subsequence(BitString::parse("10111"), BitString::parse("1001011")));
  CHECK(is_subsequence(BitString::parse(""), BitString::parse("01")));
  CHECK_FALSE(is_subsequence(BitString::parse("11"), BitString::parse("00")));
  CHECK_FALSE(is_subsequence(BitString::parse("110"), BitString::parse("10")));
  for (const auto& x : all_words(5)) {
    for (const auto& z : all_words(3)) {
      CHECK(is_subsequence(z, x) == subseq_oracle(z, x));
    }
  }
}

TEST_CASE("runs decomposition") {
  const auto rs = runs(BitString::parse("0111001"));
  REQUIRE(rs.size() == 4);
  CHECK(rs[0].str() == "0");
  CHECK(rs[1].str() == "111");
  CHECK(rs[2].str() == "00");
  CHECK(rs[3].str() == "1");
  CHECK(runs(BitString::parse("0")).size() == 1);
  CHECK(runs(BitString::parse("")).empty());

  for (const auto& x : all_words(7)) {
    BitString rebuilt;
    int prev = -1;
    for (const auto& r : runs(x)) {
      REQUIRE(r.size() >= 1);
      // Adjacent runs alternate bit values.
      CHECK(static_cast<int>(r.at(1)) != prev);
      prev = r.at(1);
      for (int i = 2; i <= r.size(); ++i) CHECK(r.at(i) == r.at(1));
      rebuilt.append(r);
    }
    CHECK(rebuilt == x);

    const auto rl = run_lengths(x);
    const auto rs2 = runs(x);
    REQUIRE(rl.size() == rs2.size());
    for (std::size_t i = 0; i < rl.size(); ++i) {
      CHECK(rl[i].length == rs2[i].size());
      CHECK(rl[i].bit == rs2[i].at(1));
    }
  }
}

TEST_CASE("enumerate_subsequences matches brute force") {
  const auto got = enumerate_subsequences(BitString::parse("0101"), 3);
  // Dropping position 1..4 of 0101 gives 101, 001, 011, 010; sorted and
  // de-duplicated that is four words.
  const std::vector<BitString> want = {
      BitString::parse("001"), BitString::parse("010"), BitString::parse("011"),
      BitString::parse("101")};
  CHECK(got == want);

  CHECK(enumerate_subsequences(BitString::parse("0000"), 3) ==
        std::vector<BitString>{BitString::parse("000")});
  CHECK(enumerate_subsequences(BitString::parse("01"), 1) ==
        std::vector<BitString>{BitString::parse("0"), BitString::parse("1")});

  for (const auto& x : all_words(6)) {
    for (int k = 0; k <= 6; ++k) {
      std::set<BitString> brute;
      for (const auto& z : all_words(k)) {
        if (subseq_oracle(z, x)) brute.insert(z);
      }
      const auto fast = enumerate_subsequences(x, k);
      CHECK(fast == std::vector<BitString>(brute.begin(), brute.end()));
      CHECK(deletion_ball_size(x, 6 - k) == fast.size());
    }
  }
}

TEST_CASE("enumerate_supersequences matches brute force and the counting formula") {
  const auto sup = enumerate_supersequences(BitString::parse("101"), 5);
  CHECK(sup.size() == 16);

  std::set<BitString> brute;
  for (const auto& s : all_words(5)) {
    if (subseq_oracle(BitString::parse("101"), s)) brute.insert(s);
  }
  CHECK(sup == std::vector<BitString>(brute.begin(), brute.end()));

  const BitString z = BitString::parse("0110");
  CHECK(enumerate_supersequences(z, 4) == std::vector<BitString>{z});

  // Size is content-independent: sum_{i<=n-|z|} C(n,i), for all z at several n.
  for (int zl = 0; zl <= 4; ++zl) {
    for (int n = zl; n <= 8; ++n) {
      for (const auto& zz : all_words(zl)) {
        CHECK(enumerate_supersequences(zz, n).size() == count_supersequences(zl, n));
      }
    }
  }
}

TEST_CASE("enumerate_supersequences_packed agrees with the BitString form") {
  for (const auto& z : all_words(4)) {
    const auto strings = enumerate_supersequences(z, 7);
    const auto words = enumerate_supersequences_packed(z.value(), 4, 7);
    REQUIRE(strings.size() == words.size());
    CHECK(std::is_sorted(words.begin(), words.end()));
    for (std::size_t i = 0; i < words.size(); ++i) {
      CHECK(BitString::from_value(words[i], 7) == strings[i]);
    }
  }
}

TEST_CASE("count_supersequences closed form") {
  CHECK(count_supersequences(3, 5) == 16);  // C(5,0)+C(5,1)+C(5,2)
  CHECK(count_supersequences(4, 4) == 1);
  CHECK(count_supersequences(0, 3) == 8);
  for (int zl = 0; zl <= 6; ++zl) {
    for (int n = zl; n <= 10; ++n) {
      std::uint64_t want = 0;
      for (int i = 0; i + zl <= n; ++i) want += binomial(n, i);
      CHECK(count_supersequences(zl, n) == want);
    }
  }
}

TEST_CASE("deletion ball bound n^t covers every ball, 2 <= t < n/2") {
  for (int n = 5; n <= 10; ++n) {
    for (int t = 2; 2 * t < n; ++t) {
      std::uint64_t pow_nt = 1;
      for (int i = 0; i < t; ++i) pow_nt *= static_cast<std::uint64_t>(n);
      CHECK(deletion_ball_bound(n, t) == pow_nt);
      for (const auto& x : all_words(n)) {
        CHECK(deletion_ball_size(x, t) <= deletion_ball_bound(n, t));
      }
    }
  }
}

TEST_CASE("distinct_subsequence_counts matches enumeration") {
  for (const auto& x : all_words(6)) {
    const auto counts = distinct_subsequence_counts(x);
    REQUIRE(counts.size() == 7);
    for (int k = 0; k <= 6; ++k) {
      CHECK(counts[static_cast<std::size_t>(k)] == enumerate_subsequences(x, k).size());
    }
  }
}

TEST_CASE("confusable and lcs_length") {
  CHECK(lcs_length(BitString::parse("1010"), BitString::parse("0101")) == 3);
  CHECK(lcs_length(BitString::parse("111"), BitString::parse("000")) == 0);
  // Confusable <=> share a common (n-t)-subsequence <=> LCS >= n-t.
  for (const auto& x : all_words(6)) {
    for (const auto& y : all_words(6)) {
      for (int t = 0; t <= 2; ++t) {
        CHECK(confusable(x, y, t) == (lcs_length(x, y) >= 6 - t));
      }
    }
  }
}

TEST_CASE("confusable_set examples and symmetry") {
  const auto cs = confusable_set(BitString::parse("0000"), 1);
  CHECK(cs.size() == 5);  // 0000 plus the four single-one neighbors
  for (const auto& w : cs) {
    CHECK(confusable(BitString::parse("0000"), w, 1));
  }

  const BitString m = BitString::parse("0101");
  CHECK(confusable_set(m, 0) == std::vector<BitString>{m});

  // Membership is symmetric: m' in C(m) iff m in C(m'). Exhaustive n<=7.
  for (int n = 2; n <= 7; ++n) {
    for (int t = 1; t <= 2; ++t) {
      std::vector<std::set<BitString>> sets;
      const auto words = all_words(n);
      sets.reserve(words.size());
      for (const auto& w : words) {
        const auto v = confusable_set(w, t);
        sets.emplace_back(v.begin(), v.end());
        CHECK(sets.back().count(w) == 1);  // reflexive
        CHECK(std::is_sorted(v.begin(), v.end()));
      }
      for (std::size_t i = 0; i < words.size(); ++i) {
        for (const auto& other : sets[i]) {
          const auto j = static_cast<std::size_t>(other.value());
          CHECK(sets[j].count(words[i]) == 1);
        }
      }
    }
  }
}

TEST_CASE("confusable_set agrees with the pairwise definition at n=8, t=1") {
  const auto words = all_words(8);
  for (std::uint64_t v : {0ULL, 37ULL, 129ULL, 255ULL}) {
    const BitString& m = words[static_cast<std::size_t>(v)];
    std::vector<BitString> brute;
    for (const auto& w : words) {
      if (confusable(m, w, 1)) brute.push_back(w);
    }
    CHECK(confusable_set(m, 1) == brute);
  }
}

TEST_CASE("pattern_distance counts survivor disagreements") {
  const DeletionPattern a(4, {1, 2, 4});
  const DeletionPattern b(4, {1, 3, 4});
  CHECK(pattern_distance(a, b) == 1);
  CHECK(pattern_distance(a, a) == 0);
  CHECK(pattern_distance(DeletionPattern(4, {1, 2}), DeletionPattern(4, {3, 4})) == 2);
  CHECK_THROWS_AS(pattern_distance(a, DeletionPattern(4, {1, 2})), std::invalid_argument);
}

TEST_CASE("is_bad_string examples and the (1,1) count at n=4") {
  CHECK(is_bad_string(BitString::parse("0000"), 1, 1));
  // ell larger than the survivor count can never be reached.
  CHECK_FALSE(is_bad_string(BitString::parse("0110"), 4, 1));

  std::uint64_t bad = 0;
  for (const auto& x : all_words(4)) {
    if (is_bad_string(x, 1, 1)) ++bad;
  }
  CHECK(bad <= 128);  // C(4,1)^2 * 2^{4-1}
  CHECK(bad >= 1);

  // Direct cross-check of the definition at n=5, t<=2.
  for (const auto& x : all_words(5)) {
    for (int t = 1; t <= 2; ++t) {
      const auto pats = all_patterns(5, t);
      for (int ell = 1; ell <= 4; ++ell) {
        bool brute = false;
        for (std::size_t i = 0; i < pats.size() && !brute; ++i) {
          for (std::size_t j = i + 1; j < pats.size() && !brute; ++j) {
            if (pattern_distance(pats[i], pats[j]) >= ell &&
                apply_pattern(x, pats[i]) == apply_pattern(x, pats[j])) {
              brute = true;
            }
          }
        }
        CHECK(is_bad_string(x, ell, t) == brute);
      }
    }
  }
}

TEST_CASE("all_patterns is complete, lexicographic, and budget-guarded") {
  const auto pats = all_patterns(5, 2);
  CHECK(pats.size() == binomial(5, 2));
  for (const auto& p : pats) {
    CHECK(p.n == 5);
    CHECK(p.deletions() == 2);
  }
  // Lexicographic order of deleted-position sets.
  for (std::size_t i = 1; i < pats.size(); ++i) {
    CHECK(pats[i - 1].deleted() < pats[i].deleted());
  }
  CHECK(all_patterns(6, 0).size() == 1);

  std::uint64_t streamed = 0;
  for_each_pattern(5, 2, [&](const DeletionPattern& p) {
    CHECK(p == pats[streamed]);
    ++streamed;
  });
  CHECK(streamed == pats.size());

  CHECK_THROWS_AS(all_patterns(64, 32), budget_error);
}

TEST_CASE("binomial exact values and overflow guard") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(10, 10) == 1);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(52, 26) == 495918532948104ULL);
  CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
}
