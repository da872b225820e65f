#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "delcode/bits.hpp"

namespace delcode {

// Exact binomial coefficient; throws std::overflow_error if the value does
// not fit in 64 bits.
std::uint64_t binomial(int n, int k);

// Keeps exactly the survivor positions of tau, in order. tau.n must equal x.size().
BitString apply_pattern(const BitString& x, const DeletionPattern& tau);

bool is_subsequence(const BitString& z, const BitString& x);

// Maximal runs of equal bits, in order; concatenating them reproduces x.
// "0111001" -> {"0","111","00","1"}.
std::vector<BitString> runs(const BitString& x);

struct Run {
  std::uint8_t bit;
  int length;
  bool operator==(const Run&) const = default;
};

// Same decomposition as runs(), kept as (bit, length) pairs for the
// repetition decoder's arithmetic.
std::vector<Run> run_lengths(const BitString& x);

// The exact set of distinct length-k subsequences of x, sorted. Enumerates
// C(n, n-k) patterns, so n and k must stay desk-scale.
std::vector<BitString> enumerate_subsequences(const BitString& x, int k,
                                              std::uint64_t budget = kDefaultEnumBudget);

// The exact set {s in {0,1}^n : z is a subsequence of s}, sorted. Built by
// repeated insertion, so it stays cheap even at codeword lengths where a 2^n
// scan would not.
std::vector<BitString> enumerate_supersequences(const BitString& z, int n,
                                                std::uint64_t budget = kDefaultEnumBudget);

// Packed-word variant of enumerate_supersequences for hot loops; result is
// ascending packed values of length n. Requires n <= packed::kMaxLen.
std::vector<std::uint64_t> enumerate_supersequences_packed(std::uint64_t z, int z_len, int n);

// |enumerate_subsequences(x, n-t)| computed exactly by the
// distinct-subsequence DP, without enumerating.
std::uint64_t deletion_ball_size(const BitString& x, int t);

// Number of distinct subsequences of x of each length 0..n (index = length).
std::vector<std::uint64_t> distinct_subsequence_counts(const BitString& x);

// n^t, the coarse bound on any deletion-ball size for 2 <= t < n/2.
std::uint64_t deletion_ball_bound(int n, int t);

// Number of length-n supersequences of any fixed word of length z_len:
// sum_{i=0}^{n-z_len} C(n,i). Content-independent.
std::uint64_t count_supersequences(int z_len, int n);

// True iff x and y share a common subsequence of length |x|-t, i.e. they can
// collide after t deletions each (LCS(x,y) >= n-t).
bool confusable(const BitString& x, const BitString& y, int t);

int lcs_length(const BitString& x, const BitString& y);

// All m' of m's length sharing some length-(n-t) subsequence with m, sorted;
// m itself is included. Computed as the union of supersequence sets over m's
// deletion ball, so size stays near the n^{2t} bound rather than 2^n.
std::vector<BitString> confusable_set(const BitString& m, int t,
                                      std::uint64_t budget = kDefaultEnumBudget);

// Positionwise disagreement count between the sorted survivor lists; both
// patterns must share n and t.
int pattern_distance(const DeletionPattern& tau, const DeletionPattern& tau2);

// True iff two distinct patterns at distance >= ell map x to the same word.
bool is_bad_string(const BitString& x, int ell, int t);

// All deletion patterns on n positions with exactly t deletions, in
// lexicographic order of the deleted-position sets.
std::vector<DeletionPattern> all_patterns(int n, int t,
                                          std::uint64_t budget = kDefaultEnumBudget);

// Streaming form of all_patterns for hot loops: calls fn once per pattern,
// same order, without materializing the list.
void for_each_pattern(int n, int t, const std::function<void(const DeletionPattern&)>& fn);

}  // namespace delcode
