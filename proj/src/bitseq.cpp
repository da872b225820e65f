#include "delcode/bitseq.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace delcode {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* what) {
  if (a > UINT64_MAX - b) throw std::overflow_error(what);
  return a + b;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (acc > UINT64_MAX) throw std::overflow_error("binomial: value exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

BitString apply_pattern(const BitString& x, const DeletionPattern& tau) {
  if (tau.n != x.size()) {
    throw std::invalid_argument("apply_pattern: pattern length " + std::to_string(tau.n) +
                                " does not match word length " + std::to_string(x.size()));
  }
  BitString z;
  for (int p : tau.survivors) z.push_back(x.at(p));
  return z;
}

bool is_subsequence(const BitString& z, const BitString& x) {
  int zi = 0;
  for (int xi = 0; xi < x.size() && zi < z.size(); ++xi) {
    if (x[xi] == z[zi]) ++zi;
  }
  return zi == z.size();
}

std::vector<Run> run_lengths(const BitString& x) {
  std::vector<Run> out;
  for (int i = 0; i < x.size(); ++i) {
    if (!out.empty() && out.back().bit == x[i]) {
      ++out.back().length;
    } else {
      out.push_back(Run{x[i], 1});
    }
  }
  return out;
}

std::vector<BitString> runs(const BitString& x) {
  std::vector<BitString> out;
  for (const Run& r : run_lengths(x)) {
    BitString piece;
    for (int i = 0; i < r.length; ++i) piece.push_back(r.bit);
    out.push_back(std::move(piece));
  }
  return out;
}

std::vector<BitString> enumerate_subsequences(const BitString& x, int k, std::uint64_t budget) {
  const int n = x.size();
  if (k < 0 || k > n) throw std::invalid_argument("enumerate_subsequences: k out of range");
  const int t = n - k;
  if (binomial(n, t) > budget) {
    throw budget_error("enumerate_subsequences: C(" + std::to_string(n) + "," +
                       std::to_string(t) + ") patterns exceed enumeration budget");
  }
  std::set<BitString> seen;
  for_each_pattern(n, t, [&](const DeletionPattern& tau) { seen.insert(apply_pattern(x, tau)); });
  return std::vector<BitString>(seen.begin(), seen.end());
}

std::vector<BitString> enumerate_supersequences(const BitString& z, int n, std::uint64_t budget) {
  if (n < z.size()) throw std::invalid_argument("enumerate_supersequences: n shorter than z");
  std::set<BitString> level{z};
  for (int round = 0; round < n - z.size(); ++round) {
    std::set<BitString> next;
    for (const BitString& s : level) {
      // Inserting into a run anywhere along it gives the same word, so only
      // distinct results survive the set.
      for (int pos = 0; pos <= s.size(); ++pos) {
        for (std::uint8_t bit : {std::uint8_t{0}, std::uint8_t{1}}) {
          BitString y = s.slice(1, pos);
          y.push_back(bit);
          y.append(s.slice(pos + 1, s.size()));
          next.insert(std::move(y));
          if (next.size() > budget) {
            throw budget_error("enumerate_supersequences: result set exceeds budget");
          }
        }
      }
    }
    level = std::move(next);
  }
  return std::vector<BitString>(level.begin(), level.end());
}

std::vector<std::uint64_t> enumerate_supersequences_packed(std::uint64_t z, int z_len, int n) {
  if (n < z_len || n > packed::kMaxLen) {
    throw std::invalid_argument("enumerate_supersequences_packed: bad lengths");
  }
  std::vector<std::uint64_t> level{z};
  for (int len = z_len; len < n; ++len) {
    std::vector<std::uint64_t> next;
    next.reserve(level.size() * static_cast<std::size_t>(2 * (len + 1)));
    for (std::uint64_t w : level) {
      for (int pos = 1; pos <= len + 1; ++pos) {
        next.push_back(packed::insert_bit(w, len, pos, 0));
        next.push_back(packed::insert_bit(w, len, pos, 1));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  return level;
}

std::vector<std::uint64_t> distinct_subsequence_counts(const BitString& x) {
  const int n = x.size();
  // dp[j] = distinct subsequences of the processed prefix having length j.
  // Appending bit b doubles the candidates, then removes those already
  // produced at b's previous occurrence.
  std::vector<std::vector<std::uint64_t>> dp(static_cast<std::size_t>(n) + 1);
  dp[0].assign(static_cast<std::size_t>(n) + 1, 0);
  dp[0][0] = 1;
  int last[2] = {0, 0};
  for (int i = 1; i <= n; ++i) {
    const int b = x.at(i);
    dp[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 0; j <= i; ++j) {
      std::uint64_t v = dp[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
      if (j > 0) {
        v = checked_add(v, dp[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)],
                        "distinct_subsequence_counts: overflow");
        if (last[b] > 0) {
          v -= dp[static_cast<std::size_t>(last[b] - 1)][static_cast<std::size_t>(j - 1)];
        }
      }
      dp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    }
    last[b] = i;
  }
  return dp[static_cast<std::size_t>(n)];
}

std::uint64_t deletion_ball_size(const BitString& x, int t) {
  const int n = x.size();
  if (t < 0 || t > n) throw std::invalid_argument("deletion_ball_size: t out of range");
  return distinct_subsequence_counts(x)[static_cast<std::size_t>(n - t)];
}

std::uint64_t deletion_ball_bound(int n, int t) {
  std::uint64_t acc = 1;
  for (int i = 0; i < t; ++i) {
    if (acc > UINT64_MAX / static_cast<std::uint64_t>(n)) {
      throw std::overflow_error("deletion_ball_bound: n^t exceeds 64 bits");
    }
    acc *= static_cast<std::uint64_t>(n);
  }
  return acc;
}

std::uint64_t count_supersequences(int z_len, int n) {
  if (z_len < 0 || n < z_len) {
    throw std::invalid_argument("count_supersequences: need 0 <= z_len <= n");
  }
  std::uint64_t total = 0;
  for (int i = 0; i <= n - z_len; ++i) {
    total = checked_add(total, binomial(n, i), "count_supersequences: overflow");
  }
  return total;
}

int lcs_length(const BitString& x, const BitString& y) {
  std::vector<int> prev(static_cast<std::size_t>(y.size()) + 1, 0);
  std::vector<int> cur(static_cast<std::size_t>(y.size()) + 1, 0);
  for (int i = 1; i <= x.size(); ++i) {
    for (int j = 1; j <= y.size(); ++j) {
      if (x.at(i) == y.at(j)) {
        cur[static_cast<std::size_t>(j)] = prev[static_cast<std::size_t>(j - 1)] + 1;
      } else {
        cur[static_cast<std::size_t>(j)] =
            std::max(prev[static_cast<std::size_t>(j)], cur[static_cast<std::size_t>(j - 1)]);
      }
    }
    std::swap(prev, cur);
  }
  return prev[static_cast<std::size_t>(y.size())];
}

bool confusable(const BitString& x, const BitString& y, int t) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("confusable: words must have equal length");
  }
  if (t < 0 || t > x.size()) throw std::invalid_argument("confusable: t out of range");
  return lcs_length(x, y) >= x.size() - t;
}

std::vector<BitString> confusable_set(const BitString& m, int t, std::uint64_t budget) {
  const int n = m.size();
  if (t < 0 || t > n) throw std::invalid_argument("confusable_set: t out of range");
  std::set<BitString> out;
  for (const BitString& z : enumerate_subsequences(m, n - t, budget)) {
    for (BitString& y : enumerate_supersequences(z, n, budget)) {
      out.insert(std::move(y));
      if (out.size() > budget) throw budget_error("confusable_set: result exceeds budget");
    }
  }
  return std::vector<BitString>(out.begin(), out.end());
}

int pattern_distance(const DeletionPattern& tau, const DeletionPattern& tau2) {
  if (tau.n != tau2.n || tau.survivors.size() != tau2.survivors.size()) {
    throw std::invalid_argument("pattern_distance: patterns must share n and t");
  }
  int d = 0;
  for (std::size_t i = 0; i < tau.survivors.size(); ++i) {
    if (tau.survivors[i] != tau2.survivors[i]) ++d;
  }
  return d;
}

bool is_bad_string(const BitString& x, int ell, int t) {
  if (ell < 1) throw std::invalid_argument("is_bad_string: ell must be >= 1");
  if (t >= x.size() || t < 0) throw std::invalid_argument("is_bad_string: need 0 <= t < n");
  // Bucket patterns by their output, then look for a far-apart pair inside a
  // bucket.
  std::map<BitString, std::vector<DeletionPattern>> by_output;
  bool found = false;
  for_each_pattern(x.size(), t, [&](const DeletionPattern& tau) {
    if (found) return;
    auto& bucket = by_output[apply_pattern(x, tau)];
    for (const DeletionPattern& prior : bucket) {
      if (pattern_distance(prior, tau) >= ell) {
        found = true;
        return;
      }
    }
    bucket.push_back(tau);
  });
  return found;
}

std::vector<DeletionPattern> all_patterns(int n, int t, std::uint64_t budget) {
  if (binomial(n, t) > budget) {
    throw budget_error("all_patterns: C(" + std::to_string(n) + "," + std::to_string(t) +
                       ") patterns exceed enumeration budget");
  }
  std::vector<DeletionPattern> out;
  out.reserve(static_cast<std::size_t>(binomial(n, t)));
  for_each_pattern(n, t, [&](const DeletionPattern& tau) { out.push_back(tau); });
  return out;
}

void for_each_pattern(int n, int t, const std::function<void(const DeletionPattern&)>& fn) {
  if (t < 0 || t > n) throw std::invalid_argument("for_each_pattern: t out of range");
  std::vector<int> del(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) del[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    fn(DeletionPattern::from_deleted(n, del));
    // Advance the deleted set to the next t-subset in lexicographic order.
    int i = t - 1;
    while (i >= 0 && del[static_cast<std::size_t>(i)] == n - (t - 1 - i)) --i;
    if (i < 0) break;
    ++del[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < t; ++j) {
      del[static_cast<std::size_t>(j)] = del[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace delcode
