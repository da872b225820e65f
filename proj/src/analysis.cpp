#include "delcode/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "delcode/channels.hpp"
#include "delcode/inner_hash.hpp"
#include "delcode/primes.hpp"
#include "delcode/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace delcode {

namespace {

BitString trim_to(const BitString& z, int len) {
  if (z.size() < len) {
    throw std::invalid_argument("received word shorter than the decoder's contract");
  }
  return z.size() == len ? z : z.prefix(len);
}

// Survivor positions the decoder actually keeps: trailing-trim drops the
// final deletions'-worth of survivors when fewer than t bits were deleted.
std::vector<int> trimmed_survivors(const DeletionPattern& tau, int keep) {
  if (static_cast<int>(tau.survivors.size()) < keep) {
    throw std::invalid_argument("pattern deletes more bits than the decoder tolerates");
  }
  return {tau.survivors.begin(), tau.survivors.begin() + keep};
}

std::string fmt2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// =============================================================================
// Per-scheme evaluators. Each offers the two independent failure routes; the
// sweep driver computes both on every grid point and demands exact agreement.

// Explicit and randomized schemes in their hash-transmission form: the
// pattern acts on the message, the tag travels intact.
class PrimeTagEvaluator {
 public:
  explicit PrimeTagEvaluator(const ObliviousDescriptor& d)
      : d_(d), factors_(PrimeRange::half_to(d.m_bound)) {
    if (d.scheme != ObliviousScheme::explicit_primes &&
        d.scheme != ObliviousScheme::randomized_primes) {
      throw std::invalid_argument("evaluator: descriptor is not a prime-tag scheme");
    }
    if (d.scheme == ObliviousScheme::randomized_primes) {
      for (std::int64_t p : d.sampled.primes) ++multiplicity_[p];
    }
  }

  const std::vector<std::int64_t>& outcomes() const {
    return d_.scheme == ObliviousScheme::explicit_primes ? d_.range_primes : d_.sampled.primes;
  }

  // Sorted distinct |h(w) - h(m)| over the other supersequences w of the
  // trimmed tau(m). An encoding prime fails exactly when it divides one of
  // these (the decoder then sees a second residue match and returns bottom;
  // a lone match is always m itself, which is why wrong outputs are
  // structurally impossible here).
  std::vector<std::uint64_t> rival_diffs(const BitString& m, const DeletionPattern& tau) const {
    const int n = d_.params.n;
    const BitString z = trim_to(apply_pattern(m, tau), n - d_.params.t);
    const std::uint64_t hm = inner_hash(d_.inner, m);
    std::vector<std::uint64_t> diffs;
    for (std::uint64_t w : enumerate_supersequences_packed(z.value(), z.size(), n)) {
      const BitString cand = BitString::from_value(w, n);
      if (cand == m) continue;
      const std::uint64_t hc = inner_hash(d_.inner, cand);
      if (hc == hm) {
        throw std::logic_error("inner hash failed to separate a confusable pair");
      }
      diffs.push_back(hc > hm ? hc - hm : hm - hc);
    }
    std::sort(diffs.begin(), diffs.end());
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
    return diffs;
  }

  // An outcome p is bad iff some rival hash lands in m's residue class,
  // i.e. p divides a rival diff. Only diffs >= p are divisible.
  static bool outcome_fails(const std::vector<std::uint64_t>& diffs, std::int64_t p) {
    auto it = std::lower_bound(diffs.begin(), diffs.end(), static_cast<std::uint64_t>(p));
    for (; it != diffs.end(); ++it) {
      if (*it % static_cast<std::uint64_t>(p) == 0) return true;
    }
    return false;
  }

  // Route a: enumerate every randomness outcome and evaluate the decoder's
  // decision on it.
  Ratio by_decode(const BitString& m, const DeletionPattern& tau) const {
    const auto diffs = rival_diffs(m, tau);
    long long bad = 0;
    for (std::int64_t p : outcomes()) bad += outcome_fails(diffs, p) ? 1 : 0;
    return Ratio(bad, static_cast<long long>(outcomes().size()));
  }

  // Route b: factor each diff once and count the dividing primes directly
  // (with multiplicity inside the sampled multiset).
  Ratio by_counting(const BitString& m, const DeletionPattern& tau) const {
    const auto diffs = rival_diffs(m, tau);
    std::vector<std::int64_t> dividing;
    for (std::uint64_t dv : diffs) {
      const auto& fs = factors_.factors(dv);
      dividing.insert(dividing.end(), fs.begin(), fs.end());
    }
    std::sort(dividing.begin(), dividing.end());
    dividing.erase(std::unique(dividing.begin(), dividing.end()), dividing.end());
    if (d_.scheme == ObliviousScheme::explicit_primes) {
      return Ratio(static_cast<long long>(dividing.size()),
                   static_cast<long long>(d_.range_primes.size()));
    }
    long long hits = 0;
    for (std::int64_t q : dividing) {
      auto it = multiplicity_.find(q);
      if (it != multiplicity_.end()) hits += it->second;
    }
    return Ratio(hits, static_cast<long long>(d_.sampled.primes.size()));
  }

  // Literal end-to-end run of the real decoder at one deterministically
  // chosen outcome, checked against the per-outcome decision.
  void literal_check(const BitString& m, const DeletionPattern& tau) const {
    const auto diffs = rival_diffs(m, tau);
    const auto& outs = outcomes();
    const std::size_t idx = mix64(m.value() ^ mix64(hash_string(tau.str()))) % outs.size();
    const std::int64_t p = outs[idx];
    HashTag tag;
    tag.prime_value = p;
    tag.prime_index = d_.scheme == ObliviousScheme::explicit_primes
                          ? -1
                          : static_cast<std::int64_t>(idx);
    tag.residue = static_cast<std::int64_t>(inner_hash(d_.inner, m) %
                                            static_cast<std::uint64_t>(p));
    const BitString z = apply_pattern(m, tau);
    const auto got = d_.scheme == ObliviousScheme::explicit_primes
                         ? explicit_decode(d_, z, tag)
                         : randomized_decode(d_, z, tag);
    const bool should_fail = outcome_fails(diffs, p);
    if (should_fail ? got.has_value() : (!got.has_value() || *got != m)) {
      throw std::logic_error("literal decode disagrees with the outcome enumeration at m=" +
                             m.str() + " tau=" + tau.str());
    }
  }

 private:
  const ObliviousDescriptor& d_;
  mutable WindowFactorCache factors_;
  std::unordered_map<std::int64_t, long long> multiplicity_;
};

// Systematic wrapper: the pattern acts on m followed by the protected tag.
// Route a is fully literal (encode, corrupt, decode per outcome).
class SystematicEvaluator {
 public:
  explicit SystematicEvaluator(const ObliviousDescriptor& d)
      : d_(d), factors_(PrimeRange::half_to(d.m_bound)) {
    if (d.scheme != ObliviousScheme::explicit_primes &&
        d.scheme != ObliviousScheme::randomized_primes) {
      throw std::invalid_argument("systematic evaluator: needs a prime-tag scheme inside");
    }
    full_len_ = systematic_codeword_length(d);
  }

  int full_len() const { return full_len_; }

  Ratio by_decode(const BitString& m, const DeletionPattern& tau) const {
    const bool by_value = d_.scheme == ObliviousScheme::explicit_primes;
    const auto& outs = by_value ? d_.range_primes : d_.sampled.primes;
    const std::uint64_t hm = inner_hash(d_.inner, m);
    long long bad = 0;
    for (std::size_t i = 0; i < outs.size(); ++i) {
      HashTag tag;
      tag.prime_value = outs[i];
      tag.prime_index = by_value ? -1 : static_cast<std::int64_t>(i);
      tag.residue = static_cast<std::int64_t>(hm % static_cast<std::uint64_t>(outs[i]));
      BitString c = m;
      c.append(rep_encode(pack_tag(d_, tag), d_.params.t + 1));
      const auto got = systematic_decode(d_, apply_pattern(c, tau));
      if (got.has_value() && *got != m) {
        throw std::logic_error("systematic decoder returned a wrong message at m=" + m.str() +
                               " tau=" + tau.str());
      }
      if (!got.has_value()) ++bad;
    }
    return Ratio(bad, static_cast<long long>(outs.size()));
  }

  // Route b: the repetition block always delivers the tag under <= t
  // deletions, so failure is decided by the message-block survivors alone:
  // count primes dividing a rival diff of z0.
  Ratio by_counting(const BitString& m, const DeletionPattern& tau) const {
    const int n = d_.params.n;
    const int t = d_.params.t;
    const auto keep = trimmed_survivors(tau, full_len_ - t);
    BitString z0;
    for (int i = 0; i < n - t; ++i) {
      if (keep[static_cast<std::size_t>(i)] > n) {
        throw std::logic_error("first n-t survivors must lie in the message block");
      }
      z0.push_back(m.at(keep[static_cast<std::size_t>(i)]));
    }
    const std::uint64_t hm = inner_hash(d_.inner, m);
    std::vector<std::uint64_t> diffs;
    for (std::uint64_t w : enumerate_supersequences_packed(z0.value(), z0.size(), n)) {
      const BitString cand = BitString::from_value(w, n);
      if (cand == m) continue;
      const std::uint64_t hc = inner_hash(d_.inner, cand);
      diffs.push_back(hc > hm ? hc - hm : hm - hc);
    }
    std::sort(diffs.begin(), diffs.end());
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());

    std::vector<std::int64_t> dividing;
    for (std::uint64_t dv : diffs) {
      const auto& fs = factors_.factors(dv);
      dividing.insert(dividing.end(), fs.begin(), fs.end());
    }
    std::sort(dividing.begin(), dividing.end());
    dividing.erase(std::unique(dividing.begin(), dividing.end()), dividing.end());
    if (d_.scheme == ObliviousScheme::explicit_primes) {
      return Ratio(static_cast<long long>(dividing.size()),
                   static_cast<long long>(d_.range_primes.size()));
    }
    long long hits = 0;
    std::unordered_map<std::int64_t, long long> mult;
    for (std::int64_t p : d_.sampled.primes) ++mult[p];
    for (std::int64_t q : dividing) {
      auto it = mult.find(q);
      if (it != mult.end()) hits += it->second;
    }
    return Ratio(hits, static_cast<long long>(d_.sampled.primes.size()));
  }

 private:
  const ObliviousDescriptor& d_;
  mutable WindowFactorCache factors_;
  int full_len_ = 0;
};

// List-wrapped scheme: the pattern acts on Enc_list(m) followed by the
// protected tag. The candidate sets per received prefix are precomputed
// (they are what the list decoder would return) and cross-checked against
// the literal list decoder on a deterministic sample.
class ListEvaluator {
 public:
  explicit ListEvaluator(const ObliviousDescriptor& d)
      : d_(d), factors_(PrimeRange::half_to(d.m_bound)) {
    if (d.scheme != ObliviousScheme::list_wrapped) {
      throw std::invalid_argument("list evaluator: descriptor is not list-wrapped");
    }
    const int n = d.params.n;
    const int t = d.params.t;
    block1_ = n + d.listcode.r_list;
    rep_width_ = (t + 1) * tag_width_bits(d);
    full_len_ = block1_ + rep_width_;

    const std::uint64_t msg_count = std::uint64_t{1} << n;
    block_hash_.resize(msg_count);
    for (std::uint64_t mv = 0; mv < msg_count; ++mv) {
      const BitString& c = d.listcode.codewords[mv];
      block_hash_[mv] = inner_hash(d.inner, c);
      const std::uint64_t cw = c.value();
      // Every t-deletion result of the block-1 codeword, deduplicated.
      std::vector<std::uint64_t> ball;
      for_each_pattern(block1_, t, [&](const DeletionPattern& tau) {
        std::uint64_t z = cw;
        const auto del = tau.deleted();
        for (int i = static_cast<int>(del.size()) - 1; i >= 0; --i) {
          z = packed::erase_bit(z, block1_ - (static_cast<int>(del.size()) - 1 - i),
                                del[static_cast<std::size_t>(i)]);
        }
        ball.push_back(z);
      });
      std::sort(ball.begin(), ball.end());
      ball.erase(std::unique(ball.begin(), ball.end()), ball.end());
      for (std::uint64_t z : ball) cands_[z].push_back(static_cast<std::uint32_t>(mv));
    }
    // Spot-check the candidate map against the literal list decoder.
    for (std::uint64_t mv = 0; mv < msg_count; mv += std::max<std::uint64_t>(1, msg_count / 16)) {
      const BitString z0 = d.listcode.codewords[mv].prefix(block1_ - t);
      const auto want = d.listcode.list_decode(z0);
      const auto& got = cands_.at(z0.value());
      if (want.size() != got.size()) {
        throw std::logic_error("candidate map disagrees with the literal list decoder");
      }
      for (std::size_t i = 0; i < got.size(); ++i) {
        if (want[i].value() != got[i]) {
          throw std::logic_error("candidate map disagrees with the literal list decoder");
        }
      }
    }
  }

  int full_len() const { return full_len_; }

  // Splits the trimmed survivors into the list-decoder prefix z0 and the
  // repetition-region pattern.
  struct Split {
    BitString z0;                  // first block1 - t received bits
    DeletionPattern rep_pattern;   // action on the repetition block
    int rep_keep = 0;              // bits of the repetition block the decoder reads
  };

  Split split(const BitString& c1, const DeletionPattern& tau) const {
    const int t = d_.params.t;
    const auto keep = trimmed_survivors(tau, full_len_ - t);
    Split s;
    for (int i = 0; i < block1_ - t; ++i) {
      const int pos = keep[static_cast<std::size_t>(i)];
      if (pos > block1_) throw std::logic_error("prefix survivors must lie in block 1");
      s.z0.push_back(c1.at(pos));
    }
    std::vector<int> rep_survivors;
    for (int i = block1_; i < static_cast<int>(keep.size()); ++i) {
      const int pos = keep[static_cast<std::size_t>(i)];
      if (pos <= block1_) throw std::logic_error("suffix survivors must lie in the rep block");
      rep_survivors.push_back(pos - block1_);
    }
    s.rep_keep = rep_width_ - t;
    // The decoder reads the last rep_width - t received bits; survivors
    // before that window are part of the discarded gap.
    while (static_cast<int>(rep_survivors.size()) > s.rep_keep) {
      rep_survivors.erase(rep_survivors.begin());
    }
    s.rep_pattern = DeletionPattern(rep_width_, rep_survivors);
    return s;
  }

  Ratio by_decode(const BitString& m, const DeletionPattern& tau) const {
    const BitString& c1 = d_.listcode.codewords[m.value()];
    const Split s = split(c1, tau);
    auto it = cands_.find(s.z0.value());
    if (it == cands_.end()) {
      throw std::logic_error("received prefix has no codeword supersequence");
    }
    const auto& cand = it->second;
    if (std::find(cand.begin(), cand.end(), static_cast<std::uint32_t>(m.value())) ==
        cand.end()) {
      throw std::logic_error("transmitted message missing from its candidate list");
    }
    const std::uint64_t hm = block_hash_[m.value()];

    // Literal repetition path at one deterministic outcome; the remaining
    // outcomes rely on the repetition decoder's content-independence, which
    // has its own exhaustive test.
    const std::size_t probe =
        mix64(m.value() ^ mix64(hash_string(tau.str()))) % d_.range_primes.size();
    long long bad = 0;
    for (std::size_t i = 0; i < d_.range_primes.size(); ++i) {
      const std::int64_t p = d_.range_primes[i];
      const std::uint64_t res = hm % static_cast<std::uint64_t>(p);
      if (i == probe) {
        HashTag tag;
        tag.prime_index = static_cast<std::int64_t>(i);
        tag.prime_value = p;
        tag.residue = static_cast<std::int64_t>(res);
        const BitString rep_word = rep_encode(pack_tag(d_, tag), d_.params.t + 1);
        BitString z1 = apply_pattern(rep_word, s.rep_pattern);
        z1 = z1.suffix(s.rep_keep);
        const BitString tag_bits = rep_decode(z1, d_.params.t + 1);
        if (tag_bits != pack_tag(d_, tag)) {
          throw std::logic_error("repetition block failed to deliver the tag");
        }
      }
      int matches = 0;
      for (std::uint32_t cv : cand) {
        if (block_hash_[cv] % static_cast<std::uint64_t>(p) == res) ++matches;
      }
      if (matches != 1) ++bad;
    }
    return Ratio(bad, static_cast<long long>(d_.range_primes.size()));
  }

  Ratio by_counting(const BitString& m, const DeletionPattern& tau) const {
    const BitString& c1 = d_.listcode.codewords[m.value()];
    const Split s = split(c1, tau);
    const auto& cand = cands_.at(s.z0.value());
    const std::uint64_t hm = block_hash_[m.value()];
    std::vector<std::uint64_t> diffs;
    for (std::uint32_t cv : cand) {
      if (cv == m.value()) continue;
      const std::uint64_t hc = block_hash_[cv];
      if (hc == hm) throw std::logic_error("inner hash failed to separate two list candidates");
      diffs.push_back(hc > hm ? hc - hm : hm - hc);
    }
    std::sort(diffs.begin(), diffs.end());
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
    std::vector<std::int64_t> dividing;
    for (std::uint64_t dv : diffs) {
      const auto& fs = factors_.factors(dv);
      dividing.insert(dividing.end(), fs.begin(), fs.end());
    }
    std::sort(dividing.begin(), dividing.end());
    dividing.erase(std::unique(dividing.begin(), dividing.end()), dividing.end());
    return Ratio(static_cast<long long>(dividing.size()),
                 static_cast<long long>(d_.range_primes.size()));
  }

  // Full literal pipeline at one outcome, for periodic spot checks.
  void literal_check(const BitString& m, const DeletionPattern& tau) const {
    const std::size_t idx =
        mix64(mix64(m.value()) ^ hash_string(tau.str())) % d_.range_primes.size();
    const std::int64_t p = d_.range_primes[idx];
    HashTag tag;
    tag.prime_index = static_cast<std::int64_t>(idx);
    tag.prime_value = p;
    tag.residue = static_cast<std::int64_t>(block_hash_[m.value()] %
                                            static_cast<std::uint64_t>(p));
    BitString c = d_.listcode.codewords[m.value()];
    c.append(rep_encode(pack_tag(d_, tag), d_.params.t + 1));
    const auto got = list_wrap_decode(d_, apply_pattern(c, tau));
    if (got.has_value() && *got != m) {
      throw std::logic_error("list-wrapped decoder returned a wrong message at m=" + m.str());
    }
    // Fail iff a second candidate shares the residue at this outcome.
    const auto& cand = cands_.at(split(d_.listcode.codewords[m.value()], tau).z0.value());
    int matches = 0;
    for (std::uint32_t cv : cand) {
      if (block_hash_[cv] % static_cast<std::uint64_t>(p) ==
          block_hash_[m.value()] % static_cast<std::uint64_t>(p)) {
        ++matches;
      }
    }
    if ((matches != 1) == got.has_value()) {
      throw std::logic_error("literal list decode disagrees with the outcome decision");
    }
  }

 private:
  const ObliviousDescriptor& d_;
  mutable WindowFactorCache factors_;
  int block1_ = 0, rep_width_ = 0, full_len_ = 0;
  std::vector<std::uint64_t> block_hash_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> cands_;
};

// Random-codebook sampler.
class ExistentialEvaluator {
 public:
  explicit ExistentialEvaluator(const ObliviousDescriptor& d) : d_(d) {
    if (d.scheme != ObliviousScheme::existential) {
      throw std::invalid_argument("sampler evaluator: descriptor is not the sampler scheme");
    }
  }

  Ratio by_decode(int message, const DeletionPattern& tau) const {
    const auto& multiset = d_.codebook[static_cast<std::size_t>(message)];
    long long bad = 0;
    for (const BitString& w : multiset) {
      const auto got = existential_decode(d_, apply_pattern(w, tau));
      if (got.has_value() && *got != message) {
        throw std::logic_error("sampler decoder returned a wrong message");
      }
      if (!got.has_value()) ++bad;
    }
    return Ratio(bad, d_.s);
  }

  // Route b: direct containment counting against the surviving rivals.
  Ratio by_counting(int message, const DeletionPattern& tau) const {
    const auto& multiset = d_.codebook[static_cast<std::size_t>(message)];
    long long bad = 0;
    for (const BitString& w : multiset) {
      const BitString z = trim_to(apply_pattern(w, tau), d_.params.n - d_.params.t);
      bool hit = false;
      for (std::size_t j = 0; j < d_.codebook.size() && !hit; ++j) {
        if (static_cast<int>(j) == message || !d_.surviving[j]) continue;
        for (const BitString& u : d_.codebook[j]) {
          if (is_subsequence(z, u)) {
            hit = true;
            break;
          }
        }
      }
      if (hit) ++bad;
    }
    return Ratio(bad, d_.s);
  }

 private:
  const ObliviousDescriptor& d_;
};

// Deterministic adversarial scheme: failures are 0/1 facts.
class AdversarialEvaluator {
 public:
  explicit AdversarialEvaluator(const AdversarialDescriptor& d)
      : d_(d), factors_(PrimeRange::half_to(d.m_bound)) {}

  Ratio by_decode(const BitString& m, const DeletionPattern& tau) const {
    const HashTag tag = adversarial_encode_hash(d_, m);
    try {
      return adversarial_decode(d_, apply_pattern(m, tau), tag) == m ? Ratio(0) : Ratio(1);
    } catch (const std::runtime_error&) {
      return Ratio(1);
    }
  }

  Ratio by_counting(const BitString& m, const DeletionPattern& tau) const {
    const HashTag tag = adversarial_encode_hash(d_, m);
    const int n = d_.params.n;
    const BitString z = trim_to(apply_pattern(m, tau), n - d_.params.t);
    const std::uint64_t hm = inner_hash(d_.inner, m);
    for (std::uint64_t w : enumerate_supersequences_packed(z.value(), z.size(), n)) {
      const BitString cand = BitString::from_value(w, n);
      if (cand == m) continue;
      const std::uint64_t hc = inner_hash(d_.inner, cand);
      const std::uint64_t diff = hc > hm ? hc - hm : hm - hc;
      const auto& fs = factors_.factors(diff);
      if (std::binary_search(fs.begin(), fs.end(), tag.prime_value)) return Ratio(1);
    }
    return Ratio(0);
  }

 private:
  const AdversarialDescriptor& d_;
  mutable WindowFactorCache factors_;
};

// =============================================================================
// Sweep driver.

using PairEvalFn =
    std::function<Ratio(std::size_t mi, std::size_t ti, const DeletionPattern& tau)>;
using EvalFactory = std::function<PairEvalFn()>;

// Patterns implied by the channel model. For sampled models the report also
// learns how many iid trials were rejected for exceeding t deletions.
std::vector<DeletionPattern> model_patterns(const ChannelModelSpec& channel, int len, int t,
                                            const GridSpec& grid, long long* rejected,
                                            std::uint64_t budget) {
  *rejected = 0;
  switch (channel.kind) {
    case ChannelModel::oblivious_exhaustive:
    case ChannelModel::adversarial_worst_case: {
      if (!grid.patterns.empty()) {
        for (const DeletionPattern& tau : grid.patterns) {
          if (tau.n != len) throw std::invalid_argument("grid pattern length mismatch");
          if (tau.deletions() > t) {
            throw std::invalid_argument("grid pattern exceeds the deletion budget");
          }
        }
        return grid.patterns;
      }
      return all_patterns(len, t, budget);
    }
    case ChannelModel::uniform_random_t: {
      if (channel.trials <= 0) {
        throw std::invalid_argument("sampled channel model needs trials > 0");
      }
      const ChannelInstance ch = make_uniform_channel(len, t, channel.seed);
      std::vector<DeletionPattern> taus;
      taus.reserve(static_cast<std::size_t>(channel.trials));
      for (int k = 0; k < channel.trials; ++k) {
        taus.push_back(channel_pattern(ch, static_cast<std::uint64_t>(k)));
      }
      return taus;
    }
    case ChannelModel::iid_deletion: {
      if (channel.trials <= 0) {
        throw std::invalid_argument("sampled channel model needs trials > 0");
      }
      const ChannelInstance ch = make_iid_channel(len, channel.p, channel.seed);
      std::vector<DeletionPattern> taus;
      for (int k = 0; k < channel.trials; ++k) {
        DeletionPattern tau = channel_pattern(ch, static_cast<std::uint64_t>(k));
        if (tau.deletions() > t) {
          ++*rejected;  // outside the exactly-t regime; rejection policy
          continue;
        }
        taus.push_back(std::move(tau));
      }
      return taus;
    }
  }
  throw std::logic_error("model_patterns: bad channel model");
}

FailureReport run_grid(const std::string& scheme, int n, int t, const Ratio& eps,
                       const Ratio& bound, const std::vector<std::string>& labels,
                       const std::vector<DeletionPattern>& taus, bool worst_per_message,
                       const EvalFactory& factory, Parallelism par, bool collect_rows) {
  const auto t0 = std::chrono::steady_clock::now();
  FailureReport rep;
  rep.scheme = scheme;
  rep.n = n;
  rep.t = t;
  rep.eps = eps;
  rep.bound = bound;
  rep.grid_points = static_cast<long long>(labels.size()) * static_cast<long long>(taus.size());

  const std::size_t m_count = labels.size();
  struct Partial {
    Ratio sum{0};
    Ratio worst{0};
    std::size_t worst_ti = 0;
    long long violations = 0;
    std::size_t first_viol_ti = 0;
    bool has_viol = false;
  };
  std::vector<Partial> partials(m_count);
  std::string error;
  const bool rows_per_pair = collect_rows && !worst_per_message;
  if (rows_per_pair) rep.rows.resize(static_cast<std::size_t>(rep.grid_points));

  auto body = [&](std::size_t mi, PairEvalFn& eval) {
    Partial& part = partials[mi];
    for (std::size_t ti = 0; ti < taus.size(); ++ti) {
      const Ratio f = eval(mi, ti, taus[ti]);
      part.sum += f;
      if (f > part.worst) {
        part.worst = f;
        part.worst_ti = ti;
      }
      if (f > bound) {
        ++part.violations;
        if (!part.has_viol) {
          part.has_viol = true;
          part.first_viol_ti = ti;
        }
      }
      if (rows_per_pair) {
        // Each (mi, ti) slot is written by exactly one thread.
        rep.rows[mi * taus.size() + ti] = {labels[mi], taus[ti].str(), f};
      }
    }
  };

  if (par == Parallelism::openmp) {
#ifdef _OPENMP
#pragma omp parallel
    {
      PairEvalFn eval = factory();
#pragma omp for schedule(dynamic)
      for (std::int64_t mi = 0; mi < static_cast<std::int64_t>(m_count); ++mi) {
        if (!error.empty()) continue;
        try {
          body(static_cast<std::size_t>(mi), eval);
        } catch (const std::exception& e) {
#pragma omp critical
          if (error.empty()) error = e.what();
        }
      }
    }
#else
    PairEvalFn eval = factory();
    for (std::size_t mi = 0; mi < m_count && error.empty(); ++mi) {
      try {
        body(mi, eval);
      } catch (const std::exception& e) {
        error = e.what();
      }
    }
#endif
  } else {
    PairEvalFn eval = factory();
    for (std::size_t mi = 0; mi < m_count && error.empty(); ++mi) {
      try {
        body(mi, eval);
      } catch (const std::exception& e) {
        error = e.what();
      }
    }
  }
  if (!error.empty()) throw std::logic_error(error);

  // Deterministic merge in message order.
  Ratio total{0};
  for (std::size_t mi = 0; mi < m_count; ++mi) {
    const Partial& part = partials[mi];
    total += part.sum;
    if (part.worst > rep.worst) rep.worst = part.worst;
    rep.violations += part.violations;
    if (part.has_viol && rep.first_violation.empty()) {
      // Recompute nothing: name the grid point; its value is in the rows.
      rep.first_violation = "m=" + labels[mi] + ", tau=" + taus[part.first_viol_ti].str();
    }
  }
  if (rep.grid_points > 0) rep.mean = total / rep.grid_points;

  if (collect_rows && worst_per_message) {
    // One row per message: its worst pattern.
    for (std::size_t mi = 0; mi < m_count; ++mi) {
      const std::size_t ti = partials[mi].worst_ti;
      rep.rows.push_back({labels[mi], taus.empty() ? "" : taus[ti].str(), partials[mi].worst});
    }
  }
  if (worst_per_message && !taus.empty()) {
    // In worst-case mode the per-message rows are the maxima; aggregates
    // should describe those rows, not the whole pair grid.
    Ratio tot{0};
    long long viols = 0;
    for (std::size_t mi = 0; mi < m_count; ++mi) {
      tot += partials[mi].worst;
      if (partials[mi].worst > bound) ++viols;
    }
    rep.mean = m_count > 0 ? tot / static_cast<long long>(m_count) : Ratio(0);
    rep.violations = viols;
  }

  const auto t1 = std::chrono::steady_clock::now();
  rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

Ratio agreed_failure(const Ratio& a, const Ratio& b, const std::string& label) {
  if (a != b) {
    throw std::logic_error("two-path failure disagreement at " + label + ": decode route " +
                           ratio_str(a) + " vs counting route " + ratio_str(b));
  }
  return a;
}

}  // namespace

// =============================================================================

std::string channel_model_str(ChannelModel k) {
  switch (k) {
    case ChannelModel::oblivious_exhaustive: return "oblivious-exhaustive";
    case ChannelModel::adversarial_worst_case: return "adversarial-worst-case";
    case ChannelModel::uniform_random_t: return "uniform-random-t";
    case ChannelModel::iid_deletion: return "iid-deletion";
  }
  throw std::logic_error("channel_model_str: bad enum");
}

ChannelModel parse_channel_model(const std::string& s) {
  if (s == "oblivious-exhaustive") return ChannelModel::oblivious_exhaustive;
  if (s == "adversarial-worst-case") return ChannelModel::adversarial_worst_case;
  if (s == "uniform-random-t") return ChannelModel::uniform_random_t;
  if (s == "iid-deletion") return ChannelModel::iid_deletion;
  throw std::invalid_argument("parse_channel_model: unknown model \"" + s + "\"");
}

std::vector<BitString> all_messages(int n, std::uint64_t budget) {
  if (n < 0 || n > packed::kMaxLen || (std::uint64_t{1} << n) > budget) {
    throw budget_error("all_messages: 2^n exceeds enumeration budget");
  }
  std::vector<BitString> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    out.push_back(BitString::from_value(v, n));
  }
  return out;
}

Ratio exact_failure(const ObliviousDescriptor& d, const BitString& m,
                    const DeletionPattern& tau) {
  switch (d.scheme) {
    case ObliviousScheme::explicit_primes:
    case ObliviousScheme::randomized_primes:
      return PrimeTagEvaluator(d).by_decode(m, tau);
    case ObliviousScheme::list_wrapped:
      return ListEvaluator(d).by_decode(m, tau);
    case ObliviousScheme::existential:
      throw std::invalid_argument("exact_failure: sampler messages are indices");
  }
  throw std::logic_error("exact_failure: bad scheme");
}

Ratio exact_failure_counting(const ObliviousDescriptor& d, const BitString& m,
                             const DeletionPattern& tau) {
  switch (d.scheme) {
    case ObliviousScheme::explicit_primes:
    case ObliviousScheme::randomized_primes:
      return PrimeTagEvaluator(d).by_counting(m, tau);
    case ObliviousScheme::list_wrapped:
      return ListEvaluator(d).by_counting(m, tau);
    case ObliviousScheme::existential:
      throw std::invalid_argument("exact_failure_counting: sampler messages are indices");
  }
  throw std::logic_error("exact_failure_counting: bad scheme");
}

Ratio systematic_exact_failure(const ObliviousDescriptor& d, const BitString& m,
                               const DeletionPattern& tau) {
  return SystematicEvaluator(d).by_decode(m, tau);
}

Ratio systematic_exact_failure_counting(const ObliviousDescriptor& d, const BitString& m,
                                        const DeletionPattern& tau) {
  return SystematicEvaluator(d).by_counting(m, tau);
}

Ratio existential_exact_failure(const ObliviousDescriptor& d, int message,
                                const DeletionPattern& tau) {
  return ExistentialEvaluator(d).by_decode(message, tau);
}

Ratio existential_exact_failure_counting(const ObliviousDescriptor& d, int message,
                                         const DeletionPattern& tau) {
  return ExistentialEvaluator(d).by_counting(message, tau);
}

Ratio adversarial_exact_failure(const AdversarialDescriptor& d, const BitString& m,
                                const DeletionPattern& tau) {
  return AdversarialEvaluator(d).by_decode(m, tau);
}

Ratio adversarial_exact_failure_counting(const AdversarialDescriptor& d, const BitString& m,
                                         const DeletionPattern& tau) {
  return AdversarialEvaluator(d).by_counting(m, tau);
}

FailureReport worst_case_report(const ObliviousDescriptor& d, const ChannelModelSpec& channel,
                                const GridSpec& grid, Parallelism par, bool collect_rows,
                                std::uint64_t budget) {
  const Ratio eps(d.params.eps_num, d.params.eps_den);
  long long rejected = 0;

  if (d.scheme == ObliviousScheme::existential) {
    if (!grid.messages.empty()) {
      throw std::invalid_argument("sampler sweeps cover all surviving messages");
    }
    std::vector<std::string> labels;
    std::vector<int> indices;
    for (std::size_t i = 0; i < d.codebook.size(); ++i) {
      if (d.surviving[i]) {
        labels.push_back(std::to_string(i));
        indices.push_back(static_cast<int>(i));
      }
    }
    const auto taus = model_patterns(channel, d.params.n, d.params.t, grid, &rejected, budget);
    EvalFactory factory = [&d, &indices]() -> PairEvalFn {
      auto ev = std::make_shared<ExistentialEvaluator>(d);
      return [&d, &indices, ev](std::size_t mi, std::size_t, const DeletionPattern& tau) {
        const int msg = indices[mi];
        return agreed_failure(ev->by_decode(msg, tau), ev->by_counting(msg, tau),
                              "message " + std::to_string(msg) + ", tau " + tau.str());
      };
    };
    FailureReport rep = run_grid(scheme_str(d.scheme), d.params.n, d.params.t, eps, eps, labels,
                                 taus, channel.kind == ChannelModel::adversarial_worst_case,
                                 factory, par, collect_rows);
    rep.rejected_trials = rejected;
    return rep;
  }

  const auto messages = grid.messages.empty() ? all_messages(d.params.n, budget) : grid.messages;
  std::vector<std::string> labels;
  labels.reserve(messages.size());
  for (const BitString& m : messages) labels.push_back(m.str());

  const int len = d.scheme == ObliviousScheme::list_wrapped
                      ? d.params.n + d.listcode.r_list + (d.params.t + 1) * tag_width_bits(d)
                      : d.params.n;
  const auto taus = model_patterns(channel, len, d.params.t, grid, &rejected, budget);

  EvalFactory factory;
  if (d.scheme == ObliviousScheme::list_wrapped) {
    factory = [&d, &messages]() -> PairEvalFn {
      auto ev = std::make_shared<ListEvaluator>(d);
      return [&messages, ev](std::size_t mi, std::size_t ti, const DeletionPattern& tau) {
        const BitString& m = messages[mi];
        if ((mi * 131 + ti) % 499 == 0) ev->literal_check(m, tau);
        return agreed_failure(ev->by_decode(m, tau), ev->by_counting(m, tau),
                              "m " + m.str() + ", tau " + tau.str());
      };
    };
  } else {
    factory = [&d, &messages]() -> PairEvalFn {
      auto ev = std::make_shared<PrimeTagEvaluator>(d);
      return [&messages, ev](std::size_t mi, std::size_t, const DeletionPattern& tau) {
        const BitString& m = messages[mi];
        ev->literal_check(m, tau);
        return agreed_failure(ev->by_decode(m, tau), ev->by_counting(m, tau),
                              "m " + m.str() + ", tau " + tau.str());
      };
    };
  }
  FailureReport rep = run_grid(scheme_str(d.scheme), d.params.n, d.params.t, eps, eps, labels,
                               taus, channel.kind == ChannelModel::adversarial_worst_case,
                               factory, par, collect_rows);
  rep.rejected_trials = rejected;
  return rep;
}

FailureReport systematic_report(const ObliviousDescriptor& d, const ChannelModelSpec& channel,
                                const GridSpec& grid, Parallelism par, bool collect_rows,
                                std::uint64_t budget) {
  const Ratio eps(d.params.eps_num, d.params.eps_den);
  const auto messages = grid.messages.empty() ? all_messages(d.params.n, budget) : grid.messages;
  std::vector<std::string> labels;
  labels.reserve(messages.size());
  for (const BitString& m : messages) labels.push_back(m.str());

  long long rejected = 0;
  const int len = systematic_codeword_length(d);
  const auto taus = model_patterns(channel, len, d.params.t, grid, &rejected, budget);

  EvalFactory factory = [&d, &messages]() -> PairEvalFn {
    auto ev = std::make_shared<SystematicEvaluator>(d);
    return [&messages, ev](std::size_t mi, std::size_t, const DeletionPattern& tau) {
      const BitString& m = messages[mi];
      return agreed_failure(ev->by_decode(m, tau), ev->by_counting(m, tau),
                            "m " + m.str() + ", tau " + tau.str());
    };
  };
  FailureReport rep = run_grid("systematic-" + scheme_str(d.scheme), d.params.n, d.params.t,
                               eps, eps, labels, taus,
                               channel.kind == ChannelModel::adversarial_worst_case, factory,
                               par, collect_rows);
  rep.rejected_trials = rejected;
  return rep;
}

FailureReport worst_case_report(const AdversarialDescriptor& d, const ChannelModelSpec& channel,
                                const GridSpec& grid, Parallelism par, bool collect_rows,
                                std::uint64_t budget) {
  const auto messages = grid.messages.empty() ? all_messages(d.params.n, budget) : grid.messages;
  std::vector<std::string> labels;
  labels.reserve(messages.size());
  for (const BitString& m : messages) labels.push_back(m.str());

  long long rejected = 0;
  const auto taus = model_patterns(channel, d.params.n, d.params.t, grid, &rejected, budget);

  EvalFactory factory = [&d, &messages]() -> PairEvalFn {
    auto ev = std::make_shared<AdversarialEvaluator>(d);
    return [&messages, ev](std::size_t mi, std::size_t, const DeletionPattern& tau) {
      const BitString& m = messages[mi];
      return agreed_failure(ev->by_decode(m, tau), ev->by_counting(m, tau),
                            "m " + m.str() + ", tau " + tau.str());
    };
  };
  FailureReport rep = run_grid("randomized-adversarial", d.params.n, d.params.t,
                               Ratio(d.params.eps_num, d.params.eps_den), Ratio(0), labels, taus,
                               channel.kind == ChannelModel::adversarial_worst_case, factory,
                               par, collect_rows);
  rep.rejected_trials = rejected;
  return rep;
}

void write_failure_csv(const FailureReport& r, std::ostream& os) {
  os << "scheme,n,t,eps,m,tau,fail_num,fail_den,bound\n";
  for (const FailureRow& row : r.rows) {
    os << r.scheme << ',' << r.n << ',' << r.t << ',' << ratio_str(r.eps) << ',' << row.m
       << ",\"" << row.tau << "\"," << row.fail.numerator() << ',' << row.fail.denominator()
       << ',' << ratio_str(r.bound) << '\n';
  }
}

// =============================================================================
// Reduction to a deterministic average-case code.

ReductionResult oblivious_to_average(const ObliviousDescriptor& d, std::uint64_t seed,
                                     std::uint64_t budget) {
  if (d.scheme != ObliviousScheme::explicit_primes &&
      d.scheme != ObliviousScheme::randomized_primes) {
    throw std::invalid_argument("reduction: needs a prime-tag scheme inside");
  }
  const int n = d.params.n;
  const auto messages = all_messages(n, budget);

  // One sampled codeword per message; the deterministic code under test.
  std::vector<BitString> codebook;
  codebook.reserve(messages.size());
  for (const BitString& v : messages) {
    Rng coins = Rng(seed).derive("reduction-codeword").derive(v.value());
    codebook.push_back(systematic_encode(d, v, coins));
  }

  const int full_len = systematic_codeword_length(d);
  const auto taus = all_patterns(full_len, d.params.t, budget);

  ReductionResult res;
  res.seed = seed;
  res.outputs_always_codeword = true;
  long long errors = 0;
  for (std::size_t vi = 0; vi < messages.size(); ++vi) {
    for (const DeletionPattern& tau : taus) {
      const auto got = systematic_decode(d, apply_pattern(codebook[vi], tau));
      // Projection onto the sampled code: bottom and ties go to codeword 0.
      const BitString& projected = got.has_value() ? codebook[got->value()] : codebook[0];
      if (std::find(codebook.begin(), codebook.end(), projected) == codebook.end()) {
        res.outputs_always_codeword = false;
      }
      if (projected != codebook[vi]) ++errors;
    }
  }
  res.average_error =
      Ratio(errors, static_cast<long long>(messages.size()) *
                        static_cast<long long>(taus.size()));
  return res;
}

std::vector<ReductionResult> reduction_distribution(const ObliviousDescriptor& d,
                                                    std::uint64_t first_seed, int seeds,
                                                    std::uint64_t budget) {
  if (seeds < 0) throw std::invalid_argument("reduction_distribution: negative seed count");
  std::vector<ReductionResult> out;
  out.reserve(static_cast<std::size_t>(seeds));
  for (int k = 0; k < seeds; ++k) {
    out.push_back(oblivious_to_average(d, first_seed + static_cast<std::uint64_t>(k), budget));
  }
  return out;
}

// =============================================================================
// Counting bounds.

std::uint64_t close_patterns_bound(int t, int ell) {
  return static_cast<std::uint64_t>(ell + 1) * binomial(2 * t + ell + 1, 2 * t + 1) *
         binomial(t + ell, t);
}

std::uint64_t close_patterns_count(const DeletionPattern& tau, int ell, std::uint64_t budget) {
  if (ell < 0) throw std::invalid_argument("close_patterns_count: negative radius");
  const int t = tau.deletions();
  std::uint64_t count = 0;
  for (const DeletionPattern& other : all_patterns(tau.n, t, budget)) {
    if (pattern_distance(tau, other) <= ell) ++count;
  }
  const std::uint64_t cap = close_patterns_bound(t, ell);
  if (count > cap) {
    throw std::logic_error("close-pattern count " + std::to_string(count) +
                           " exceeds its closed-form cap " + std::to_string(cap));
  }
  return count;
}

std::uint64_t bad_string_census_bound(int n, int ell, int t) {
  if (ell > n) return 0;
  return binomial(n, t) * binomial(n, t) * (std::uint64_t{1} << (n - ell));
}

std::uint64_t bad_string_census(int n, int ell, int t, Parallelism par, std::uint64_t budget) {
  if (n < 1 || n > packed::kMaxLen || (std::uint64_t{1} << n) > budget) {
    throw budget_error("bad_string_census: 2^n exceeds enumeration budget");
  }
  const std::int64_t total = std::int64_t{1} << n;
  std::uint64_t count = 0;
  if (par == Parallelism::openmp) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : count)
    for (std::int64_t v = 0; v < total; ++v) {
      if (is_bad_string(BitString::from_value(static_cast<std::uint64_t>(v), n), ell, t)) {
        ++count;
      }
    }
#else
    for (std::int64_t v = 0; v < total; ++v) {
      if (is_bad_string(BitString::from_value(static_cast<std::uint64_t>(v), n), ell, t)) {
        ++count;
      }
    }
#endif
  } else {
    for (std::int64_t v = 0; v < total; ++v) {
      if (is_bad_string(BitString::from_value(static_cast<std::uint64_t>(v), n), ell, t)) {
        ++count;
      }
    }
  }
  const std::uint64_t cap = bad_string_census_bound(n, ell, t);
  if (count > cap) {
    throw std::logic_error("bad-string census " + std::to_string(count) +
                           " exceeds its closed-form cap " + std::to_string(cap));
  }
  return count;
}

// =============================================================================
// Redundancy accounting.

double lower_bound_value(int n, int t, const Ratio& eps) {
  if (t < 1 || n <= t) throw std::invalid_argument("lower_bound_value: need 1 <= t < n");
  const double e = ratio_double(eps);
  if (e <= 0.0 || e >= 1.0) throw std::invalid_argument("lower_bound_value: eps in (0,1)");
  const double ln2 = std::log(2.0);
  const double log2_binom =
      (std::lgamma(n + 1.0) - std::lgamma(t + 1.0) - std::lgamma(n - t + 1.0)) / ln2;
  return log2_binom + t - std::log2(3.0 * t) - std::log2(2.0 / (1.0 - e));
}

std::vector<RedundancyRow> redundancy_table(const std::vector<RedundancyGridPoint>& grid,
                                            std::uint64_t seed, std::uint64_t budget) {
  std::vector<RedundancyRow> rows;
  rows.reserve(grid.size());
  for (const RedundancyGridPoint& gp : grid) {
    RedundancyRow row;
    row.scheme = gp.scheme;
    row.n = gp.n;
    row.t = gp.t;
    row.eps = gp.eps;
    const double log2n = std::log2(static_cast<double>(gp.n));
    if (gp.scheme == "vt") {
      if (gp.t != 1) throw std::invalid_argument("redundancy_table: vt rows need t = 1");
      row.measured_bits = make_vt_spec(gp.n).f;
      row.formula_bits = std::log2(gp.n + 1.0);
    } else {
      CodeParams params{gp.n, gp.t, gp.eps.numerator(), gp.eps.denominator()};
      const InnerHashSpec inner = gp.t == 1 ? make_vt_spec(gp.n)
                                            : build_greedy_coloring(gp.n, gp.t, budget);
      if (gp.scheme == "explicit") {
        row.measured_bits = redundancy_bits(explicit_build(params, inner, budget));
        row.formula_bits = 2.0 * gp.t * log2n;
      } else if (gp.scheme == "randomized") {
        row.measured_bits = redundancy_bits(
            randomized_build(params, inner, seed, /*verify_exact=*/false, budget));
        row.formula_bits = (gp.t + 1.0) * log2n;
      } else if (gp.scheme == "adversarial") {
        row.measured_bits = adversarial_tag_width_bits(
            adversarial_build(params, inner, seed, /*verify_exhaustive=*/false, budget));
        row.formula_bits = (2.0 * gp.t + 1.0) * log2n;
      } else {
        throw std::invalid_argument("redundancy_table: unknown scheme \"" + gp.scheme + "\"");
      }
    }
    row.diff_bits = row.measured_bits - row.formula_bits;
    row.lower_bound = lower_bound_value(gp.n, gp.t, gp.eps);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_redundancy_csv(const std::vector<RedundancyRow>& rows, std::ostream& os) {
  os << "scheme,n,t,eps,measured_bits,formula_bits,diff_bits,lower_bound,lower_bound_tail\n";
  for (const RedundancyRow& r : rows) {
    os << r.scheme << ',' << r.n << ',' << r.t << ',' << ratio_str(r.eps) << ','
       << r.measured_bits << ',' << fmt2(r.formula_bits) << ',' << fmt2(r.diff_bits) << ','
       << fmt2(r.lower_bound) << ',' << kLowerBoundTail << '\n';
  }
}

// =============================================================================
// Oblivious-vs-adversarial gap, demonstrated on one grid point.

GapWitness model_gap_witness(std::uint64_t seed, std::uint64_t budget) {
  // n = 12, t = 1, syndrome hash: differences reach 11, so the prime 11 in
  // the deliberately tiny window [8, 16] collides some supersequence pairs.
  const CodeParams params{12, 1, 1, 4};
  const InnerHashSpec inner = make_vt_spec(params.n);

  GapWitness gw;
  const ObliviousDescriptor forced = explicit_build_forced(params, inner, 16, budget);
  PrimeTagEvaluator ev(forced);
  for (const BitString& m : all_messages(params.n, budget)) {
    for (const DeletionPattern& tau : all_patterns(params.n, params.t, budget)) {
      const Ratio f = agreed_failure(ev.by_decode(m, tau), ev.by_counting(m, tau),
                                     "m " + m.str() + ", tau " + tau.str());
      if (f > gw.explicit_worst) {
        gw.explicit_worst = f;
        gw.witness_m = m.str();
        gw.witness_tau = tau.str();
      }
    }
  }

  const AdversarialDescriptor adv =
      adversarial_build(params, inner, seed, /*verify_exhaustive=*/true, budget);
  const FailureReport rep =
      worst_case_report(adv, ChannelModelSpec{ChannelModel::oblivious_exhaustive}, GridSpec{},
                        Parallelism::serial, /*collect_rows=*/false, budget);
  gw.adversarial_worst = rep.worst;
  return gw;
}

}  // namespace delcode
