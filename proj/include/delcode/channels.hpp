#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "delcode/bits.hpp"
#include "delcode/rng.hpp"

namespace delcode {

enum class ChannelKind { oblivious_fixed, uniform_random_t, iid };

/// A deletion-channel instance. The oblivious kind commits to its pattern at
/// construction, before any encoder coins are drawn; the harness call order
/// (channel first, then encode) is what enforces the obliviousness model.
struct ChannelInstance {
  ChannelKind kind = ChannelKind::uniform_random_t;
  int n = 0;                // expected input length
  int t = 0;                // uniform_random_t only
  double p = 0.0;           // iid only
  std::uint64_t seed = 0;   // uniform_random_t / iid draws
  DeletionPattern pattern;  // oblivious_fixed only

  // Serialized forms:
  //   "oblivious:<n>:<s1>,<s2>,...:<seed>"   (survivor positions)
  //   "uniform:<n>:<t>:<seed>"
  //   "iid:<n>:<p>:<seed>"
  static ChannelInstance parse(std::string_view text);
  std::string str() const;
};

ChannelInstance make_oblivious_channel(const DeletionPattern& tau);
ChannelInstance make_uniform_channel(int n, int t, std::uint64_t seed);
ChannelInstance make_iid_channel(int n, double p, std::uint64_t seed);

// Applies the channel's deletions. For uniform_random_t the pattern is drawn
// from the seed and a per-call counter; for iid each bit is dropped
// independently with probability p. Input length must equal ch.n.
// `invocation` distinguishes repeated uses of one instance deterministically.
BitString corrupt(const ChannelInstance& ch, const BitString& c, std::uint64_t invocation = 0);

// The pattern a stochastic channel instance would apply on this invocation
// (oblivious channels return their fixed pattern). Lets harnesses record
// exactly which deletions occurred.
DeletionPattern channel_pattern(const ChannelInstance& ch, std::uint64_t invocation = 0);

}  // namespace delcode
