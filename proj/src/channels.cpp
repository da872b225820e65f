#include "delcode/channels.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "delcode/bitseq.hpp"

namespace delcode {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  std::size_t used = 0;
  const std::uint64_t v = std::stoull(s, &used);
  if (used != s.size()) throw std::invalid_argument(std::string(what) + ": bad integer \"" + s + "\"");
  return v;
}

}  // namespace

ChannelInstance make_oblivious_channel(const DeletionPattern& tau) {
  ChannelInstance ch;
  ch.kind = ChannelKind::oblivious_fixed;
  ch.n = tau.n;
  ch.t = tau.deletions();
  ch.pattern = tau;
  return ch;
}

ChannelInstance make_uniform_channel(int n, int t, std::uint64_t seed) {
  if (t < 0 || t > n) throw std::invalid_argument("make_uniform_channel: t out of range");
  ChannelInstance ch;
  ch.kind = ChannelKind::uniform_random_t;
  ch.n = n;
  ch.t = t;
  ch.seed = seed;
  return ch;
}

ChannelInstance make_iid_channel(int n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("make_iid_channel: p must be in [0,1]");
  ChannelInstance ch;
  ch.kind = ChannelKind::iid;
  ch.n = n;
  ch.p = p;
  ch.seed = seed;
  return ch;
}

ChannelInstance ChannelInstance::parse(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 4) {
    throw std::invalid_argument("ChannelInstance::parse: expected model:n:params:seed, got \"" +
                                std::string(text) + "\"");
  }
  const std::string& kind = parts[0];
  const int n = static_cast<int>(parse_u64(parts[1], "channel n"));
  const std::uint64_t seed = parse_u64(parts[3], "channel seed");
  if (kind == "oblivious") {
    std::vector<int> survivors;
    if (!parts[2].empty()) {
      for (const std::string& tok : split(parts[2], ',')) {
        survivors.push_back(static_cast<int>(parse_u64(tok, "channel survivor")));
      }
    }
    auto ch = make_oblivious_channel(DeletionPattern(n, std::move(survivors)));
    ch.seed = seed;
    return ch;
  }
  if (kind == "uniform") {
    return make_uniform_channel(n, static_cast<int>(parse_u64(parts[2], "channel t")), seed);
  }
  if (kind == "iid") {
    std::size_t used = 0;
    const double p = std::stod(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("channel p: bad number");
    return make_iid_channel(n, p, seed);
  }
  throw std::invalid_argument("ChannelInstance::parse: unknown model \"" + kind + "\"");
}

std::string ChannelInstance::str() const {
  std::ostringstream os;
  switch (kind) {
    case ChannelKind::oblivious_fixed: {
      os << "oblivious:" << n << ':';
      for (std::size_t i = 0; i < pattern.survivors.size(); ++i) {
        if (i) os << ',';
        os << pattern.survivors[i];
      }
      os << ':' << seed;
      break;
    }
    case ChannelKind::uniform_random_t:
      os << "uniform:" << n << ':' << t << ':' << seed;
      break;
    case ChannelKind::iid:
      os << "iid:" << n << ':' << p << ':' << seed;
      break;
  }
  return os.str();
}

DeletionPattern channel_pattern(const ChannelInstance& ch, std::uint64_t invocation) {
  switch (ch.kind) {
    case ChannelKind::oblivious_fixed:
      return ch.pattern;
    case ChannelKind::uniform_random_t: {
      // Draw a uniform t-subset of [1,n] to delete (Fisher-Yates prefix),
      // deterministically from (seed, invocation).
      Rng rng = Rng(ch.seed).derive("uniform-channel").derive(invocation);
      std::vector<int> pool(static_cast<std::size_t>(ch.n));
      for (int i = 0; i < ch.n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
      std::vector<int> deleted;
      for (int i = 0; i < ch.t; ++i) {
        const auto j = static_cast<std::size_t>(
            rng.in_range(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(ch.n - 1)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
        deleted.push_back(pool[static_cast<std::size_t>(i)]);
      }
      return DeletionPattern::from_deleted(ch.n, deleted);
    }
    case ChannelKind::iid: {
      Rng rng = Rng(ch.seed).derive("iid-channel").derive(invocation);
      std::vector<int> deleted;
      for (int pos = 1; pos <= ch.n; ++pos) {
        // 53-bit uniform double in [0,1).
        const double u =
            static_cast<double>(rng.next_u64() >> 11) * (1.0 / 9007199254740992.0);
        if (u < ch.p) deleted.push_back(pos);
      }
      return DeletionPattern::from_deleted(ch.n, deleted);
    }
  }
  throw std::logic_error("channel_pattern: bad kind");
}

BitString corrupt(const ChannelInstance& ch, const BitString& c, std::uint64_t invocation) {
  if (c.size() != ch.n) {
    throw std::invalid_argument("corrupt: input length " + std::to_string(c.size()) +
                                " does not match channel n=" + std::to_string(ch.n));
  }
  return apply_pattern(c, channel_pattern(ch, invocation));
}

}  // namespace delcode
