#include "delcode/inner_hash.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "delcode/bitseq.hpp"

namespace delcode {

namespace {

int ceil_log2(std::uint64_t count) {
  // Bits needed to index `count` distinct values.
  return count <= 1 ? 0 : std::bit_width(count - 1);
}

}  // namespace

std::string inner_kind_str(InnerKind k) {
  switch (k) {
    case InnerKind::greedy_coloring: return "greedy-coloring";
    case InnerKind::vt_syndrome: return "vt-syndrome";
  }
  throw std::logic_error("inner_kind_str: bad enum");
}

InnerKind parse_inner_kind(const std::string& s) {
  if (s == "greedy-coloring") return InnerKind::greedy_coloring;
  if (s == "vt-syndrome") return InnerKind::vt_syndrome;
  throw std::invalid_argument("parse_inner_kind: unknown kind \"" + s + "\"");
}

InnerHashSpec build_greedy_coloring(int n, int t, std::uint64_t budget) {
  if (n < 1 || t < 0 || t > n) {
    throw std::invalid_argument("build_greedy_coloring: need 0 <= t <= n, n >= 1");
  }
  if (n > packed::kMaxLen || (std::uint64_t{1} << n) > budget) {
    throw budget_error("build_greedy_coloring: 2^" + std::to_string(n) + " words exceed budget");
  }
  const std::uint64_t nwords = std::uint64_t{1} << n;

  InnerHashSpec spec;
  spec.kind = InnerKind::greedy_coloring;
  spec.n = n;
  spec.t = t;
  spec.colors.assign(nwords, 0);
  if (t == 0) {
    // Balls are singletons; nothing collides, one color suffices.
    spec.f = 0;
    return spec;
  }

  const std::uint64_t patterns = binomial(n, t);
  if (nwords * patterns > budget * 8) {
    throw budget_error("build_greedy_coloring: ball index would exceed budget");
  }

  // Two words are confusable iff their t-deletion balls share an element, so
  // we bucket earlier words' colors by ball element z. Coloring x then only
  // touches the buckets of its own ball.
  const int zlen = n - t;
  std::vector<std::vector<std::uint32_t>> colors_by_z(std::size_t{1} << zlen);

  std::uint32_t ncolors = 0;
  std::vector<std::uint64_t> stamp;      // stamp[c] == w+1 iff color c is taken for word w
  std::vector<std::uint64_t> ball;       // distinct ball elements of the current word
  std::vector<int> del(static_cast<std::size_t>(t));

  for (std::uint64_t w = 0; w < nwords; ++w) {
    ball.clear();
    for (int i = 0; i < t; ++i) del[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
      std::uint64_t z = w;
      for (int i = t - 1; i >= 0; --i) {
        z = packed::erase_bit(z, n - (t - 1 - i), del[static_cast<std::size_t>(i)]);
      }
      ball.push_back(z);
      int i = t - 1;
      while (i >= 0 && del[static_cast<std::size_t>(i)] == n - (t - 1 - i)) --i;
      if (i < 0) break;
      ++del[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < t; ++j) {
        del[static_cast<std::size_t>(j)] = del[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
    std::sort(ball.begin(), ball.end());
    ball.erase(std::unique(ball.begin(), ball.end()), ball.end());

    if (stamp.size() < ncolors + 2) stamp.resize(ncolors + 2, 0);
    const std::uint64_t marker = w + 1;
    for (std::uint64_t z : ball) {
      for (std::uint32_t c : colors_by_z[z]) stamp[c] = marker;
    }
    std::uint32_t c = 0;
    while (c < stamp.size() && stamp[c] == marker) ++c;
    spec.colors[w] = c;
    ncolors = std::max(ncolors, c + 1);
    for (std::uint64_t z : ball) colors_by_z[z].push_back(c);
  }

  spec.f = ceil_log2(ncolors);
  return spec;
}

InnerHashSpec make_vt_spec(int n) {
  if (n < 1) throw std::invalid_argument("make_vt_spec: n must be positive");
  InnerHashSpec spec;
  spec.kind = InnerKind::vt_syndrome;
  spec.n = n;
  spec.t = 1;
  spec.f = ceil_log2(static_cast<std::uint64_t>(n) + 1);
  return spec;
}

std::uint64_t vt_syndrome(const BitString& x) {
  std::uint64_t sum = 0;
  for (int i = 1; i <= x.size(); ++i) {
    if (x.at(i)) sum += static_cast<std::uint64_t>(i);
  }
  return sum % (static_cast<std::uint64_t>(x.size()) + 1);
}

std::uint64_t inner_hash(const InnerHashSpec& spec, const BitString& x) {
  if (x.size() != spec.n) {
    throw std::invalid_argument("inner_hash: word length " + std::to_string(x.size()) +
                                " does not match spec n=" + std::to_string(spec.n));
  }
  switch (spec.kind) {
    case InnerKind::greedy_coloring: return spec.colors.at(x.value());
    case InnerKind::vt_syndrome: return vt_syndrome(x);
  }
  throw std::logic_error("inner_hash: bad kind");
}

BitString vt_reinsert(const BitString& z, std::uint64_t target) {
  const int n = z.size() + 1;
  if (target > static_cast<std::uint64_t>(n)) {
    throw std::runtime_error("vt_reinsert: syndrome value out of range for length");
  }
  std::uint64_t vt_sum = 0;
  int weight = 0;
  for (int i = 1; i <= z.size(); ++i) {
    if (z.at(i)) {
      vt_sum += static_cast<std::uint64_t>(i);
      ++weight;
    }
  }
  const std::uint64_t mod = static_cast<std::uint64_t>(n) + 1;
  const std::uint64_t d = (target + mod - vt_sum % mod) % mod;

  // ones_at_or_after[p] = ones of z at positions >= p; insertion at position
  // p adds d = ones_at_or_after[p] (bit 0) or p + ones_at_or_after[p] (bit 1)
  // to the weighted sum.
  std::vector<int> ones_at_or_after(static_cast<std::size_t>(n) + 1, 0);
  for (int p = z.size(); p >= 1; --p) {
    ones_at_or_after[static_cast<std::size_t>(p)] =
        ones_at_or_after[static_cast<std::size_t>(p) + 1] + (z.at(p) ? 1 : 0);
  }

  int pos = -1;
  std::uint8_t bit = 0;
  if (d <= static_cast<std::uint64_t>(weight)) {
    bit = 0;
    for (int p = 1; p <= n; ++p) {
      if (static_cast<std::uint64_t>(ones_at_or_after[static_cast<std::size_t>(p)]) == d) {
        pos = p;
        break;
      }
    }
  } else {
    bit = 1;
    for (int p = 1; p <= n; ++p) {
      if (static_cast<std::uint64_t>(p) +
              static_cast<std::uint64_t>(ones_at_or_after[static_cast<std::size_t>(p)]) ==
          d) {
        pos = p;
        break;
      }
    }
  }
  if (pos < 0) throw std::logic_error("vt_reinsert: no insertion position found");

  BitString x = z.slice(1, pos - 1);
  x.push_back(bit);
  x.append(z.slice(pos, z.size()));
  if (vt_syndrome(x) != target) throw std::logic_error("vt_reinsert: syndrome mismatch");
  return x;
}

BitString inner_decode(const InnerHashSpec& spec, const BitString& z, std::uint64_t hv) {
  if (z.size() != spec.n - spec.t) {
    throw std::invalid_argument("inner_decode: expected length " +
                                std::to_string(spec.n - spec.t) + ", got " +
                                std::to_string(z.size()));
  }
  if (spec.kind == InnerKind::vt_syndrome) {
    if (hv > static_cast<std::uint64_t>(spec.n)) {
      throw std::runtime_error("inner_decode: no supersequence attains the given hash");
    }
    return vt_reinsert(z, hv);
  }
  BitString found;
  bool have = false;
  for (const BitString& x : enumerate_supersequences(z, spec.n)) {
    if (inner_hash(spec, x) == hv) {
      // The reconciliation property makes a second match impossible.
      if (have) throw std::logic_error("inner_decode: hash not injective on supersequences");
      found = x;
      have = true;
    }
  }
  if (!have) throw std::runtime_error("inner_decode: no supersequence attains the given hash");
  return found;
}

}  // namespace delcode
