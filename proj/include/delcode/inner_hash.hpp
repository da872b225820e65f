#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "delcode/bits.hpp"

namespace delcode {

enum class InnerKind { greedy_coloring, vt_syndrome };

std::string inner_kind_str(InnerKind k);
InnerKind parse_inner_kind(const std::string& s);

/// A deterministic hash h with the reconciliation property: from any word z
/// obtained by t deletions from x, the pair (z, h(x)) determines x. Two
/// desk-scale realizations: a greedy proper coloring of the confusability
/// graph (any t) and the classic weighted-sum syndrome (t = 1 only).
struct InnerHashSpec {
  InnerKind kind = InnerKind::vt_syndrome;
  int n = 0;
  int t = 0;
  int f = 0;  // output bit length; hash values lie in [0, 2^f)

  // greedy_coloring only: color of each word, indexed by lexicographic rank.
  std::vector<std::uint32_t> colors;

  bool operator==(const InnerHashSpec&) const = default;
};

// Colors every x in {0,1}^n in lexicographic order with the smallest color
// not used by an earlier word whose t-deletion ball intersects x's.
InnerHashSpec build_greedy_coloring(int n, int t, std::uint64_t budget = kDefaultEnumBudget);

// Syndrome-based spec for single deletions; f = ceil(log2(n+1)).
InnerHashSpec make_vt_spec(int n);

std::uint64_t inner_hash(const InnerHashSpec& spec, const BitString& x);

// Weighted-sum syndrome: sum of the 1-indexed positions holding a one,
// mod (n+1).
std::uint64_t vt_syndrome(const BitString& x);

// Recovers the unique supersequence x of z with inner_hash(x) = hv. Throws
// std::runtime_error if no supersequence attains hv.
BitString inner_decode(const InnerHashSpec& spec, const BitString& z, std::uint64_t hv);

// Constant-space single-reinsertion decode: the unique length-(|z|+1)
// supersequence of z whose syndrome is `target`. Exposed separately so tests
// can cross-check it against enumeration.
BitString vt_reinsert(const BitString& z, std::uint64_t target);

}  // namespace delcode
