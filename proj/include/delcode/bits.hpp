#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace delcode {

// Candidate cap for the exhaustive enumeration routines. Everything in this
// library is desk-scale by design; operations that would exceed the budget
// throw budget_error instead of silently degrading.
inline constexpr std::uint64_t kDefaultEnumBudget = std::uint64_t{1} << 26;

class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// A finite binary word. Bits are stored one per byte (values 0/1); the
/// ASCII form is the bits in order, e.g. "0111001".
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<std::uint8_t> bits);
  BitString(std::initializer_list<int> bits);

  static BitString parse(std::string_view text);
  // Unpacks the low `len` bits of `value`, big-endian: position 1 of the
  // string is the most significant of the `len` bits.
  static BitString from_value(std::uint64_t value, int len);
  static BitString zeros(int len);

  int size() const { return static_cast<int>(bits_.size()); }
  bool empty() const { return bits_.empty(); }
  // 1-indexed access, matching deletion-pattern positions.
  std::uint8_t at(int pos) const { return bits_.at(static_cast<std::size_t>(pos - 1)); }
  std::uint8_t operator[](int idx0) const { return bits_[static_cast<std::size_t>(idx0)]; }
  const std::vector<std::uint8_t>& raw() const { return bits_; }

  void push_back(std::uint8_t bit);
  void append(const BitString& other);
  BitString slice(int first, int last) const;  // 1-indexed inclusive range
  BitString prefix(int len) const { return slice(1, len); }
  BitString suffix(int len) const { return slice(size() - len + 1, size()); }

  // Big-endian packed value; requires size() <= 62.
  std::uint64_t value() const;

  std::string str() const;
  bool operator==(const BitString&) const = default;
  auto operator<=>(const BitString&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

std::ostream& operator<<(std::ostream& os, const BitString& s);

/// The survivor set of a deletion channel action: the positions of the
/// source word that are kept, in increasing order. Positions are 1-indexed.
/// (The other formalism, "positions deleted", is available via deleted().)
struct DeletionPattern {
  int n = 0;
  std::vector<int> survivors;

  DeletionPattern() = default;
  DeletionPattern(int n_, std::vector<int> survivors_);

  static DeletionPattern identity(int n);
  static DeletionPattern from_deleted(int n, const std::vector<int>& deleted);
  // Serialized form "n:p1,p2,...", survivors 1-indexed.
  static DeletionPattern parse(std::string_view text);

  int deletions() const { return n - static_cast<int>(survivors.size()); }
  std::vector<int> deleted() const;
  std::string str() const;

  bool operator==(const DeletionPattern&) const = default;
};

std::ostream& operator<<(std::ostream& os, const DeletionPattern& p);

struct CodeParams {
  int n = 0;
  int t = 0;
  // Decoding-error bound, exact; see rational.hpp.
  long long eps_num = 1;
  long long eps_den = 2;
};

// Packed-word helpers used by the enumeration kernels. A word packs a
// length-`len` bit string big-endian (first bit = most significant), so
// numeric order on words equals lexicographic order on equal-length strings.
namespace packed {

inline constexpr int kMaxLen = 62;

std::uint64_t from_bitstring(const BitString& s);
BitString to_bitstring(std::uint64_t w, int len);

// Drops the bit at 1-indexed position `pos` of a length-`len` word.
inline std::uint64_t erase_bit(std::uint64_t w, int len, int pos) {
  const int low_bits = len - pos;
  const std::uint64_t low = w & ((std::uint64_t{1} << low_bits) - 1);
  return (w >> (low_bits + 1) << low_bits) | low;
}

// Inserts `bit` so that it lands at 1-indexed position `pos` of the
// resulting length-(len+1) word.
inline std::uint64_t insert_bit(std::uint64_t w, int len, int pos, std::uint64_t bit) {
  const int low_bits = len - pos + 1;
  const std::uint64_t low = w & ((std::uint64_t{1} << low_bits) - 1);
  const std::uint64_t high = w >> low_bits;
  return (high << (low_bits + 1)) | (bit << low_bits) | low;
}

inline std::uint64_t get_bit(std::uint64_t w, int len, int pos) {
  return (w >> (len - pos)) & 1;
}

}  // namespace packed

// Bit-exact binary framing: a big-endian 16-bit bit-count followed by the
// packed bits, most significant bit of each byte first, zero padded.
void write_framed(std::ostream& os, const BitString& s);
BitString read_framed(std::istream& is);

}  // namespace delcode
