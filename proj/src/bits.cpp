#include "delcode/bits.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace delcode {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("BitString: bit values must be 0 or 1");
  }
}

BitString::BitString(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("BitString: bit values must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

BitString BitString::parse(std::string_view text) {
  BitString out;
  out.bits_.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("BitString::parse: expected only '0'/'1', got '" +
                                  std::string(1, c) + "'");
    }
    out.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

BitString BitString::from_value(std::uint64_t value, int len) {
  if (len < 0 || len > packed::kMaxLen) {
    throw std::invalid_argument("BitString::from_value: bad length");
  }
  if (len < 64 && (value >> len) != 0) {
    throw std::invalid_argument("BitString::from_value: value does not fit in length");
  }
  BitString out;
  out.bits_.resize(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    out.bits_[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>((value >> (len - 1 - i)) & 1);
  }
  return out;
}

BitString BitString::zeros(int len) {
  BitString out;
  out.bits_.assign(static_cast<std::size_t>(len), 0);
  return out;
}

void BitString::push_back(std::uint8_t bit) {
  if (bit > 1) throw std::invalid_argument("BitString::push_back: bit must be 0 or 1");
  bits_.push_back(bit);
}

void BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitString BitString::slice(int first, int last) const {
  if (first < 1 || last > size() || first > last + 1) {
    throw std::out_of_range("BitString::slice: bad range");
  }
  BitString out;
  out.bits_.assign(bits_.begin() + (first - 1), bits_.begin() + last);
  return out;
}

std::uint64_t BitString::value() const {
  if (size() > packed::kMaxLen) {
    throw std::length_error("BitString::value: string too long to pack");
  }
  std::uint64_t w = 0;
  for (auto b : bits_) w = (w << 1) | b;
  return w;
}

std::string BitString::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

std::ostream& operator<<(std::ostream& os, const BitString& s) { return os << s.str(); }

DeletionPattern::DeletionPattern(int n_, std::vector<int> survivors_)
    : n(n_), survivors(std::move(survivors_)) {
  if (n < 0) throw std::invalid_argument("DeletionPattern: negative length");
  int prev = 0;
  for (int p : survivors) {
    if (p <= prev || p > n) {
      throw std::invalid_argument("DeletionPattern: survivors must be strictly increasing in [1,n]");
    }
    prev = p;
  }
}

DeletionPattern DeletionPattern::identity(int n) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  return DeletionPattern(n, std::move(all));
}

DeletionPattern DeletionPattern::from_deleted(int n, const std::vector<int>& deleted) {
  std::vector<std::uint8_t> drop(static_cast<std::size_t>(n) + 1, 0);
  for (int p : deleted) {
    if (p < 1 || p > n) throw std::invalid_argument("DeletionPattern: deleted position out of range");
    if (drop[static_cast<std::size_t>(p)]) {
      throw std::invalid_argument("DeletionPattern: duplicate deleted position");
    }
    drop[static_cast<std::size_t>(p)] = 1;
  }
  std::vector<int> survivors;
  survivors.reserve(static_cast<std::size_t>(n) - deleted.size());
  for (int p = 1; p <= n; ++p) {
    if (!drop[static_cast<std::size_t>(p)]) survivors.push_back(p);
  }
  return DeletionPattern(n, std::move(survivors));
}

DeletionPattern DeletionPattern::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("DeletionPattern::parse: missing ':' in \"" + std::string(text) + "\"");
  }
  int n = 0;
  {
    std::string head(text.substr(0, colon));
    std::size_t used = 0;
    n = std::stoi(head, &used);
    if (used != head.size()) throw std::invalid_argument("DeletionPattern::parse: bad length field");
  }
  std::vector<int> survivors;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string tok(rest.substr(0, comma));
    std::size_t used = 0;
    survivors.push_back(std::stoi(tok, &used));
    if (used != tok.size()) throw std::invalid_argument("DeletionPattern::parse: bad position");
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return DeletionPattern(n, std::move(survivors));
}

std::vector<int> DeletionPattern::deleted() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(deletions()));
  std::size_t si = 0;
  for (int p = 1; p <= n; ++p) {
    if (si < survivors.size() && survivors[si] == p) {
      ++si;
    } else {
      out.push_back(p);
    }
  }
  return out;
}

std::string DeletionPattern::str() const {
  std::ostringstream os;
  os << n << ':';
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    if (i) os << ',';
    os << survivors[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DeletionPattern& p) { return os << p.str(); }

namespace packed {

std::uint64_t from_bitstring(const BitString& s) { return s.value(); }

BitString to_bitstring(std::uint64_t w, int len) { return BitString::from_value(w, len); }

}  // namespace packed

void write_framed(std::ostream& os, const BitString& s) {
  const int n = s.size();
  if (n > 0xFFFF) throw std::length_error("write_framed: string too long for 16-bit header");
  const unsigned char hdr[2] = {static_cast<unsigned char>((n >> 8) & 0xFF),
                                static_cast<unsigned char>(n & 0xFF)};
  os.write(reinterpret_cast<const char*>(hdr), 2);
  unsigned char byte = 0;
  int filled = 0;
  for (int i = 0; i < n; ++i) {
    byte = static_cast<unsigned char>((byte << 1) | s[i]);
    if (++filled == 8) {
      os.put(static_cast<char>(byte));
      byte = 0;
      filled = 0;
    }
  }
  if (filled > 0) {
    byte = static_cast<unsigned char>(byte << (8 - filled));
    os.put(static_cast<char>(byte));
  }
  if (!os) throw std::runtime_error("write_framed: stream write failed");
}

BitString read_framed(std::istream& is) {
  unsigned char hdr[2];
  if (!is.read(reinterpret_cast<char*>(hdr), 2)) {
    throw std::runtime_error("read_framed: truncated header");
  }
  const int n = (static_cast<int>(hdr[0]) << 8) | hdr[1];
  const int nbytes = (n + 7) / 8;
  std::vector<char> buf(static_cast<std::size_t>(nbytes));
  if (nbytes > 0 && !is.read(buf.data(), nbytes)) {
    throw std::runtime_error("read_framed: truncated payload");
  }
  BitString out;
  for (int i = 0; i < n; ++i) {
    const unsigned char byte = static_cast<unsigned char>(buf[static_cast<std::size_t>(i / 8)]);
    out.push_back(static_cast<std::uint8_t>((byte >> (7 - i % 8)) & 1));
  }
  return out;
}

}  // namespace delcode
