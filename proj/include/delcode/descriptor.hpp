#pragma once

#include <cstdint>
#include <string>

#include "delcode/adversarial.hpp"
#include "delcode/oblivious.hpp"

namespace delcode {

inline constexpr const char* kDescriptorFormatVersion = "1";

enum class DescriptorKind { oblivious, adversarial };

// Reads just the "kind" field; throws if the text is not a descriptor.
DescriptorKind peek_descriptor_kind(const std::string& json_text);

// JSON text. Every integer is rendered as a decimal string so 64-bit values
// survive any JSON reader; key order is fixed, so output is deterministic.
std::string store_descriptor(const ObliviousDescriptor& d);
std::string store_descriptor(const AdversarialDescriptor& d);

// Parse + integrity checks: format version; every listed prime passes
// deterministic primality; sieved and sampled prime lists re-derive from
// their recorded (range, seed, count); greedy color tables have full
// length and pass a confusable-distinctness spot check; list codes rebuild
// from (n, t, L). Throws std::runtime_error naming the failed check.
ObliviousDescriptor load_oblivious_descriptor(const std::string& json_text,
                                              std::uint64_t budget = kDefaultEnumBudget);
AdversarialDescriptor load_adversarial_descriptor(const std::string& json_text,
                                                  std::uint64_t budget = kDefaultEnumBudget);

// Field-by-field equality (the structs carry big tables, so they do not
// define operator== themselves).
bool descriptors_equal(const ObliviousDescriptor& a, const ObliviousDescriptor& b);
bool descriptors_equal(const AdversarialDescriptor& a, const AdversarialDescriptor& b);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace delcode
