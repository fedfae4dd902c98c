#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace frieze {

using BigInt = boost::multiprecision::cpp_int;

// A finite list of integers read cyclically; quiddity sequences, basic
// sequences and partial blocks all use this representation.
using Sequence = std::vector<std::int64_t>;

// Parses "2,1,3,1,2". Whitespace around entries is tolerated; empty
// entries and non-numeric tokens throw InvalidInput.
Sequence parse_sequence(std::string_view text);

std::string format_sequence(std::span<const std::int64_t> seq);

// Cyclic left shift: result[i] = seq[(i + k) mod n]. Negative k shifts right.
Sequence rotated(std::span<const std::int64_t> seq, std::int64_t k);

Sequence reversed(std::span<const std::int64_t> seq);

std::int64_t entry_sum(std::span<const std::int64_t> seq);

}  // namespace frieze
