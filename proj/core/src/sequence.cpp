#include "frieze/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "frieze/error.hpp"

namespace frieze {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Sequence parse_sequence(std::string_view text) {
  Sequence out;
  text = trim(text);
  if (text.empty()) throw InvalidInput("empty sequence");
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token =
        trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    std::int64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last) {
      throw InvalidInput("bad sequence entry '" + std::string(token) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_sequence(std::span<const std::int64_t> seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(seq[i]);
  }
  return out;
}

Sequence rotated(std::span<const std::int64_t> seq, std::int64_t k) {
  const auto n = static_cast<std::int64_t>(seq.size());
  if (n == 0) return {};
  const std::int64_t shift = ((k % n) + n) % n;
  Sequence out(seq.begin(), seq.end());
  std::rotate(out.begin(), out.begin() + shift, out.end());
  return out;
}

Sequence reversed(std::span<const std::int64_t> seq) {
  return Sequence(seq.rbegin(), seq.rend());
}

std::int64_t entry_sum(std::span<const std::int64_t> seq) {
  return std::accumulate(seq.begin(), seq.end(), std::int64_t{0});
}

}  // namespace frieze
