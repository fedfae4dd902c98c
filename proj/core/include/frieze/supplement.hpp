#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "frieze/eta.hpp"
#include "frieze/sequence.hpp"

namespace frieze {

// (1, A1, ..., An) with n >= 1 and every Ai >= 2.
class BasicSeq {
 public:
  // Throws InvalidInput when the sequence is not basic.
  explicit BasicSeq(Sequence entries);

  const Sequence& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  friend bool operator==(const BasicSeq&, const BasicSeq&) = default;

 private:
  Sequence entries_;
};

bool is_basic(std::span<const std::int64_t> s);

// Basic with n > 1 and A1, An > 2.
bool is_superbasic(std::span<const std::int64_t> s);

enum class FanSide { kLeft, kRight };

// Left: (A, 1, 2 x (A-1), 1). Right: (1, 2 x (A-1), 1, A). Requires A >= 1.
EtaSeq fan(std::int64_t apex, FanSide side = FanSide::kLeft);

// The basic sequence whose concatenation after `a` is a quiddity sequence.
// Built from the dual tree of the two-eared triangulation that carries `a`
// on one boundary chain; the counts along the other chain are the result.
BasicSeq supplement(const BasicSeq& a);

// The same supplement from the run decomposition
//   a = (1, 2^{x0}, A1, 2^{x1}, ..., Ak, 2^{xk}),  Al >= 3,
// read in reverse: each run of x twos becomes a single x+3 (x+2 for a
// nonempty boundary run, x0+1 when k = 0), each Al becomes Al-3 twos plus
// one more for every absent boundary run next to it.
BasicSeq supplement_by_runs(const BasicSeq& a);

// Completes the concatenation of super-basic sequences to a quiddity
// sequence by folding the pairwise splice left to right. The returned
// sequence starts with the concatenated inputs verbatim. Throws InvalidInput
// for an empty list or a non-super-basic element.
EtaSeq extend_superbasic(std::span<const Sequence> blocks);

// Merged basic sequence used by the fold: junction entries decremented and
// inner leading 1s dropped. Its supplement is the tail appended by
// extend_superbasic.
Sequence merged_superbasic(std::span<const Sequence> blocks);

enum class Embeddability { kEmbeddable, kNotEmbeddable, kUnknown };

struct EmbeddingResult {
  Embeddability status = Embeddability::kUnknown;
  // Quiddity sequence starting with the queried block (kEmbeddable only).
  Sequence witness;
  // Obstruction or search note.
  std::string reason;
};

inline constexpr int kDefaultEmbeddingSearchLength = 12;

// Whether `s` occurs as a contiguous block of some quiddity sequence. Known
// local obstructions are reported as kNotEmbeddable; constructive witnesses
// (fans, supplements, super-basic extension) are tried next, then every
// quiddity sequence up to `max_length`. kUnknown when nothing is found.
EmbeddingResult is_embeddable(std::span<const std::int64_t> s,
                              int max_length = kDefaultEmbeddingSearchLength);

}  // namespace frieze
