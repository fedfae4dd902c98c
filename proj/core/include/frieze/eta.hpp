#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "frieze/sequence.hpp"

namespace frieze {

// Validity test for quiddity (eta-) sequences: true iff
// U^{c0} S U^{c1} S ... U^{c(n-1)} S == -I.
// Throws InvalidInput for length < 3 or an entry < 1.
bool is_eta(std::span<const std::int64_t> seq);

// A quiddity sequence, validated on construction.
class EtaSeq {
 public:
  // Throws InvalidInput for malformed input and NotAQuiddity otherwise.
  explicit EtaSeq(Sequence entries);

  static EtaSeq base() { return EtaSeq(Sequence{1, 1, 1}, Trusted{}); }

  const Sequence& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  operator std::span<const std::int64_t>() const { return entries_; }

  friend bool operator==(const EtaSeq&, const EtaSeq&) = default;

 private:
  struct Trusted {};
  EtaSeq(Sequence entries, Trusted) : entries_(std::move(entries)) {}

  friend EtaSeq rotate(const EtaSeq&, std::int64_t);
  friend EtaSeq reverse(const EtaSeq&);
  friend EtaSeq expand(const EtaSeq&, std::size_t);
  friend EtaSeq contract(const EtaSeq&, std::size_t);
  friend EtaSeq trusted_eta(Sequence);

  Sequence entries_;
};

// Cyclic shift: result[i] = s[(i + k) mod n].
EtaSeq rotate(const EtaSeq& s, std::int64_t k);

EtaSeq reverse(const EtaSeq& s);

// Inserts a new 1 right after position i (cyclically) and increments its two
// neighbours. Original entries keep their order starting from index 0; for
// i = n-1 the new 1 is appended at the end.
EtaSeq expand(const EtaSeq& s, std::size_t i);

// Removes the ear at position i and decrements its two neighbours. Throws
// ContractionImpossible when n == 3, s[i] != 1 or a neighbour is below 2.
EtaSeq contract(const EtaSeq& s, std::size_t i);

// Positions of successive contractions that reduce s to (1,1,1); always
// n - 3 steps. Each position refers to the sequence current at that step.
std::vector<std::size_t> contraction_path(const EtaSeq& s);

// Wraps a sequence the caller already knows to be valid (for example the
// output of an enumeration). No check is made.
EtaSeq trusted_eta(Sequence entries);

}  // namespace frieze
