#include "frieze/eta.hpp"

#include <string>

#include "frieze/error.hpp"
#include "frieze/sl2.hpp"

namespace frieze {

namespace {

void require_well_formed(std::span<const std::int64_t> seq) {
  if (seq.size() < 3) {
    throw InvalidInput("sequence length " + std::to_string(seq.size()) + " is below 3");
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 1) {
      throw InvalidInput("entry " + std::to_string(i) + " is " + std::to_string(seq[i]) +
                         "; entries must be positive");
    }
  }
}

}  // namespace

bool is_eta(std::span<const std::int64_t> seq) {
  require_well_formed(seq);
  // Cheap necessary condition before the matrix product.
  const auto n = static_cast<std::int64_t>(seq.size());
  if (entry_sum(seq) != 3 * n - 6) return false;
  return eval_sequence_word(seq).is_minus_identity();
}

EtaSeq::EtaSeq(Sequence entries) : entries_(std::move(entries)) {
  if (!is_eta(entries_)) {
    throw NotAQuiddity("(" + format_sequence(entries_) + ") is not a quiddity sequence");
  }
}

EtaSeq trusted_eta(Sequence entries) { return EtaSeq(std::move(entries), EtaSeq::Trusted{}); }

EtaSeq rotate(const EtaSeq& s, std::int64_t k) {
  return EtaSeq(rotated(s.entries_, k), EtaSeq::Trusted{});
}

EtaSeq reverse(const EtaSeq& s) { return EtaSeq(reversed(s.entries_), EtaSeq::Trusted{}); }

EtaSeq expand(const EtaSeq& s, std::size_t i) {
  const std::size_t n = s.size();
  if (i >= n) throw InvalidInput("expansion position out of range");
  // Rotate position i to the front, apply (c0+1, 1, c1+1, c2, ...), rotate back.
  Sequence front = rotated(s.entries_, static_cast<std::int64_t>(i));
  Sequence grown;
  grown.reserve(n + 1);
  grown.push_back(front[0] + 1);
  grown.push_back(1);
  grown.push_back(front[1] + 1);
  grown.insert(grown.end(), front.begin() + 2, front.end());
  // grown[0] is the old s[i]; bring the old s[0] back to index 0.
  const auto back = static_cast<std::int64_t>((n + 1 - i) % (n + 1));
  return EtaSeq(rotated(grown, back), EtaSeq::Trusted{});
}

EtaSeq contract(const EtaSeq& s, std::size_t i) {
  const std::size_t n = s.size();
  if (i >= n) throw InvalidInput("contraction position out of range");
  if (n == 3) throw ContractionImpossible("(1,1,1) has no ear to remove");
  if (s[i] != 1) {
    throw ContractionImpossible("entry " + std::to_string(i) + " is " + std::to_string(s[i]) +
                                ", not 1");
  }
  const std::size_t prev = (i + n - 1) % n;
  const std::size_t next = (i + 1) % n;
  if (s[prev] < 2 || s[next] < 2) {
    throw ContractionImpossible("a neighbour of entry " + std::to_string(i) + " is below 2");
  }
  Sequence out;
  out.reserve(n - 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    std::int64_t v = s[j];
    if (j == prev || j == next) --v;
    out.push_back(v);
  }
  return EtaSeq(std::move(out), EtaSeq::Trusted{});
}

std::vector<std::size_t> contraction_path(const EtaSeq& s) {
  std::vector<std::size_t> path;
  EtaSeq current = s;
  while (current.size() > 3) {
    std::size_t ear = current.size();
    for (std::size_t j = 0; j < current.size(); ++j) {
      if (current[j] == 1) {
        ear = j;
        break;
      }
    }
    if (ear == current.size()) throw NotAQuiddity("sequence has no ear");
    current = contract(current, ear);
    path.push_back(ear);
  }
  return path;
}

}  // namespace frieze
