#include "frieze/supplement.hpp"

#include <algorithm>
#include <stdexcept>

#include "frieze/error.hpp"
#include "frieze/polygon.hpp"

namespace frieze {

bool is_basic(std::span<const std::int64_t> s) {
  if (s.size() < 2 || s[0] != 1) return false;
  return std::all_of(s.begin() + 1, s.end(), [](std::int64_t v) { return v >= 2; });
}

bool is_superbasic(std::span<const std::int64_t> s) {
  return is_basic(s) && s.size() > 2 && s[1] > 2 && s.back() > 2;
}

BasicSeq::BasicSeq(Sequence entries) : entries_(std::move(entries)) {
  if (!is_basic(entries_)) {
    throw InvalidInput("(" + format_sequence(entries_) + ") is not a basic sequence");
  }
}

EtaSeq fan(std::int64_t apex, FanSide side) {
  if (apex < 1) throw InvalidInput("fan apex count must be at least 1");
  Sequence s;
  s.reserve(static_cast<std::size_t>(apex) + 2);
  if (side == FanSide::kLeft) {
    s.push_back(apex);
    s.push_back(1);
    s.insert(s.end(), static_cast<std::size_t>(apex - 1), 2);
    s.push_back(1);
  } else {
    s.push_back(1);
    s.insert(s.end(), static_cast<std::size_t>(apex - 1), 2);
    s.push_back(1);
    s.push_back(apex);
  }
  return trusted_eta(std::move(s));
}

BasicSeq supplement(const BasicSeq& a) {
  const Sequence& e = a.entries();
  const auto p = static_cast<int>(e.size());
  int right_moves = 0;
  for (int x = 1; x < p; ++x) right_moves += static_cast<int>(e[static_cast<std::size_t>(x)] - 2);
  const int n = p + right_moves + 2;

  // Ears at 0 and p. Vertices 1..p-1 carry `a`, vertices p+1..n-1 the
  // supplement. Walk the strip of triangles from the ear at 0: at left
  // vertex x, fan a[x]-2 triangles to the right chain, then step left.
  std::vector<Diagonal> diagonals;
  int y = n - 1;
  diagonals.push_back({1, y});
  for (int x = 1; x < p; ++x) {
    for (std::int64_t r = 0; r < e[static_cast<std::size_t>(x)] - 2; ++r) {
      --y;
      diagonals.push_back({x, y});
    }
    if (x + 1 < p) diagonals.push_back({x + 1, y});
  }
  const Triangulation t(n, std::move(diagonals));
  const DualTree tree = to_dual_tree(t, n - 1);
  const Sequence counts = tree.vertex_counts();
  if (!std::equal(e.begin(), e.end(), counts.begin())) {
    throw std::logic_error("supplement: strip triangulation does not carry the input");
  }
  return BasicSeq(Sequence(counts.begin() + p, counts.end()));
}

BasicSeq supplement_by_runs(const BasicSeq& a) {
  const Sequence& e = a.entries();
  std::vector<std::int64_t> runs{0};  // x0..xk
  std::vector<std::int64_t> big;      // A1..Ak
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (e[i] == 2) {
      ++runs.back();
    } else {
      big.push_back(e[i]);
      runs.push_back(0);
    }
  }
  const std::size_t k = big.size();
  if (k == 0) return BasicSeq(Sequence{1, runs[0] + 1});

  Sequence out{1};
  for (std::size_t l = k + 1; l-- > 0;) {
    const std::int64_t x = runs[l];
    const bool boundary = l == 0 || l == k;
    if (!boundary) {
      out.push_back(x + 3);
    } else if (x != 0) {
      out.push_back(x + 2);
    }
    if (l >= 1) {
      std::int64_t twos = big[l - 1] - 3;
      if (l == k && runs[k] == 0) ++twos;
      if (l == 1 && runs[0] == 0) ++twos;
      out.insert(out.end(), static_cast<std::size_t>(twos), 2);
    }
  }
  return BasicSeq(std::move(out));
}

Sequence merged_superbasic(std::span<const Sequence> blocks) {
  if (blocks.empty()) throw InvalidInput("nothing to extend");
  for (const Sequence& b : blocks) {
    if (!is_superbasic(b)) {
      throw InvalidInput("(" + format_sequence(b) + ") is not super-basic");
    }
  }
  Sequence merged = blocks.front();
  for (std::size_t s = 1; s < blocks.size(); ++s) {
    --merged.back();
    const Sequence& next = blocks[s];
    merged.push_back(next[1] - 1);
    merged.insert(merged.end(), next.begin() + 2, next.end());
  }
  return merged;
}

EtaSeq extend_superbasic(std::span<const Sequence> blocks) {
  if (blocks.empty()) throw InvalidInput("nothing to extend");
  for (const Sequence& b : blocks) {
    if (!is_superbasic(b)) {
      throw InvalidInput("(" + format_sequence(b) + ") is not super-basic");
    }
  }
  Sequence gamma = blocks.front();
  Sequence zeta = supplement(BasicSeq(gamma)).entries();
  for (std::size_t s = 1; s < blocks.size(); ++s) {
    const Sequence& beta = blocks[s];
    Sequence alpha_hat = gamma;
    --alpha_hat.back();
    Sequence beta_hat = beta;
    --beta_hat[1];
    const Sequence xi = supplement(BasicSeq(alpha_hat)).entries();
    const Sequence eta = supplement(BasicSeq(beta_hat)).entries();
    // zeta = (1, Y1, ..., Y(q-1), Yq + X1 - 1, X2, ..., Xp)
    zeta.assign(eta.begin(), eta.end() - 1);
    zeta.push_back(eta.back() + xi[1] - 1);
    zeta.insert(zeta.end(), xi.begin() + 2, xi.end());
    // gamma = (1, A1, ..., An - 1, B1 - 1, ..., Bm)
    gamma = alpha_hat;
    gamma.insert(gamma.end(), beta_hat.begin() + 1, beta_hat.end());
  }
  Sequence out;
  for (const Sequence& b : blocks) out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), zeta.begin(), zeta.end());
  return trusted_eta(std::move(out));
}

namespace {

// s occurs in the cyclic sequence q starting at `start`.
bool occurs_at(std::span<const std::int64_t> q, std::span<const std::int64_t> s,
               std::size_t start) {
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (q[(start + t) % q.size()] != s[t]) return false;
  }
  return true;
}

bool is_cyclic_block_of(std::span<const std::int64_t> s, std::span<const std::int64_t> q) {
  if (s.size() > q.size()) return false;
  for (std::size_t start = 0; start < q.size(); ++start) {
    if (occurs_at(q, s, start)) return true;
  }
  return false;
}

EmbeddingResult found(Sequence witness, std::string reason) {
  return EmbeddingResult{Embeddability::kEmbeddable, std::move(witness), std::move(reason)};
}

EmbeddingResult blocked(std::string reason) {
  return EmbeddingResult{Embeddability::kNotEmbeddable, {}, std::move(reason)};
}

}  // namespace

EmbeddingResult is_embeddable(std::span<const std::int64_t> s, int max_length) {
  if (s.empty()) return found(Sequence{1, 1, 1}, "empty block");
  for (std::int64_t v : s) {
    if (v < 1) return blocked("quiddity entries are positive");
  }
  // Two adjacent ears only happen in the triangle.
  const Sequence triangle{1, 1, 1};
  const Sequence square{2, 1, 2, 1};
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == 1 && s[i + 1] == 1 && !is_cyclic_block_of(s, triangle)) {
      return blocked("adjacent 1s at position " + std::to_string(i) +
                     " occur only in (1,1,1)");
    }
  }
  // An ear whose neighbours both lie in exactly two triangles closes a square.
  for (std::size_t i = 0; i + 2 < s.size(); ++i) {
    if (s[i] == 2 && s[i + 1] == 1 && s[i + 2] == 2 && !is_cyclic_block_of(s, square)) {
      return blocked("(2,1,2) at position " + std::to_string(i) + " occurs only in (2,1,2,1)");
    }
  }

  if (s.size() == 1) {
    return found(rotated(fan(s[0]).entries(), 0), "left fan sequence");
  }
  if (is_cyclic_block_of(s, triangle)) return found(triangle, "block of (1,1,1)");
  if (is_cyclic_block_of(s, square)) {
    for (std::size_t start = 0; start < square.size(); ++start) {
      if (occurs_at(square, s, start)) {
        return found(rotated(square, static_cast<std::int64_t>(start)), "block of (2,1,2,1)");
      }
    }
  }
  if (is_basic(s)) {
    const BasicSeq b{Sequence(s.begin(), s.end())};
    Sequence w = b.entries();
    const Sequence tail = supplement(b).entries();
    w.insert(w.end(), tail.begin(), tail.end());
    return found(std::move(w), "basic sequence and its supplement");
  }
  // Split at the 1s; a concatenation of super-basic blocks extends.
  if (s[0] == 1) {
    std::vector<Sequence> blocks;
    for (std::int64_t v : s) {
      if (v == 1) blocks.emplace_back();
      blocks.back().push_back(v);
    }
    if (std::all_of(blocks.begin(), blocks.end(),
                    [](const Sequence& b) { return is_superbasic(b); })) {
      return found(extend_superbasic(blocks).entries(), "super-basic extension");
    }
  }

  const int lo = std::max<int>(3, static_cast<int>(s.size()));
  for (int n = lo; n <= max_length; ++n) {
    Sequence witness;
    for_each_quiddity(
        n,
        [&](std::span<const std::int64_t> q) {
          if (!witness.empty()) return;
          for (std::size_t start = 0; start < q.size(); ++start) {
            if (occurs_at(q, s, start)) {
              witness = rotated(q, static_cast<std::int64_t>(start));
              return;
            }
          }
        },
        std::max(max_length, kDefaultEnumerationCap));
    if (!witness.empty()) return found(std::move(witness), "exhaustive search");
  }
  return EmbeddingResult{Embeddability::kUnknown, {},
                         "no quiddity sequence of length <= " + std::to_string(max_length) +
                             " contains the block"};
}

}  // namespace frieze
