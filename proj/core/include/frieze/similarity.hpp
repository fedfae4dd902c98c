#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frieze/sequence.hpp"

namespace frieze {

struct OrbitCanon {
  Sequence canon;
  std::int64_t orbit_size = 0;

  friend bool operator==(const OrbitCanon&, const OrbitCanon&) = default;
};

// Least of the 2n images under rotation and reversal (i -> n-1-i), together
// with the orbit size 2n / |stabilizer|.
OrbitCanon canonicalize(std::span<const std::int64_t> q);

// All distinct dihedral images, sorted.
std::vector<Sequence> dihedral_images(std::span<const std::int64_t> q);

enum class Category { kSymmetric, kPseudoSymmetric, kAsymmetric };

std::string to_string(Category c);

struct SeqClassification {
  std::size_t period = 0;
  Category category = Category::kAsymmetric;
};

// Minimal rotation period p. With b the first p entries, the sequence is
// symmetric when p is odd and some rotation of b satisfies b_i = b_{p-i-1},
// pseudo-symmetric when p is even and some rotation satisfies
// b_i = b_{p-i mod p}, asymmetric otherwise. The category is an orbit
// invariant.
SeqClassification classify(std::span<const std::int64_t> q);

std::size_t period(std::span<const std::int64_t> q);

// T: number of quiddity sequences of length n, S: those fixed by reversal,
// A: reversal pairs, so T = 2A + S.
struct TSACounts {
  BigInt t;
  BigInt s;
  BigInt a;

  friend bool operator==(const TSACounts&, const TSACounts&) = default;
};

// Closed forms: T_n = C_{n-2}, S_n = 0 for even n and C_{m-1} for n = 2m+1.
TSACounts count_tsa(int n);

// Exhaustive counterpart of count_tsa. Throws CapExceeded for n > cap.
TSACounts count_tsa_brute(int n, int cap = 14);

enum class PartitionCase { A, B, C, D, E, F };

char to_char(PartitionCase c);

struct TriPartition {
  int i = 0;
  int j = 0;
  int k = 0;
  PartitionCase tag = PartitionCase::C;

  friend bool operator==(const TriPartition&, const TriPartition&) = default;
};

// i >= j >= k, i + j + k = n. Odd n = 2m+1: every such triple with i <= m.
// Even n = 2m: (m,m,0) and every triple with i <= m-1. Ordered by
// decreasing i then decreasing j.
std::vector<TriPartition> perfect_tripartitions(int n);

// Number of similarity types whose central triangle cuts the polygon into
// pieces with i, j and k sides besides the triangle's own.
BigInt case_count(const TriPartition& tp);

enum class CountMethod { kFormula, kBrute };

inline constexpr int kDefaultBruteCap = 14;

// K_n, the number of similarity types of quiddity sequences of length n.
// Brute force canonicalizes every triangulation, sharded over `workers`
// threads by apex of the triangle on side (0, n-1) (0 = hardware
// concurrency). Throws CapExceeded beyond `brute_cap`.
BigInt count_types(int n, CountMethod method = CountMethod::kFormula,
                   int brute_cap = kDefaultBruteCap, unsigned workers = 0);

// Canonical forms of every quiddity sequence of length n by exhaustive
// enumeration, sorted.
std::vector<Sequence> brute_force_types(int n, int brute_cap = kDefaultBruteCap,
                                        unsigned workers = 0);

// Glues polygons around a central triangle. Arguments are quiddity
// sequences or the degenerate 2-gon (0,0); at most one may be degenerate.
// With `c` absent, a and b are glued along an edge instead.
// a has u+1 entries, b v+1, c w+1; the result has u+v+w (u+v when binary):
//   z0 = a0 + c_w + 1, z_u = a_u + b0 + 1, z_{u+v} = b_v + c0 + 1,
// the remaining entries copied, and no +1 in the binary form.
Sequence compose(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                 std::optional<std::span<const std::int64_t>> c = std::nullopt);

// Canonical forms of all similarity types of length n, built recursively by
// composing dihedral images of smaller types over the perfect
// tri-partitions. Sorted lexicographically. Throws CapExceeded for n > cap.
std::vector<OrbitCanon> enumerate_types(int n, int cap = kDefaultBruteCap);

}  // namespace frieze
