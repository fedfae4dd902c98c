#include <gtest/gtest.h>

#include <random>
#include <set>

#include "frieze/error.hpp"
#include "frieze/eta.hpp"
#include "frieze/similarity.hpp"
#include "oracles.hpp"

namespace frieze {
namespace {

const std::vector<std::int64_t> kTable{1, 1, 1, 3, 4, 12, 27, 82, 228, 733, 2282};  // n = 3..13

TEST(Canonicalize, Examples) {
  EXPECT_EQ(canonicalize(Sequence{1, 2, 2, 1, 3}).canon, canonicalize(Sequence{3, 1, 2, 2, 1}).canon);
  EXPECT_EQ(canonicalize(Sequence{4, 2, 1, 3, 2, 2, 1}).canon,
            canonicalize(Sequence{1, 2, 2, 3, 1, 2, 4}).canon);
  EXPECT_NE(canonicalize(Sequence{4, 2, 1, 3, 2, 2, 1}).canon,
            canonicalize(Sequence{3, 2, 1, 3, 3, 1, 2}).canon);
  EXPECT_EQ(canonicalize(Sequence{3, 1, 3, 1, 3, 1}).orbit_size, 2);
  EXPECT_EQ(canonicalize(Sequence{1, 1, 1}).orbit_size, 1);
  EXPECT_EQ(canonicalize(Sequence{4, 1, 2, 2, 2, 1}).canon, (Sequence{1, 2, 2, 2, 1, 4}));
}

TEST(Canonicalize, MatchesNaiveAndIsOrbitInvariant) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 400; ++trial) {
    const Sequence q = oracle::random_quiddity(rng, 3 + trial % 12);
    const OrbitCanon c = canonicalize(q);
    ASSERT_EQ(c.canon, oracle::naive_canon(q));
    const auto images = oracle::dihedral(q);
    const std::set<Sequence> distinct(images.begin(), images.end());
    ASSERT_EQ(c.orbit_size, static_cast<std::int64_t>(distinct.size()));
    ASSERT_EQ(dihedral_images(q).size(), distinct.size());
    for (const Sequence& img : images) ASSERT_EQ(canonicalize(img), c);
  }
}

TEST(Classify, PeriodsAndCategories) {
  EXPECT_EQ(classify(Sequence{1, 1, 1}).period, 1u);
  EXPECT_EQ(classify(Sequence{3, 1, 2, 3, 1, 2}).period, 3u);
  EXPECT_EQ(classify(Sequence{3, 1, 3, 1, 3, 1}).period, 2u);
  EXPECT_EQ(classify(Sequence{2, 1, 3, 1, 2}).category, Category::kSymmetric);
  EXPECT_EQ(classify(Sequence{4, 1, 2, 2, 2, 1}).category, Category::kPseudoSymmetric);
  EXPECT_EQ(classify(Sequence{3, 1, 3, 1, 3, 1}).category, Category::kPseudoSymmetric);
  EXPECT_EQ(classify(Sequence{3, 1, 2, 3, 1, 2}).category, Category::kAsymmetric);
  EXPECT_EQ(to_string(Category::kPseudoSymmetric), "pseudo-symmetric");
}

TEST(Classify, ExhaustiveInvariants) {
  for (int n = 3; n <= 12; ++n) {
    for (const Sequence& q : oracle::quiddity_set(n)) {
      const SeqClassification c = classify(q);
      ASSERT_EQ(n % static_cast<int>(c.period), 0);
      const int ratio = n / static_cast<int>(c.period);
      ASSERT_TRUE(ratio == 1 || ratio == 2 || ratio == 3) << format_sequence(q);
      // Mirror symmetry of the orbit decides the category.
      const bool mirrored = canonicalize(q).orbit_size < 2 * static_cast<std::int64_t>(c.period);
      if (!mirrored) {
        ASSERT_EQ(c.category, Category::kAsymmetric);
      } else {
        ASSERT_EQ(c.category, c.period % 2 ? Category::kSymmetric : Category::kPseudoSymmetric);
      }
      for (std::size_t k = 0; k < q.size(); ++k) {
        ASSERT_EQ(classify(oracle::rotate_left(q, k)).category, c.category);
      }
    }
  }
}

TEST(TSA, TableValues) {
  EXPECT_EQ(count_tsa(7), (TSACounts{42, 2, 20}));
  EXPECT_EQ(count_tsa(12), (TSACounts{16796, 0, 8398}));
  EXPECT_EQ(count_tsa(13), (TSACounts{58786, 42, 29372}));
  for (int n = 3; n <= 12; ++n) {
    const TSACounts brute = count_tsa_brute(n);
    EXPECT_EQ(brute, count_tsa(n)) << n;
    EXPECT_EQ(brute.t, 2 * brute.a + brute.s);
  }
}

TEST(TSA, ClassEquation) {
  for (int n = 3; n <= 12; ++n) {
    std::map<Sequence, std::int64_t> orbit;
    for (const Sequence& q : oracle::quiddity_set(n)) {
      const OrbitCanon c = canonicalize(q);
      orbit[c.canon] = c.orbit_size;
    }
    std::int64_t total = 0;
    for (const auto& [canon, size] : orbit) total += size;
    ASSERT_EQ(total, oracle::catalan(n - 2));
  }
}

TEST(TriPartitions, PaperAndDerivedSets) {
  auto triples = [](int n) {
    std::vector<std::array<int, 3>> out;
    for (const TriPartition& tp : perfect_tripartitions(n)) out.push_back({tp.i, tp.j, tp.k});
    return out;
  };
  using V = std::vector<std::array<int, 3>>;
  EXPECT_EQ(triples(13), (V{{6, 6, 1}, {6, 5, 2}, {6, 4, 3}, {5, 5, 3}, {5, 4, 4}}));
  EXPECT_EQ(triples(7), (V{{3, 3, 1}, {3, 2, 2}}));
  EXPECT_EQ(triples(6), (V{{3, 3, 0}, {2, 2, 2}}));
  EXPECT_EQ(triples(3), (V{{1, 1, 1}}));
  EXPECT_EQ(triples(4), (V{{2, 2, 0}}));
  const auto p6 = perfect_tripartitions(6);
  EXPECT_EQ(p6[0].tag, PartitionCase::A);
  EXPECT_EQ(p6[1].tag, PartitionCase::F);
  const auto p13 = perfect_tripartitions(13);
  EXPECT_EQ(p13[0].tag, PartitionCase::B);
  EXPECT_EQ(p13[1].tag, PartitionCase::C);
  EXPECT_EQ(p13[3].tag, PartitionCase::D);
  EXPECT_EQ(p13[4].tag, PartitionCase::E);
  for (int n = 3; n <= 30; ++n) {
    for (const TriPartition& tp : perfect_tripartitions(n)) {
      ASSERT_EQ(tp.i + tp.j + tp.k, n);
      ASSERT_TRUE(tp.i >= tp.j && tp.j >= tp.k && tp.k >= 0);
      // Each piece is smaller than half the polygon unless it is the
      // diameter case.
      if (tp.tag != PartitionCase::A) ASSERT_LT(2 * tp.i, n + 1);
    }
  }
}

TEST(CaseCount, PaperN13) {
  const auto p = perfect_tripartitions(13);
  std::vector<BigInt> counts;
  for (const TriPartition& tp : p) counts.push_back(case_count(tp));
  EXPECT_EQ(counts, (std::vector<BigInt>{903, 588, 420, 196, 175}));
}

TEST(CaseCount, PlugIns) {
  EXPECT_EQ(case_count({3, 3, 0, PartitionCase::A}), 2);
  EXPECT_EQ(case_count({4, 4, 4, PartitionCase::F}), 25);
}

// Tri-partition of one triangulation: the diameter case, or the sizes of
// the three pieces around the triangle none of whose pieces exceeds n/2.
std::array<int, 3> central_partition(int n, const std::vector<std::pair<int, int>>& diagonals) {
  std::set<std::pair<int, int>> edges(diagonals.begin(), diagonals.end());
  for (int v = 0; v < n; ++v) edges.insert({std::min(v, (v + 1) % n), std::max(v, (v + 1) % n)});
  for (const auto& [u, v] : diagonals) {
    if (2 * (v - u) == n) return {n / 2, n / 2, 0};
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        if (!edges.count({a, b}) || !edges.count({b, c}) || !edges.count({a, c})) continue;
        std::array<int, 3> p{b - a, c - b, n - c + a};
        std::sort(p.rbegin(), p.rend());
        if (2 * p[0] < n) return p;
      }
    }
  }
  return {0, 0, 0};
}

TEST(CaseCount, MatchesBruteForceBreakdown) {
  for (int n = 3; n <= 12; ++n) {
    std::map<std::array<int, 3>, std::set<Sequence>> by_partition;
    for (const auto& d : oracle::triangulations(n)) {
      const Sequence canon = oracle::naive_canon(oracle::triangle_counts(n, d));
      by_partition[central_partition(n, d)].insert(canon);
    }
    std::size_t listed = 0;
    for (const TriPartition& tp : perfect_tripartitions(n)) {
      const std::array<int, 3> key{tp.i, tp.j, tp.k};
      ASSERT_EQ(case_count(tp), by_partition[key].size()) << n << ": " << tp.i << tp.j << tp.k;
      ++listed;
    }
    std::size_t nonempty = 0;
    for (const auto& [key, types] : by_partition) nonempty += types.empty() ? 0 : 1;
    ASSERT_EQ(nonempty, listed) << n;
  }
}

TEST(CountTypes, FormulaTable) {
  for (int n = 3; n <= 13; ++n) {
    EXPECT_EQ(count_types(n), kTable[static_cast<std::size_t>(n - 3)]) << n;
  }
  EXPECT_EQ(count_types(14), 7528);
  EXPECT_EQ(count_types(15), 24834);
  EXPECT_EQ(count_types(16), 83898);
}

TEST(CountTypes, BruteAgreesAndCapIsEnforced) {
  for (int n = 3; n <= 12; ++n) {
    EXPECT_EQ(count_types(n, CountMethod::kBrute), count_types(n)) << n;
  }
  EXPECT_EQ(count_types(10, CountMethod::kBrute, 14, 3), 82);
  EXPECT_THROW(count_types(15, CountMethod::kBrute), CapExceeded);
  EXPECT_THROW(count_types(2), InvalidInput);
}

TEST(Compose, Examples) {
  const Sequence tri{1, 1, 1};
  const Sequence two{0, 0};
  EXPECT_EQ(compose(tri, tri, std::span<const std::int64_t>(two)), (Sequence{2, 1, 3, 1, 2}));
  const Sequence hex = compose(tri, tri, std::span<const std::int64_t>(tri));
  EXPECT_EQ(canonicalize(hex).canon, canonicalize(Sequence{3, 1, 3, 1, 3, 1}).canon);
  const Sequence sq{2, 1, 2, 1};
  const Sequence glued = compose(sq, sq);
  EXPECT_EQ(glued.size(), 6u);
  EXPECT_TRUE(is_eta(glued));
  EXPECT_EQ(compose(tri, tri), (Sequence{2, 1, 2, 1}));
  EXPECT_THROW(compose(two, two, std::span<const std::int64_t>(tri)), InvalidInput);
  EXPECT_THROW(compose(Sequence{2, 2, 2}, tri), InvalidInput);
}

TEST(Compose, AlwaysValid) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> size(2, 8);
  auto pick = [&](int s) {
    return s == 2 ? Sequence{0, 0} : oracle::random_quiddity(rng, s);
  };
  for (int trial = 0; trial < 2000; ++trial) {
    Sequence a = pick(size(rng));
    Sequence b = pick(size(rng));
    Sequence c = pick(size(rng));
    if (a.size() == 2 && b.size() == 2) a = {1, 1, 1};
    if ((a.size() == 2 || b.size() == 2) && c.size() == 2) c = {1, 1, 1};
    const Sequence z = compose(a, b, std::span<const std::int64_t>(c));
    ASSERT_EQ(z.size(), a.size() + b.size() + c.size() - 3);
    ASSERT_TRUE(oracle::is_minus_identity(oracle::word_product(z)));
    if (a.size() > 2 && b.size() > 2) {
      const Sequence y = compose(a, b);
      ASSERT_TRUE(oracle::is_minus_identity(oracle::word_product(y)));
    }
  }
}

TEST(EnumerateTypes, SmallLists) {
  std::vector<Sequence> six;
  for (const OrbitCanon& c : enumerate_types(6)) six.push_back(c.canon);
  EXPECT_EQ(six, (std::vector<Sequence>{canonicalize(Sequence{4, 1, 2, 2, 2, 1}).canon,
                                        canonicalize(Sequence{3, 1, 2, 3, 1, 2}).canon,
                                        canonicalize(Sequence{3, 1, 3, 1, 3, 1}).canon}));
  const auto seven = enumerate_types(7);
  EXPECT_EQ(seven.size(), 4u);
  std::set<Sequence> s7;
  for (const OrbitCanon& c : seven) s7.insert(c.canon);
  EXPECT_TRUE(s7.count(canonicalize(Sequence{5, 1, 2, 2, 2, 2, 1}).canon));
  EXPECT_TRUE(s7.count(canonicalize(Sequence{3, 2, 1, 3, 3, 1, 2}).canon));
  EXPECT_EQ(classify(Sequence{5, 1, 2, 2, 2, 2, 1}).category, Category::kSymmetric);
  EXPECT_EQ(classify(Sequence{3, 2, 1, 3, 3, 1, 2}).category, Category::kSymmetric);
  EXPECT_THROW(enumerate_types(15), CapExceeded);
}

TEST(EnumerateTypes, EqualsBruteForceSets) {
  for (int n = 3; n <= 11; ++n) {
    std::set<Sequence> brute;
    for (const Sequence& q : oracle::quiddity_set(n)) brute.insert(oracle::naive_canon(q));
    std::set<Sequence> built;
    for (const OrbitCanon& c : enumerate_types(n)) built.insert(c.canon);
    ASSERT_EQ(built, brute) << n;
    ASSERT_EQ(brute_force_types(n), std::vector<Sequence>(brute.begin(), brute.end()));
  }
}

}  // namespace
}  // namespace frieze
