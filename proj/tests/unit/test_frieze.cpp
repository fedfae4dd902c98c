#include <gtest/gtest.h>

#include <random>

#include "frieze/error.hpp"
#include "frieze/frieze_pattern.hpp"
#include "frieze/polygon.hpp"
#include "oracles.hpp"

namespace frieze {
namespace {

std::vector<BigInt> big_row(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

TEST(Frieze, Triangle) {
  const FriezeWindow w = generate_frieze(Sequence{1, 1, 1});
  EXPECT_EQ(w.row(2), big_row({1, 1, 1}));
  EXPECT_EQ(w.row(3), big_row({0, 0, 0}));
  EXPECT_EQ(has_ones_row(w), 2);
}

TEST(Frieze, Pentagon) {
  const FriezeWindow w = generate_frieze(Sequence{1, 2, 2, 1, 3});
  EXPECT_EQ(w.row(3), big_row({1, 3, 1, 2, 2}));
  EXPECT_EQ(w.row(4), big_row({1, 1, 1, 1, 1}));
  EXPECT_EQ(has_ones_row(w), 4);
  EXPECT_EQ(has_ones_row(generate_frieze(Sequence{2, 1, 2, 1})), 3);
}

TEST(Frieze, HeptagonPattern) {
  const FriezeWindow w = generate_frieze(Sequence{4, 2, 1, 3, 2, 2, 1});
  EXPECT_EQ(display_row(w, 2), big_row({4, 2, 1, 3, 2, 2, 1}));
  EXPECT_EQ(display_row(w, 3), big_row({3, 7, 1, 2, 5, 3, 1}));
  EXPECT_EQ(display_row(w, 4), big_row({5, 3, 1, 3, 7, 1, 2}));
  EXPECT_EQ(display_row(w, 5), big_row({3, 2, 2, 1, 4, 2, 1}));
  const std::string text = render_text(w);
  EXPECT_EQ(text,
            "1  1  1  1  1  1  1\n"
            "  4  2  1  3  2  2  1\n"
            "3  7  1  2  5  3  1\n"
            "  5  3  1  3  7  1  2\n"
            "3  2  2  1  4  2  1\n"
            "  1  1  1  1  1  1  1\n");
}

TEST(Frieze, NonQuiddityFailsOrMissesTheOnesRow) {
  const FriezeWindow w = generate_frieze(Sequence{2, 2, 2});
  EXPECT_FALSE(has_ones_row(w));
  // (1,3,1,3) hits a zero divisor below the generating row.
  EXPECT_THROW(generate_frieze(Sequence{1, 3, 1, 3, 1, 3, 1}), FriezeCellError);
  try {
    generate_frieze(Sequence{1, 3, 1, 3, 1, 3, 1});
  } catch (const FriezeCellError& e) {
    EXPECT_GE(e.row(), 3);
  }
  EXPECT_THROW(generate_frieze(Sequence{1, 1}), InvalidInput);
}

TEST(Frieze, DiamondRuleGlideAndPositivity) {
  for (int n = 3; n <= 10; ++n) {
    for_each_quiddity(n, [&](std::span<const std::int64_t> q) {
      const FriezeWindow w = generate_frieze(q);
      for (std::int64_t j = 0; j < n; ++j) {
        ASSERT_EQ(w.at(0, j), 0);
        ASSERT_EQ(w.at(1, j), 1);
        ASSERT_EQ(w.at(n - 1, j), 1);
        ASSERT_EQ(w.at(n, j), 0);
        for (int i = 2; i <= n - 2; ++i) ASSERT_GT(w.at(i, j), 0);
        for (int i = 2; i <= n; ++i) {
          ASSERT_EQ(w.at(i, j) * w.at(i - 2, j + 1), w.at(i - 1, j + 1) * w.at(i - 1, j) - 1);
        }
        // Glide reflection: phi(i, j) = phi(n - i, j + i).
        for (int i = 1; i < n; ++i) ASSERT_EQ(w.at(i, j), w.at(n - i, j + i));
      }
      // Solving the rule at row 1 for the row above gives phi(-1, j) = -1.
      for (std::int64_t j = 0; j < n; ++j) {
        ASSERT_EQ((w.at(0, j + 1) * w.at(0, j) - 1) / w.at(1, j), -1);
      }
    });
  }
}

TEST(Continuant, BaseCasesAndSmall) {
  EXPECT_EQ(continuant(Sequence{}), 1);
  EXPECT_EQ(continuant(Sequence{7}), 7);
  EXPECT_EQ(continuant(Sequence{2, 1}), 1);
}

TEST(Continuant, EqualsTridiagonalDeterminant) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::int64_t> entry(-5, 9);
  for (int trial = 0; trial < 300; ++trial) {
    Sequence d(static_cast<std::size_t>(trial % 12));
    for (auto& v : d) v = entry(rng);
    ASSERT_EQ(continuant(d), oracle::tridiagonal_det(d)) << format_sequence(d);
  }
}

TEST(Continuant, EqualsFriezeCells) {
  for (int n = 3; n <= 9; ++n) {
    for_each_quiddity(n, [&](std::span<const std::int64_t> q) {
      const FriezeWindow w = generate_frieze(q);
      for (int k = 0; k < n; ++k) {
        for (std::int64_t j = 0; j < n; ++j) {
          Sequence run;
          for (int t = 0; t < k; ++t) run.push_back(q[static_cast<std::size_t>((j + t) % n)]);
          ASSERT_EQ(continuant(run), w.at(k + 1, j));
        }
      }
    });
  }
}

TEST(MatrixFrieze, SpecialFamily) {
  const MatrixFriezeWindow t = generate_matrix_frieze(EtaSeq::base());
  for (std::int64_t j = 0; j < 3; ++j) {
    EXPECT_EQ(t.at(0, j), -Mat2::S());
    EXPECT_EQ(t.at(1, j), Mat2::U());
    EXPECT_EQ(t.at(2, j), Mat2::U() * Mat2::S() * Mat2::U());
  }
  const MatrixFriezeWindow sq = generate_matrix_frieze(EtaSeq(Sequence{2, 1, 2, 1}));
  for (std::int64_t j = 0; j < 4; ++j) EXPECT_EQ(sq.at(4, j), Mat2::S());
}

TEST(MatrixFrieze, LowerLeftIsTheIntegerFrieze) {
  for (int n = 3; n <= 9; ++n) {
    for_each_quiddity(n, [&](std::span<const std::int64_t> q) {
      const EtaSeq eq = trusted_eta(Sequence(q.begin(), q.end()));
      const MatrixFriezeWindow m = generate_matrix_frieze(eq);
      const FriezeWindow w = generate_frieze(q);
      for (int i = 2; i <= n; ++i) {
        for (std::int64_t j = 0; j < n; ++j) {
          ASSERT_EQ(m.at(i - 1, j).c(), w.at(i, j));
          ASSERT_EQ(m.at(i, j), matrix_cell_by_word(q, i, j));
        }
      }
      for (std::int64_t j = 0; j < n; ++j) ASSERT_EQ(m.at(n, j), Mat2::S());
    });
  }
}

TEST(MatrixFrieze, GeneralRuleReproducesTheFamily) {
  const Sequence q{1, 2, 2, 1, 3};
  std::vector<Mat2> row1;
  for (std::int64_t a : q) row1.push_back(Mat2::U(a));
  const MatrixFriezeWindow general = generate_matrix_frieze(-Mat2::S(), row1, 5);
  const MatrixFriezeWindow special = generate_matrix_frieze(EtaSeq(q));
  for (int i = 0; i <= 5; ++i) {
    for (std::int64_t j = 0; j < 5; ++j) ASSERT_EQ(general.at(i, j), special.at(i, j));
  }
}

}  // namespace
}  // namespace frieze
