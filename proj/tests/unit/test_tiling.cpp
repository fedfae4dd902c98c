#include <gtest/gtest.h>

#include "frieze/error.hpp"
#include "frieze/tiling.hpp"

namespace frieze {
namespace {

TilingWindow from_rows(Interval rows, Interval cols, std::vector<std::vector<int>> v) {
  std::vector<BigInt> flat;
  for (const auto& r : v) flat.insert(flat.end(), r.begin(), r.end());
  return TilingWindow(rows, cols, std::move(flat));
}

const TilingWindow& paper_core() {
  static const TilingWindow w = from_rows({-2, 2}, {-2, 2},
                                          {{10, 7, 4, 5, 6},
                                           {7, 5, 3, 4, 5},
                                           {4, 3, 2, 3, 4},
                                           {5, 4, 3, 5, 7},
                                           {6, 5, 4, 7, 10}});
  return w;
}

TEST(Formula, PointValues) {
  EXPECT_EQ(formula_tiling(0, 0), 2);
  EXPECT_EQ(formula_tiling(-2, -2), 10);
  EXPECT_EQ(formula_tiling(-2, 2), 6);
  EXPECT_EQ(formula_tiling(1, -1), 4);
}

TEST(Formula, MatchesDisplayedCore) { EXPECT_EQ(formula_window({-2, 2}, {-2, 2}), paper_core()); }

TEST(Formula, UnimodularAndPositive) {
  const TilingWindow w = formula_window({-6, 6}, {-6, 6});
  EXPECT_TRUE(w.is_unimodular());
  EXPECT_TRUE(w.is_positive());
  for (std::int64_t i = -6; i < 6; ++i) {
    for (std::int64_t j = -6; j < 6; ++j) {
      ASSERT_EQ(w.at(i, j) * w.at(i + 1, j + 1) - w.at(i, j + 1) * w.at(i + 1, j), 1);
    }
  }
}

TEST(Formula, PrintedBottomRowBreaksUnimodularity) {
  // The row printed below i = 2 repeats row i = 1; its last minor is
  // 7*7 - 10*5 = -1.
  const TilingWindow printed = from_rows({2, 3}, {-2, 2}, {{6, 5, 4, 7, 10}, {5, 4, 3, 5, 7}});
  EXPECT_FALSE(printed.is_unimodular());
  const TilingWindow corrected = formula_window({3, 3}, {-2, 2});
  for (std::int64_t j = -2; j <= 2; ++j) {
    EXPECT_EQ(corrected.at(3, j), (std::vector<int>{7, 6, 5, 9, 13})[static_cast<std::size_t>(j + 2)]);
  }
}

TEST(Factors, PaperWindow) {
  const FactorVectors f = extract_factors(paper_core());
  EXPECT_EQ(f.column.at(0), 3);
  EXPECT_EQ(f.column.at(1), 2);
  EXPECT_EQ(f.column.at(-1), 2);
  EXPECT_EQ(f.row.at(0), 3);
  EXPECT_EQ(f.row.at(1), 2);
  const Fractures fr = fractures(f);
  EXPECT_EQ(fr.columns, (std::set<std::int64_t>{0}));
  EXPECT_EQ(fr.rows, (std::set<std::int64_t>{0}));
}

TEST(Factors, EveryRowAgrees) {
  const TilingWindow w = formula_window({-6, 6}, {-6, 6});
  const FactorVectors f = extract_factors(w);
  for (std::int64_t j = -5; j <= 5; ++j) {
    for (std::int64_t i = -6; i <= 6; ++i) {
      ASSERT_EQ(f.column.at(j) * w.at(i, j), w.at(i, j - 1) + w.at(i, j + 1));
    }
  }
  for (std::int64_t i = -5; i <= 5; ++i) {
    for (std::int64_t j = -6; j <= 6; ++j) {
      ASSERT_EQ(f.row.at(i) * w.at(i, j), w.at(i - 1, j) + w.at(i + 1, j));
    }
  }
  const Fractures fr = fractures(f);
  EXPECT_EQ(fr.columns, (std::set<std::int64_t>{0}));
  EXPECT_EQ(fr.rows, (std::set<std::int64_t>{0}));
}

TEST(Factors, ArithmeticWindowHasNoFractures) {
  std::vector<BigInt> v;
  for (int i = 1; i <= 6; ++i) {
    for (int j = 1; j <= 6; ++j) v.emplace_back(1 + i * j);
  }
  // 1 + ij is not unimodular, so use the progression criterion directly.
  const TilingWindow w({1, 6}, {1, 6}, v);
  const FactorVectors f = extract_factors(w);
  EXPECT_TRUE(fractures(f).columns.empty());
  EXPECT_TRUE(fractures(f).rows.empty());
}

TEST(Factors, RejectsNonPositiveAndInconsistent) {
  EXPECT_THROW(extract_factors(from_rows({0, 2}, {0, 2}, {{1, 1, 1}, {1, 0, 1}, {1, 1, 1}})),
               NotAPositiveTiling);
  EXPECT_THROW(extract_factors(from_rows({0, 2}, {0, 2}, {{1, 2, 4}, {1, 2, 3}, {1, 2, 3}})),
               NotAPositiveTiling);
}

TEST(Generate, ReproducesThePaperWindowAndTheRowBelow) {
  const FactorVectors f = extract_factors(formula_window({-4, 5}, {-4, 4}));
  const GeneratedTiling g = generate_tiling(Mat2(2, 3, 3, 5), f, {-2, 3}, {-2, 2});
  EXPECT_TRUE(g.positive);
  EXPECT_EQ(g.window.crop({-2, 2}, {-2, 2}), paper_core());
  std::vector<BigInt> row3;
  for (std::int64_t j = -2; j <= 2; ++j) row3.push_back(g.window.at(3, j));
  EXPECT_EQ(row3, (std::vector<BigInt>{7, 6, 5, 9, 13}));
  EXPECT_TRUE(g.window.is_unimodular());
}

TEST(Generate, RoundTripThroughExtractedFactors) {
  const TilingWindow w = formula_window({-5, 5}, {-5, 5});
  const FactorVectors f = extract_factors(w);
  const Mat2 seed(w.at(0, 0), w.at(0, 1), w.at(1, 0), w.at(1, 1));
  const GeneratedTiling g = generate_tiling(seed, f, {-4, 4}, {-4, 4});
  EXPECT_EQ(g.window.crop({-4, 4}, {-4, 4}), w.crop({-4, 4}, {-4, 4}));
}

TEST(Generate, AllTwosGiveProgressions) {
  FactorVectors f;
  for (std::int64_t x = -5; x <= 5; ++x) {
    f.column[x] = 2;
    f.row[x] = 2;
  }
  const GeneratedTiling g = generate_tiling(Mat2(1, 1, 1, 2), f, {0, 5}, {0, 5});
  for (std::int64_t i = 0; i <= 5; ++i) {
    for (std::int64_t j = 0; j <= 5; ++j) ASSERT_EQ(g.window.at(i, j), 1 + i * j);
  }
  EXPECT_TRUE(g.window.is_unimodular());
  // Going left into negative columns eventually leaves positivity.
  const GeneratedTiling wide = generate_tiling(Mat2(1, 1, 1, 2), f, {0, 3}, {-3, 3});
  EXPECT_FALSE(wide.positive);
}

TEST(Generate, Errors) {
  FactorVectors f;
  f.column[0] = 2;
  EXPECT_THROW(generate_tiling(Mat2(1, 1, 1, 2), f, {0, 3}, {0, 3}), InvalidInput);
  FactorVectors all;
  for (std::int64_t x = -3; x <= 3; ++x) {
    all.column[x] = 2;
    all.row[x] = 2;
  }
  EXPECT_THROW(generate_tiling(Mat2(0, 1, -1, 3), all, {0, 2}, {0, 2}), InvalidInput);
  EXPECT_THROW(Mat2(2, 3, 3, 4), InvalidInput);
}

TEST(Blocks, ProgressionsBetweenFractures) {
  const TilingWindow w = formula_window({-6, 6}, {-6, 6});
  // Inside each quadrant bounded by the fractures every row and column is an
  // arithmetic progression.
  for (std::int64_t i = -6; i <= 6; ++i) {
    for (std::int64_t j = -6; j + 2 <= 6; ++j) {
      if (j + 1 == 0) continue;
      ASSERT_EQ(w.at(i, j) + w.at(i, j + 2), 2 * w.at(i, j + 1));
    }
  }
  for (std::int64_t j = -6; j <= 6; ++j) {
    for (std::int64_t i = -6; i + 2 <= 6; ++i) {
      if (i + 1 == 0) continue;
      ASSERT_EQ(w.at(i, j) + w.at(i + 2, j), 2 * w.at(i + 1, j));
    }
  }
}

TEST(Interval, Parse) {
  EXPECT_EQ(parse_interval("-2:3"), (Interval{-2, 3}));
  EXPECT_EQ(parse_interval("0:0"), (Interval{0, 0}));
  EXPECT_THROW(parse_interval(""), InvalidInput);
  EXPECT_THROW(parse_interval("3:1"), InvalidInput);
  EXPECT_THROW(parse_interval("a:1"), InvalidInput);
}

TEST(Render, AlignedGrid) {
  EXPECT_EQ(render_text(formula_window({0, 1}, {0, 1})), "2 3\n3 5\n");
}

}  // namespace
}  // namespace frieze
