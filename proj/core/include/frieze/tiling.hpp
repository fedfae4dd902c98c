#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "frieze/sequence.hpp"
#include "frieze/sl2.hpp"

namespace frieze {

// Inclusive integer range.
struct Interval {
  std::int64_t lo;
  std::int64_t hi;

  std::int64_t size() const { return hi - lo + 1; }
  bool contains(std::int64_t x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Finite rectangular window of an SL2-tiling alpha(i, j), i in rows, j in
// columns.
class TilingWindow {
 public:
  // Throws InvalidInput when values.size() != rows.size() * cols.size().
  TilingWindow(Interval rows, Interval cols, std::vector<BigInt> values);

  Interval rows() const { return rows_; }
  Interval cols() const { return cols_; }
  const BigInt& at(std::int64_t i, std::int64_t j) const;

  // Every adjacent 2x2 minor equals 1.
  bool is_unimodular() const;
  bool is_positive() const;

  TilingWindow crop(Interval rows, Interval cols) const;

  friend bool operator==(const TilingWindow&, const TilingWindow&) = default;

 private:
  Interval rows_;
  Interval cols_;
  std::vector<BigInt> values_;
};

// k_j: alpha(i,j-1) + alpha(i,j+1) = k_j alpha(i,j) for every row i.
// l_i: alpha(i-1,j) + alpha(i+1,j) = l_i alpha(i,j) for every column j.
struct FactorVectors {
  std::map<std::int64_t, BigInt> column;  // k
  std::map<std::int64_t, BigInt> row;     // l

  friend bool operator==(const FactorVectors&, const FactorVectors&) = default;
};

// Factors for every interior column and row of a positive window, each
// checked against all rows (resp. columns). Throws NotAPositiveTiling for a
// non-positive window, a non-integer ratio, or disagreement between rows.
FactorVectors extract_factors(const TilingWindow& w);

struct Fractures {
  std::set<std::int64_t> columns;
  std::set<std::int64_t> rows;

  friend bool operator==(const Fractures&, const Fractures&) = default;
};

// Positions whose factor differs from 2.
Fractures fractures(const FactorVectors& f);

struct GeneratedTiling {
  TilingWindow window;
  bool positive;
};

// Fills the window from the seed [[a(0,0), a(0,1)], [a(1,0), a(1,1)]] by
// propagating rows 0 and 1 with the column factors and then every column
// with the row factors. Afterwards both recurrences and unimodularity are
// checked over the whole filled rectangle; a violation throws
// InconsistentFactors. Missing factors throw InvalidInput. The seed must be
// positive (InvalidInput otherwise); the result may still contain
// non-positive entries, reported through `positive`.
GeneratedTiling generate_tiling(const Mat2& seed, const FactorVectors& factors, Interval rows,
                                Interval cols);

// Closed form of the positive tiling fractured at row 0 and column 0:
// |i| + |j| + 2 when i*j < 0, |i*j| + |i| + |j| + 2 otherwise.
BigInt formula_tiling(std::int64_t i, std::int64_t j);
TilingWindow formula_window(Interval rows, Interval cols);

// Right-aligned text grid, one row per line.
std::string render_text(const TilingWindow& w);

// Parses "i0:i1".
Interval parse_interval(const std::string& text);

}  // namespace frieze
