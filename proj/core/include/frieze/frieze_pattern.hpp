#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frieze/eta.hpp"
#include "frieze/sequence.hpp"
#include "frieze/sl2.hpp"

namespace frieze {

// One period of a frieze pattern of integers: rows 0..n, columns 0..n-1.
// Row 0 is all zeros, row 1 all ones, row 2 the generating sequence, and
// every further cell obeys the diamond rule
//   phi(i,j) * phi(i-2,j+1) = phi(i-1,j+1) * phi(i-1,j) - 1.
class FriezeWindow {
 public:
  FriezeWindow(std::size_t period, std::vector<std::vector<BigInt>> rows)
      : period_(period), rows_(std::move(rows)) {}

  std::size_t period() const { return period_; }
  int max_row() const { return static_cast<int>(rows_.size()) - 1; }
  const std::vector<BigInt>& row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }
  // Column index wraps modulo the period.
  const BigInt& at(int i, std::int64_t j) const;

 private:
  std::size_t period_;
  std::vector<std::vector<BigInt>> rows_;
};

// Fills rows 0..n from the sequence by the diamond rule. Any positive
// entries are accepted; a zero divisor or an inexact division throws
// FriezeCellError naming the cell.
FriezeWindow generate_frieze(std::span<const std::int64_t> seq);

// Smallest r >= 2 whose row is all ones (r = n - 1 for a quiddity sequence).
std::optional<int> has_ones_row(const FriezeWindow& w);

// Determinant of the tridiagonal matrix with the given diagonal and unit
// off-diagonals, via phi(k+1) = a_{k} phi(k) - phi(k-1). Empty input gives 1.
BigInt continuant(std::span<const std::int64_t> entries);

// Rows 1..n-1 staggered the way frieze patterns are usually drawn: row i
// starts at column -floor((i-1)/2) and every second line is indented by half
// a cell.
std::string render_text(const FriezeWindow& w);

// Row i of render_text, before padding.
std::vector<BigInt> display_row(const FriezeWindow& w, int i);

// Frieze pattern of matrices, rows 0..max_row over one period.
class MatrixFriezeWindow {
 public:
  MatrixFriezeWindow(std::size_t period, std::vector<std::vector<Mat2>> rows)
      : period_(period), rows_(std::move(rows)) {}

  std::size_t period() const { return period_; }
  int max_row() const { return static_cast<int>(rows_.size()) - 1; }
  const Mat2& at(int i, std::int64_t j) const;

 private:
  std::size_t period_;
  std::vector<std::vector<Mat2>> rows_;
};

// General construction: row 0 constant, row 1 periodic, then
// F(i,j) = F(i-1,j+1) * F(i-2,j+1)^-1 * F(i-1,j) up to max_row.
MatrixFriezeWindow generate_matrix_frieze(const Mat2& row0, std::span<const Mat2> row1,
                                          int max_row);

// The special family with Q(0,j) = -S and Q(1,j) = U^{a_j}, rows 0..n.
// Each cell is built by the matrix diamond rule and checked against the
// direct product U^{a(i+j-1)} S ... S U^{a(j)}; a mismatch is a logic_error.
MatrixFriezeWindow generate_matrix_frieze(const EtaSeq& q);

// U^{a(i+j-1)} S U^{a(i+j-2)} S ... S U^{a(j)} for i >= 1, indices mod n.
Mat2 matrix_cell_by_word(std::span<const std::int64_t> seq, int i, std::int64_t j);

}  // namespace frieze
