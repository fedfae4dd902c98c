#include "frieze/frieze_pattern.hpp"

#include <algorithm>
#include <stdexcept>

#include "frieze/error.hpp"

namespace frieze {

namespace {

std::size_t wrap(std::int64_t j, std::size_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return static_cast<std::size_t>(((j % m) + m) % m);
}

}  // namespace

const BigInt& FriezeWindow::at(int i, std::int64_t j) const {
  return rows_.at(static_cast<std::size_t>(i))[wrap(j, period_)];
}

FriezeWindow generate_frieze(std::span<const std::int64_t> seq) {
  const std::size_t n = seq.size();
  if (n < 3) throw InvalidInput("a frieze needs a sequence of length at least 3");
  for (std::int64_t v : seq) {
    if (v < 1) throw InvalidInput("frieze entries must be positive");
  }
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(n + 1);
  rows.emplace_back(n, BigInt(0));
  rows.emplace_back(n, BigInt(1));
  rows.emplace_back(seq.begin(), seq.end());
  for (std::size_t i = 3; i <= n; ++i) {
    const auto& up = rows[i - 1];
    const auto& top = rows[i - 2];
    std::vector<BigInt> row(n);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t jn = (j + 1) % n;
      const BigInt& divisor = top[jn];
      const BigInt numerator = up[jn] * up[j] - 1;
      const int ri = static_cast<int>(i);
      if (divisor == 0) {
        throw FriezeCellError(ri, j,
                              "zero divisor at row " + std::to_string(i) + ", column " +
                                  std::to_string(j));
      }
      BigInt q, r;
      boost::multiprecision::divide_qr(numerator, divisor, q, r);
      if (r != 0) {
        throw FriezeCellError(ri, j,
                              "inexact division at row " + std::to_string(i) + ", column " +
                                  std::to_string(j) + ": " + numerator.str() + " / " +
                                  divisor.str());
      }
      row[j] = std::move(q);
    }
    rows.push_back(std::move(row));
  }
  return FriezeWindow(n, std::move(rows));
}

std::optional<int> has_ones_row(const FriezeWindow& w) {
  for (int r = 2; r <= w.max_row(); ++r) {
    const auto& row = w.row(r);
    if (std::all_of(row.begin(), row.end(), [](const BigInt& v) { return v == 1; })) return r;
  }
  return std::nullopt;
}

BigInt continuant(std::span<const std::int64_t> entries) {
  BigInt before = 0;  // phi(0)
  BigInt current = 1;  // phi(1)
  for (std::int64_t a : entries) {
    BigInt next = a * current - before;
    before = std::move(current);
    current = std::move(next);
  }
  return current;
}

std::vector<BigInt> display_row(const FriezeWindow& w, int i) {
  const std::int64_t start = -static_cast<std::int64_t>((i - 1) / 2);
  std::vector<BigInt> out;
  out.reserve(w.period());
  for (std::size_t t = 0; t < w.period(); ++t) {
    out.push_back(w.at(i, start + static_cast<std::int64_t>(t)));
  }
  return out;
}

std::string render_text(const FriezeWindow& w) {
  const int last = std::min(w.max_row(), static_cast<int>(w.period()) - 1);
  std::size_t width = 1;
  for (int i = 1; i <= last; ++i) {
    for (const BigInt& v : w.row(i)) width = std::max(width, v.str().size());
  }
  const std::string indent((width + 3) / 2, ' ');
  std::string out;
  for (int i = 1; i <= last; ++i) {
    if ((i - 1) % 2 == 1) out += indent;
    const auto row = display_row(w, i);
    for (std::size_t t = 0; t < row.size(); ++t) {
      if (t > 0) out += "  ";
      const std::string cell = row[t].str();
      out.append(width - cell.size(), ' ');
      out += cell;
    }
    out += '\n';
  }
  return out;
}

const Mat2& MatrixFriezeWindow::at(int i, std::int64_t j) const {
  return rows_.at(static_cast<std::size_t>(i))[wrap(j, period_)];
}

MatrixFriezeWindow generate_matrix_frieze(const Mat2& row0, std::span<const Mat2> row1,
                                          int max_row) {
  const std::size_t n = row1.size();
  if (n == 0) throw InvalidInput("matrix frieze needs a nonempty first row");
  if (max_row < 1) throw InvalidInput("matrix frieze needs at least rows 0 and 1");
  std::vector<std::vector<Mat2>> rows;
  rows.emplace_back(n, row0);
  rows.emplace_back(row1.begin(), row1.end());
  for (int i = 2; i <= max_row; ++i) {
    const auto& up = rows[static_cast<std::size_t>(i - 1)];
    const auto& top = rows[static_cast<std::size_t>(i - 2)];
    std::vector<Mat2> row;
    row.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t jn = (j + 1) % n;
      row.push_back(up[jn] * top[jn].inverse() * up[j]);
    }
    rows.push_back(std::move(row));
  }
  return MatrixFriezeWindow(n, std::move(rows));
}

Mat2 matrix_cell_by_word(std::span<const std::int64_t> seq, int i, std::int64_t j) {
  if (i < 1) throw InvalidInput("word form applies to rows i >= 1");
  const std::size_t n = seq.size();
  Mat2 m = Mat2::identity();
  for (std::int64_t t = i - 1; t >= 0; --t) {
    m = m * Mat2::U(seq[wrap(j + t, n)]);
    if (t > 0) m = m * Mat2::S();
  }
  return m;
}

MatrixFriezeWindow generate_matrix_frieze(const EtaSeq& q) {
  const std::size_t n = q.size();
  std::vector<Mat2> row1;
  row1.reserve(n);
  for (std::int64_t a : q.entries()) row1.push_back(Mat2::U(a));
  MatrixFriezeWindow w = generate_matrix_frieze(-Mat2::S(), row1, static_cast<int>(n));
  for (int i = 1; i <= w.max_row(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto jj = static_cast<std::int64_t>(j);
      if (!(w.at(i, jj) == matrix_cell_by_word(q.entries(), i, jj))) {
        throw std::logic_error("matrix frieze: diamond rule and word product disagree at row " +
                               std::to_string(i));
      }
    }
  }
  return w;
}

}  // namespace frieze
