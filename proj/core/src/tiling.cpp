#include "frieze/tiling.hpp"

#include <algorithm>
#include <charconv>

#include "frieze/error.hpp"

namespace frieze {

TilingWindow::TilingWindow(Interval rows, Interval cols, std::vector<BigInt> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows_.size() <= 0 || cols_.size() <= 0) throw InvalidInput("empty tiling window");
  if (static_cast<std::int64_t>(values_.size()) != rows_.size() * cols_.size()) {
    throw InvalidInput("tiling window value count does not match its ranges");
  }
}

const BigInt& TilingWindow::at(std::int64_t i, std::int64_t j) const {
  if (!rows_.contains(i) || !cols_.contains(j)) {
    throw InvalidInput("tiling index (" + std::to_string(i) + "," + std::to_string(j) +
                       ") outside the window");
  }
  return values_[static_cast<std::size_t>((i - rows_.lo) * cols_.size() + (j - cols_.lo))];
}

bool TilingWindow::is_unimodular() const {
  for (std::int64_t i = rows_.lo; i < rows_.hi; ++i) {
    for (std::int64_t j = cols_.lo; j < cols_.hi; ++j) {
      if (at(i, j) * at(i + 1, j + 1) - at(i, j + 1) * at(i + 1, j) != 1) return false;
    }
  }
  return true;
}

bool TilingWindow::is_positive() const {
  return std::all_of(values_.begin(), values_.end(), [](const BigInt& v) { return v > 0; });
}

TilingWindow TilingWindow::crop(Interval rows, Interval cols) const {
  std::vector<BigInt> values;
  values.reserve(static_cast<std::size_t>(rows.size() * cols.size()));
  for (std::int64_t i = rows.lo; i <= rows.hi; ++i) {
    for (std::int64_t j = cols.lo; j <= cols.hi; ++j) values.push_back(at(i, j));
  }
  return TilingWindow(rows, cols, std::move(values));
}

namespace {

BigInt exact_ratio(const BigInt& num, const BigInt& den, const std::string& where) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw NotAPositiveTiling("non-integer factor at " + where);
  return q;
}

}  // namespace

FactorVectors extract_factors(const TilingWindow& w) {
  if (!w.is_positive()) throw NotAPositiveTiling("window has non-positive entries");
  const Interval rows = w.rows();
  const Interval cols = w.cols();
  FactorVectors f;
  for (std::int64_t j = cols.lo + 1; j < cols.hi; ++j) {
    const std::string where = "column " + std::to_string(j);
    const BigInt k = exact_ratio(w.at(rows.lo, j - 1) + w.at(rows.lo, j + 1), w.at(rows.lo, j),
                                 where);
    for (std::int64_t i = rows.lo + 1; i <= rows.hi; ++i) {
      if (k * w.at(i, j) != w.at(i, j - 1) + w.at(i, j + 1)) {
        throw NotAPositiveTiling("rows disagree on the factor of " + where);
      }
    }
    f.column.emplace(j, k);
  }
  for (std::int64_t i = rows.lo + 1; i < rows.hi; ++i) {
    const std::string where = "row " + std::to_string(i);
    const BigInt l = exact_ratio(w.at(i - 1, cols.lo) + w.at(i + 1, cols.lo), w.at(i, cols.lo),
                                 where);
    for (std::int64_t j = cols.lo + 1; j <= cols.hi; ++j) {
      if (l * w.at(i, j) != w.at(i - 1, j) + w.at(i + 1, j)) {
        throw NotAPositiveTiling("columns disagree on the factor of " + where);
      }
    }
    f.row.emplace(i, l);
  }
  return f;
}

Fractures fractures(const FactorVectors& f) {
  Fractures out;
  for (const auto& [j, k] : f.column) {
    if (k != 2) out.columns.insert(j);
  }
  for (const auto& [i, l] : f.row) {
    if (l != 2) out.rows.insert(i);
  }
  return out;
}

GeneratedTiling generate_tiling(const Mat2& seed, const FactorVectors& factors, Interval rows,
                                Interval cols) {
  if (rows.size() <= 0 || cols.size() <= 0) throw InvalidInput("empty tiling window");
  if (seed.a() <= 0 || seed.b() <= 0 || seed.c() <= 0 || seed.d() <= 0) {
    throw InvalidInput("seed matrix must have positive entries");
  }
  // The seed sits at rows {0,1} x cols {0,1}; fill the bounding box.
  const Interval box_rows{std::min<std::int64_t>(rows.lo, 0), std::max<std::int64_t>(rows.hi, 1)};
  const Interval box_cols{std::min<std::int64_t>(cols.lo, 0), std::max<std::int64_t>(cols.hi, 1)};

  auto factor = [](const std::map<std::int64_t, BigInt>& m, std::int64_t idx,
                   const char* kind) -> const BigInt& {
    auto it = m.find(idx);
    if (it == m.end()) {
      throw InvalidInput(std::string("missing ") + kind + " factor at " + std::to_string(idx));
    }
    return it->second;
  };

  const auto width = static_cast<std::size_t>(box_cols.size());
  std::vector<BigInt> values(static_cast<std::size_t>(box_rows.size()) * width);
  auto cell = [&](std::int64_t i, std::int64_t j) -> BigInt& {
    return values[static_cast<std::size_t>(i - box_rows.lo) * width +
                  static_cast<std::size_t>(j - box_cols.lo)];
  };

  cell(0, 0) = seed.a();
  cell(0, 1) = seed.b();
  cell(1, 0) = seed.c();
  cell(1, 1) = seed.d();
  for (std::int64_t i : {std::int64_t{0}, std::int64_t{1}}) {
    for (std::int64_t j = 1; j < box_cols.hi; ++j) {
      cell(i, j + 1) = factor(factors.column, j, "column") * cell(i, j) - cell(i, j - 1);
    }
    for (std::int64_t j = 0; j > box_cols.lo; --j) {
      cell(i, j - 1) = factor(factors.column, j, "column") * cell(i, j) - cell(i, j + 1);
    }
  }
  for (std::int64_t j = box_cols.lo; j <= box_cols.hi; ++j) {
    for (std::int64_t i = 1; i < box_rows.hi; ++i) {
      cell(i + 1, j) = factor(factors.row, i, "row") * cell(i, j) - cell(i - 1, j);
    }
    for (std::int64_t i = 0; i > box_rows.lo; --i) {
      cell(i - 1, j) = factor(factors.row, i, "row") * cell(i, j) - cell(i + 1, j);
    }
  }

  // Row propagation everywhere must agree with the column-wise fill.
  for (std::int64_t i = box_rows.lo; i <= box_rows.hi; ++i) {
    for (std::int64_t j = box_cols.lo + 1; j < box_cols.hi; ++j) {
      if (factor(factors.column, j, "column") * cell(i, j) != cell(i, j - 1) + cell(i, j + 1)) {
        throw InconsistentFactors("row and column propagation disagree at (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  TilingWindow box(box_rows, box_cols, std::move(values));
  if (!box.is_unimodular()) throw InconsistentFactors("generated window is not unimodular");
  TilingWindow window = box.crop(rows, cols);
  const bool positive = window.is_positive();
  return GeneratedTiling{std::move(window), positive};
}

BigInt formula_tiling(std::int64_t i, std::int64_t j) {
  const BigInt bi = i, bj = j;
  const BigInt ai = abs(bi), aj = abs(bj);
  if ((i < 0 && j > 0) || (i > 0 && j < 0)) return ai + aj + 2;
  return ai * aj + ai + aj + 2;
}

TilingWindow formula_window(Interval rows, Interval cols) {
  std::vector<BigInt> values;
  values.reserve(static_cast<std::size_t>(rows.size() * cols.size()));
  for (std::int64_t i = rows.lo; i <= rows.hi; ++i) {
    for (std::int64_t j = cols.lo; j <= cols.hi; ++j) values.push_back(formula_tiling(i, j));
  }
  return TilingWindow(rows, cols, std::move(values));
}

std::string render_text(const TilingWindow& w) {
  std::size_t width = 1;
  for (std::int64_t i = w.rows().lo; i <= w.rows().hi; ++i) {
    for (std::int64_t j = w.cols().lo; j <= w.cols().hi; ++j) {
      width = std::max(width, w.at(i, j).str().size());
    }
  }
  std::string out;
  for (std::int64_t i = w.rows().lo; i <= w.rows().hi; ++i) {
    for (std::int64_t j = w.cols().lo; j <= w.cols().hi; ++j) {
      const std::string cell = w.at(i, j).str();
      if (j > w.cols().lo) out += ' ';
      out.append(width - cell.size(), ' ');
      out += cell;
    }
    out += '\n';
  }
  return out;
}

Interval parse_interval(const std::string& text) {
  if (text.empty()) throw InvalidInput("empty interval");
  const auto colon = text.find(':', text.front() == '-' ? 1 : 0);
  if (colon == std::string::npos) {
    throw InvalidInput("interval '" + text + "' is not of the form lo:hi");
  }
  auto number = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw InvalidInput("interval '" + text + "' is not of the form lo:hi");
    }
    return v;
  };
  const std::string_view view(text);
  Interval out{number(view.substr(0, colon)), number(view.substr(colon + 1))};
  if (out.hi < out.lo) throw InvalidInput("interval '" + text + "' is empty");
  return out;
}

}  // namespace frieze
