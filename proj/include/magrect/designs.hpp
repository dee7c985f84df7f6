#pragma once

// Rectangles and rectangle sets over D_l, the exact-cover check, and the
// concatenation of a k-array set into one rectangle.

#include <magrect/dihedral.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace magrect {

class shape_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Rectangle {
 public:
  Rectangle(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols) {
    if (rows == 0 || cols == 0) throw shape_error("rectangle dimensions must be positive");
  }

  Rectangle(std::size_t rows, std::size_t cols, std::vector<DihedralElement> cells)
      : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    if (rows == 0 || cols == 0) throw shape_error("rectangle dimensions must be positive");
    if (cells_.size() != rows * cols) {
      throw shape_error("rectangle " + std::to_string(rows) + "x" + std::to_string(cols) +
                        " needs " + std::to_string(rows * cols) + " cells, got " +
                        std::to_string(cells_.size()));
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  // 0-indexed, row-major.
  const DihedralElement& at(std::size_t i, std::size_t j) const { return cells_.at(i * cols_ + j); }
  DihedralElement& at(std::size_t i, std::size_t j) { return cells_.at(i * cols_ + j); }

  std::span<const DihedralElement> cells() const noexcept { return cells_; }

  std::vector<DihedralElement> row(std::size_t i) const {
    return {cells_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            cells_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  // Top to bottom; reverse it for the linear column product.
  std::vector<DihedralElement> column(std::size_t j) const {
    std::vector<DihedralElement> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
    return out;
  }

  bool operator==(const Rectangle&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<DihedralElement> cells_;
};

// k arrays of identical shape over a common D_l. Array order is significant
// for equality and serialization.
class RectangleSet {
 public:
  RectangleSet(GroupOrder l, std::vector<Rectangle> arrays)
      : l_(l), arrays_(std::move(arrays)) {
    if (arrays_.empty()) throw shape_error("a rectangle set needs at least one array");
    const auto m = arrays_.front().rows();
    const auto n = arrays_.front().cols();
    for (std::size_t p = 0; p < arrays_.size(); ++p) {
      const auto& a = arrays_[p];
      if (a.rows() != m || a.cols() != n) {
        throw shape_error("array " + std::to_string(p) + " is " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + ", expected " + std::to_string(m) + "x" +
                          std::to_string(n));
      }
      for (const auto& c : a.cells()) {
        if (!is_canonical(c, l)) {
          throw shape_error("array " + std::to_string(p) + " holds exponent " +
                            std::to_string(c.exponent) + " outside [0, " +
                            std::to_string(l.value()) + ")");
        }
      }
    }
  }

  GroupOrder group() const noexcept { return l_; }
  std::size_t m() const noexcept { return arrays_.front().rows(); }
  std::size_t n() const noexcept { return arrays_.front().cols(); }
  std::size_t k() const noexcept { return arrays_.size(); }

  const Rectangle& array(std::size_t p) const { return arrays_.at(p); }
  const std::vector<Rectangle>& arrays() const noexcept { return arrays_; }

  bool operator==(const RectangleSet&) const = default;

 private:
  GroupOrder l_;
  std::vector<Rectangle> arrays_;
};

struct ProductSpec {
  DihedralElement rho;
  DihedralElement sigma;
  std::optional<DihedralElement> mu;
  std::optional<DihedralElement> delta1;
  std::optional<DihedralElement> delta2;

  bool operator==(const ProductSpec&) const = default;
};

// Array index is 0-based; row and column are 0-based in storage and rendered
// 1-based by describe().
struct CellRef {
  std::size_t array = 0;
  std::size_t row = 0;
  std::size_t col = 0;

  bool operator==(const CellRef&) const = default;
};

inline std::string describe(const CellRef& c) {
  return "array " + std::to_string(c.array) + ", row " + std::to_string(c.row + 1) +
         ", column " + std::to_string(c.col + 1);
}

struct Duplicate {
  DihedralElement element;
  std::vector<CellRef> cells;
};

struct CoverReport {
  std::size_t expected_cells = 0;  // 2l
  std::size_t actual_cells = 0;    // m*n*k
  std::vector<Duplicate> duplicates;
  std::vector<DihedralElement> missing;

  bool dimensions_ok() const noexcept { return expected_cells == actual_cells; }
  bool ok() const noexcept { return dimensions_ok() && duplicates.empty() && missing.empty(); }
};

inline CoverReport validate_cover(const RectangleSet& set) {
  const auto l = set.group();
  CoverReport report;
  report.expected_cells = l.size();
  report.actual_cells = set.m() * set.n() * set.k();

  std::vector<std::vector<CellRef>> seen(l.size());
  for (std::size_t p = 0; p < set.k(); ++p) {
    const auto& a = set.array(p);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) seen[code(a.at(i, j), l)].push_back({p, i, j});
    }
  }
  for (std::size_t c = 0; c < seen.size(); ++c) {
    if (seen[c].empty()) {
      report.missing.push_back(from_code(c, l));
    } else if (seen[c].size() > 1) {
      report.duplicates.push_back({from_code(c, l), seen[c]});
    }
  }
  return report;
}

inline std::string describe(const CoverReport& r) {
  std::ostringstream os;
  if (!r.dimensions_ok()) {
    os << "dimension mismatch: m*n*k = " << r.actual_cells << " but the group has "
       << r.expected_cells << " elements\n";
  }
  for (const auto& d : r.duplicates) {
    os << "duplicate " << format(d.element) << " at";
    for (std::size_t i = 0; i < d.cells.size(); ++i) os << (i ? "; " : " ") << describe(d.cells[i]);
    os << '\n';
  }
  if (!r.missing.empty()) {
    os << "missing";
    for (const auto& e : r.missing) os << ' ' << format(e);
    os << '\n';
  }
  return os.str();
}

// [M^0 | M^1 | ... | M^{k-1}]: array p occupies columns pn .. (p+1)n-1.
inline RectangleSet concat_horizontal(const RectangleSet& set) {
  const auto m = set.m(), n = set.n(), k = set.k();
  Rectangle out(m, n * k);
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) out.at(i, p * n + j) = set.array(p).at(i, j);
    }
  }
  return RectangleSet(set.group(), {std::move(out)});
}

// Arrays stacked top to bottom: array p occupies rows pm .. (p+1)m-1.
inline RectangleSet concat_vertical(const RectangleSet& set) {
  const auto m = set.m(), n = set.n(), k = set.k();
  Rectangle out(m * k, n);
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) out.at(p * m + i, j) = set.array(p).at(i, j);
    }
  }
  return RectangleSet(set.group(), {std::move(out)});
}

// One block per array, cells padded to a common width, blank line between
// arrays.
inline std::string render_text(const RectangleSet& set) {
  std::size_t width = 0;
  for (const auto& a : set.arrays()) {
    for (const auto& c : a.cells()) width = std::max(width, format(c).size());
  }
  std::ostringstream os;
  for (std::size_t p = 0; p < set.k(); ++p) {
    if (p) os << '\n';
    const auto& a = set.array(p);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      std::string line;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        auto tok = format(a.at(i, j));
        if (j + 1 < a.cols()) tok.resize(width, ' ');
        if (j) line += ' ';
        line += tok;
      }
      os << line << '\n';
    }
  }
  return os.str();
}

}  // namespace magrect
