#pragma once

// Reference implementations used only by the tests. None of them share code
// paths with the library beyond the element type.

#include <magrect/designs.hpp>
#include <magrect/dihedral.hpp>

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <set>
#include <vector>

namespace magrect {

// readable gtest failure messages
inline void PrintTo(const DihedralElement& x, std::ostream* os) { *os << format(x); }

}  // namespace magrect

namespace magrect::oracle {

// D_l as affine maps v -> sign*v + shift on Z_l; r^i is (+1, i), r^i s is
// (-1, i). Composition (a*b)(v) = a(b(v)).
struct Affine {
  int sign;
  std::int64_t shift;
};

inline Affine to_affine(DihedralElement a) { return {a.is_reflection ? -1 : 1, a.exponent}; }

inline DihedralElement from_affine(Affine f, std::int64_t l) {
  const std::int64_t s = ((f.shift % l) + l) % l;
  return {f.sign < 0, static_cast<std::uint32_t>(s)};
}

inline DihedralElement compose(DihedralElement a, DihedralElement b, std::int64_t l) {
  const auto fa = to_affine(a), fb = to_affine(b);
  return from_affine({fa.sign * fb.sign, fa.sign * fb.shift + fa.shift}, l);
}

inline DihedralElement word(const std::vector<DihedralElement>& xs, std::int64_t l) {
  DihedralElement acc{};
  for (const auto& x : xs) acc = compose(acc, x, l);
  return acc;
}

// Every permutation, evaluated from scratch.
inline std::set<DihedralElement> all_orderings(std::vector<DihedralElement> xs, std::int64_t l) {
  std::set<DihedralElement> out;
  std::sort(xs.begin(), xs.end());
  do {
    out.insert(word(xs, l));
  } while (std::next_permutation(xs.begin(), xs.end()));
  return out;
}

inline bool rows_cols_ok(const RectangleSet& set, bool linear) {
  const auto l = static_cast<std::int64_t>(set.group().value());
  std::set<DihedralElement> rho, sigma;
  bool first_row = true, first_col = true;
  auto meet = [](std::set<DihedralElement>& acc, const std::set<DihedralElement>& s, bool& first) {
    if (first) {
      acc = s;
      first = false;
      return;
    }
    std::set<DihedralElement> keep;
    for (const auto& x : acc) {
      if (s.count(x)) keep.insert(x);
    }
    acc.swap(keep);
  };
  for (const auto& a : set.arrays()) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      auto row = a.row(i);
      meet(rho, linear ? std::set<DihedralElement>{word(row, l)} : all_orderings(row, l), first_row);
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      auto col = a.column(j);
      std::reverse(col.begin(), col.end());
      meet(sigma, linear ? std::set<DihedralElement>{word(col, l)} : all_orderings(col, l), first_col);
    }
  }
  return !rho.empty() && !sigma.empty();
}

// Tries every assignment of the 2l elements to the m*n*k cells.
inline std::uint64_t naive_count(std::uint64_t l, std::size_t m, std::size_t n, std::size_t k, bool linear) {
  const GroupOrder g(static_cast<std::int64_t>(l));
  auto elems = enumerate(g);
  std::uint64_t count = 0;
  do {
    std::vector<Rectangle> arrays;
    for (std::size_t p = 0; p < k; ++p) {
      std::vector<DihedralElement> cells(elems.begin() + static_cast<std::ptrdiff_t>(p * m * n),
                                         elems.begin() + static_cast<std::ptrdiff_t>((p + 1) * m * n));
      arrays.emplace_back(m, n, std::move(cells));
    }
    if (rows_cols_ok(RectangleSet(g, std::move(arrays)), linear)) ++count;
  } while (std::next_permutation(elems.begin(), elems.end()));
  return count;
}

}  // namespace magrect::oracle
