#pragma once

// Explicit constructions of magic rectangle sets and magic squares over
// dihedral groups, all built from 2x2 blocks whose row, column and diagonal
// products are uniform constants.
//
//   lemma_block(p)   [ r^(2p+1)    r^(-2p) s ]   rows -> rs, columns (up) -> s
//                    [ r^(2p+1) s  r^(2p)    ]
//
// lmrs_2_2 uses all l blocks in D_{2l}; lmrs_even tiles them m/2 x n/2 per
// array; lsms is the square case; ms uses the ms_block family instead.

#include <magrect/designs.hpp>
#include <magrect/dihedral.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace magrect {

class construction_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Block p of the 2 x 2 family in D_{2l} (exponents reduced mod 2l).
inline Rectangle lemma_block(std::uint64_t p, std::uint64_t l) {
  if (l < 1) throw construction_error("lemma_block needs l >= 1");
  if (p >= l) {
    throw construction_error("block index " + std::to_string(p) + " out of range [0, " +
                             std::to_string(l) + ")");
  }
  const GroupOrder g(static_cast<std::int64_t>(2 * l));
  const auto q = static_cast<std::int64_t>(p);
  return Rectangle(2, 2,
                   {rotation(2 * q + 1, g), reflection(-2 * q, g),
                    reflection(2 * q + 1, g), rotation(2 * q, g)});
}

// k = l arrays of size 2 x 2 over D_{2l}: row product rs, column product s.
inline RectangleSet lmrs_2_2(std::uint64_t l) {
  if (l <= 1) throw construction_error("lmrs_2_2 needs l > 1, got " + std::to_string(l));
  std::vector<Rectangle> arrays;
  arrays.reserve(l);
  for (std::uint64_t p = 0; p < l; ++p) arrays.push_back(lemma_block(p, l));
  return RectangleSet(GroupOrder(static_cast<std::int64_t>(2 * l)), std::move(arrays));
}

// Block rows x block cols grid of block indices, one per array.
struct BlockGrid {
  std::size_t block_rows = 0;
  std::size_t block_cols = 0;
  std::vector<std::uint64_t> assignment;  // row-major

  std::uint64_t at(std::size_t bi, std::size_t bj) const { return assignment.at(bi * block_cols + bj); }
};

namespace detail {

// Writes 2x2 blocks into an (2*grid.block_rows) x (2*grid.block_cols) array.
template <typename BlockFn>
Rectangle assemble(const BlockGrid& grid, BlockFn&& block) {
  Rectangle out(2 * grid.block_rows, 2 * grid.block_cols);
  for (std::size_t bi = 0; bi < grid.block_rows; ++bi) {
    for (std::size_t bj = 0; bj < grid.block_cols; ++bj) {
      const Rectangle b = block(grid.at(bi, bj));
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) out.at(2 * bi + i, 2 * bj + j) = b.at(i, j);
      }
    }
  }
  return out;
}

inline BlockGrid row_major_grid(std::size_t rows, std::size_t cols, std::uint64_t first) {
  BlockGrid g{rows, cols, std::vector<std::uint64_t>(rows * cols)};
  std::iota(g.assignment.begin(), g.assignment.end(), first);
  return g;
}

}  // namespace detail

// Array u holds blocks u*m'n' .. (u+1)*m'n'-1 row-major in an m' x n' grid,
// m' = m/2, n' = n/2. Group D_{2l} with 4l = mnk; row product (rs)^(n/2),
// column product s^(m/2).
inline RectangleSet lmrs_even(std::size_t m, std::size_t n, std::size_t k) {
  if (m == 0 || n == 0 || k == 0) throw construction_error("lmrs_even needs positive m, n, k");
  if (m % 2 || n % 2) {
    throw construction_error("lmrs_even needs even m and n, got m=" + std::to_string(m) +
                             ", n=" + std::to_string(n));
  }
  const std::uint64_t total = std::uint64_t{m} * n * k;
  if (total <= 4) throw construction_error("lmrs_even needs mnk > 4 (l > 1)");
  const std::uint64_t l = total / 4;
  const std::size_t bm = m / 2, bn = n / 2;
  std::vector<Rectangle> arrays;
  arrays.reserve(k);
  for (std::size_t u = 0; u < k; ++u) {
    const auto grid = detail::row_major_grid(bm, bn, std::uint64_t{u} * bm * bn);
    arrays.push_back(detail::assemble(grid, [l](std::uint64_t p) { return lemma_block(p, l); }));
  }
  return RectangleSet(GroupOrder(static_cast<std::int64_t>(2 * l)), std::move(arrays));
}

// Block indices for the two diagonals of the 8k x 8k square: A on the main
// diagonal, B = A + 8k^2 on the backward diagonal.
struct DiagonalPlan {
  std::uint64_t k_param = 0;
  std::vector<std::uint64_t> a;
  std::vector<std::uint64_t> b;
};

inline DiagonalPlan plan_from(std::uint64_t k, std::vector<std::uint64_t> a) {
  const std::uint64_t shift = 8 * k * k;
  std::vector<std::uint64_t> b;
  b.reserve(a.size());
  for (auto x : a) b.push_back(x + shift);
  return {k, std::move(a), std::move(b)};
}

// A = {0,2,6,7} for k = 1, otherwise
// A = [1, 8k^2-1, 2, 8k^2-2, ..., 2k-1, 8k^2-(2k-1), 0, 8k^2-k] verbatim.
// For k >= 2 the last entry repeats 8k^2-k from the pair list; check_plan
// reports it.
inline DiagonalPlan diagonal_plan(std::uint64_t k) {
  if (k == 0) throw construction_error("diagonal_plan needs k >= 1");
  if (k == 1) return plan_from(1, {0, 2, 6, 7});
  const std::uint64_t sq = 8 * k * k;
  std::vector<std::uint64_t> a;
  a.reserve(4 * k);
  for (std::uint64_t i = 1; i <= 2 * k - 1; ++i) {
    a.push_back(i);
    a.push_back(sq - i);
  }
  a.push_back(0);
  a.push_back(sq - k);
  return plan_from(k, std::move(a));
}

struct PlanCheck {
  bool size_ok = false;      // |A| = |B| = 4k
  bool range_ok = false;     // A in [0, 8k^2), B in [8k^2, 16k^2)
  bool sum_ok = false;       // sum A = sum B = -k (mod 8k^2)
  bool disjoint_ok = false;  // A and B share nothing
  std::vector<std::uint64_t> duplicates;

  bool ok() const noexcept { return size_ok && range_ok && sum_ok && disjoint_ok && duplicates.empty(); }
};

inline PlanCheck check_plan(const DiagonalPlan& plan) {
  PlanCheck c;
  const std::uint64_t k = plan.k_param;
  const std::uint64_t sq = 8 * k * k;
  c.size_ok = plan.a.size() == 4 * k && plan.b.size() == 4 * k;
  c.range_ok = std::all_of(plan.a.begin(), plan.a.end(), [&](auto x) { return x < sq; }) &&
               std::all_of(plan.b.begin(), plan.b.end(), [&](auto x) { return x >= sq && x < 2 * sq; });
  auto sum_mod = [sq](const std::vector<std::uint64_t>& v) {
    std::uint64_t s = 0;
    for (auto x : v) s = (s + x) % sq;
    return s;
  };
  const std::uint64_t want = (sq - k % sq) % sq;
  c.sum_ok = sum_mod(plan.a) == want && sum_mod(plan.b) == want;

  auto sorted_a = plan.a, sorted_b = plan.b;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  for (const auto* v : {&sorted_a, &sorted_b}) {
    for (std::size_t i = 1; i < v->size(); ++i) {
      if ((*v)[i] == (*v)[i - 1] &&
          (c.duplicates.empty() || c.duplicates.back() != (*v)[i])) {
        c.duplicates.push_back((*v)[i]);
      }
    }
  }
  std::vector<std::uint64_t> common;
  std::set_intersection(sorted_a.begin(), sorted_a.end(), sorted_b.begin(), sorted_b.end(),
                        std::back_inserter(common));
  c.disjoint_ok = common.empty();
  return c;
}

inline std::string describe(const PlanCheck& c, const DiagonalPlan& plan) {
  std::ostringstream os;
  os << "diagonal plan k=" << plan.k_param << ':';
  if (c.ok()) return os.str() + " ok";
  if (!c.size_ok) os << " wrong size (" << plan.a.size() << " != " << 4 * plan.k_param << ");";
  if (!c.range_ok) os << " index out of range;";
  if (!c.sum_ok) os << " sum is not -k mod 8k^2;";
  if (!c.disjoint_ok) os << " A and B overlap;";
  if (!c.duplicates.empty()) {
    os << " repeated block index";
    for (auto d : c.duplicates) os << ' ' << d;
    os << " (only " << 4 * plan.k_param - c.duplicates.size() << " distinct)";
  }
  return os.str();
}

// Keeps the first 4k-2 entries of the verbatim list and replaces the final
// pair with the first (x, y), x ascending, both unused, x + y = -k mod 8k^2.
inline DiagonalPlan repaired_diagonal_plan(std::uint64_t k) {
  auto plan = diagonal_plan(k);
  if (check_plan(plan).ok()) return plan;
  const std::uint64_t sq = 8 * k * k;
  std::vector<std::uint64_t> a(plan.a.begin(), plan.a.end() - 2);
  std::vector<bool> used(sq, false);
  for (auto x : a) used[x] = true;
  const std::uint64_t target = (sq - k % sq) % sq;
  for (std::uint64_t x = 0; x < sq; ++x) {
    if (used[x]) continue;
    const std::uint64_t y = (target + sq - x) % sq;
    if (y == x || used[y]) continue;
    a.push_back(x);
    a.push_back(y);
    auto fixed = plan_from(k, std::move(a));
    if (check_plan(fixed).ok()) return fixed;
    throw construction_error("diagonal plan repair failed for k=" + std::to_string(k));
  }
  throw construction_error("no repair exists for the diagonal plan with k=" + std::to_string(k));
}

enum class PlanPolicy { strict, repair };

// n x n square over the dihedral group of order n^2 (D_{n^2/2}), n = 0 mod 4.
// Rows and columns multiply linearly to r^0. For n = 8k the blocks of A sit
// on the main block diagonal and those of B on the backward one (list
// order, top to bottom), the rest fill the remaining positions row-major in
// ascending index order, and both diagonals also multiply to r^0.
inline RectangleSet lsms(std::size_t n, PlanPolicy policy = PlanPolicy::strict) {
  if (n < 4 || n % 4) throw construction_error("lsms needs n >= 4 with n = 0 mod 4, got " + std::to_string(n));
  if (n % 8) return lmrs_even(n, n, 1);

  const std::uint64_t k = n / 8;
  auto plan = diagonal_plan(k);
  const auto check = check_plan(plan);
  if (!check.ok()) {
    if (policy == PlanPolicy::strict) {
      throw construction_error(describe(check, plan) + "; use the repair policy to search a valid plan");
    }
    plan = repaired_diagonal_plan(k);
  }

  const std::size_t bn = n / 2;
  const std::uint64_t blocks = std::uint64_t{bn} * bn;
  const std::uint64_t l = blocks;  // group D_{2l}, 2l = n^2/2
  BlockGrid grid{bn, bn, std::vector<std::uint64_t>(blocks, blocks)};
  std::vector<bool> used(blocks, false);
  for (std::size_t i = 0; i < bn; ++i) {
    grid.assignment[i * bn + i] = plan.a[i];
    grid.assignment[i * bn + (bn - 1 - i)] = plan.b[i];
    used[plan.a[i]] = used[plan.b[i]] = true;
  }
  std::uint64_t next = 0;
  for (auto& slot : grid.assignment) {
    if (slot != blocks) continue;
    while (used[next]) ++next;
    slot = next;
    used[next] = true;
  }
  auto square = detail::assemble(grid, [l](std::uint64_t p) { return lemma_block(p, l); });
  return RectangleSet(GroupOrder(static_cast<std::int64_t>(2 * l)), {std::move(square)});
}

// Block index at each position of an lsms(n) square; handy for checking
// which blocks ended up on the diagonals.
inline BlockGrid lsms_layout(std::size_t n, PlanPolicy policy = PlanPolicy::strict) {
  const auto sq = lsms(n, policy);
  const std::size_t bn = n / 2;
  BlockGrid g{bn, bn, std::vector<std::uint64_t>(bn * bn)};
  for (std::size_t bi = 0; bi < bn; ++bi) {
    for (std::size_t bj = 0; bj < bn; ++bj) {
      // The top-left cell r^(2p+1) identifies block p.
      const auto e = sq.array(0).at(2 * bi, 2 * bj).exponent;
      g.assignment[bi * bn + bj] = (e - 1) / 2;
    }
  }
  return g;
}

enum class BlockVariant { low, high };

// Blocks of the 4k x 4k magic square, exponents mod l = 8k^2:
//   low  (p < 2k^2):       [ r^(2p-1) s   r^(-2p)   ]
//                          [ r^(2p-1)     r^(2p) s  ]
//   high (2k^2 <= p < 4k^2): the same two rows swapped.
inline Rectangle ms_block(std::uint64_t p, BlockVariant variant, GroupOrder l) {
  const std::uint64_t blocks = l.value() / 2;
  if (l.value() % 8 || p >= blocks) {
    throw construction_error("ms block index " + std::to_string(p) + " out of range for D_" +
                             std::to_string(l.value()));
  }
  const bool is_low = p < blocks / 2;
  if (is_low != (variant == BlockVariant::low)) {
    throw construction_error("block " + std::to_string(p) + " must use the " +
                             (is_low ? "low" : "high") + " variant");
  }
  const auto q = static_cast<std::int64_t>(p);
  const DihedralElement odd_refl = reflection(2 * q - 1, l), even_rot = rotation(-2 * q, l);
  const DihedralElement odd_rot = rotation(2 * q - 1, l), even_refl = reflection(2 * q, l);
  if (variant == BlockVariant::low) return Rectangle(2, 2, {odd_refl, even_rot, odd_rot, even_refl});
  return Rectangle(2, 2, {odd_rot, even_refl, odd_refl, even_rot});
}

// n = 4k: a 2k x 2k grid of ms blocks, low variants in block rows 0..k-1 and
// high variants below, both row-major. Rows and columns reach r^0 under
// blockwise orderings (not left-to-right); diagonals reach r^0 in the fixed
// diagonal order.
inline RectangleSet ms(std::size_t n) {
  if (n < 4 || n % 4) throw construction_error("ms needs n >= 4 with n = 0 mod 4, got " + std::to_string(n));
  const std::uint64_t k = n / 4;
  const GroupOrder l(static_cast<std::int64_t>(8 * k * k));
  const auto grid = detail::row_major_grid(2 * k, 2 * k, 0);
  const std::uint64_t split = 2 * k * k;
  auto square = detail::assemble(grid, [&](std::uint64_t p) {
    return ms_block(p, p < split ? BlockVariant::low : BlockVariant::high, l);
  });
  return RectangleSet(l, {std::move(square)});
}

}  // namespace magrect
