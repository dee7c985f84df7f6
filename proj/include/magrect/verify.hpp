#pragma once

// Verifiers for (linearly) magic rectangle sets, semi-magic squares and
// magic squares over D_l.
//
// Linear mode fixes the orderings: rows left to right, columns bottom to top
// (row m down to row 1). Orderable mode asks only that each line admit SOME
// ordering reaching the common constant, which is decided exactly by
// achievable_products().

#include <magrect/designs.hpp>
#include <magrect/dihedral.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace magrect {

class capacity_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kDefaultCap = 8;
inline constexpr std::size_t kMaxCap = 24;

enum class Mode { linear, orderable };
enum class DiagonalMode { fixed, orderable };

inline std::string to_string(Mode m) { return m == Mode::linear ? "linear" : "orderable"; }
inline std::string to_string(DiagonalMode m) { return m == DiagonalMode::fixed ? "fixed" : "orderable"; }

// Subset of D_l as a bitmap over element codes.
class ElementSet {
 public:
  explicit ElementSet(GroupOrder l, bool full = false)
      : l_(l), words_((l.size() + 63) / 64, full ? ~std::uint64_t{0} : 0) {
    if (full && l.size() % 64) words_.back() = (std::uint64_t{1} << (l.size() % 64)) - 1;
  }

  void insert(DihedralElement a) { set_code(code(a, l_)); }
  void set_code(std::size_t c) { words_[c / 64] |= std::uint64_t{1} << (c % 64); }
  bool contains(DihedralElement a) const { return has_code(code(a, l_)); }
  bool has_code(std::size_t c) const { return (words_[c / 64] >> (c % 64)) & 1u; }

  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }

  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  // Least canonical element: rotations first, then ascending exponent.
  std::optional<DihedralElement> least() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w]) return from_code(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])), l_);
    }
    return std::nullopt;
  }

  std::vector<DihedralElement> elements() const {
    std::vector<DihedralElement> out;
    for (std::size_t c = 0; c < l_.size(); ++c) {
      if (has_code(c)) out.push_back(from_code(c, l_));
    }
    return out;
  }

  bool operator==(const ElementSet&) const = default;

 private:
  GroupOrder l_;
  std::vector<std::uint64_t> words_;
};

// All products a_{p(1)} ... a_{p(c)} over permutations p of the multiset.
// Forward subset DP: reach[mask] holds the products of orderings of the
// cells in mask, so the work is bounded by 2^c * c * min(c!, 2l).
// Equal cells are consumed in index order only.
inline std::vector<DihedralElement> achievable_products(std::span<const DihedralElement> cells,
                                                        GroupOrder l,
                                                        std::size_t cap = kDefaultCap) {
  const std::size_t c = cells.size();
  if (c > cap || c > kMaxCap) {
    throw capacity_error("line of " + std::to_string(c) + " cells exceeds the orderable cap of " +
                         std::to_string(std::min(cap, kMaxCap)) +
                         "; use linear mode or raise --cap");
  }
  if (c == 0) return {identity(l)};

  // prev_equal[i] = previous index holding the same element, or c.
  std::vector<std::size_t> prev_equal(c, c);
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = i; j-- > 0;) {
      if (cells[j] == cells[i]) {
        prev_equal[i] = j;
        break;
      }
    }
  }

  const std::size_t full = (std::size_t{1} << c) - 1;
  std::vector<std::vector<std::uint32_t>> reach(full + 1);
  reach[0].push_back(static_cast<std::uint32_t>(code(identity(l), l)));
  for (std::size_t mask = 0; mask < full; ++mask) {
    auto& cur = reach[mask];
    if (cur.empty()) continue;
    std::sort(cur.begin(), cur.end());
    cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
    for (std::size_t i = 0; i < c; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      if (mask & bit) continue;
      if (prev_equal[i] != c && !(mask & (std::size_t{1} << prev_equal[i]))) continue;
      auto& next = reach[mask | bit];
      for (auto pc : cur) {
        next.push_back(static_cast<std::uint32_t>(code(multiply(from_code(pc, l), cells[i], l), l)));
      }
    }
    if (mask != 0) std::vector<std::uint32_t>().swap(cur);
  }
  auto& last = reach[full];
  std::sort(last.begin(), last.end());
  last.erase(std::unique(last.begin(), last.end()), last.end());
  std::vector<DihedralElement> out;
  out.reserve(last.size());
  for (auto pc : last) out.push_back(from_code(pc, l));
  return out;
}

inline ElementSet to_set(std::span<const DihedralElement> xs, GroupOrder l) {
  ElementSet s(l);
  for (const auto& x : xs) s.insert(x);
  return s;
}

enum class LineKind { row, column, main_diagonal, anti_diagonal, cover, constant };

inline std::string to_string(LineKind k) {
  switch (k) {
    case LineKind::row: return "row";
    case LineKind::column: return "column";
    case LineKind::main_diagonal: return "main_diagonal";
    case LineKind::anti_diagonal: return "anti_diagonal";
    case LineKind::cover: return "cover";
    case LineKind::constant: return "constant";
  }
  return "?";
}

struct LineFailure {
  std::size_t array = 0;
  LineKind kind = LineKind::row;
  std::size_t index = 0;  // 0-based row/column; unused for diagonals
  std::vector<DihedralElement> achieved;
  std::string note;
};

struct VerificationReport {
  Mode mode = Mode::linear;
  std::optional<DihedralElement> rho;
  std::optional<DihedralElement> sigma;
  std::optional<DihedralElement> mu;
  std::optional<DihedralElement> delta1;
  std::optional<DihedralElement> delta2;
  std::vector<LineFailure> failures;

  bool pass() const noexcept { return failures.empty(); }

  std::optional<ProductSpec> witnessed() const {
    if (!pass() || !rho || !sigma) return std::nullopt;
    return ProductSpec{*rho, *sigma, mu, delta1, delta2};
  }
};

namespace detail {

inline std::vector<DihedralElement> reversed(std::vector<DihedralElement> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

inline void add_cover_failure(const RectangleSet& set, VerificationReport& r) {
  const auto cover = validate_cover(set);
  if (cover.ok()) return;
  LineFailure f;
  f.kind = LineKind::cover;
  for (const auto& d : cover.duplicates) f.achieved.push_back(d.element);
  f.note = describe(cover);
  r.failures.push_back(std::move(f));
}

struct OrderableSets {
  ElementSet rows;
  ElementSet cols;
};

// Intersects achievable sets line by line; reports the line where the
// running intersection first becomes empty.
inline OrderableSets orderable_core(const RectangleSet& set, std::size_t cap,
                                    VerificationReport& r) {
  const auto l = set.group();
  if (std::max(set.m(), set.n()) > cap) {
    throw capacity_error("lines of length " + std::to_string(std::max(set.m(), set.n())) +
                         " exceed the orderable cap of " + std::to_string(cap) +
                         "; use linear mode or raise --cap");
  }
  OrderableSets s{ElementSet(l, true), ElementSet(l, true)};
  bool rows_dead = false, cols_dead = false;
  for (std::size_t p = 0; p < set.k(); ++p) {
    const auto& a = set.array(p);
    for (std::size_t i = 0; i < a.rows() && !rows_dead; ++i) {
      auto ach = achievable_products(a.row(i), l, cap);
      s.rows &= to_set(ach, l);
      if (s.rows.empty()) {
        rows_dead = true;
        r.failures.push_back({p, LineKind::row, i, std::move(ach), "no row product common to all rows"});
      }
    }
    for (std::size_t j = 0; j < a.cols() && !cols_dead; ++j) {
      auto ach = achievable_products(a.column(j), l, cap);
      s.cols &= to_set(ach, l);
      if (s.cols.empty()) {
        cols_dead = true;
        r.failures.push_back(
            {p, LineKind::column, j, std::move(ach), "no column product common to all columns"});
      }
    }
  }
  r.rho = s.rows.least();
  r.sigma = s.cols.least();
  return s;
}

inline void require_square(const RectangleSet& set) {
  if (set.k() != 1) throw shape_error("square verification needs k = 1, got k = " + std::to_string(set.k()));
  if (set.m() != set.n()) {
    throw shape_error("square verification needs m = n, got " + std::to_string(set.m()) + "x" +
                      std::to_string(set.n()));
  }
  // Other size mismatches surface as cover failures.
  if (set.m() < 2) throw shape_error("a 1x1 square cannot hold a dihedral group (order >= 2)");
}

}  // namespace detail

inline VerificationReport verify_linear(const RectangleSet& set) {
  const auto l = set.group();
  VerificationReport r;
  r.mode = Mode::linear;
  detail::add_cover_failure(set, r);

  const auto& first = set.array(0);
  const auto rho = product_of_sequence(first.row(0), l);
  const auto sigma = product_of_sequence(detail::reversed(first.column(0)), l);
  r.rho = rho;
  r.sigma = sigma;
  for (std::size_t p = 0; p < set.k(); ++p) {
    const auto& a = set.array(p);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const auto got = product_of_sequence(a.row(i), l);
      if (got != rho) r.failures.push_back({p, LineKind::row, i, {got}, "row product differs from rho"});
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto got = product_of_sequence(detail::reversed(a.column(j)), l);
      if (got != sigma) {
        r.failures.push_back({p, LineKind::column, j, {got}, "column product differs from sigma"});
      }
    }
  }
  return r;
}

inline VerificationReport verify_orderable(const RectangleSet& set, std::size_t cap = kDefaultCap) {
  VerificationReport r;
  r.mode = Mode::orderable;
  detail::add_cover_failure(set, r);
  detail::orderable_core(set, cap, r);
  return r;
}

namespace detail {

// Candidate set for the common constant of a square; empty on failure.
inline ElementSet square_core(const RectangleSet& set, Mode mode, std::size_t cap,
                              VerificationReport& r) {
  const auto l = set.group();
  ElementSet candidates(l);
  if (mode == Mode::linear) {
    r = verify_linear(set);
    if (r.rho == r.sigma) {
      candidates.insert(*r.rho);
    } else {
      r.failures.push_back({0, LineKind::constant, 0, {*r.rho, *r.sigma}, "rho differs from sigma"});
    }
  } else {
    r = VerificationReport{};
    r.mode = Mode::orderable;
    add_cover_failure(set, r);
    auto s = orderable_core(set, cap, r);
    candidates = s.rows;
    candidates &= s.cols;
    if (!s.rows.empty() && !s.cols.empty() && candidates.empty()) {
      r.failures.push_back({0, LineKind::constant, 0, {}, "no element is both a row and a column product"});
    }
  }
  return candidates;
}

}  // namespace detail

inline VerificationReport verify_semi_magic_square(const RectangleSet& set, Mode mode = Mode::linear,
                                                   std::size_t cap = kDefaultCap) {
  detail::require_square(set);
  VerificationReport r;
  const auto candidates = detail::square_core(set, mode, cap, r);
  r.mu = candidates.least();
  if (r.mu) r.rho = r.sigma = r.mu;
  return r;
}

// Main diagonal read bottom-right to top-left (a_nn ... a_11), matching the
// column direction; backward diagonal read top-right to bottom-left.
inline std::vector<DihedralElement> main_diagonal(const Rectangle& a) {
  std::vector<DihedralElement> out;
  for (std::size_t i = a.rows(); i-- > 0;) out.push_back(a.at(i, i));
  return out;
}

inline std::vector<DihedralElement> anti_diagonal(const Rectangle& a) {
  std::vector<DihedralElement> out;
  for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(a.at(i, a.cols() - 1 - i));
  return out;
}

inline VerificationReport verify_magic_square(const RectangleSet& set,
                                              DiagonalMode diagonal_mode = DiagonalMode::fixed,
                                              Mode mode = Mode::linear,
                                              std::size_t cap = kDefaultCap) {
  detail::require_square(set);
  const auto l = set.group();
  VerificationReport r;
  auto candidates = detail::square_core(set, mode, cap, r);

  const auto& a = set.array(0);
  const auto main = main_diagonal(a);
  const auto anti = anti_diagonal(a);
  std::vector<DihedralElement> main_ach, anti_ach;
  if (diagonal_mode == DiagonalMode::fixed) {
    main_ach = {product_of_sequence(main, l)};
    anti_ach = {product_of_sequence(anti, l)};
    r.delta1 = main_ach.front();
    r.delta2 = anti_ach.front();
  } else {
    main_ach = achievable_products(main, l, cap);
    anti_ach = achievable_products(anti, l, cap);
  }

  const bool constant_ok = !candidates.empty();
  auto with_main = candidates;
  with_main &= to_set(main_ach, l);
  auto with_anti = candidates;
  with_anti &= to_set(anti_ach, l);
  if (constant_ok && with_main.empty()) {
    r.failures.push_back({0, LineKind::main_diagonal, 0, main_ach, "main diagonal misses the magic constant"});
  }
  if (constant_ok && with_anti.empty()) {
    r.failures.push_back(
        {0, LineKind::anti_diagonal, 0, anti_ach, "backward diagonal misses the magic constant"});
  }
  candidates &= to_set(main_ach, l);
  candidates &= to_set(anti_ach, l);
  r.mu = candidates.least();
  if (r.mu) {
    r.rho = r.sigma = r.mu;
    if (diagonal_mode == DiagonalMode::orderable) r.delta1 = r.delta2 = r.mu;
  }
  return r;
}

inline std::string render_text(const VerificationReport& r) {
  std::ostringstream os;
  auto opt = [](const std::optional<DihedralElement>& e) { return e ? format(*e) : std::string("-"); };
  os << "verdict: " << (r.pass() ? "pass" : "fail") << " (" << to_string(r.mode) << ")\n";
  os << "rho:     " << opt(r.rho) << '\n';
  os << "sigma:   " << opt(r.sigma) << '\n';
  if (r.mu) os << "mu:      " << opt(r.mu) << '\n';
  if (r.delta1) os << "delta1:  " << opt(r.delta1) << '\n';
  if (r.delta2) os << "delta2:  " << opt(r.delta2) << '\n';
  for (const auto& f : r.failures) {
    os << "FAIL " << to_string(f.kind);
    if (f.kind == LineKind::row || f.kind == LineKind::column) {
      os << " array " << f.array << ' ' << to_string(f.kind) << ' ' << f.index + 1;
    }
    if (!f.achieved.empty()) {
      os << " got";
      for (const auto& e : f.achieved) os << ' ' << format(e);
    }
    os << ": " << f.note;
    if (f.note.empty() || f.note.back() != '\n') os << '\n';
  }
  return os.str();
}

}  // namespace magrect
