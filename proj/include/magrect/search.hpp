#pragma once

// Exhaustive backtracking over all placements of D_l into k arrays of size
// m x n. Independent of the constructions; used to confirm existence and
// certify nonexistence at small orders.
//
// Cells are filled array by array, row-major, so every row and column is
// checked the moment its last cell is placed.

#include <magrect/designs.hpp>
#include <magrect/dihedral.hpp>
#include <magrect/verify.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace magrect {

inline constexpr std::size_t kDefaultSearchCap = 16;
inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000;

struct SearchConfig {
  Mode mode = Mode::linear;
  std::uint64_t l = 0;
  std::uint64_t m = 0, n = 0, k = 0;
  std::uint64_t node_budget = kDefaultNodeBudget;
  bool symmetry_reduction = true;
  bool count_all = false;
  std::size_t hard_cap = kDefaultSearchCap;  // max group size 2l
};

enum class SearchResult { found, exhausted_none, budget_exceeded };

inline std::string to_string(SearchResult r) {
  switch (r) {
    case SearchResult::found: return "found";
    case SearchResult::exhausted_none: return "exhausted_none";
    case SearchResult::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

struct SearchOutcome {
  SearchResult result = SearchResult::exhausted_none;
  std::optional<RectangleSet> set;  // first solution in search order
  std::uint64_t nodes_visited = 0;
  std::optional<std::uint64_t> solutions_count;
};

namespace detail {

class Searcher {
 public:
  explicit Searcher(const SearchConfig& cfg)
      : cfg_(cfg), group_(static_cast<std::int64_t>(cfg.l)), cells_(2 * cfg.l), grid_(cells_, 0) {
    full_ = cells_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cells_) - 1;
    refl_mask_ = full_ & ~((std::uint64_t{1} << cfg.l) - 1);
  }

  SearchOutcome run() {
    place(0, full_, full_, kNone, kNone);
    SearchOutcome out;
    out.nodes_visited = nodes_;
    out.set = std::move(first_);
    if (aborted_) {
      out.result = SearchResult::budget_exceeded;
    } else {
      out.result = solutions_ > 0 ? SearchResult::found : SearchResult::exhausted_none;
      if (cfg_.count_all) out.solutions_count = solutions_;
    }
    return out;
  }

 private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  std::size_t index(std::size_t p, std::size_t i, std::size_t j) const {
    return (p * cfg_.m + i) * cfg_.n + j;
  }

  DihedralElement at(std::size_t c) const { return from_code(grid_[c], group_); }

  std::uint64_t achievable_mask(std::uint64_t line) {
    if (auto it = cache_.find(line); it != cache_.end()) return it->second;
    std::vector<DihedralElement> xs;
    for (auto rest = line; rest; rest &= rest - 1) {
      xs.push_back(from_code(static_cast<std::size_t>(std::countr_zero(rest)), group_));
    }
    std::uint64_t mask = 0;
    for (const auto& e : achievable_products(xs, group_, kMaxCap)) mask |= std::uint64_t{1} << code(e, group_);
    cache_.emplace(line, mask);
    return mask;
  }

  // Orderable check: narrows the candidate constants by this line.
  bool narrow(std::uint64_t line, std::uint64_t& candidates) {
    if (candidates != full_) {
      const bool odd = std::popcount(line & refl_mask_) % 2 == 1;
      const bool want_odd = (candidates & refl_mask_) != 0;
      if (odd != want_odd) return false;
    }
    candidates &= achievable_mask(line);
    return candidates != 0;
  }

  // Linear check: line product must match the first completed line.
  static bool match(std::uint32_t got, std::uint32_t& ref) {
    if (ref == kNone) {
      ref = got;
      return true;
    }
    return got == ref;
  }

  bool row_ok(std::size_t p, std::size_t i, std::uint64_t& rho_cand, std::uint32_t& rho_ref) {
    if (cfg_.mode == Mode::orderable) {
      std::uint64_t line = 0;
      for (std::size_t j = 0; j < cfg_.n; ++j) line |= std::uint64_t{1} << grid_[index(p, i, j)];
      return narrow(line, rho_cand);
    }
    DihedralElement acc = identity(group_);
    for (std::size_t j = 0; j < cfg_.n; ++j) acc = multiply(acc, at(index(p, i, j)), group_);
    return match(static_cast<std::uint32_t>(code(acc, group_)), rho_ref);
  }

  bool col_ok(std::size_t p, std::size_t j, std::uint64_t& sigma_cand, std::uint32_t& sigma_ref) {
    if (cfg_.mode == Mode::orderable) {
      std::uint64_t line = 0;
      for (std::size_t i = 0; i < cfg_.m; ++i) line |= std::uint64_t{1} << grid_[index(p, i, j)];
      return narrow(line, sigma_cand);
    }
    DihedralElement acc = identity(group_);
    for (std::size_t i = cfg_.m; i-- > 0;) acc = multiply(acc, at(index(p, i, j)), group_);
    return match(static_cast<std::uint32_t>(code(acc, group_)), sigma_ref);
  }

  // Returns true when the search should stop.
  bool place(std::size_t c, std::uint64_t rho_cand, std::uint64_t sigma_cand, std::uint32_t rho_ref,
             std::uint32_t sigma_ref) {
    if (c == cells_) {
      ++solutions_;
      if (!first_) first_ = build();
      return !cfg_.count_all;
    }
    const std::size_t per = cfg_.m * cfg_.n;
    const std::size_t p = c / per, i = (c % per) / cfg_.n, j = c % cfg_.n;

    for (std::uint64_t free = full_ & ~used_; free; free &= free - 1) {
      const auto x = static_cast<std::uint32_t>(std::countr_zero(free));
      if (cfg_.symmetry_reduction) {
        // Row, column and array permutations act transitively on cells, so
        // the identity may be pinned to cell 0; in linear mode only array
        // permutations apply, so it may be kept in array 0.
        if (cfg_.mode == Mode::orderable && c == 0 && x != 0) break;
        if (cfg_.mode == Mode::linear && x == 0 && p != 0) continue;
      }
      if (++nodes_ > cfg_.node_budget) {
        aborted_ = true;
        return true;
      }
      grid_[c] = x;
      used_ |= std::uint64_t{1} << x;

      auto rc = rho_cand, sc = sigma_cand;
      auto rr = rho_ref, sr = sigma_ref;
      bool ok = true;
      if (j + 1 == cfg_.n) ok = row_ok(p, i, rc, rr);
      if (ok && i + 1 == cfg_.m) ok = col_ok(p, j, sc, sr);
      const bool stop = ok && place(c + 1, rc, sc, rr, sr);

      used_ &= ~(std::uint64_t{1} << x);
      if (stop) return true;
    }
    return false;
  }

  RectangleSet build() const {
    std::vector<Rectangle> arrays;
    for (std::size_t p = 0; p < cfg_.k; ++p) {
      Rectangle a(cfg_.m, cfg_.n);
      for (std::size_t i = 0; i < cfg_.m; ++i) {
        for (std::size_t j = 0; j < cfg_.n; ++j) a.at(i, j) = at(index(p, i, j));
      }
      arrays.push_back(std::move(a));
    }
    return RectangleSet(group_, std::move(arrays));
  }

  SearchConfig cfg_;
  GroupOrder group_;
  std::size_t cells_;
  std::vector<std::uint32_t> grid_;
  std::uint64_t full_ = 0;
  std::uint64_t refl_mask_ = 0;
  std::uint64_t used_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t solutions_ = 0;
  bool aborted_ = false;
  std::optional<RectangleSet> first_;
  std::unordered_map<std::uint64_t, std::uint64_t> cache_;
};

}  // namespace detail

inline void validate(const SearchConfig& cfg) {
  if (cfg.l == 0 || cfg.m == 0 || cfg.n == 0 || cfg.k == 0) {
    throw std::invalid_argument("search needs positive l, m, n, k");
  }
  if (cfg.m * cfg.n * cfg.k != 2 * cfg.l) {
    throw std::invalid_argument("mnk = " + std::to_string(cfg.m * cfg.n * cfg.k) + " must equal 2l = " +
                                std::to_string(2 * cfg.l));
  }
  if (cfg.hard_cap > 64) throw std::invalid_argument("search hard cap cannot exceed 64 elements");
  if (2 * cfg.l > cfg.hard_cap) {
    throw capacity_error("group of order " + std::to_string(2 * cfg.l) + " exceeds the search cap of " +
                         std::to_string(cfg.hard_cap));
  }
  if (cfg.mode == Mode::orderable && std::max(cfg.m, cfg.n) > kMaxCap) {
    throw capacity_error("orderable lines longer than " + std::to_string(kMaxCap) + " are not supported");
  }
  if (cfg.node_budget == 0) throw std::invalid_argument("node budget must be positive");
}

inline SearchOutcome exhaustive_search(const SearchConfig& cfg) {
  validate(cfg);
  return detail::Searcher(cfg).run();
}

// Number of solutions (symmetry-reduced when enabled). Throws capacity_error
// when the budget runs out, since a partial count is not an answer.
inline std::uint64_t count_solutions(SearchConfig cfg) {
  cfg.count_all = true;
  const auto out = exhaustive_search(cfg);
  if (out.result == SearchResult::budget_exceeded) {
    throw capacity_error("node budget of " + std::to_string(cfg.node_budget) + " exceeded after " +
                         std::to_string(out.nodes_visited) + " nodes");
  }
  return *out.solutions_count;
}

}  // namespace magrect
