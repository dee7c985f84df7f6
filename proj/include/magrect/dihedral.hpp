#pragma once

// Exact arithmetic in the dihedral group D_l of order 2l.
//
// Elements are r^i (rotations) and r^i s (reflections) with the exponent kept
// reduced to [0, l). Multiplication follows r^i s = s r^-i:
//
//   r^a     * r^b     = r^(a+b)
//   r^a     * r^b s   = r^(a+b) s
//   r^a s   * r^b     = r^(a-b) s
//   r^a s   * r^b s   = r^(a-b)

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace magrect {

class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint32_t kMaxGroupOrder = 10'000'000;

// The parameter l of D_l. The group has 2l elements.
class GroupOrder {
 public:
  constexpr explicit GroupOrder(std::int64_t l) : l_(check(l)) {}

  constexpr std::uint32_t value() const noexcept { return l_; }
  constexpr std::size_t size() const noexcept { return 2 * std::size_t{l_}; }

  constexpr auto operator<=>(const GroupOrder&) const = default;

 private:
  static constexpr std::uint32_t check(std::int64_t l) {
    if (l < 1 || l > kMaxGroupOrder) {
      throw std::out_of_range("group order l must be in [1, " +
                              std::to_string(kMaxGroupOrder) + "], got " +
                              std::to_string(l));
    }
    return static_cast<std::uint32_t>(l);
  }

  std::uint32_t l_;
};

struct DihedralElement {
  bool is_reflection = false;
  std::uint32_t exponent = 0;

  // Rotations before reflections, then ascending exponent; this is also the
  // enumeration order.
  constexpr auto operator<=>(const DihedralElement&) const = default;
};

constexpr std::uint32_t reduce(std::int64_t e, GroupOrder l) noexcept {
  const std::int64_t m = l.value();
  const std::int64_t r = e % m;
  return static_cast<std::uint32_t>(r < 0 ? r + m : r);
}

constexpr DihedralElement rotation(std::int64_t e, GroupOrder l) noexcept {
  return {false, reduce(e, l)};
}

constexpr DihedralElement reflection(std::int64_t e, GroupOrder l) noexcept {
  return {true, reduce(e, l)};
}

constexpr DihedralElement identity(GroupOrder) noexcept { return {}; }

constexpr bool is_canonical(DihedralElement a, GroupOrder l) noexcept {
  return a.exponent < l.value();
}

constexpr DihedralElement multiply(DihedralElement a, DihedralElement b,
                                   GroupOrder l) noexcept {
  const std::int64_t ea = a.exponent;
  const std::int64_t eb = b.exponent;
  if (!a.is_reflection) return {b.is_reflection, reduce(ea + eb, l)};
  return {!b.is_reflection, reduce(ea - eb, l)};
}

constexpr DihedralElement inverse(DihedralElement a, GroupOrder l) noexcept {
  if (a.is_reflection) return a;
  return rotation(-std::int64_t{a.exponent}, l);
}

constexpr DihedralElement power(DihedralElement a, std::uint64_t t,
                                GroupOrder l) noexcept {
  if (a.is_reflection) return (t % 2 == 0) ? identity(l) : a;
  const std::uint64_t e = (std::uint64_t{a.exponent} * (t % l.value())) % l.value();
  return {false, static_cast<std::uint32_t>(e)};
}

// Dense index in [0, 2l): rotations first, then reflections.
constexpr std::size_t code(DihedralElement a, GroupOrder l) noexcept {
  return (a.is_reflection ? l.value() : 0u) + a.exponent;
}

constexpr DihedralElement from_code(std::size_t c, GroupOrder l) noexcept {
  const bool refl = c >= l.value();
  return {refl, static_cast<std::uint32_t>(refl ? c - l.value() : c)};
}

inline std::vector<DihedralElement> enumerate(GroupOrder l) {
  std::vector<DihedralElement> out;
  out.reserve(l.size());
  for (std::size_t c = 0; c < l.size(); ++c) out.push_back(from_code(c, l));
  return out;
}

constexpr DihedralElement product_of_sequence(std::span<const DihedralElement> seq,
                                              GroupOrder l) noexcept {
  DihedralElement acc = identity(l);
  for (const auto& x : seq) acc = multiply(acc, x, l);
  return acc;
}

inline std::string format(DihedralElement a) {
  std::string out = "r^" + std::to_string(a.exponent);
  if (a.is_reflection) out += "*s";
  return out;
}

// Grammar: r^<int> | r^<int>*s, plus the aliases e, r, s, rs.
// Exponents may be negative or exceed l; they are reduced mod l.
inline DihedralElement parse(std::string_view token, GroupOrder l) {
  auto fail = [&]() -> parse_error {
    return parse_error("malformed element token '" + std::string(token) + "'");
  };
  std::string_view t = token;
  while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.remove_prefix(1);
  while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.remove_suffix(1);

  if (t == "e") return identity(l);
  if (t == "r") return rotation(1, l);
  if (t == "s") return reflection(0, l);
  if (t == "rs") return reflection(1, l);

  if (t.size() < 3 || t.substr(0, 2) != "r^") throw fail();
  t.remove_prefix(2);
  bool refl = false;
  if (t.size() >= 2 && t.substr(t.size() - 2) == "*s") {
    refl = true;
    t.remove_suffix(2);
  }
  bool negative = false;
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
    negative = t.front() == '-';
    t.remove_prefix(1);
  }
  if (t.empty() || t.size() > 18) throw fail();
  std::int64_t value = 0;
  for (char ch : t) {
    if (ch < '0' || ch > '9') throw fail();
    value = value * 10 + (ch - '0');
  }
  if (negative) value = -value;
  return refl ? reflection(value, l) : rotation(value, l);
}

}  // namespace magrect
