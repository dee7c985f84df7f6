#pragma once

// Existence classifier for MRS_{D_l}(m, n; k), 2l = mnk.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace magrect {

enum class Status { exists, not_exists, unknown };

enum class Justification {
  none,
  lemma_block,        // (2, 2, k), k > 1
  even_tiling,        // m, n even, mnk > 4
  odd_l,              // l odd
  parity_mod4,        // exactly one of m, n, k even and = 2 mod 4 (implies odd l)
  two_by_l_twice,     // (2, l', 2) with l' odd, or its transpose
  cited_semi_magic,   // n x n squares with n even, n >= 4
};

inline std::string to_string(Status s) {
  switch (s) {
    case Status::exists: return "Exists";
    case Status::not_exists: return "NotExists";
    case Status::unknown: return "Unknown";
  }
  return "?";
}

inline std::string to_string(Justification j) {
  switch (j) {
    case Justification::none: return "None";
    case Justification::lemma_block: return "LemmaBlock";
    case Justification::even_tiling: return "ThmEvenTiling";
    case Justification::odd_l: return "ObsOddL";
    case Justification::parity_mod4: return "ObsParityMod4";
    case Justification::two_by_l_twice: return "ObsTwoByLTwice";
    case Justification::cited_semi_magic: return "CitedSemiMagic";
  }
  return "?";
}

struct Tuple {
  std::uint64_t m = 0, n = 0, k = 0;
};

struct FeasibilityVerdict {
  Status status = Status::unknown;
  Justification justification = Justification::none;
  std::uint64_t l = 0;
  std::string detail;
};

namespace detail {

inline void check_tuple(const Tuple& t) {
  if (t.m == 0 || t.n == 0 || t.k == 0) throw std::invalid_argument("m, n, k must be positive");
  if ((t.m * t.n * t.k) % 2) {
    throw std::invalid_argument("mnk = " + std::to_string(t.m * t.n * t.k) +
                                " is odd; no dihedral group has that order");
  }
}

inline bool exactly_one_even_2_mod_4(const Tuple& t) {
  const int evens = (t.m % 2 == 0) + (t.n % 2 == 0) + (t.k % 2 == 0);
  if (evens != 1) return false;
  const auto e = t.m % 2 == 0 ? t.m : (t.n % 2 == 0 ? t.n : t.k);
  return e % 4 == 2;
}

}  // namespace detail

inline FeasibilityVerdict classify(std::uint64_t m, std::uint64_t n, std::uint64_t k) {
  const Tuple t{m, n, k};
  detail::check_tuple(t);
  FeasibilityVerdict v;
  v.l = m * n * k / 2;
  std::ostringstream os;

  if (v.l % 2) {
    v.status = Status::not_exists;
    v.justification = Justification::odd_l;
    os << "l = " << v.l << " is odd: D_" << v.l << " has an odd number of reflections";
    if (detail::exactly_one_even_2_mod_4(t)) {
      os << " (exactly one of m, n, k is even and it is 2 mod 4, so " << to_string(Justification::parity_mod4)
         << " applies as well)";
    }
    v.detail = os.str();
    return v;
  }

  // Transposing every array swaps m and n; k is not interchangeable.
  if (k == 2 && ((m == 2 && n % 2) || (n == 2 && m % 2))) {
    v.status = Status::not_exists;
    v.justification = Justification::two_by_l_twice;
    const auto odd = m == 2 ? n : m;
    os << "two arrays of shape " << m << "x" << n << " with " << odd
       << " odd: the reflection count of the four long lines cannot be both even per line and "
       << "2 mod 4 in total";
    v.detail = os.str();
    return v;
  }

  if (m % 2 == 0 && n % 2 == 0 && m * n * k > 4) {
    v.status = Status::exists;
    if (m == 2 && n == 2) {
      v.justification = Justification::lemma_block;
      os << k << " blocks of size 2x2 over D_" << v.l;
    } else {
      v.justification = Justification::even_tiling;
      os << "tiling of " << (m / 2) * (n / 2) << " 2x2 blocks per array over D_" << v.l;
    }
    if (m == n && k == 1 && m >= 4) {
      os << "; semi-magic squares of this order also exist (" << to_string(Justification::cited_semi_magic)
         << ")";
    }
    v.detail = os.str();
    return v;
  }

  v.status = Status::unknown;
  if (m % 2 == 0 && n % 2 == 0) {
    os << "mnk = 4 is below the range of the block tiling; exhaustive search settles it";
  } else {
    os << "no construction or nonexistence argument covers this tuple";
  }
  v.detail = os.str();
  return v;
}

// The counting argument behind a NotExists verdict, instantiated.
inline std::string parity_witness(std::uint64_t m, std::uint64_t n, std::uint64_t k) {
  const auto v = classify(m, n, k);
  std::ostringstream os;
  if (v.justification == Justification::odd_l) {
    const auto l = v.l;
    os << "D_" << l << " has " << l << " reflections, an odd number, so every ordering of all "
       << 2 * l << " elements multiplies to a reflection.\n";
    if (m % 2) {
      os << "m = " << m << " is odd, so nk = " << n * k
         << " is even. Each of the nk columns multiplies (in some order) to sigma, so some ordering "
         << "of all elements multiplies to sigma^" << n * k << ", which is a rotation because "
         << n * k << " is even. Contradiction.";
    } else {
      os << "n = " << n << " is odd, so mk = " << m * k
         << " is even. Each of the mk rows multiplies (in some order) to rho, so some ordering "
         << "of all elements multiplies to rho^" << m * k << ", which is a rotation because "
         << m * k << " is even. Contradiction.";
    }
    return os.str();
  }
  if (v.justification == Justification::two_by_l_twice) {
    const bool rows_short = m == 2;  // 2 x l' arrays; otherwise l' x 2
    const auto odd = rows_short ? n : m;
    const char* line = rows_short ? "column" : "row";
    const char* longline = rows_short ? "row" : "column";
    os << "Each " << line << " has 2 cells and all " << line
       << "s share a product, so all have the same reflection parity.\n"
       << "Odd parity: every " << line << " holds exactly one reflection, so each array holds " << odd
       << " reflections split over its two " << longline << "s; " << odd
       << " is odd, so the two " << longline << "s differ in parity, but all " << longline
       << "s share a product. Contradiction.\n"
       << "Even parity: every " << line << " holds 0 or 2 reflections, so both " << longline
       << "s of an array hold the same count and the four " << longline
       << "s together hold 0 mod 4 reflections; but D_" << v.l << " has " << v.l << " = " << v.l % 4
       << " mod 4 reflections. Contradiction.";
    return os.str();
  }
  throw std::invalid_argument("no parity witness: (" + std::to_string(m) + ", " + std::to_string(n) + ", " +
                              std::to_string(k) + ") is classified " + to_string(v.status));
}

}  // namespace magrect
