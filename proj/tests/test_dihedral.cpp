#include <magrect/dihedral.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace magrect {
namespace {

DihedralElement R(std::int64_t e, std::int64_t l) { return rotation(e, GroupOrder(l)); }
DihedralElement S(std::int64_t e, std::int64_t l) { return reflection(e, GroupOrder(l)); }

TEST(Dihedral, IdentityIsRotationZero) {
  EXPECT_EQ(identity(GroupOrder(4)), (DihedralElement{false, 0}));
  EXPECT_EQ(identity(GroupOrder(16)), (DihedralElement{false, 0}));
  const GroupOrder l(3);
  for (const auto& x : enumerate(l)) {
    EXPECT_EQ(multiply(identity(l), x, l), x);
    EXPECT_EQ(multiply(x, identity(l), l), x);
  }
}

TEST(Dihedral, GroupOrderBounds) {
  EXPECT_THROW(GroupOrder(0), std::out_of_range);
  EXPECT_THROW(GroupOrder(-3), std::out_of_range);
  EXPECT_THROW(GroupOrder(kMaxGroupOrder + 1), std::out_of_range);
  EXPECT_EQ(GroupOrder(kMaxGroupOrder).size(), 2u * kMaxGroupOrder);
}

TEST(Dihedral, MultiplyExamples) {
  const GroupOrder l8(8), l4(4);
  // s r^2 s = r^-2
  EXPECT_EQ(product_of_sequence(std::vector{S(0, 8), R(2, 8), S(0, 8)}, l8), R(6, 8));
  EXPECT_EQ(multiply(S(1, 4), S(1, 4), l4), identity(l4));
  EXPECT_EQ(multiply(R(2, 4), R(3, 4), l4), R(1, 4));
}

TEST(Dihedral, MultiplyMatchesAffineModel) {
  for (std::int64_t lv = 1; lv <= 16; ++lv) {
    const GroupOrder l(lv);
    const auto all = enumerate(l);
    for (const auto& a : all) {
      for (const auto& b : all) ASSERT_EQ(multiply(a, b, l), oracle::compose(a, b, lv)) << lv;
    }
  }
}

TEST(Dihedral, Inverse) {
  const GroupOrder l8(8);
  EXPECT_EQ(inverse(R(3, 8), l8), R(5, 8));
  EXPECT_EQ(inverse(S(3, 8), l8), S(3, 8));
  EXPECT_EQ(inverse(identity(GroupOrder(1)), GroupOrder(1)), identity(GroupOrder(1)));
  for (std::int64_t lv = 1; lv <= 64; ++lv) {
    const GroupOrder l(lv);
    for (const auto& a : enumerate(l)) {
      ASSERT_EQ(multiply(a, inverse(a, l), l), identity(l));
      ASSERT_EQ(multiply(inverse(a, l), a, l), identity(l));
    }
  }
}

TEST(Dihedral, PowerAgainstRepeatedMultiply) {
  const GroupOrder l8(8);
  EXPECT_EQ(power(S(1, 8), 2, l8), identity(l8));
  EXPECT_EQ(power(R(3, 8), 4, l8), R(4, 8));

  auto repeated = [](DihedralElement a, std::uint64_t t, std::int64_t l) {
    DihedralElement acc{};
    for (std::uint64_t i = 0; i < t; ++i) acc = oracle::compose(acc, a, l);
    return acc;
  };
  EXPECT_EQ(power(S(1, 8), 3, l8), repeated(S(1, 8), 3, 8));
  EXPECT_EQ(repeated(S(1, 8), 3, 8), S(1, 8));
  for (std::int64_t lv : {1, 2, 5, 8, 12}) {
    const GroupOrder l(lv);
    for (const auto& a : enumerate(l)) {
      for (std::uint64_t t = 0; t <= 30; ++t) ASSERT_EQ(power(a, t, l), repeated(a, t, lv));
    }
  }
}

TEST(Dihedral, EnumerateOrderAndSize) {
  EXPECT_EQ(enumerate(GroupOrder(1)), (std::vector{R(0, 1), S(0, 1)}));
  EXPECT_EQ(enumerate(GroupOrder(3)),
            (std::vector{R(0, 3), R(1, 3), R(2, 3), S(0, 3), S(1, 3), S(2, 3)}));
  EXPECT_EQ(enumerate(GroupOrder(16)).size(), 32u);
  for (std::int64_t lv = 1; lv <= 40; ++lv) {
    const auto all = enumerate(GroupOrder(lv));
    EXPECT_EQ(std::set<DihedralElement>(all.begin(), all.end()).size(), 2u * lv);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  }
}

TEST(Dihedral, ProductOfSequence) {
  const GroupOrder l4(4);
  EXPECT_EQ(product_of_sequence(std::vector{R(1, 4), S(0, 4)}, l4), S(1, 4));
  EXPECT_EQ(product_of_sequence(std::vector<DihedralElement>{}, l4), identity(l4));
  // r s * r = r^(1-1) s
  EXPECT_EQ(product_of_sequence(std::vector{S(1, 4), R(1, 4)}, l4), S(0, 4));
}

TEST(Dihedral, ParseAndFormat) {
  const GroupOrder l8(8);
  EXPECT_EQ(parse("r^-2", l8), R(6, 8));
  EXPECT_EQ(format(parse("r^-2", l8)), "r^6");
  EXPECT_EQ(parse("s", l8), S(0, 8));
  EXPECT_EQ(format(parse("s", l8)), "r^0*s");
  EXPECT_EQ(format(parse("e", l8)), "r^0");
  EXPECT_EQ(parse("r", l8), R(1, 8));
  EXPECT_EQ(parse("rs", l8), S(1, 8));
  EXPECT_EQ(parse("r^17*s", l8), S(1, 8));
  EXPECT_EQ(parse(" r^3 ", l8), R(3, 8));
  EXPECT_EQ(parse("r^-16*s", GroupOrder(32)), S(16, 32));

  for (const char* bad : {"q^2", "", "r^", "r^x", "r^2s", "r^2*", "s^2", "r^1*s*s", "r^ 2"}) {
    try {
      parse(bad, l8);
      FAIL() << "accepted '" << bad << "'";
    } catch (const parse_error& e) {
      EXPECT_NE(std::string(e.what()).find(std::string("'") + bad + "'"), std::string::npos) << e.what();
    }
  }
}

TEST(Dihedral, ParseFormatRoundTrip) {
  for (std::int64_t lv : {1, 2, 7, 32, 1000}) {
    const GroupOrder l(lv);
    for (const auto& a : enumerate(l)) ASSERT_EQ(parse(format(a), l), a);
  }
}

// Group axioms

TEST(DihedralProperties, AssociativityExhaustive) {
  for (std::int64_t lv = 1; lv <= 8; ++lv) {
    const GroupOrder l(lv);
    const auto all = enumerate(l);
    for (const auto& a : all) {
      for (const auto& b : all) {
        for (const auto& c : all) {
          ASSERT_EQ(multiply(multiply(a, b, l), c, l), multiply(a, multiply(b, c, l), l));
        }
      }
    }
  }
}

TEST(DihedralProperties, ReflectionConjugatesRotationToInverse) {
  for (std::int64_t lv = 1; lv <= 64; ++lv) {
    const GroupOrder l(lv);
    const auto s = reflection(0, l);
    for (std::int64_t i = 0; i < lv; ++i) {
      ASSERT_EQ(multiply(multiply(s, rotation(i, l), l), s, l), rotation((lv - i) % lv, l));
    }
  }
}

TEST(DihedralProperties, ReflectionParityIsOrderIndependent) {
  std::mt19937 rng(20261016);
  for (std::int64_t lv = 1; lv <= 5; ++lv) {
    const GroupOrder l(lv);
    const auto all = enumerate(l);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t size = 1 + static_cast<std::size_t>(trial % 6);
      std::vector<DihedralElement> xs;
      for (std::size_t i = 0; i < size; ++i) xs.push_back(all[pick(rng)]);
      const auto reflections = std::count_if(xs.begin(), xs.end(), [](auto x) { return x.is_reflection; });
      std::sort(xs.begin(), xs.end());
      do {
        ASSERT_EQ(product_of_sequence(xs, l).is_reflection, reflections % 2 == 1);
      } while (std::next_permutation(xs.begin(), xs.end()));
    }
  }
}

}  // namespace
}  // namespace magrect
