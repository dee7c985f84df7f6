#include <magrect/construct.hpp>
#include <magrect/feasibility.hpp>
#include <magrect/verify.hpp>

#include <gtest/gtest.h>

#include <string>

namespace magrect {
namespace {

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

TEST(Classify, Examples) {
  auto v = classify(2, 3, 1);
  EXPECT_EQ(v.status, Status::not_exists);
  EXPECT_EQ(v.justification, Justification::odd_l);
  EXPECT_EQ(v.l, 3u);

  v = classify(2, 3, 2);
  EXPECT_EQ(v.status, Status::not_exists);
  EXPECT_EQ(v.justification, Justification::two_by_l_twice);
  EXPECT_EQ(v.l, 6u);

  v = classify(4, 6, 2);
  EXPECT_EQ(v.status, Status::exists);
  EXPECT_EQ(v.justification, Justification::even_tiling);
  EXPECT_EQ(v.l, 24u);

  v = classify(1, 4, 3);
  EXPECT_EQ(v.status, Status::unknown);
  EXPECT_EQ(v.l, 6u);
}

TEST(Classify, NamesAndNotes) {
  EXPECT_EQ(to_string(Status::exists), "Exists");
  EXPECT_EQ(to_string(Status::not_exists), "NotExists");
  EXPECT_EQ(to_string(Justification::two_by_l_twice), "ObsTwoByLTwice");
  EXPECT_EQ(classify(2, 2, 3).justification, Justification::lemma_block);
  // Only one even factor, 2 mod 4: the weaker rule is named in the detail.
  EXPECT_TRUE(contains(classify(3, 2, 1).detail, "ObsParityMod4"));
  EXPECT_FALSE(contains(classify(3, 4, 1).detail, "ObsParityMod4"));
  EXPECT_TRUE(contains(classify(4, 4, 1).detail, "CitedSemiMagic"));
}

TEST(Classify, TransposeButNotArrayCount) {
  EXPECT_EQ(classify(3, 2, 2).justification, Justification::two_by_l_twice);
  EXPECT_EQ(classify(5, 2, 2).justification, Justification::two_by_l_twice);
  // k is not interchangeable with m or n
  EXPECT_EQ(classify(2, 2, 3).status, Status::exists);
  EXPECT_EQ(classify(3, 2, 4).status, Status::unknown);
  EXPECT_EQ(classify(2, 1, 6).status, Status::unknown);
}

TEST(Classify, SmallestEvenTupleIsUnknown) { EXPECT_EQ(classify(2, 2, 1).status, Status::unknown); }

TEST(Classify, OddProductIsRejected) {
  EXPECT_THROW(classify(3, 3, 1), std::invalid_argument);
  EXPECT_THROW(classify(1, 1, 1), std::invalid_argument);
  EXPECT_THROW(classify(0, 2, 1), std::invalid_argument);
}

TEST(Classify, OddLIsNeverExists) {
  for (std::uint64_t m = 1; m <= 12; ++m) {
    for (std::uint64_t n = 1; n <= 12; ++n) {
      for (std::uint64_t k = 1; k <= 6; ++k) {
        if ((m * n * k) % 2) continue;
        const auto v = classify(m, n, k);
        if ((m * n * k / 2) % 2) {
          EXPECT_EQ(v.status, Status::not_exists);
        }
        EXPECT_EQ(v.status == Status::exists, v.justification == Justification::lemma_block ||
                                                  v.justification == Justification::even_tiling);
        EXPECT_EQ(classify(m, n, k).detail, v.detail);  // pure
      }
    }
  }
}

TEST(Classify, ExistsVerdictsAreConstructed) {
  for (std::uint64_t m = 2; m <= 8; m += 2) {
    for (std::uint64_t n = 2; n <= 8; n += 2) {
      for (std::uint64_t k = 1; k <= 3; ++k) {
        const auto v = classify(m, n, k);
        if (v.status != Status::exists) continue;
        const auto set = lmrs_even(m, n, k);
        ASSERT_EQ(set.group().value(), v.l);
        ASSERT_TRUE(verify_linear(set).pass());
      }
    }
  }
}

TEST(ParityWitness, OddL) {
  const auto w = parity_witness(2, 3, 1);
  EXPECT_TRUE(contains(w, "D_3 has 3 reflections")) << w;
  EXPECT_TRUE(contains(w, "n = 3 is odd")) << w;
  EXPECT_TRUE(contains(w, "rho^2")) << w;

  const auto w2 = parity_witness(3, 1, 2);
  EXPECT_TRUE(contains(w2, "m = 3 is odd")) << w2;
  EXPECT_TRUE(contains(w2, "sigma^2")) << w2;

  const auto w3 = parity_witness(6, 1, 1);
  EXPECT_TRUE(contains(w3, "D_3")) << w3;
  EXPECT_TRUE(contains(w3, "n = 1 is odd")) << w3;
}

TEST(ParityWitness, TwoByOddTwice) {
  const auto w = parity_witness(2, 3, 2);
  EXPECT_TRUE(contains(w, "D_6 has 6 = 2 mod 4")) << w;
  EXPECT_TRUE(contains(parity_witness(3, 2, 2), "row")) << parity_witness(3, 2, 2);
}

TEST(ParityWitness, RefusesOtherVerdicts) {
  EXPECT_THROW(parity_witness(4, 6, 2), std::invalid_argument);
  EXPECT_THROW(parity_witness(1, 4, 3), std::invalid_argument);
}

}  // namespace
}  // namespace magrect
