#include <gtest/gtest.h>

#include "hstar/baser.hpp"

using hstar::Integer;
using hstar::IntPolynomial;
using hstar::SectionFamily;
using hstar::WeightVector;

TEST(BaseRWeights, Examples) {
  EXPECT_EQ(hstar::base_r_weights(3, 2), WeightVector({2, 6}));
  EXPECT_EQ(hstar::base_r_weights(4, 3), WeightVector({3, 12, 48}));
  EXPECT_EQ(hstar::base_r_weights(2, 4), WeightVector({1, 2, 4, 8}));
  EXPECT_EQ(hstar::base_r_weights(5, 4).normalized_volume(), 625);
  EXPECT_THROW(hstar::base_r_weights(1, 2), std::invalid_argument);
  EXPECT_THROW(hstar::base_r_weights(3, 0), std::invalid_argument);
}

TEST(FSections, Examples) {
  using V = std::vector<IntPolynomial>;
  EXPECT_EQ(hstar::f_sections(3, 1).sections, (V{{1, 1}, {1}}));
  EXPECT_EQ(hstar::f_sections(3, 2).sections, (V{{1, 3, 1}, {2, 2}}));
  EXPECT_EQ(hstar::f_sections(2, 5).sections, (V{pow(IntPolynomial{1, 1}, 5)}));
  EXPECT_EQ(hstar::f_sections(4, 0).sections, (V{{1}, {}, {}}));
  EXPECT_EQ(hstar::f_sections(5, 3).reassemble(), hstar::f_poly(5, 3));
}

TEST(SectionStep, Examples) {
  using V = std::vector<IntPolynomial>;
  EXPECT_EQ(hstar::section_step(hstar::f_sections(3, 1)).sections, (V{{1, 3, 1}, {2, 2}}));
  auto two = hstar::section_step(hstar::f_sections(2, 3));
  EXPECT_EQ(two.n, 4u);
  EXPECT_EQ(two.sections, (V{pow(IntPolynomial{1, 1}, 4)}));
}

TEST(BaseRHstar, Examples) {
  EXPECT_EQ(hstar::base_r_hstar(3, 2), IntPolynomial({1, 5, 3}));
  EXPECT_EQ(hstar::base_r_hstar(3, 1), IntPolynomial({1, 2}));
  EXPECT_EQ(hstar::base_r_hstar(7, 0), IntPolynomial({1}));
  for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(hstar::base_r_hstar(2, n), pow(IntPolynomial{1, 1}, n));
}

TEST(BaseRLocalHstar, Examples) {
  EXPECT_EQ(hstar::base_r_local_hstar(3, 2), IntPolynomial({0, 3, 3}));
  EXPECT_EQ(hstar::base_r_local_hstar(3, 1), IntPolynomial({0, 2}));
  for (unsigned r = 2; r <= 9; ++r) EXPECT_EQ(hstar::base_r_local_hstar(r, 1), IntPolynomial({0, r - 1}));
  for (std::size_t n = 1; n <= 8; ++n)
    EXPECT_EQ(hstar::base_r_local_hstar(2, n), pow(IntPolynomial{1, 1}, n - 1).shifted(1));
  EXPECT_THROW(hstar::base_r_local_hstar(3, 0), std::invalid_argument);
}

TEST(Base2LocalSupp, Examples) {
  EXPECT_EQ(hstar::base2_local_supp(1), IntPolynomial({0, 1}));
  EXPECT_EQ(hstar::base2_local_supp(2), IntPolynomial({0, 1, 1}));
  EXPECT_EQ(hstar::base2_local_supp(4), IntPolynomial({0, 1, 3, 3, 1}));
  for (std::size_t n = 1; n <= 16; ++n)
    EXPECT_EQ(hstar::base2_local_supp(n), pow(IntPolynomial{1, 1}, n - 1).shifted(1));
  EXPECT_THROW(hstar::base2_local_supp(27), hstar::ScaleGuardError);
}

TEST(BaseRProperties, TSetShape) {
  for (unsigned r = 2; r <= 6; ++r)
    for (std::size_t n = 1; n <= 6; ++n) {
      const Integer Q = boost::multiprecision::pow(Integer(r), static_cast<unsigned>(n));
      std::vector<Integer> expected;
      for (Integer b = 1; b < Q; ++b)
        if (b % r != 0) expected.push_back(b);
      ASSERT_EQ(hstar::t_set(hstar::base_r_weights(r, n)), expected) << r << "," << n;
    }
}

TEST(BaseRProperties, HeightSelfSimilarity) {
  for (unsigned r = 2; r <= 6; ++r)
    for (std::size_t n = 2; n <= 5; ++n) {
      auto big = hstar::base_r_weights(r, n), small = hstar::base_r_weights(r, n - 1);
      for (Integer b = 0; b < small.normalized_volume(); ++b)
        ASSERT_EQ(hstar::omega(big, r * b), hstar::omega(small, b)) << r << "," << n << " b'=" << b;
    }
}

TEST(BaseRProperties, FormulasMatchHeightScan) {
  for (unsigned r = 2; r <= 6; ++r)
    for (std::size_t n = 1; n <= 6; ++n) {
      auto q = hstar::base_r_weights(r, n);
      auto local = hstar::base_r_local_hstar(r, n);
      EXPECT_EQ(hstar::base_r_hstar(r, n), hstar::hstar(q)) << r << "," << n;
      EXPECT_EQ(local, hstar::local_hstar(q)) << r << "," << n;
      EXPECT_EQ(local, hstar::base_r_hstar(r, n) - hstar::base_r_hstar(r, n - 1)) << r << "," << n;
    }
}

TEST(BaseRProperties, SectionRecursion) {
  for (unsigned r = 2; r <= 6; ++r) {
    SectionFamily fam = hstar::f_sections(r, 0);
    for (std::size_t n = 0; n <= 8; ++n) {
      ASSERT_EQ(hstar::section_step(hstar::f_sections(r, n)), hstar::f_sections(r, n + 1)) << r << "," << n;
      fam = hstar::section_step(fam);
    }
    EXPECT_EQ(fam, hstar::f_sections(r, 9));
  }
}

TEST(BaseRProperties, ReversedSectionsInterlace) {
  for (unsigned r = 2; r <= 5; ++r)
    for (std::size_t n = 0; n <= 5; ++n) {
      auto s = hstar::f_sections(r, n).sections;
      std::vector<IntPolynomial> reversed(s.rbegin(), s.rend());
      EXPECT_TRUE(hstar::is_interlacing_sequence(reversed)) << r << "," << n;
    }
}

TEST(BaseRProperties, LocalHstarIsRealRooted) {
  for (unsigned r = 2; r <= 6; ++r)
    for (std::size_t n = 1; n <= 6; ++n) {
      auto p = hstar::base_r_local_hstar(r, n);
      EXPECT_TRUE(hstar::is_real_rooted(p)) << r << "," << n << ": " << p;
      EXPECT_TRUE(is_symmetric(p, n + 1)) << p;
    }
}
