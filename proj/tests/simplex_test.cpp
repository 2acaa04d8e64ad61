#include <cstdlib>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "hstar/simplex.hpp"

using hstar::Integer;
using hstar::IntPolynomial;
using hstar::WeightVector;

namespace {

WeightVector random_weights(std::mt19937_64& rng, std::size_t max_n, int max_q) {
  std::uniform_int_distribution<std::size_t> dim(1, max_n);
  std::uniform_int_distribution<int> w(1, max_q);
  std::vector<Integer> q(dim(rng));
  for (auto& x : q) x = w(rng);
  return WeightVector(std::move(q));
}

}  // namespace

TEST(WeightVector, Validation) {
  EXPECT_THROW(WeightVector(std::vector<Integer>{}), std::invalid_argument);
  EXPECT_THROW(WeightVector({2, 0}), std::invalid_argument);
  EXPECT_THROW(WeightVector({-1}), std::invalid_argument);
  EXPECT_EQ(WeightVector({3, 1, 2}).sorted(), WeightVector({1, 2, 3}));
}

TEST(NormalizedVolume, Examples) {
  EXPECT_EQ(normalized_volume(WeightVector{2, 3}), 6);
  EXPECT_EQ(normalized_volume(WeightVector{1, 1, 1, 1}), 5);
  EXPECT_EQ(normalized_volume(WeightVector{2, 6}), 9);
}

TEST(Omega, Examples) {
  EXPECT_EQ(hstar::omega(WeightVector{2, 3}, 5), 2u);
  EXPECT_EQ(hstar::omega(WeightVector{7, 4, 9}, 0), 0u);
  EXPECT_EQ(hstar::omega(WeightVector{3, 8, 12}, 23), 3u);
  EXPECT_THROW(hstar::omega(WeightVector{2, 3}, 6), std::out_of_range);
  EXPECT_THROW(hstar::omega(WeightVector{2, 3}, -1), std::out_of_range);
}

TEST(TSet, Examples) {
  EXPECT_EQ(hstar::t_set(WeightVector{2, 3}), (std::vector<Integer>{1, 5}));
  EXPECT_EQ(hstar::t_set(WeightVector{1, 1}), (std::vector<Integer>{1, 2}));
  EXPECT_EQ(hstar::t_set(WeightVector{2, 6}), (std::vector<Integer>{1, 2, 4, 5, 7, 8}));
}

TEST(LocalHstar, Examples) {
  EXPECT_EQ(hstar::local_hstar(WeightVector{1, 1}), IntPolynomial({0, 1, 1}));
  EXPECT_EQ(hstar::local_hstar(WeightVector{3, 8, 12}), IntPolynomial({0, 1, 6, 1}));
  EXPECT_EQ(hstar::local_hstar(WeightVector{2, 6}), IntPolynomial({0, 3, 3}));
  EXPECT_EQ(hstar::local_hstar(WeightVector{1, 1, 1, 1}), IntPolynomial({0, 1, 1, 1, 1}));
}

TEST(Hstar, Examples) {
  EXPECT_EQ(hstar::hstar(WeightVector{2, 3}), IntPolynomial({1, 4, 1}));
  EXPECT_EQ(hstar::hstar(WeightVector{1, 2}), IntPolynomial({1, 2, 1}));
  EXPECT_EQ(hstar::hstar(WeightVector{2, 6}), IntPolynomial({1, 5, 3}));
}

TEST(VertexMatrix, Examples) {
  auto m = hstar::vertex_matrix(WeightVector{2, 3});
  using Row = std::vector<Integer>;
  EXPECT_EQ(m.entries, (std::vector<Row>{{1, 1, 1}, {1, 0, -2}, {0, 1, -3}}));
  EXPECT_EQ(abs(m.determinant()), 6);
  auto m1 = hstar::vertex_matrix(WeightVector{1});
  EXPECT_EQ(m1.entries, (std::vector<Row>{{1, 1}, {1, -1}}));
  EXPECT_EQ(abs(m1.determinant()), 2);
  EXPECT_EQ(abs(hstar::vertex_matrix(WeightVector{1, 1}).determinant()), 3);
}

TEST(VertexMatrix, AdjugateInvertsUpToDeterminant) {
  auto m = hstar::vertex_matrix(WeightVector{3, 8, 12});
  auto adj = m.adjugate();
  const Integer det = m.determinant();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      Integer s = 0;
      for (std::size_t k = 0; k < m.size(); ++k) s += m.entries[i][k] * adj[k][j];
      EXPECT_EQ(s, i == j ? det : Integer(0));
    }
}

TEST(OracleEnumerate, Examples) {
  using Map = std::map<std::size_t, Integer>;
  EXPECT_EQ(hstar::oracle_enumerate(WeightVector{1}, true), (Map{{1, 1}}));
  EXPECT_EQ(hstar::oracle_enumerate(WeightVector{2, 3}, true), (Map{{1, 1}, {2, 1}}));
  EXPECT_EQ(hstar::oracle_enumerate(WeightVector{2, 3}, false), (Map{{0, 1}, {1, 4}, {2, 1}}));
}

TEST(OracleEnumerate, ScaleGuardRefuses) {
  hstar::OracleLimits tight{1000};
  try {
    hstar::oracle_enumerate(WeightVector{30, 40}, true, tight);
    FAIL() << "expected refusal";
  } catch (const hstar::ScaleGuardError& e) {
    EXPECT_EQ(e.bound(), "max-box");
    EXPECT_EQ(e.limit(), 1000);
  }
}

TEST(HeightScan, ScaleGuardRefuses) {
  hstar::ScanLimits tight{100};
  EXPECT_THROW(hstar::hstar(WeightVector{50, 60}, tight), hstar::ScaleGuardError);
  EXPECT_THROW(hstar::t_set(WeightVector{50, 60}, tight), hstar::ScaleGuardError);
  EXPECT_NO_THROW(hstar::hstar(WeightVector{50, 40}, tight));
}

TEST(HeightScan, MachineAndBigIntegerPathsAgree) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    WeightVector q = random_weights(rng, 5, 40);
    auto fast = hstar::height_tally(q);
    auto big = hstar::detail::scan_heights_big(q);
    ASSERT_EQ(fast.all, big.all);
    ASSERT_EQ(fast.open, big.open);
    ASSERT_EQ(fast.open_count, big.open_count);
  }
}

TEST(HeightScan, IndependentOfWorkerCount) {
  WeightVector q{17, 250, 30000, 90001};
  auto serial = hstar::detail::scan_heights_as<std::int64_t, __int128>(q, 1);
  for (unsigned workers : {2u, 5u, 13u}) {
    auto par = hstar::detail::scan_heights_as<std::int64_t, __int128>(q, workers);
    EXPECT_EQ(par.all, serial.all);
    EXPECT_EQ(par.open, serial.open);
  }
}

TEST(SimplexProperties, ComplementaryPairsAndSymmetry) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    WeightVector q = random_weights(rng, 5, 30);
    const std::size_t n = q.dimension();
    const Integer Q = q.normalized_volume();
    auto t = hstar::t_set(q);
    std::set<Integer> members(t.begin(), t.end());
    for (const auto& b : t) {
      ASSERT_TRUE(members.count(Q - b));
      ASSERT_EQ(hstar::omega(q, b) + hstar::omega(q, Q - b), n + 1);
    }
    IntPolynomial ell = hstar::local_hstar(q);
    EXPECT_TRUE(is_symmetric(ell, n + 1)) << ell;
    EXPECT_EQ(hstar::eval_at_one(ell), Integer(t.size()));
    EXPECT_EQ(ell.coeff(0), 0);
  }
}

TEST(SimplexProperties, HeightsAndHstarNormalization) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    WeightVector q = random_weights(rng, 5, 30);
    const Integer Q = q.normalized_volume();
    EXPECT_EQ(hstar::omega(q, 0), 0u);
    for (Integer b = 0; b < Q; ++b) ASSERT_LE(hstar::omega(q, b), q.dimension());
    IntPolynomial h = hstar::hstar(q);
    EXPECT_EQ(h.coeff(0), 1);
    EXPECT_EQ(hstar::eval_at_one(h), Q);
  }
}

TEST(SimplexProperties, OracleMatchesFormulas) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    WeightVector q = random_weights(rng, 4, 12);
    ASSERT_EQ(hstar::oracle_enumerate(q, true), hstar::coefficient_map(hstar::local_hstar(q)));
    ASSERT_EQ(hstar::oracle_enumerate(q, false), hstar::coefficient_map(hstar::hstar(q)));
  }
}

TEST(Parallel, ThreadCapAndChunkCoverage) {
  ::setenv("HSTARLAB_THREADS", "1", 1);
  EXPECT_EQ(hstar::worker_count(), 1u);
  ::setenv("HSTARLAB_THREADS", "junk", 1);
  EXPECT_GE(hstar::worker_count(), 1u);
  ::unsetenv("HSTARLAB_THREADS");
  for (unsigned workers : {1u, 3u, 8u}) {
    auto parts = hstar::parallel_chunks<std::pair<std::uint64_t, std::uint64_t>>(
        100'003, [](std::uint64_t lo, std::uint64_t hi) { return std::pair{lo, hi}; }, workers);
    std::uint64_t next = 0;
    for (auto [lo, hi] : parts) {
      EXPECT_EQ(lo, next);
      next = hi;
    }
    EXPECT_EQ(next, 100'003u);
  }
}
