#include "segre/koszul.hpp"
#include "segre/rank.hpp"

#include "linear_algebra.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace segre;

namespace {

SparseIntMatrix random_matrix(std::mt19937& gen, std::size_t rows, std::size_t cols, int density, int range) {
  SparseIntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (static_cast<int>(gen() % 100) < density)
        m.add(r, c, Integer(static_cast<long>(gen() % static_cast<unsigned>(2 * range + 1)) - range));
  return m;
}

/// Product of a rows x k and a k x cols matrix has rank at most k.
SparseIntMatrix low_rank(std::mt19937& gen, std::size_t rows, std::size_t cols, std::size_t k) {
  return random_matrix(gen, rows, k, 70, 3).multiply(random_matrix(gen, k, cols, 70, 3));
}

std::vector<std::vector<std::int64_t>> dense(const SparseIntMatrix& m) {
  std::vector<std::vector<std::int64_t>> out(m.rows(), std::vector<std::int64_t>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r))
      out[r][c] = v.get_si();
  return out;
}

} // namespace

TEST(Rank, KnownMatrices) {
  SparseIntMatrix zero(4, 5);
  EXPECT_EQ(rank_exact(zero), 0u);
  EXPECT_EQ(rank_exact(SparseIntMatrix()), 0u);
  SparseIntMatrix id(5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    id.add(i, i, 1);
  EXPECT_EQ(rank_exact(id), 5u);
  SparseIntMatrix m(3, 3);
  int k = 1;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      m.add(r, c, k++);
  EXPECT_EQ(rank_exact(m), 2u);
  SparseIntMatrix two(1, 1);
  two.add(0, 0, 2);
  EXPECT_EQ(rank_mod_p(two, 2), 0u);
  EXPECT_EQ(rank_mod_p(two, 3), 1u);
  EXPECT_EQ(rank_exact(two), 1u);
}

TEST(Rank, LargeEntriesStayExact) {
  SparseIntMatrix m(2, 2);
  const Integer big("123456789012345678901234567890");
  m.add(0, 0, big);
  m.add(0, 1, big + 1);
  m.add(1, 0, big * 2);
  m.add(1, 1, big * 2 + 2);
  EXPECT_EQ(rank_exact(m), 1u);
}

TEST(Rank, ModularAgreesWithExactOnRandomMatrices) {
  std::mt19937 gen(17);
  const RankEngine modular(RankBackend::modular), exact(RankBackend::exact);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = 1 + gen() % 25, cols = 1 + gen() % 25;
    const SparseIntMatrix m = trial % 2 ? random_matrix(gen, rows, cols, 30, 5)
                                        : low_rank(gen, rows, cols, 1 + gen() % 6);
    const std::size_t r = rank_exact(m);
    EXPECT_EQ(modular.rank(m), r);
    EXPECT_EQ(exact.rank(m), r);
    EXPECT_EQ(rank_mod_p(m, modular.primary_prime()), r);
    EXPECT_EQ(static_cast<std::size_t>(oracle::dense_rank_mod(dense(m))), r);
  }
}

TEST(Rank, ModularAgreesOnKoszulBlocks) {
  const RankEngine modular(RankBackend::modular, 99);
  for (const auto& raw : std::vector<std::vector<int>>{{2, 1, 1}, {1, 1, 1, 1}}) {
    Straightener ring{DimVector(raw)};
    KoszulComplex cx(ring);
    for (int p = 1; p <= cx.generators(); ++p)
      for (int q = 0; q < cx.max_q(); ++q)
        for (int g : cx.grades(p, q)) {
          const auto block = cx.differential_block(p, q, g);
          if (block.matrix.rows() * block.matrix.cols() > 40000)
            continue;
          ASSERT_EQ(modular.rank(block.matrix), rank_exact(block.matrix)) << p << "," << q << "," << g;
        }
  }
}

TEST(Rank, PrimesAreDistinctAndLarge) {
  const RankEngine e(RankBackend::modular, 1);
  EXPECT_NE(e.primary_prime(), e.secondary_prime());
  EXPECT_GE(e.primary_prime(), std::uint64_t{1} << 61);
  EXPECT_LT(e.primary_prime(), std::uint64_t{1} << 62);
  EXPECT_EQ(random_prime62(7), random_prime62(7));
  const std::uint64_t p = random_prime62(3);
  EXPECT_EQ(mpz_probab_prime_p(Integer(std::to_string(p)).get_mpz_t(), 30) > 0, true);
}

TEST(Rank, ParseBackend) {
  EXPECT_EQ(parse_rank_backend("exact"), RankBackend::exact);
  EXPECT_EQ(parse_rank_backend("modular"), RankBackend::modular);
  EXPECT_EQ(to_string(RankBackend::exact), "exact");
  EXPECT_THROW(parse_rank_backend("float"), std::invalid_argument);
}
