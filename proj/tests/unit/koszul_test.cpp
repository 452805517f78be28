#include "segre/koszul.hpp"

#include "segre_ring.hpp"

#include <gtest/gtest.h>

#include <bit>

using namespace segre;

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n)
    return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

BettiOptions exact_options() {
  BettiOptions o;
  o.backend = RankBackend::exact;
  return o;
}

} // namespace

TEST(KoszulOrder, DegreeThenIndexTupleThenMonomial) {
  const KoszulBasisVector a{0b011, 0}, b{0b101, 0}, c{0b110, 0}, d{0b001, 5}, e{0b011, 1};
  EXPECT_TRUE(koszul_order(d, a));
  EXPECT_TRUE(koszul_order(a, b));
  EXPECT_TRUE(koszul_order(b, c));
  EXPECT_TRUE(koszul_order(a, e));
  EXPECT_FALSE(koszul_order(a, a));
  EXPECT_FALSE(koszul_order(c, b));
}

TEST(KoszulComplex, DimensionsAndBasis) {
  Straightener ring(DimVector({2, 1, 1}));
  KoszulComplex cx(ring);
  const int n = cx.generators();
  EXPECT_EQ(n, 7);
  EXPECT_EQ(cx.max_q(), 2);
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= cx.max_q(); ++q) {
      const auto basis = cx.basis(p, q);
      EXPECT_EQ(basis.size(), cx.dimension(p, q));
      EXPECT_EQ(cx.dimension(p, q), binomial(n, p) * ring.standard_basis(q).size());
      EXPECT_TRUE(std::is_sorted(basis.begin(), basis.end(), koszul_order));
      for (const auto& v : basis)
        EXPECT_EQ(std::popcount(v.subset), p);
      std::uint64_t by_grade = 0;
      for (auto c : cx.grade_counts(p, q))
        by_grade += c;
      EXPECT_EQ(by_grade, cx.dimension(p, q));
    }
  EXPECT_EQ(cx.dimension(-1, 0), 0u);
  EXPECT_EQ(cx.dimension(0, 3), 0u);
}

TEST(KoszulComplex, SmallDifferentials) {
  const DimVector a({1, 1});
  const SparseIntMatrix d10 = differential(a, 1, 0);
  ASSERT_EQ(d10.rows(), 1u);
  ASSERT_EQ(d10.cols(), 1u);
  EXPECT_EQ(d10.at(0, 0), 1);
  const SparseIntMatrix d11 = differential(a, 1, 1);
  EXPECT_EQ(d11.rows(), 0u);
  EXPECT_TRUE(d11.is_zero());
  const SparseIntMatrix d20 = differential(DimVector({1, 1, 1}), 2, 0);
  EXPECT_EQ(d20.rows(), 4u * 4u);
  EXPECT_EQ(d20.cols(), 6u);
  for (std::size_t c = 0; c < d20.cols(); ++c) {
    std::size_t nz = 0;
    for (std::size_t r = 0; r < d20.rows(); ++r)
      nz += d20.at(r, c) != 0;
    EXPECT_EQ(nz, 2u);
  }
}

TEST(KoszulComplex, DifferentialSquaresToZero) {
  for (const auto& raw : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {1, 1, 1}, {2, 1, 1}, {3, 1}, {1, 1, 1, 1}}) {
    Straightener ring{DimVector(raw)};
    KoszulComplex cx(ring);
    for (int p = 2; p <= cx.generators(); ++p)
      for (int q = 0; q + 1 <= cx.max_q(); ++q) {
        if (cx.dimension(p, q) * cx.dimension(p - 2, q + 2) > 4'000'000)
          continue;
        ASSERT_TRUE(cx.differential(p - 1, q + 1).multiply(cx.differential(p, q)).is_zero())
            << DimVector(raw).to_string() << " p=" << p << " q=" << q;
      }
  }
}

TEST(KoszulComplex, ApplyMatchesMatrix) {
  Straightener ring(DimVector({2, 1, 1}));
  KoszulComplex cx(ring);
  const int p = 3, q = 1;
  const auto domain = cx.basis(p, q);
  const auto codomain = cx.basis(p - 1, q + 1);
  const SparseIntMatrix d = cx.differential(p, q);
  for (std::size_t j = 0; j < domain.size(); j += 7) {
    KoszulVector v{{domain[j], Integer(1)}};
    const KoszulVector image = cx.apply(p, q, v);
    for (std::size_t r = 0; r < codomain.size(); ++r) {
      auto it = image.find(codomain[r]);
      EXPECT_EQ(it == image.end() ? Integer(0) : it->second, d.at(r, j));
    }
  }
}

TEST(KoszulComplex, BlocksPreserveGradeAndSumToFullRank) {
  Straightener ring(DimVector({2, 1, 1}));
  KoszulComplex cx(ring);
  const RankEngine exact(RankBackend::exact);
  for (int p = 1; p <= cx.generators(); ++p)
    for (int q = 0; q < cx.max_q(); ++q) {
      std::size_t total = 0, rows = 0, cols = 0;
      for (int g : cx.grades(p, q)) {
        const auto block = cx.differential_block(p, q, g);
        for (const auto& b : block.domain)
          EXPECT_EQ(cx.grade(q, b), g);
        for (const auto& b : block.codomain)
          EXPECT_EQ(cx.grade(q + 1, b), g);
        total += rank_exact(block.matrix);
        rows += block.matrix.rows();
        cols += block.matrix.cols();
      }
      EXPECT_EQ(cols, cx.dimension(p, q));
      EXPECT_LE(rows, cx.dimension(p - 1, q + 1));
      EXPECT_EQ(total, exact.rank(cx.differential(p, q))) << p << "," << q;
      EXPECT_EQ(total, cx.differential_rank(p, q, exact));
    }
}

TEST(Kpq, Examples) {
  EXPECT_EQ(kpq_dim(DimVector({1, 1}), 1, 1), 1u);
  EXPECT_EQ(kpq_dim(DimVector({1, 1}), 0, 0), 1u);
  EXPECT_EQ(kpq_dim(DimVector({1, 1, 1}), 2, 1), 16u);
  EXPECT_EQ(kpq_dim(DimVector({1, 1, 1}), 4, 2), 1u);
  EXPECT_EQ(kpq_dim(DimVector({2, 1, 1}), 4, 2), 10u);
  EXPECT_EQ(kpq_dim(DimVector({2, 1, 1}), 4, 1, RankBackend::modular), 84u);
  EXPECT_EQ(kpq_dim(DimVector({2, 1, 1}), 20, 1), 0u);
}

TEST(BettiTable, MatchesSegreRingOracle) {
  for (const auto& raw : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {1, 1, 1}, {2, 1, 1}}) {
    const DimVector a(raw);
    const BettiTable t = betti_table(a, exact_options());
    const auto expected = oracle::segre_betti(raw, t.pmax(), t.qmax());
    for (int p = 0; p <= t.pmax(); ++p)
      for (int q = 0; q <= t.qmax(); ++q) {
        auto it = expected.find({p, q});
        EXPECT_EQ(t.at(p, q), it == expected.end() ? 0u : it->second) << a.to_string() << " p=" << p << " q=" << q;
      }
  }
}

TEST(BettiTable, HilbertConsistency) {
  for (const auto& raw : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {3, 1}, {1, 1, 1}, {2, 1, 1}}) {
    const DimVector a(raw);
    BettiTable t = betti_table(a);
    EXPECT_TRUE(hilbert_consistency(a, t)) << a.to_string();
    t.set(0, 0, 2);
    EXPECT_FALSE(hilbert_consistency(a, t)) << a.to_string();
  }
  const DimVector a({1, 1, 1});
  BettiTable truncated(a, 2, 2);
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q)
      truncated.set(p, q, kpq_dim(a, p, q));
  EXPECT_FALSE(hilbert_consistency(a, truncated));
}

TEST(BettiTable, GorensteinSymmetryForOnes) {
  for (int n = 3; n <= 4; ++n) {
    const DimVector a(std::vector<int>(static_cast<std::size_t>(n), 1));
    const BettiTable t = betti_table(a);
    const int c = (1 << n) - 1 - n;
    const int reg = n - 1;
    for (int p = 0; p <= c; ++p)
      for (int q = 0; q <= reg; ++q)
        EXPECT_EQ(t.at(p, q), t.at(c - p, reg - q)) << "n=" << n << " p=" << p << " q=" << q;
  }
}

TEST(BettiTable, IndependentOfThreadsAndBackend) {
  const DimVector a({2, 1, 1});
  BettiOptions one, four, exact = exact_options();
  four.threads = 4;
  exact.threads = 3;
  const std::string reference = betti_table(a, one).to_m2();
  EXPECT_EQ(betti_table(a, four).to_m2(), reference);
  EXPECT_EQ(betti_table(a, exact).to_m2(), reference);
  EXPECT_EQ(betti_table(a, four).to_json(), betti_table(a, one).to_json());
}

TEST(BettiTable, WindowOptions) {
  BettiOptions o;
  o.pmax = 3;
  o.qmax = 1;
  const BettiTable t = betti_table(DimVector({1, 1, 1}), o);
  EXPECT_EQ(t.pmax(), 3);
  EXPECT_EQ(t.qmax(), 1);
  EXPECT_EQ(t.at(2, 1), 16u);
  EXPECT_FALSE(t.computed(4, 2));
}

TEST(Budget, RefusesOversizedCells) {
  Straightener ring(DimVector({2, 1, 1}));
  KoszulComplex cx(ring);
  const RankEngine engine(RankBackend::modular);
  const std::uint64_t need = cx.potential_entries(4, 1);
  EXPECT_GT(need, 0u);
  EXPECT_THROW(cx.differential_rank(4, 1, engine, need - 1), BudgetExceeded);
  EXPECT_NO_THROW(cx.differential_rank(4, 1, engine, need));
  EXPECT_THROW(cx.check_budget(4, 1, need - 1), BudgetExceeded);
  BettiOptions o;
  o.budget = 1000;
  EXPECT_THROW(betti_table(DimVector({2, 1, 1}), o), BudgetExceeded);
  EXPECT_THROW(kpq_dim(DimVector({2, 2, 2}), 4, 1, RankBackend::modular), BudgetExceeded);
}
