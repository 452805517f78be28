#include "segre/witness.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>

using namespace segre;

namespace {

DimVector ones(int n) { return DimVector(std::vector<int>(static_cast<std::size_t>(n), 1)); }

std::vector<MultiIndex> all_points(int n) { return poset_elements(ones(n)); }

} // namespace

TEST(WitnessSets, Core) {
  EXPECT_EQ(witness_core(4, 2).to_string(), "z[0,0,0,1]·z[0,0,1,1]");
  EXPECT_EQ(witness_core(3, 1).degree(), 1);
  EXPECT_THROW(witness_core(3, 3), std::invalid_argument);
  EXPECT_THROW(witness_core(1, 1), std::invalid_argument);
  for (int n = 2; n <= 6; ++n)
    for (int q = 1; q < n; ++q) {
      Straightener s(ones(n));
      EXPECT_TRUE(s.is_standard(witness_core(n, q)));
      EXPECT_EQ(s.straighten(witness_core(n, q)).size(), 1u);
    }
}

TEST(WitnessSets, Sizes) {
  for (int n = 2; n <= 7; ++n)
    for (int q = 1; q < n; ++q) {
      const auto a = annihilator_set(n, q);
      const auto d = divisor_set(n, q);
      EXPECT_EQ(static_cast<int>(a.size()), (1 << n) - (1 << (n - q)) - q);
      EXPECT_EQ(static_cast<int>(d.size()), (1 << (q + 1)) - 2);
      EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
      EXPECT_TRUE(std::is_sorted(d.begin(), d.end()));
      // the inclusion needs q <= n-2; in the top row D contains (0,1^{n-1})
      if (n <= 5)
        EXPECT_EQ(std::includes(a.begin(), a.end(), d.begin(), d.end()), q <= n - 2) << n << "," << q;
    }
}

TEST(WitnessSets, AnnihilatorKillsCore) {
  for (int n = 2; n <= 6; ++n) {
    Straightener s(ones(n));
    for (int q = 1; q < n; ++q) {
      const Monomial core = witness_core(n, q);
      for (const auto& v : annihilator_set(n, q))
        EXPECT_TRUE(s.straighten(core.times(v)).empty()) << "n=" << n << " q=" << q << " v=" << v.to_string();
    }
  }
}

TEST(WitnessSets, DegreeOneDivisorsLieInDivisorSet) {
  for (int n = 2; n <= 4; ++n) {
    Straightener s(ones(n));
    for (int q = 1; q < n; ++q) {
      const Monomial core = witness_core(n, q);
      const auto d = divisor_set(n, q);
      for (const auto& u : s.basis_R1())
        if (s.divides(u, core))
          EXPECT_TRUE(std::binary_search(d.begin(), d.end(), u)) << "n=" << n << " q=" << q << " u=" << u.to_string();
    }
  }
}

TEST(WitnessSets, RowOneAnnihilators) {
  EXPECT_EQ(kp1_annihilator_set(DimVector({2, 2, 1})).size(), 8u);
  EXPECT_EQ(kp1_annihilator_set(DimVector({1, 1, 1})).size(), 3u);
  EXPECT_EQ(kp1_annihilator_set(DimVector({1, 1})).size(), 1u);
  EXPECT_EQ(kp1_annihilator_set(DimVector({3, 2})).size(), 4u);
  EXPECT_THROW(kp1_annihilator_set(DimVector({3})), std::invalid_argument);
  for (const auto& raw : std::vector<std::vector<int>>{{1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {3, 2}}) {
    const DimVector a(raw);
    Straightener s(a);
    const Monomial core = kp1_cycle_spec(a, 1).core;
    for (const auto& v : kp1_annihilator_set(a))
      EXPECT_TRUE(s.straighten(core.times(v)).empty()) << a.to_string() << " " << v.to_string();
  }
}

TEST(CycleSpecs, Ranges) {
  const auto spec = ones_cycle_spec(4, 2, 6);
  EXPECT_EQ(spec.support, divisor_set(4, 2));
  EXPECT_THROW(ones_cycle_spec(4, 2, 5), std::invalid_argument);
  EXPECT_THROW(ones_cycle_spec(4, 2, 11), std::invalid_argument);
  const auto full = ones_cycle_spec(4, 2, 10);
  EXPECT_EQ(full.support, annihilator_set(4, 2));
  const auto mid = ones_cycle_spec(4, 2, 8);
  EXPECT_TRUE(std::includes(mid.support.begin(), mid.support.end(), spec.support.begin(), spec.support.end()));
  EXPECT_THROW(kp1_cycle_spec(DimVector({2, 2, 1}), 9), std::invalid_argument);
  EXPECT_THROW(kp1_cycle_spec(DimVector({2, 2, 1}), 0), std::invalid_argument);
}

TEST(BuildCycle, SingleWedgeFactor) {
  Straightener ring(DimVector({1, 1}));
  KoszulComplex cx(ring);
  const auto spec = kp1_cycle_spec(ring.dims(), 1);
  const KoszulVector c = build_cycle(cx, spec);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(std::abs(c.begin()->second.get_si()), 1);
  EXPECT_EQ(verify_witness(cx, spec).is_cycle, true);
  EXPECT_EQ(verify_witness(cx, spec).is_boundary, false);
}

TEST(BuildCycle, TermsCarryTheDivisorWedge) {
  Straightener ring(ones(4));
  KoszulComplex cx(ring);
  const auto spec = ones_cycle_spec(4, 2, 6);
  const KoszulVector c = build_cycle(cx, spec);
  ASSERT_FALSE(c.empty());
  for (const auto& [b, value] : c) {
    EXPECT_EQ(std::popcount(b.subset), 6);
    EXPECT_NE(value, 0);
  }
}

TEST(BuildCycle, RejectsDependentSupport) {
  Straightener ring(DimVector({1, 1}));
  KoszulComplex cx(ring);
  const auto pts = all_points(2);
  CycleSpec spec{ring.dims(), 2, 1, {pts[0], pts[0]}, Monomial({pts[1]})};
  EXPECT_THROW(build_cycle(cx, spec), std::invalid_argument);
  CycleSpec wrong_shape{ring.dims(), 3, 1, {pts[0]}, Monomial({pts[1]})};
  EXPECT_THROW(build_cycle(cx, wrong_shape), std::invalid_argument);
}

TEST(VerifyVector, BoundariesAreDetected) {
  Straightener ring(DimVector({2, 1, 1}));
  KoszulComplex cx(ring);
  const int p = 4, q = 1;
  const auto domain = cx.basis(p + 1, q - 1);
  for (std::size_t j = 0; j < domain.size(); j += 11) {
    const KoszulVector b = cx.apply(p + 1, q - 1, KoszulVector{{domain[j], Integer(1)}});
    if (b.empty())
      continue;
    const WitnessReport r = verify_vector(cx, p, q, b);
    EXPECT_TRUE(r.is_cycle);
    EXPECT_TRUE(r.is_boundary);
  }
  const WitnessReport zero = verify_vector(cx, p, q, KoszulVector{});
  EXPECT_TRUE(zero.is_cycle);
  EXPECT_TRUE(zero.is_boundary);
}

TEST(VerifyWitness, RowOneNonVanishing) {
  for (const auto& raw : std::vector<std::vector<int>>{{1, 1}, {1, 1, 1}, {2, 1, 1}, {2, 2, 1}}) {
    const DimVector a(raw);
    Straightener ring(a);
    KoszulComplex cx(ring);
    const int top = static_cast<int>(kp1_annihilator_set(a).size());
    for (int p = 1; p <= top; ++p) {
      const WitnessReport r = verify_witness(cx, kp1_cycle_spec(a, p));
      EXPECT_TRUE(r.is_cycle) << a.to_string() << " p=" << p;
      EXPECT_FALSE(r.is_boundary) << a.to_string() << " p=" << p;
      if (cx.generators() <= 12)
        EXPECT_GE(kpq_dim(a, p, 1), 1u);
    }
  }
}

TEST(VerifyWitness, OnesInHigherRows) {
  Straightener ring(ones(4));
  KoszulComplex cx(ring);
  for (int p : {6, 8, 10}) {
    const WitnessReport r = verify_witness(cx, ones_cycle_spec(4, 2, p));
    EXPECT_TRUE(r.is_cycle) << p;
    EXPECT_FALSE(r.is_boundary) << p;
  }
  Straightener small(ones(3));
  KoszulComplex cx3(small);
  for (int q = 1; q <= 2; ++q) {
    const int low = (1 << (q + 1)) - 2, high = static_cast<int>(annihilator_set(3, q).size());
    for (int p = low; p <= high; ++p) {
      const WitnessReport r = verify_witness(cx3, ones_cycle_spec(3, q, p));
      EXPECT_TRUE(r.is_cycle && !r.is_boundary) << "q=" << q << " p=" << p;
      EXPECT_GE(kpq_dim(ones(3), p, q), 1u);
    }
  }
}
