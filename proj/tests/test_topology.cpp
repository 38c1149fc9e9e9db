#include <gtest/gtest.h>

#include "ncspec/random.hpp"
#include "ncspec/topology.hpp"
#include "ncspec/scalar.hpp"

using namespace ncspec;

// Labeled topologies on n points: 1, 4, 29, 355; up to homeomorphism:
// 1, 3, 9, 33.
TEST(Topology, EnumerationCounts) {
  EXPECT_EQ(enumerate_topologies(1).size(), 1U);
  EXPECT_EQ(enumerate_topologies(2).size(), 4U);
  EXPECT_EQ(enumerate_topologies(3).size(), 29U);
  EXPECT_EQ(enumerate_topologies(4).size(), 355U);
  EXPECT_EQ(topologies_up_to_homeomorphism(1).size(), 1U);
  EXPECT_EQ(topologies_up_to_homeomorphism(2).size(), 3U);
  EXPECT_EQ(topologies_up_to_homeomorphism(3).size(), 9U);
  EXPECT_EQ(topologies_up_to_homeomorphism(4).size(), 33U);
}

TEST(Topology, DuplicateClosedSetsCollapse) {
  EXPECT_EQ(FiniteSpace(2, {0b00, 0b11, 0b01, 0b10, 0b01}).closed_count(), 4U);
}

TEST(Topology, RejectsFamiliesThatAreNotClosed) {
  EXPECT_THROW(FiniteSpace(2, {0b01}), ValidationError);               // no empty or full set
  EXPECT_THROW(FiniteSpace(3, {0, 0b001, 0b010, 0b111}), ValidationError);  // union {0,1} missing
  EXPECT_THROW(FiniteSpace(2, {0, 0b100, 0b11}), ValidationError);     // stray point
}

TEST(Topology, ClosureAndInterior) {
  // Sierpinski space: closed sets {}, {1}, {0,1}.
  const FiniteSpace s(2, {0, 0b10, 0b11});
  EXPECT_EQ(s.closure(0b01), 0b11U);
  EXPECT_EQ(s.closure(0b10), 0b10U);
  EXPECT_EQ(s.closed_interior(0b01), 0U);
  EXPECT_EQ(s.index_of(0b10), 1U);
  EXPECT_THROW(s.index_of(0b01), ValidationError);
}

TEST(Correspondence, ImagesAndPreimages) {
  const Correspondence c(2, 3, {0b011, 0b100});
  EXPECT_EQ(c.image(0b11), 0b111U);
  EXPECT_EQ(c.preimage(0b001), 0b01U);
  EXPECT_EQ(c.strong_preimage(0b001), 0U);
  EXPECT_EQ(c.strong_preimage(0b011), 0b01U);
  EXPECT_EQ(c.single_valued_witness(), 0);
}

TEST(CorrespondenceProperty, ComplementDuality) {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + static_cast<int>(rng.below(5)), n = 1 + static_cast<int>(rng.below(5));
    std::vector<PointSet> table;
    for (int x = 0; x < m; ++x) table.push_back(static_cast<PointSet>(rng.below(std::uint64_t{1} << n)));
    const Correspondence c(m, n, table);
    const PointSet v = static_cast<PointSet>(rng.below(std::uint64_t{1} << n));
    EXPECT_EQ(full_set(m) & ~c.preimage(v), c.strong_preimage(full_set(n) & ~v));
  }
}

TEST(Adjunction, IdentityIsSelfAdjoint) {
  for (const auto& x : enumerate_topologies(3)) {
    const auto id = identity_functor(x);
    EXPECT_TRUE(is_left_adjoint(id, id));
    const auto psi = find_right_adjoint(id);
    ASSERT_TRUE(psi.has_value());
    EXPECT_EQ(*psi, id);
  }
}

TEST(Adjunction, DiscreteSourceMakesEveryCorrespondenceContinuous) {
  const FiniteSpace d = FiniteSpace::discrete(2);
  for (const auto& y : enumerate_topologies(2))
    for (PointSet a = 0; a < 4; ++a)
      for (PointSet b = 0; b < 4; ++b) {
        const Correspondence c(2, 2, {a, b});
        EXPECT_TRUE(is_continuous(c, d, y));
        EXPECT_TRUE(is_left_adjoint(phi_upper(c, d, y), phi_lower(c, d, y)));
      }
}

// The Sierpinski identity map from the discrete space is continuous, but the
// reverse map is not; the adjunction tracks this.
TEST(Adjunction, SierpinskiWitness) {
  const FiniteSpace d = FiniteSpace::discrete(2);
  const FiniteSpace s(2, {0, 0b10, 0b11});
  const Correspondence id(2, 2, {0b01, 0b10});
  EXPECT_TRUE(is_continuous(id, d, s));
  EXPECT_FALSE(is_continuous(id, s, d));
  const auto w = left_adjoint_witness(phi_upper(id, s, d), phi_lower(id, s, d));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(s.is_closed(w->u));
  EXPECT_TRUE(d.is_closed(w->v));
}

TEST(AdjunctionProperty, ContinuityMatchesAdjunctionOnThreePoints) {
  const auto spaces = enumerate_topologies(3);
  SplitMix64 rng(17);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto& x = spaces[rng.below(spaces.size())];
    const auto& y = spaces[rng.below(spaces.size())];
    std::vector<PointSet> table;
    for (int p = 0; p < 3; ++p) table.push_back(static_cast<PointSet>(rng.below(8)));
    const Correspondence c(3, 3, table);
    const auto upper = phi_upper(c, x, y);
    EXPECT_TRUE(upper.is_monotone());
    EXPECT_EQ(is_continuous(c, x, y), is_left_adjoint(upper, phi_lower(c, x, y)));
    EXPECT_TRUE(find_right_adjoint(upper).has_value());
  }
}
