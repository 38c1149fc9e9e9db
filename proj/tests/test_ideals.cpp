#include <gtest/gtest.h>

#include "ncspec/harness.hpp"

using namespace ncspec;

namespace {

const FieldSpec q = FieldSpec::rationals();

template <class Scalar>
Ideal<Scalar> ideal_spanned(const AlgebraPtr<Scalar>& a, std::initializer_list<Index> basis_indices) {
  std::vector<Vector<Scalar>> v;
  for (Index i : basis_indices) v.push_back(a->basis_element(i));
  return Ideal<Scalar>::checked(a, Subspace<Scalar>::span(v, a->dim()));
}

}  // namespace

TEST(Radical, TriangularOverQ) {
  const auto t2 = upper_triangular_algebra<Rational>(q, 2);
  EXPECT_EQ(jacobson_radical(t2), ideal_spanned(t2, {1}));
  const auto t3 = upper_triangular_algebra<Rational>(q, 3);
  EXPECT_EQ(jacobson_radical(t3).dim(), 3);
  EXPECT_EQ(nilpotency_index(jacobson_radical(t3), Ideal<Rational>::zero(t3)), 3);
}

TEST(Radical, SemisimpleAlgebrasHaveZeroRadical) {
  EXPECT_TRUE(jacobson_radical(matrix_algebra<Rational>(q, 2)).is_zero());
  EXPECT_TRUE(jacobson_radical(group_algebra<Rational>(q, symmetric_group_3_table())).is_zero());
  EXPECT_TRUE(jacobson_radical(group_algebra<Residue>(FieldSpec::prime(5), cyclic_group_table(4))).is_zero());
}

// Radical dimensions of modular group algebras: F_p[C_{p^k}] is local with
// radical of codimension 1; F2[S3] = F2 x M2(F2) modulo a radical of dim 1;
// F3[S3] has two one-dimensional simple modules, so its radical has dim 4.
TEST(Radical, ModularGroupAlgebras) {
  const auto f2 = FieldSpec::prime(2);
  const auto f3 = FieldSpec::prime(3);
  EXPECT_EQ(jacobson_radical(group_algebra<Residue>(f2, cyclic_group_table(2))).dim(), 1);
  EXPECT_EQ(jacobson_radical(group_algebra<Residue>(f2, cyclic_group_table(4))).dim(), 3);
  EXPECT_EQ(jacobson_radical(group_algebra<Residue>(f3, cyclic_group_table(3))).dim(), 2);
  EXPECT_EQ(jacobson_radical(group_algebra<Residue>(f2, symmetric_group_3_table())).dim(), 1);
  EXPECT_EQ(jacobson_radical(group_algebra<Residue>(f3, symmetric_group_3_table())).dim(), 4);
}

TEST(Radical, SmallCharacteristicTriangular) {
  const auto f2 = FieldSpec::prime(2);
  EXPECT_EQ(jacobson_radical(upper_triangular_algebra<Residue>(f2, 3)).dim(), 3);
  EXPECT_TRUE(jacobson_radical(matrix_algebra<Residue>(f2, 2)).is_zero());
}

TEST(RadicalProperty, NilpotentWithSemisimpleQuotient) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    InstanceSpec spec;
    spec.seed = seed;
    spec.field = std::array{FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5), q}[seed % 4];
    visit_field(spec.field, [&]<class Scalar>(std::type_identity<Scalar>) {
      const auto inst = generate_instance<Scalar>(spec);
      for (const auto& a : {inst.hom.source(), inst.hom.target()}) {
        const auto rad = jacobson_radical(a);
        EXPECT_TRUE(nilpotency_index(rad, Ideal<Scalar>::zero(a)).has_value()) << inst.description;
        auto [quotient, pi] = quotient_algebra(rad);
        EXPECT_TRUE(jacobson_radical(quotient).is_zero()) << inst.description;
      }
    });
  }
}

TEST(IdealEnumeration, TriangularOverF2HasFiveIdeals) {
  const auto t2 = upper_triangular_algebra<Residue>(FieldSpec::prime(2), 2);
  const auto all = exhaustive_ideal_enumeration(t2);
  ASSERT_EQ(all.size(), 5U);
  std::vector<Ideal<Residue>> expected{Ideal<Residue>::zero(t2), ideal_spanned(t2, {1}), ideal_spanned(t2, {0, 1}),
                                       ideal_spanned(t2, {1, 2}), Ideal<Residue>::whole(t2)};
  for (const auto& e : expected) EXPECT_NE(std::find(all.begin(), all.end(), e), all.end()) << e.describe();
}

TEST(IdealEnumeration, MatrixAlgebraOverF2IsSimple) {
  const auto m2 = matrix_algebra<Residue>(FieldSpec::prime(2), 2);
  const auto all = exhaustive_ideal_enumeration(m2);
  ASSERT_EQ(all.size(), 2U);
  EXPECT_TRUE(all[0].is_zero() || all[1].is_zero());
}

TEST(IdealEnumeration, ProductOfFieldsHasFourIdeals) {
  const auto f2 = FieldSpec::prime(2);
  const auto k = group_algebra<Residue>(f2, cyclic_group_table(1));
  EXPECT_EQ(exhaustive_ideal_enumeration(direct_product(*k, *k)).size(), 4U);
}

TEST(IdealEnumeration, RejectsLargeSearch) {
  EXPECT_THROW(exhaustive_ideal_enumeration(matrix_algebra<Rational>(q, 2)), CapExceeded);
  EXPECT_THROW(exhaustive_ideal_enumeration(matrix_algebra<Residue>(FieldSpec::prime(13), 3)), CapExceeded);
}

TEST(IdealOps, CheckedRejectsOneSidedIdeal) {
  const auto m2 = matrix_algebra<Rational>(q, 2);
  // span{e11, e21} is a left ideal only.
  EXPECT_TRUE(is_left_ideal(*m2, Subspace<Rational>::span(std::vector{m2->basis_element(0), m2->basis_element(2)}, 4)));
  EXPECT_THROW(ideal_spanned(m2, {0, 2}), ValidationError);
}

TEST(IdealOpsProperty, LatticeLaws) {
  const auto f3 = FieldSpec::prime(3);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    InstanceSpec spec;
    spec.seed = seed;
    spec.field = f3;
    const auto inst = generate_instance<Residue>(spec);
    const auto& a = inst.hom.target();
    SplitMix64 rng(seed);
    const auto i = two_sided_ideal_generated(a, std::vector{detail::random_element(*a, rng)});
    const auto j = two_sided_ideal_generated(a, std::vector{detail::random_element(*a, rng)});
    const auto ij = ideal_product(i, j);
    EXPECT_TRUE(ideal_intersect(i, j).contains(ij));
    EXPECT_TRUE(ideal_sum(i, j).contains(i) && ideal_sum(i, j).contains(j));
    EXPECT_EQ(ideal_sum(i, j), ideal_sum(j, i));
    const auto sqrt_i = prime_radical_of_ideal(i);
    EXPECT_TRUE(sqrt_i.contains(i));
    EXPECT_EQ(prime_radical_of_ideal(sqrt_i), sqrt_i);
    // f^-1 is compatible with intersections.
    const auto& f = inst.hom;
    EXPECT_EQ(preimage_under_hom(f, ideal_intersect(i, j)),
              ideal_intersect(preimage_under_hom(f, i), preimage_under_hom(f, j)));
  }
}

TEST(Bimodule, AnnihilatorsOfRegularBimodule) {
  const auto t2 = upper_triangular_algebra<Rational>(q, 2);
  const auto id = AlgebraHom<Rational>::identity(t2);
  const auto m = regular_bimodule(id, RegularOrientation::source_left);
  EXPECT_TRUE(bimodule_annihilator(m, Side::left).is_zero());
  EXPECT_TRUE(bimodule_annihilator(m, Side::right).is_zero());
}
