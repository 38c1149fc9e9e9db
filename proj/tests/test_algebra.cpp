#include <gtest/gtest.h>

#include "ncspec/harness.hpp"

using namespace ncspec;

namespace {

const FieldSpec q = FieldSpec::rationals();

template <class Scalar>
std::vector<std::vector<Vector<Scalar>>> table_of(const Algebra<Scalar>& a) {
  std::vector<std::vector<Vector<Scalar>>> t(static_cast<std::size_t>(a.dim()));
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) t[i].push_back(a.basis_product(i, j));
  return t;
}

}  // namespace

TEST(Algebra, MatrixUnitsMultiply) {
  const auto m2 = matrix_algebra<Rational>(q, 2);
  ASSERT_EQ(m2->dim(), 4);
  EXPECT_EQ(m2->labels(), (std::vector<std::string>{"e11", "e12", "e21", "e22"}));
  EXPECT_EQ(m2->basis_product(1, 2), m2->basis_element(0));  // e12 e21 = e11
  EXPECT_TRUE(is_zero_matrix(m2->basis_product(1, 1)));       // e12 e12 = 0
  EXPECT_FALSE(m2->is_commutative());
}

TEST(Algebra, NonAssociativeTableNamesTheTriple) {
  const auto t2 = upper_triangular_algebra<Rational>(q, 2);
  auto table = table_of(*t2);
  table[1][1] = t2->basis_element(2);  // e12 e12 := e22
  try {
    Algebra<Rational>(q, t2->labels(), table, t2->unit());
    FAIL() << "corrupted table accepted";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("triple"), std::string::npos);
  }
}

TEST(Algebra, WrongUnitRejected) {
  const auto t2 = upper_triangular_algebra<Rational>(q, 2);
  EXPECT_THROW(Algebra<Rational>(q, t2->labels(), table_of(*t2), t2->basis_element(0)), ValidationError);
}

TEST(Algebra, GroupAlgebras) {
  const auto c3 = group_algebra<Rational>(q, cyclic_group_table(3));
  const auto s3 = group_algebra<Rational>(q, symmetric_group_3_table());
  EXPECT_EQ(c3->dim(), 3);
  EXPECT_TRUE(c3->is_commutative());
  EXPECT_EQ(s3->dim(), 6);
  EXPECT_FALSE(s3->is_commutative());
}

TEST(Algebra, HomomorphismMustBeMultiplicative) {
  const auto m2 = matrix_algebra<Rational>(q, 2);
  const auto t2 = upper_triangular_algebra<Rational>(q, 2);
  // Transpose-like map e11->e11, e12->e21, e22->e22 is not multiplicative.
  Matrix<Rational> m = zero_matrix<Rational>(4, 3);
  m(0, 0) = Rational(1);
  m(2, 1) = Rational(1);
  m(3, 2) = Rational(1);
  EXPECT_THROW(AlgebraHom<Rational>(t2, m2, m), ValidationError);
  // The inclusion e12 -> e12 is.
  m(2, 1) = Rational(0);
  m(1, 1) = Rational(1);
  EXPECT_NO_THROW(AlgebraHom<Rational>(t2, m2, m));
}

TEST(Algebra, HomomorphismMustPreserveUnit) {
  const auto k = group_algebra<Rational>(q, cyclic_group_table(1));
  const auto m2 = matrix_algebra<Rational>(q, 2);
  Matrix<Rational> m = zero_matrix<Rational>(4, 1);
  m(0, 0) = Rational(1);  // 1 -> e11
  EXPECT_THROW(AlgebraHom<Rational>(k, m2, m), ValidationError);
}

TEST(Algebra, SubalgebraGeneratedByIdempotent) {
  const auto t2 = upper_triangular_algebra<Rational>(q, 2);
  auto [d, f] = subalgebra_from_generators<Rational>(t2, {t2->basis_element(0)});
  EXPECT_EQ(d->dim(), 2);
  EXPECT_TRUE(d->is_commutative());
  EXPECT_EQ(f.matrix().cols(), 2);
}

TEST(Algebra, DirectProductAndQuotient) {
  const auto t2 = upper_triangular_algebra<Rational>(q, 2);
  const auto m2 = matrix_algebra<Rational>(q, 2);
  EXPECT_EQ(direct_product(*t2, *m2)->dim(), 7);
  const auto rad = jacobson_radical(t2);
  auto [quotient, pi] = quotient_algebra(rad);
  EXPECT_EQ(quotient->dim(), 2);
  EXPECT_TRUE(quotient->is_commutative());
  EXPECT_TRUE(kernel<Rational>(pi.matrix()) == rad.carrier());
}

TEST(AlgebraProperty, RegularBimodulesAreValid) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    InstanceSpec spec;
    spec.seed = seed;
    spec.field = seed % 2 ? FieldSpec::prime(5) : q;
    visit_field(spec.field, [&]<class Scalar>(std::type_identity<Scalar>) {
      const auto inst = generate_instance<Scalar>(spec);
      EXPECT_NO_THROW(regular_bimodule(inst.hom, RegularOrientation::source_left));
      EXPECT_NO_THROW(regular_bimodule(inst.hom, RegularOrientation::target_left));
    });
  }
}

TEST(AlgebraProperty, HomomorphismsComposeAndPreserveProducts) {
  SplitMix64 rng(77);
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    InstanceSpec spec;
    spec.seed = seed;
    spec.field = FieldSpec::prime(7);
    const auto inst = generate_instance<Residue>(spec);
    const auto& f = inst.hom;
    for (int k = 0; k < 5; ++k) {
      const auto x = detail::random_element(*f.source(), rng);
      const auto y = detail::random_element(*f.source(), rng);
      EXPECT_EQ(f.apply(f.source()->product(x, y)), f.target()->product(f.apply(x), f.apply(y)));
    }
    const auto id = AlgebraHom<Residue>::identity(f.target());
    EXPECT_EQ(compose(id, f).matrix(), f.matrix());
  }
}
