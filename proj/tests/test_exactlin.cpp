#include <gtest/gtest.h>

#include "ncspec/polynomial.hpp"
#include "ncspec/random.hpp"

using namespace ncspec;

namespace {

template <ExactScalar Scalar>
Matrix<Scalar> random_matrix(const FieldSpec& field, Index rows, Index cols, SplitMix64& rng, int sparsity) {
  Matrix<Scalar> m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      m(i, j) = rng.below(static_cast<std::uint64_t>(sparsity)) == 0 ? scalar_from_int<Scalar>(field, rng.between(-4, 4))
                                                                     : scalar_from_int<Scalar>(field, 0);
  return m;
}

}  // namespace

TEST(Rational, ArithmeticAndFormatting) {
  const auto q = FieldSpec::rationals();
  const Rational half = parse_scalar<Rational>(q, "3/6");
  EXPECT_EQ(to_string(half), "1/2");
  EXPECT_EQ(half + half, Rational(1));
  EXPECT_EQ(to_string(parse_scalar<Rational>(q, "-4")), "-4");
  EXPECT_THROW(parse_scalar<Rational>(q, "1/0"), ValidationError);
  EXPECT_THROW(parse_scalar<Rational>(q, "abc"), ValidationError);
}

TEST(Residue, ArithmeticModSeven) {
  const Residue a(3, 7), b(5, 7);
  EXPECT_EQ((a * b).value(), 1);
  EXPECT_EQ(a.inverse(), b);
  EXPECT_EQ((a - b).value(), 5);
  EXPECT_EQ((-a).value(), 4);
  EXPECT_EQ((a / b).value(), 2);  // 3 * 3
  EXPECT_THROW(Residue(0, 7).inverse(), std::domain_error);
}

TEST(Residue, UntypedLiteralAdoptsModulus) {
  const Residue a(6, 7);
  const Residue sum = a + Residue(1);
  EXPECT_EQ(sum.modulus(), 7U);
  EXPECT_TRUE(sum.is_zero());
}

TEST(Field, ParseAndFormat) {
  EXPECT_EQ(to_string(parse_field("Q")), "Q");
  EXPECT_EQ(to_string(parse_field("Fp:5")), "Fp:5");
  EXPECT_EQ(parse_field("Fp:13").characteristic, 13U);
  EXPECT_THROW(parse_field("Fp:4"), ValidationError);
  EXPECT_THROW(parse_field("R"), ValidationError);
}

TEST(Field, ResidueParsingChecksModulus) {
  const auto f7 = FieldSpec::prime(7);
  EXPECT_EQ(parse_scalar<Residue>(f7, "3 mod 7").value(), 3);
  EXPECT_EQ(parse_scalar<Residue>(f7, "10").value(), 3);
  EXPECT_EQ(parse_scalar<Residue>(f7, "1/2").value(), 4);
  EXPECT_THROW(parse_scalar<Residue>(f7, "3 mod 5"), ValidationError);
}

TEST(Linalg, KernelOfKnownMatrix) {
  const auto q = FieldSpec::rationals();
  Matrix<Rational> m(2, 3);
  m << Rational(1), Rational(2), Rational(3), Rational(2), Rational(4), Rational(6);
  EXPECT_EQ(rank<Rational>(m), 1);
  const auto k = kernel<Rational>(m);
  EXPECT_EQ(k.dim(), 2);
  for (Index i = 0; i < k.dim(); ++i) EXPECT_TRUE(is_zero_matrix(Matrix<Rational>(m * k.basis_vector(i))));
  (void)q;
}

TEST(Linalg, SubspaceCanonicalForm) {
  std::vector<Vector<Rational>> a{Vector<Rational>(3), Vector<Rational>(3)};
  a[0] << Rational(1), Rational(1), Rational(0);
  a[1] << Rational(0), Rational(1), Rational(1);
  std::vector<Vector<Rational>> b{a[0] + a[1], a[0] - a[1]};
  EXPECT_EQ(Subspace<Rational>::span(a, 3), Subspace<Rational>::span(b, 3));
}

template <class Scalar>
void rank_nullity_property(const FieldSpec& field, std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (int trial = 0; trial < 60; ++trial) {
    const Index rows = 1 + static_cast<Index>(rng.below(5));
    const Index cols = 1 + static_cast<Index>(rng.below(5));
    const Matrix<Scalar> m = random_matrix<Scalar>(field, rows, cols, rng, 2);
    const auto k = kernel<Scalar>(m);
    EXPECT_EQ(rank<Scalar>(m) + k.dim(), cols);
    for (Index i = 0; i < k.dim(); ++i) EXPECT_TRUE(is_zero_matrix(Matrix<Scalar>(m * k.basis_vector(i))));
    const Matrix<Scalar> r = rref<Scalar>(m);
    EXPECT_EQ(rref<Scalar>(r), r);
  }
}

TEST(LinalgProperty, RankNullityOverQ) { rank_nullity_property<Rational>(FieldSpec::rationals(), 11); }
TEST(LinalgProperty, RankNullityOverF5) { rank_nullity_property<Residue>(FieldSpec::prime(5), 12); }
TEST(LinalgProperty, RankNullityOverF2) { rank_nullity_property<Residue>(FieldSpec::prime(2), 13); }

template <class Scalar>
void modular_law_property(const FieldSpec& field, std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = 2 + static_cast<Index>(rng.below(4));
    const auto u = Subspace<Scalar>::span(random_matrix<Scalar>(field, 1 + static_cast<Index>(rng.below(3)), n, rng, 2));
    const auto w = Subspace<Scalar>::span(random_matrix<Scalar>(field, 1 + static_cast<Index>(rng.below(3)), n, rng, 2));
    const auto sum = subspace_sum(u, w);
    const auto meet = subspace_intersect(u, w);
    EXPECT_EQ(sum.dim() + meet.dim(), u.dim() + w.dim());
    EXPECT_TRUE(sum.contains(u) && sum.contains(w));
    EXPECT_TRUE(u.contains(meet) && w.contains(meet));
  }
}

TEST(LinalgProperty, DimensionFormulaOverQ) { modular_law_property<Rational>(FieldSpec::rationals(), 21); }
TEST(LinalgProperty, DimensionFormulaOverF3) { modular_law_property<Residue>(FieldSpec::prime(3), 22); }

TEST(LinalgProperty, SolveReproducesRightHandSide) {
  SplitMix64 rng(31);
  const auto q = FieldSpec::rationals();
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix<Rational> a = random_matrix<Rational>(q, 3, 3, rng, 1);
    const Matrix<Rational> x = random_matrix<Rational>(q, 3, 1, rng, 1);
    const Matrix<Rational> b = a * x;
    const auto sol = solve<Rational>(a, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(Matrix<Rational>(a * *sol), b);
  }
}

TEST(Polynomial, BerlekampSplitsXFourMinusOneOverF5) {
  const auto f5 = FieldSpec::prime(5);
  Polynomial<Residue> f(std::vector<Residue>{Residue(4, 5), Residue(0, 5), Residue(0, 5), Residue(0, 5), Residue(1, 5)});
  const auto factors = berlekamp_factor(f, 5);
  ASSERT_EQ(factors.size(), 4U);
  Polynomial<Residue> product = Polynomial<Residue>::constant(Residue(1, 5));
  for (const auto& g : factors) {
    EXPECT_EQ(g.degree(), 1);
    product = product * g;
  }
  EXPECT_EQ(with_characteristic(product, 5).coeffs(), f.coeffs());
  (void)f5;
}

TEST(Polynomial, BerlekampKeepsIrreducibleQuadratic) {
  // x^2 + 1 is irreducible over F3.
  Polynomial<Residue> f(std::vector<Residue>{Residue(1, 3), Residue(0, 3), Residue(1, 3)});
  EXPECT_EQ(berlekamp_factor(f, 3).size(), 1U);
}

TEST(Polynomial, RationalRoots) {
  // (2x - 1)(x + 3)(x^2 + 1)
  const auto p = Polynomial<Rational>(std::vector<Rational>{Rational(-1), Rational(2)}) *
                 Polynomial<Rational>(std::vector<Rational>{Rational(3), Rational(1)}) *
                 Polynomial<Rational>(std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
  auto roots = rational_roots(p);
  ASSERT_TRUE(roots.has_value());
  std::vector<Rational> found = *roots;
  std::sort(found.begin(), found.end());
  ASSERT_EQ(found.size(), 2U);
  EXPECT_EQ(found[0], Rational(-3));
  EXPECT_EQ(found[1], Rational(1, 2));
}

TEST(Polynomial, SquarefreePartDropsRepeatedFactors) {
  // (x - 1)^2 (x + 2) over Q
  const auto a = Polynomial<Rational>::linear_root(Rational(1));
  const auto b = Polynomial<Rational>::linear_root(Rational(-2));
  const auto sf = squarefree_part(a * a * b, 0);
  EXPECT_EQ(sf.coeffs(), (a * b).monic().coeffs());
}

TEST(Polynomial, MinimalPolynomialOfNilpotentJordanBlock) {
  Matrix<Rational> j = zero_matrix<Rational>(3, 3);
  j(0, 1) = Rational(1);
  j(1, 2) = Rational(1);
  const auto mu = minimal_polynomial<Rational>(j);
  EXPECT_EQ(mu.degree(), 3);
  EXPECT_TRUE(is_zero_matrix(evaluate_at(mu, j)));
}
