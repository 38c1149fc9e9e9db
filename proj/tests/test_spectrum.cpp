#include <gtest/gtest.h>

#include "ncspec/harness.hpp"

using namespace ncspec;

namespace {

const FieldSpec q = FieldSpec::rationals();

template <class Scalar>
std::vector<Index> sorted_quotient_dims(const SpecSet<Scalar>& s) {
  std::vector<Index> out;
  for (const auto& p : s.primes()) out.push_back(p.quotient_dim);
  std::sort(out.begin(), out.end());
  return out;
}

template <class Scalar>
std::vector<Index> sorted_ranks(const SpecSet<Scalar>& s) {
  std::vector<Index> out;
  for (const auto& g : goldie_ranks(s)) out.push_back(g.rank);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Spec, MatrixAlgebraIsPrime) {
  const auto s = spec(matrix_algebra<Rational>(q, 2));
  ASSERT_EQ(s.size(), 1);
  EXPECT_TRUE(s.prime(0).ideal.is_zero());
  EXPECT_EQ(sorted_ranks(s), std::vector<Index>{2});
  EXPECT_EQ(sorted_ranks(spec(matrix_algebra<Rational>(q, 3))), std::vector<Index>{3});
}

TEST(Spec, SymmetricGroupOverQ) {
  const auto s = spec(group_algebra<Rational>(q, symmetric_group_3_table()));
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(sorted_quotient_dims(s), (std::vector<Index>{1, 1, 4}));
  EXPECT_EQ(sorted_ranks(s), (std::vector<Index>{1, 1, 2}));
}

// Q[C_n] = product of Q(zeta_d) over d | n.
TEST(Spec, CyclicGroupsOverQ) {
  EXPECT_EQ(spec(group_algebra<Rational>(q, cyclic_group_table(3))).size(), 2);
  EXPECT_EQ(sorted_quotient_dims(spec(group_algebra<Rational>(q, cyclic_group_table(4)))), (std::vector<Index>{1, 1, 2}));
}

// x^4 - 1 splits over F5, so F5[C4] = F5^4.
TEST(Spec, CyclicGroupOverF5Splits) {
  const auto s = spec(group_algebra<Residue>(FieldSpec::prime(5), cyclic_group_table(4)));
  EXPECT_EQ(s.size(), 4);
  EXPECT_EQ(sorted_ranks(s), (std::vector<Index>{1, 1, 1, 1}));
}

TEST(Spec, ModularSymmetricGroup) {
  const auto s2 = spec(group_algebra<Residue>(FieldSpec::prime(2), symmetric_group_3_table()));
  EXPECT_EQ(sorted_quotient_dims(s2), (std::vector<Index>{1, 4}));
  EXPECT_EQ(sorted_ranks(s2), (std::vector<Index>{1, 2}));
  const auto s3 = spec(group_algebra<Residue>(FieldSpec::prime(3), symmetric_group_3_table()));
  EXPECT_EQ(sorted_quotient_dims(s3), (std::vector<Index>{1, 1}));
}

TEST(Spec, TriangularHasTwoPrimesAndDiscreteTopology) {
  const auto t2 = upper_triangular_algebra<Rational>(q, 2);
  const auto s = spec(t2);
  EXPECT_EQ(s.size(), 2);
  EXPECT_EQ(s.radical().dim(), 1);
  EXPECT_EQ(all_closed_sets(s).closed_count(), 4U);
}

TEST(Spec, GoldieCertificate) {
  for (const auto& a : {matrix_algebra<Rational>(q, 2), matrix_algebra<Rational>(q, 3),
                        group_algebra<Rational>(q, symmetric_group_3_table())}) {
    for (const auto& g : goldie_ranks(spec(a))) {
      EXPECT_EQ(g.quotient_dim, g.rank * g.s);
      EXPECT_EQ(g.quotient_dim, g.rank * g.rank * g.center_dim);
    }
  }
}

TEST(Spec, StratificationByRank) {
  const auto s = spec(group_algebra<Rational>(q, symmetric_group_3_table()));
  const auto ranks = goldie_ranks(s);
  int ones = 0;
  for (int k = 0; k < s.size(); ++k) ones += ranks[static_cast<std::size_t>(k)].rank == 1 ? 1 : 0;
  EXPECT_EQ(popcount(spec_n(ranks, 1)), ones);
  EXPECT_EQ(spec_n(ranks, 2), s.all());
}

TEST(PrimeOracle, AgreesOnEveryIdealOfTriangularOverF2) {
  const auto t3 = upper_triangular_algebra<Residue>(FieldSpec::prime(2), 3);
  int primes = 0;
  for (const auto& i : exhaustive_ideal_enumeration(t3)) {
    EXPECT_EQ(is_prime(i), definitional_prime_oracle(i)) << i.describe();
    primes += is_prime(i) ? 1 : 0;
  }
  EXPECT_EQ(primes, 3);
}

TEST(PrimeOracle, WholeAlgebraIsNotPrime) {
  const auto m2 = matrix_algebra<Rational>(q, 2);
  EXPECT_FALSE(is_prime(Ideal<Rational>::whole(m2)));
  EXPECT_TRUE(is_prime(Ideal<Rational>::zero(m2)));
  EXPECT_TRUE(definitional_prime_oracle(Ideal<Rational>::zero(m2)));
}

TEST(SpecProperty, GaloisConnection) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    InstanceSpec spec_in;
    spec_in.seed = seed;
    spec_in.field = seed % 2 ? FieldSpec::prime(7) : q;
    visit_field(spec_in.field, [&]<class Scalar>(std::type_identity<Scalar>) {
      const auto inst = generate_instance<Scalar>(spec_in);
      const auto s = spec(inst.hom.target());
      for (PointSet u = 0; u <= s.all(); ++u) {
        const auto i = i_of(s, u);
        EXPECT_EQ(v_of(s, i), closure(s, u));
        EXPECT_EQ(i_of(s, v_of(s, i)), prime_radical_of_ideal(i));
        if (u == s.all()) break;
      }
    });
  }
}

TEST(SpecProperty, MinimalPrimesOverRadicalAreAllPrimes) {
  for (std::uint64_t seed = 50; seed < 70; ++seed) {
    InstanceSpec spec_in;
    spec_in.seed = seed;
    spec_in.field = FieldSpec::prime(5);
    const auto inst = generate_instance<Residue>(spec_in);
    const auto s = spec(inst.hom.source());
    EXPECT_EQ(minimal_primes_over(s, s.radical()), s.all());
    EXPECT_EQ(minimal_primes_over(s, Ideal<Residue>::whole(s.algebra())), PointSet{0});
  }
}
