#include <gtest/gtest.h>

#include "ncspec/harness.hpp"

using namespace ncspec;

TEST(SplitMix64, KnownVector) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
}

TEST(SplitMix64, BelowStaysInRange) {
  SplitMix64 rng(3);
  for (int k = 0; k < 1000; ++k) EXPECT_LT(rng.below(7), 7U);
}

TEST(InstanceSpec, Bounds) {
  InstanceSpec spec;
  spec.max_dim = 10;
  EXPECT_THROW(validate_instance_spec(spec), ValidationError);
  spec.max_dim = 0;
  EXPECT_THROW(validate_instance_spec(spec), ValidationError);
  spec.max_dim = 6;
  spec.field = FieldSpec::prime(17);
  EXPECT_THROW(validate_instance_spec(spec), ValidationError);
  spec.field = FieldSpec::prime(13);
  EXPECT_NO_THROW(validate_instance_spec(spec));
}

TEST(InstanceSpec, FuzzFieldCycle) {
  EXPECT_EQ(fuzz_instance_spec(10, 0, std::nullopt, 6).field, FieldSpec::prime(5));
  EXPECT_EQ(fuzz_instance_spec(10, 1, std::nullopt, 6).field, FieldSpec::prime(7));
  EXPECT_EQ(fuzz_instance_spec(10, 2, std::nullopt, 6).field, FieldSpec::rationals());
  EXPECT_EQ(fuzz_instance_spec(10, 3, std::nullopt, 6).field, FieldSpec::prime(5));
  EXPECT_EQ(fuzz_instance_spec(10, 4, std::nullopt, 6).seed, 14U);
  EXPECT_EQ(fuzz_instance_spec(10, 4, FieldSpec::prime(3), 5).field, FieldSpec::prime(3));
}

TEST(Generator, DeterministicForASeed) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    InstanceSpec spec;
    spec.seed = seed;
    spec.field = FieldSpec::prime(7);
    const auto a = generate_instance<Residue>(spec);
    const auto b = generate_instance<Residue>(spec);
    EXPECT_EQ(a.kind, b.kind);
    EXPECT_EQ(a.description, b.description);
    EXPECT_EQ(a.hom.matrix(), b.hom.matrix());
  }
}

TEST(Generator, EveryKindRespectsMaxDim) {
  for (auto kind : {InstanceKind::subalgebra_of_matrix, InstanceKind::triangular, InstanceKind::group_algebra,
                    InstanceKind::product, InstanceKind::quotient}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      InstanceSpec spec;
      spec.seed = seed;
      spec.kind = kind;
      spec.max_dim = 6;
      spec.field = FieldSpec::prime(5);
      const auto inst = generate_instance<Residue>(spec);
      EXPECT_EQ(inst.kind, kind);
      EXPECT_LE(inst.hom.source()->dim(), 6);
      EXPECT_LE(inst.hom.target()->dim(), 6);
    }
  }
}

TEST(CrossCheck, FixturesHaveNoFailures) {
  for (const auto& fixture : all_fixtures()) {
    const auto report = oracle_cross_check(fixture.hom, std::nullopt, 1);
    EXPECT_TRUE(report.ok()) << fixture.name << (report.failures.empty() ? "" : ": " + report.failures.front());
    EXPECT_GT(report.checks, 0);
    int total = 0;
    for (const auto& t : report.by_family) total += t.checks;
    EXPECT_EQ(total, report.checks);
  }
}

TEST(CrossCheck, GeneratedInstancesHaveNoFailures) {
  for (int k = 0; k < 30; ++k) {
    const auto spec = fuzz_instance_spec(500, k, std::nullopt, 5);
    visit_field(spec.field, [&]<class Scalar>(std::type_identity<Scalar>) {
      const auto inst = generate_instance<Scalar>(spec);
      const auto report = oracle_cross_check(inst.hom, inst.matrix_size, spec.seed);
      EXPECT_TRUE(report.failures.empty()) << inst.description << ": " << report.failures.front();
    });
  }
}

TEST(Fixtures, LookupByName) {
  EXPECT_TRUE(find_fixture("ex-diag-t2").has_value());
  EXPECT_FALSE(find_fixture("nope").has_value());
  EXPECT_EQ(all_fixtures().size(), 3U);
}
