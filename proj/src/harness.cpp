#include "ncspec/harness.hpp"

#include <algorithm>
#include <array>

namespace ncspec {

std::string to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::subalgebra_of_matrix:
      return "subalgebra_of_matrix";
    case InstanceKind::triangular:
      return "triangular";
    case InstanceKind::group_algebra:
      return "group_algebra";
    case InstanceKind::product:
      return "product";
    case InstanceKind::quotient:
      return "quotient";
  }
  return "unknown";
}

std::string to_string(CheckFamily family) {
  switch (family) {
    case CheckFamily::spectrum:
      return "spectrum";
    case CheckFamily::prime_oracle:
      return "prime_oracle";
    case CheckFamily::nilpotency:
      return "nilpotency";
    case CheckFamily::consistency:
      return "consistency";
    case CheckFamily::lemma_3_14:
      return "lemma_3_14";
    case CheckFamily::identities:
      return "identities";
    case CheckFamily::stratified:
      return "stratified";
  }
  return "unknown";
}

std::vector<std::vector<int>> cyclic_group_table(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

namespace {

std::vector<std::array<int, 3>> s3_elements() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

}  // namespace

std::vector<std::vector<int>> symmetric_group_3_table() {
  const auto perms = s3_elements();
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int k = 0; k < 3; ++k) c[k] = perms[a][perms[b][k]];
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

int s3_sign(int k) {
  const auto perm = s3_elements()[static_cast<std::size_t>(k)];
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
  return inversions % 2;
}

void validate_instance_spec(const InstanceSpec& spec) {
  if (spec.max_dim < 1 || spec.max_dim > 9) throw ValidationError("max-dim must lie in [1, 9]");
  if (spec.field.is_prime_field()) {
    const auto p = spec.field.characteristic;
    if (p != 2 && p != 3 && p != 5 && p != 7 && p != 11 && p != 13)
      throw ValidationError("instance fields are Q and F_p for p in {2, 3, 5, 7, 11, 13}");
  }
}

InstanceSpec fuzz_instance_spec(std::uint64_t base_seed, int index, std::optional<FieldSpec> field, int max_dim) {
  static const std::array<FieldSpec, 3> cycle{FieldSpec::prime(5), FieldSpec::prime(7), FieldSpec::rationals()};
  InstanceSpec spec;
  spec.seed = base_seed + static_cast<std::uint64_t>(index);
  spec.field = field ? *field : cycle[static_cast<std::size_t>(index) % cycle.size()];
  spec.max_dim = max_dim;
  return spec;
}

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

Fixture fixture_ex1() {
  const auto q = FieldSpec::rationals();
  auto m2 = matrix_algebra<Rational>(q, 2);
  auto [r, f] = subalgebra_from_generators<Rational>(m2, {m2->basis_element(1)});
  return Fixture{"ex-2.4iii",
                 "R = span{1, e12} inside S = M2(Q): Spec S = {0}, Spec R = {span{e12}}",
                 f,
                 ExpectedFlags{true, true, true, true, true, true, false, std::nullopt, {2}}};
}

Fixture fixture_ex2() {
  const auto q = FieldSpec::rationals();
  auto t2 = upper_triangular_algebra<Rational>(q, 2);
  auto [r, f] = subalgebra_from_generators<Rational>(t2, {t2->basis_element(0)});
  return Fixture{"ex-diag-t2",
                 "diagonal matrices inside T2(Q): r single-valued and continuous, lambda not left adjoint to rho",
                 f,
                 ExpectedFlags{true, true, false, false, false, false, false, PrimePair{0, 1}, {1, std::nullopt}}};
}

Fixture fixture_ex3() {
  const auto q = FieldSpec::rationals();
  auto m2 = matrix_algebra<Rational>(q, 2);
  auto [r, f] = subalgebra_from_generators<Rational>(m2, {m2->basis_element(0)});
  return Fixture{"ex-diag-m2",
                 "diagonal matrices inside M2(Q): r(0) is both primes of k x k",
                 f,
                 ExpectedFlags{false, true, false, false, false, false, false, PrimePair{0, 0}, {std::nullopt, std::nullopt}}};
}

std::vector<Fixture> all_fixtures() { return {fixture_ex1(), fixture_ex2(), fixture_ex3()}; }

std::optional<Fixture> find_fixture(const std::string& name) {
  for (auto& f : all_fixtures())
    if (f.name == name) return f;
  return std::nullopt;
}

std::vector<std::string> compare_fixture(const Fixture& fixture, const HomAnalysis<Rational>& a) {
  std::vector<std::string> diff;
  auto flag = [&](const char* name, bool expected, bool actual) {
    if (expected != actual)
      diff.push_back(std::string(name) + ": expected " + (expected ? "true" : "false") + ", got " +
                     (actual ? "true" : "false"));
  };
  const auto& e = fixture.expected;
  flag("single_valued", e.single_valued, a.single_valued);
  flag("continuous", e.continuous, a.continuous);
  flag("condition_2prime", e.condition_2prime, a.condition_2prime);
  flag("adjoint", e.adjoint, a.adjoint);
  flag("criterion_3_13", e.criterion_3_13, a.criterion_3_13);
  flag("nearly_centralizing_primes", e.nearly_centralizing, a.nearly_centralizing_primes);
  flag("nearly_centralizing_ideals", e.nearly_centralizing, a.nearly_centralizing_ideals);
  flag("centralizing", e.centralizing, a.centralizing);
  flag("consistent", true, a.consistent());
  auto pair_text = [](const std::optional<PrimePair>& w) {
    return w ? "(P" + std::to_string(w->p + 1) + ", Q" + std::to_string(w->q + 1) + ")" : std::string("none");
  };
  const auto& w = a.criterion_3_13_witness;
  if (e.witness.has_value() != w.has_value() || (w && (w->p != e.witness->p || w->q != e.witness->q)))
    diff.push_back("criterion_3_13 witness: expected " + pair_text(e.witness) + ", got " + pair_text(w));
  if (a.prime_t != e.prime_t) diff.push_back("per-prime t values differ");
  return diff;
}

}  // namespace ncspec
