#pragma once

// Seeded instance generators, the shipped fixtures, and brute-force oracles
// that re-derive the invariants of the other modules on each instance.

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ncspec/correspondence.hpp"
#include "ncspec/random.hpp"

namespace ncspec {

// ---------------------------------------------------------------------------
// Instances
// ---------------------------------------------------------------------------

enum class InstanceKind { subalgebra_of_matrix, triangular, group_algebra, product, quotient };

std::string to_string(InstanceKind kind);

struct InstanceSpec {
  std::uint64_t seed = 0;
  FieldSpec field = FieldSpec::rationals();
  /// Drawn from the seed (40/20/20/10/10) when absent.
  std::optional<InstanceKind> kind;
  /// Upper bound on dim R and dim S, at most 9.
  int max_dim = 6;
};

template <ExactScalar Scalar>
struct Instance {
  InstanceSpec spec;
  InstanceKind kind;
  std::string description;
  AlgebraHom<Scalar> hom;
  /// n when R is given as a subalgebra of M_n (so rad(R)^n = 0).
  std::optional<int> matrix_size;
};

/// Cayley tables of the groups used by the generator.
std::vector<std::vector<int>> cyclic_group_table(int n);
/// S3 on the permutations of {0,1,2} in lexicographic order (index 0 is the
/// identity).
std::vector<std::vector<int>> symmetric_group_3_table();
/// Sign of the k-th permutation in that order (0 even, 1 odd).
int s3_sign(int k);

void validate_instance_spec(const InstanceSpec& spec);

/// The i-th instance of a fuzz run: seed base + i, and the field fixed or
/// cycling through F5, F7, Q.
InstanceSpec fuzz_instance_spec(std::uint64_t base_seed, int index, std::optional<FieldSpec> field, int max_dim);

namespace detail {

template <ExactScalar Scalar>
Vector<Scalar> random_element(const Algebra<Scalar>& a, SplitMix64& rng) {
  Vector<Scalar> v(a.dim());
  for (Index k = 0; k < a.dim(); ++k)
    v(k) = rng.below(2) == 0 ? scalar_from_int<Scalar>(a.field(), 0) : scalar_from_int<Scalar>(a.field(), rng.between(-2, 2));
  return v;
}

template <ExactScalar Scalar>
Matrix<Scalar> basis_map(Index target_dim, const std::vector<Index>& images, const FieldSpec& field) {
  Matrix<Scalar> m = zero_matrix<Scalar>(target_dim, static_cast<Index>(images.size()));
  for (std::size_t i = 0; i < images.size(); ++i) m(images[i], static_cast<Index>(i)) = scalar_from_int<Scalar>(field, 1);
  return m;
}

/// M_2 ⊕ k as block-diagonal 3x3 matrices, basis e11, e12, e21, e22, e33.
template <ExactScalar Scalar>
AlgebraPtr<Scalar> block_m2_k(const FieldSpec& field) {
  auto m3 = matrix_algebra<Scalar>(field, 3);
  std::vector<Vector<Scalar>> gens;
  for (Index k : {Index{0}, Index{1}, Index{3}, Index{4}, Index{8}}) gens.push_back(m3->basis_element(k));
  return algebra_on_subspace(m3, Subspace<Scalar>::span(gens, m3->dim())).first;
}

template <ExactScalar Scalar>
std::pair<AlgebraHom<Scalar>, std::string> random_subalgebra_inclusion(const AlgebraPtr<Scalar>& s, SplitMix64& rng,
                                                                       const std::string& ambient) {
  const int count = 1 + static_cast<int>(rng.below(2));
  std::vector<Vector<Scalar>> gens;
  for (int g = 0; g < count; ++g) gens.push_back(random_element(*s, rng));
  auto [r, inclusion] = subalgebra_from_generators(s, gens);
  std::string text = "subalgebra of " + ambient + " generated by";
  for (const auto& g : gens) text += " " + s->format(g);
  return {inclusion, text};
}

template <ExactScalar Scalar>
AlgebraHom<Scalar> group_inclusion(const FieldSpec& field, const std::vector<std::vector<int>>& g,
                                   const std::vector<int>& subgroup) {
  std::vector<std::vector<int>> h(subgroup.size(), std::vector<int>(subgroup.size()));
  for (std::size_t a = 0; a < subgroup.size(); ++a)
    for (std::size_t b = 0; b < subgroup.size(); ++b) {
      const int prod = g[subgroup[a]][subgroup[b]];
      h[a][b] = static_cast<int>(std::find(subgroup.begin(), subgroup.end(), prod) - subgroup.begin());
    }
  std::vector<std::string> hn, gn;
  for (int x : subgroup) hn.push_back("g" + std::to_string(x));
  auto sub = group_algebra<Scalar>(field, h, hn);
  auto big = group_algebra<Scalar>(field, g);
  std::vector<Index> images(subgroup.begin(), subgroup.end());
  return AlgebraHom<Scalar>(sub, big, basis_map<Scalar>(big->dim(), images, field));
}

template <ExactScalar Scalar>
AlgebraHom<Scalar> group_quotient(const FieldSpec& field, const std::vector<std::vector<int>>& g,
                                  const std::vector<std::vector<int>>& q, const std::vector<int>& map) {
  auto big = group_algebra<Scalar>(field, g);
  auto small = group_algebra<Scalar>(field, q);
  std::vector<Index> images(map.begin(), map.end());
  return AlgebraHom<Scalar>(big, small, basis_map<Scalar>(small->dim(), images, field));
}

template <ExactScalar Scalar>
AlgebraPtr<Scalar> small_piece(const FieldSpec& field, SplitMix64& rng, int max_dim) {
  std::vector<std::function<AlgebraPtr<Scalar>()>> pieces{
      [&] { return matrix_algebra<Scalar>(field, 1); },
      [&] { return upper_triangular_algebra<Scalar>(field, 2); },
      [&] { return direct_product(*matrix_algebra<Scalar>(field, 1), *matrix_algebra<Scalar>(field, 1)); },
      [&] { return matrix_algebra<Scalar>(field, 2); },
  };
  while (true) {
    auto a = pieces[static_cast<std::size_t>(rng.below(pieces.size()))]();
    if (a->dim() <= max_dim) return a;
  }
}

template <ExactScalar Scalar>
Instance<Scalar> generate_once(const InstanceSpec& spec, InstanceKind kind, SplitMix64& rng) {
  const FieldSpec& field = spec.field;
  const std::uint32_t p = field.characteristic;
  switch (kind) {
    case InstanceKind::subalgebra_of_matrix: {
      // M_3 itself exceeds the dimension budget, so n = 3 uses the ambient
      // M_2 ⊕ k (block diagonal in M_3).
      const bool three = rng.below(2) == 1;
      auto s = three ? block_m2_k<Scalar>(field) : matrix_algebra<Scalar>(field, 2);
      auto [f, text] = random_subalgebra_inclusion(s, rng, three ? "M2+k in M3" : "M2");
      return Instance<Scalar>{spec, kind, text, f, three ? 3 : 2};
    }
    case InstanceKind::triangular: {
      const int n = 2 + static_cast<int>(rng.below(2));
      auto s = upper_triangular_algebra<Scalar>(field, n);
      auto [f, text] = random_subalgebra_inclusion(s, rng, "T" + std::to_string(n));
      return Instance<Scalar>{spec, kind, text, f, n};
    }
    case InstanceKind::group_algebra: {
      auto coprime = [&](int order) { return p == 0 || order % static_cast<int>(p) != 0; };
      const auto c2 = cyclic_group_table(2), c3 = cyclic_group_table(3), c4 = cyclic_group_table(4);
      const auto s3 = symmetric_group_3_table();
      std::vector<std::pair<std::string, std::function<AlgebraHom<Scalar>()>>> options;
      if (coprime(4)) {
        options.emplace_back("k[C2] -> k[C4]", [&] { return group_inclusion<Scalar>(field, c4, {0, 2}); });
        options.emplace_back("k[C4] -> k[C2]", [&] { return group_quotient<Scalar>(field, c4, c2, {0, 1, 0, 1}); });
      }
      if (coprime(6)) {
        options.emplace_back("k[C2] -> k[S3]", [&] { return group_inclusion<Scalar>(field, s3, {0, 1}); });
        options.emplace_back("k[C3] -> k[S3]", [&] { return group_inclusion<Scalar>(field, s3, {0, 3, 4}); });
        options.emplace_back("k[S3] -> k[C2]", [&] {
          return group_quotient<Scalar>(field, s3, c2, {s3_sign(0), s3_sign(1), s3_sign(2), s3_sign(3), s3_sign(4), s3_sign(5)});
        });
      }
      if (coprime(3)) {
        options.emplace_back("k -> k[C3]", [&] { return group_inclusion<Scalar>(field, c3, {0}); });
        options.emplace_back("k[C3] -> k", [&] { return group_quotient<Scalar>(field, c3, cyclic_group_table(1), {0, 0, 0}); });
      }
      if (coprime(2)) options.emplace_back("k[C2] -> k", [&] { return group_quotient<Scalar>(field, c2, cyclic_group_table(1), {0, 0}); });
      const auto& choice = options[static_cast<std::size_t>(rng.below(options.size()))];
      return Instance<Scalar>{spec, kind, choice.first, choice.second(), std::nullopt};
    }
    case InstanceKind::product: {
      auto a = small_piece<Scalar>(field, rng, spec.max_dim - 1);
      if (rng.below(2) == 0 && 2 * a->dim() <= spec.max_dim) {
        auto aa = direct_product(*a, *a);
        Matrix<Scalar> m(aa->dim(), a->dim());
        m << identity_matrix<Scalar>(a->dim()), identity_matrix<Scalar>(a->dim());
        return Instance<Scalar>{spec, kind, "diagonal A -> A x A, dim A = " + std::to_string(a->dim()),
                                AlgebraHom<Scalar>(a, aa, std::move(m)), std::nullopt};
      }
      auto b = small_piece<Scalar>(field, rng, spec.max_dim - static_cast<int>(a->dim()));
      auto ab = direct_product(*a, *b);
      Matrix<Scalar> m = zero_matrix<Scalar>(a->dim(), ab->dim());
      m.leftCols(a->dim()) = identity_matrix<Scalar>(a->dim());
      return Instance<Scalar>{spec, kind,
                              "projection A x B -> A, dims " + std::to_string(a->dim()) + ", " + std::to_string(b->dim()),
                              AlgebraHom<Scalar>(ab, a, std::move(m)), std::nullopt};
    }
    case InstanceKind::quotient: {
      AlgebraPtr<Scalar> a;
      switch (rng.below(3)) {
        case 0:
          a = upper_triangular_algebra<Scalar>(field, 3);
          break;
        case 1:
          a = direct_product(*upper_triangular_algebra<Scalar>(field, 2), *small_piece<Scalar>(field, rng, 3));
          break;
        default:
          a = block_m2_k<Scalar>(field);
          break;
      }
      Ideal<Scalar> i = two_sided_ideal_generated(a, std::vector<Vector<Scalar>>{random_element(*a, rng)});
      if (i.is_whole()) i = jacobson_radical(a);
      if (i.is_zero() && rng.below(2) == 0) i = jacobson_radical(a);
      if (i.is_zero()) return Instance<Scalar>{spec, kind, "identity of a dim " + std::to_string(a->dim()) + " algebra",
                                               AlgebraHom<Scalar>::identity(a), std::nullopt};
      auto [q, projection] = quotient_algebra(i);
      return Instance<Scalar>{spec, kind, "quotient by " + i.describe(), projection, std::nullopt};
    }
  }
  throw std::logic_error("unknown instance kind");
}

}  // namespace detail

/// Deterministic in the InstanceSpec: the same seed, field, kind and bound give the
/// same instance.
template <ExactScalar Scalar>
Instance<Scalar> generate_instance(const InstanceSpec& spec) {
  validate_instance_spec(spec);
  SplitMix64 rng(spec.seed);
  InstanceKind kind;
  if (spec.kind) {
    kind = *spec.kind;
  } else {
    const auto roll = rng.below(10);
    kind = roll < 4   ? InstanceKind::subalgebra_of_matrix
           : roll < 6 ? InstanceKind::triangular
           : roll < 8 ? InstanceKind::group_algebra
           : roll < 9 ? InstanceKind::product
                      : InstanceKind::quotient;
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    Instance<Scalar> inst = detail::generate_once<Scalar>(spec, kind, rng);
    if (inst.hom.source()->dim() <= spec.max_dim && inst.hom.target()->dim() <= spec.max_dim) return inst;
  }
  throw ValidationError("no " + to_string(kind) + " instance fits within max-dim " + std::to_string(spec.max_dim));
}

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

struct ExpectedFlags {
  bool single_valued;
  bool continuous;
  bool condition_2prime;
  bool adjoint;
  bool criterion_3_13;
  bool nearly_centralizing;
  bool centralizing;
  /// Expected prime-criterion witness (P index in Spec S, Q index in Spec R).
  std::optional<PrimePair> witness;
  /// Expected t for each prime of R.
  std::vector<std::optional<int>> prime_t;
};

struct Fixture {
  std::string name;
  std::string description;
  AlgebraHom<Rational> hom;
  ExpectedFlags expected;
};

/// EX1 (ex-2.4iii): R = span{1, e12} ⊂ M2.
Fixture fixture_ex1();
/// EX2 (ex-diag-t2): diagonal ⊂ T2.
Fixture fixture_ex2();
/// EX3 (ex-diag-m2): diagonal ⊂ M2.
Fixture fixture_ex3();
std::vector<Fixture> all_fixtures();
std::optional<Fixture> find_fixture(const std::string& name);

/// Differences between the expected and computed flags, one line each.
std::vector<std::string> compare_fixture(const Fixture& fixture, const HomAnalysis<Rational>& analysis);

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

/// Whether exhaustive enumeration over F_p^dim is within the 2^16 budget.
inline bool enumerable(const FieldSpec& field, Index dim, double budget = 65536.0) {
  if (!field.is_prime_field()) return false;
  double count = 1;
  for (Index k = 0; k < dim; ++k) count *= field.characteristic;
  return count <= budget;
}

/// Every two-sided ideal, sorted canonically. Each ideal is the sum of the
/// principal ideals of its elements, so the ideals are exactly the joins of
/// principal ideals; principal ideals are generated from every vector up to
/// scalars and closed under sums.
template <ExactScalar Scalar>
std::vector<Ideal<Scalar>> exhaustive_ideal_enumeration(const AlgebraPtr<Scalar>& a) {
  if (!enumerable(a->field(), a->dim()))
    throw CapExceeded("exhaustive ideal enumeration needs F_p with p^dim <= 2^16");
  const auto p = static_cast<long long>(a->field().characteristic);
  const Index n = a->dim();
  std::vector<Ideal<Scalar>> principal;
  auto insert = [](std::vector<Ideal<Scalar>>& list, Ideal<Scalar> i) {
    auto it = std::lower_bound(list.begin(), list.end(), i);
    if (it == list.end() || !(*it == i)) {
      list.insert(it, std::move(i));
      return true;
    }
    return false;
  };
  insert(principal, Ideal<Scalar>::zero(a));
  std::vector<long long> c(static_cast<std::size_t>(n), 0);
  for (Index lead = 0; lead < n; ++lead) {
    std::fill(c.begin(), c.end(), 0);
    c[static_cast<std::size_t>(lead)] = 1;
    while (true) {
      Vector<Scalar> x(n);
      for (Index k = 0; k < n; ++k) x(k) = scalar_from_int<Scalar>(a->field(), c[static_cast<std::size_t>(k)]);
      insert(principal, two_sided_ideal_generated(a, std::vector<Vector<Scalar>>{x}));
      Index pos = lead + 1;
      while (pos < n && c[static_cast<std::size_t>(pos)] == p - 1) c[static_cast<std::size_t>(pos++)] = 0;
      if (pos >= n) break;
      ++c[static_cast<std::size_t>(pos)];
    }
  }
  std::vector<Ideal<Scalar>> all = principal;
  for (std::size_t k = 0; k < all.size(); ++k)
    for (const auto& q : principal) insert(all, ideal_sum(all[k], q));
  return all;
}

struct CrossCheckOptions {
  /// Compare is_prime with the definitional oracle on every ideal when the
  /// algebra is enumerable within this many vectors.
  double ideal_enumeration_budget = 4096.0;
  /// Random correspondences for the complement-duality check.
  int random_correspondences = 8;
};

/// Groups of checks run by oracle_cross_check.
enum class CheckFamily {
  spectrum,           // primes are prime and incomparable, Spec meets to the radical
  prime_oracle,       // is_prime against the definitional oracle on every ideal
  nilpotency,         // rad(R)^n = 0 inside M_n, and inside a simple S of rank n
  consistency,        // the four equivalent conditions agree
  lemma_3_14,         // each P admits Q minimal over f^-1(P) with Q^S ⊆ P
  identities,         // bimodule, duality, union-formula and adjunction identities
  stratified,         // continuity of r on Spec_n for n = 1, 2, 3
};
inline constexpr std::size_t check_family_count = 7;
std::string to_string(CheckFamily family);

struct FamilyTally {
  int checks = 0;
  int failures = 0;
};

template <ExactScalar Scalar>
struct CrossCheckReport {
  std::optional<HomAnalysis<Scalar>> analysis;
  std::vector<std::string> failures;
  int checks = 0;
  int ideals_enumerated = 0;
  std::array<FamilyTally, check_family_count> by_family{};
  const FamilyTally& tally(CheckFamily f) const { return by_family[static_cast<std::size_t>(f)]; }
  /// Set when an instance cannot be analysed at all (e.g. NonSplitCenter).
  std::optional<std::string> error;
  bool ok() const { return failures.empty() && !error; }
};

namespace detail {

template <ExactScalar Scalar>
struct Checker {
  CrossCheckReport<Scalar>& report;
  CheckFamily family = CheckFamily::spectrum;
  void operator()(bool ok, const std::string& what) {
    auto& tally = report.by_family[static_cast<std::size_t>(family)];
    ++report.checks;
    ++tally.checks;
    if (!ok) {
      ++tally.failures;
      report.failures.push_back(what);
    }
  }
};

template <ExactScalar Scalar>
void check_spectrum(const SpecSet<Scalar>& s, const FiniteSpace& closed, const std::string& name, Checker<Scalar>& check) {
  const auto& a = s.algebra();
  Ideal<Scalar> meet = Ideal<Scalar>::whole(a);
  for (int k = 0; k < s.size(); ++k) {
    const auto& p = s.prime(k).ideal;
    meet = ideal_intersect(meet, p);
    check(is_prime(p), name + ": P" + std::to_string(k + 1) + " fails is_prime");
    check(definitional_prime_oracle(p), name + ": P" + std::to_string(k + 1) + " fails the definitional oracle");
    for (int l = 0; l < s.size(); ++l)
      if (l != k) check(!p.contains(s.prime(l).ideal), name + ": primes are not pairwise incomparable");
  }
  check(meet == s.radical(), name + ": intersection of Spec differs from the prime radical");
  check(closed.closed_count() == (std::size_t{1} << s.size()), name + ": some subset of Spec is not closed");
}

/// Radical ideals I(U) plus their squares and pairwise products.
template <ExactScalar Scalar>
std::vector<Ideal<Scalar>> test_ideals(const std::vector<Ideal<Scalar>>& radicals) {
  std::vector<Ideal<Scalar>> out = radicals;
  for (std::size_t i = 0; i < radicals.size(); ++i)
    for (std::size_t j = i; j < radicals.size(); ++j) out.push_back(ideal_product(radicals[i], radicals[j]));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <ExactScalar Scalar>
void check_bimodule(const Bimodule<Scalar>& m, const SpecSet<Scalar>& spec_a, const FiniteSpace& closed_a,
                    const SpecSet<Scalar>& spec_b, const FiniteSpace& closed_b, const std::vector<Ideal<Scalar>>& ideals_b,
                    const std::string& name, Checker<Scalar>& check) {
  std::vector<Ideal<Scalar>> alpha;
  for (const auto& j : ideals_b) alpha.push_back(alpha_ideal(m, j));
  for (std::size_t x = 0; x < ideals_b.size(); ++x) {
    for (std::size_t y = 0; y < ideals_b.size(); ++y)
      check(alpha_ideal(m, ideal_product(ideals_b[x], ideals_b[y])).contains(ideal_product(alpha[x], alpha[y])),
            name + ": J1^a J2^a not inside (J1 J2)^a");
    const Ideal<Scalar> root_of_alpha = prime_radical_of_ideal(alpha[x]);
    const Ideal<Scalar> alpha_of_root = alpha_ideal(m, prime_radical_of_ideal(ideals_b[x]));
    check(root_of_alpha.contains(alpha_of_root) && alpha_of_root.contains(alpha[x]),
          name + ": sqrt(J^a) ⊇ (sqrt J)^a ⊇ J^a fails");
  }
  const Correspondence ra = r_alpha(m, spec_a, spec_b);
  const FunctorOnClosed theta = theta_alpha(m, spec_a, closed_a, spec_b, closed_b);
  check(phi_upper(ra, closed_b, closed_a) == theta, name + ": phi^{r(a)} differs from theta^a");
}

}  // namespace detail

/// Re-derives, on one homomorphism, the invariants of the spectrum and
/// correspondence modules with independent computations.
template <ExactScalar Scalar>
CrossCheckReport<Scalar> oracle_cross_check(const AlgebraHom<Scalar>& f, std::optional<int> matrix_size,
                                            std::uint64_t seed, const CrossCheckOptions& options = {}) {
  CrossCheckReport<Scalar> report;
  detail::Checker<Scalar> check{report};
  try {
    const HomContext<Scalar> ctx(f);
    const auto& r = ctx.r_algebra();
    const auto& s = ctx.s_algebra();
    detail::check_spectrum(ctx.spec_r(), ctx.closed_r(), "Spec R", check);
    detail::check_spectrum(ctx.spec_s(), ctx.closed_s(), "Spec S", check);

    check.family = CheckFamily::prime_oracle;
    for (const auto& [alg, name] : {std::pair{r, "R"}, std::pair{s, "S"}}) {
      if (!enumerable(alg->field(), alg->dim(), options.ideal_enumeration_budget)) continue;
      for (const auto& i : exhaustive_ideal_enumeration(alg)) {
        ++report.ideals_enumerated;
        check(is_prime(i) == definitional_prime_oracle(i),
              std::string(name) + ": is_prime and the definitional oracle disagree on " + i.describe());
      }
    }

    // Nilpotency bound for subalgebras of matrix rings and of simple S.
    check.family = CheckFamily::nilpotency;
    if (matrix_size) {
      check(ideal_power(ctx.spec_r().radical(), *matrix_size).is_zero(),
            "rad(R)^" + std::to_string(*matrix_size) + " is not zero for R inside M_" + std::to_string(*matrix_size));
    }
    const bool injective = kernel<Scalar>(f.matrix()).is_zero();
    if (injective && ctx.spec_s().size() == 1 && ctx.spec_s().radical().is_zero()) {
      const int t = ctx.ranks_s().front().rank;
      check(ideal_power(ctx.spec_r().radical(), t).is_zero(), "rad(R)^t is not zero for R inside a simple S of rank t");
    }

    const HomAnalysis<Scalar> analysis = theorem_3_15_verify(ctx);
    check.family = CheckFamily::consistency;
    check(analysis.consistent(), "the equivalent conditions disagree");
    for (const auto& line : analysis.inconsistencies) report.failures.push_back("inconsistent: " + line);
    check.family = CheckFamily::lemma_3_14;
    check(analysis.lemma_3_14, "some prime P of S contains Q^S for no Q in r(P)");
    check.family = CheckFamily::identities;

    // Bimodules: S as R-S (its r(a) is r), S as S-R (its J^a is J^S), and R
    // as R-R.
    const auto ideals_r = detail::test_ideals(ctx.radical_ideals_r());
    const auto ideals_s = detail::test_ideals(ctx.radical_ideals_s());
    const auto restriction = regular_bimodule(f, RegularOrientation::source_left);
    const auto extension = regular_bimodule(f, RegularOrientation::target_left);
    const auto regular = regular_bimodule(AlgebraHom<Scalar>::identity(r), RegularOrientation::source_left);
    detail::check_bimodule(restriction, ctx.spec_r(), ctx.closed_r(), ctx.spec_s(), ctx.closed_s(), ideals_s, "R-S bimodule S", check);
    detail::check_bimodule(extension, ctx.spec_s(), ctx.closed_s(), ctx.spec_r(), ctx.closed_r(), ideals_r, "S-R bimodule S", check);
    detail::check_bimodule(regular, ctx.spec_r(), ctx.closed_r(), ctx.spec_r(), ctx.closed_r(), ideals_r, "R-R bimodule R", check);
    check(r_alpha(restriction, ctx.spec_r(), ctx.spec_s()).table() == ctx.r().table(), "r(a) of the R-S bimodule S differs from r");
    for (const auto& i : ideals_r)
      check(alpha_ideal(extension, i) == extension_annihilator(f, i), "I^a of the S-R bimodule differs from I^S");
    const Correspondence identity_r = r_alpha(regular, ctx.spec_r(), ctx.spec_r());
    for (int k = 0; k < ctx.spec_r().size(); ++k)
      check(identity_r.at(k) == (PointSet{1} << k), "r(a) of the regular bimodule is not the identity");

    // Radical invariance on both sides.
    for (const auto& j : ideals_s)
      check(v_of(ctx.spec_r(), preimage_under_hom(f, j)) == v_of(ctx.spec_r(), preimage_under_hom(f, prime_radical_of_ideal(j))),
            "V_R(f^-1 J) differs from V_R(f^-1 sqrt J) at J = " + j.describe());
    for (const auto& i : ideals_r) {
      check(v_of(ctx.spec_s(), extension_annihilator(f, i)) ==
                v_of(ctx.spec_s(), extension_annihilator(f, prime_radical_of_ideal(i))),
            "V_S(I^S) differs from V_S((sqrt I)^S) at I = " + i.describe());
      // The (2') identity evaluated at a non-radical ideal agrees with the
      // radical one.
      const PointSet u = v_of(ctx.spec_r(), i);
      check((ctx.r().strong_preimage(u) == v_of(ctx.spec_s(), extension_annihilator(f, i))) ==
                (ctx.r().strong_preimage(u) == v_of(ctx.spec_s(), extension_annihilator(f, ctx.ideal_of_r(u)))),
            "(2') at " + i.describe() + " disagrees with (2') at its radical");
    }

    // V_R(f^-1 J) ⊆ V_R(I) implies V_S(J) ⊆ V_S(I^S).
    for (const auto& i : ctx.radical_ideals_r())
      for (const auto& j : ctx.radical_ideals_s())
        if (is_subset(v_of(ctx.spec_r(), preimage_under_hom(f, j)), v_of(ctx.spec_r(), i)))
          check(is_subset(v_of(ctx.spec_s(), j), v_of(ctx.spec_s(), extension_annihilator(f, i))),
                "V_S(J) not inside V_S(I^S) at I = " + i.describe() + ", J = " + j.describe());

    // Right adjoints are unique.
    const FunctorOnClosed lambda = lambda_functor(ctx);
    const FunctorOnClosed rho = rho_functor(ctx);
    if (analysis.adjoint) {
      const auto psi = find_right_adjoint(lambda);
      check(psi.has_value() && *psi == rho, "the right adjoint of lambda is not rho");
    }
    check(lambda.is_monotone() && rho.is_monotone(), "lambda or rho is not monotone");

    // Complement duality and monotonicity of strong preimages.
    auto duality = [&](const Correspondence& c, const std::string& name) {
      const PointSet xs = full_set(c.source_points()), ys = full_set(c.target_points());
      for (PointSet v = 0; v <= ys; ++v) {
        check((xs & ~c.preimage(v)) == c.strong_preimage(ys & ~v), name + ": X - c^-1 V != c^[-1](Y - V)");
        for (PointSet w = v;; w = (w + 1) | v) {
          check(is_subset(c.strong_preimage(v), c.strong_preimage(w)), name + ": strong preimage not monotone");
          if (w == ys) break;
        }
        if (v == ys) break;
      }
    };
    duality(ctx.r(), "r");
    SplitMix64 rng(seed ^ 0xC0FFEEULL);
    for (int k = 0; k < options.random_correspondences; ++k) {
      const int m = 1 + static_cast<int>(rng.below(4)), n = 1 + static_cast<int>(rng.below(4));
      std::vector<PointSet> table;
      for (int x = 0; x < m; ++x) table.push_back(static_cast<PointSet>(rng.below(std::uint64_t{1} << n)));
      duality(Correspondence(m, n, std::move(table)), "random correspondence");
    }

    check(!formula_2_4iv_witness(ctx).has_value(), "r^[-1]V_R(I) differs from the union of V_S(<f(I)^t>)");
    const SemiprimeContraction semiprime = semiprime_contraction_case(ctx);
    check(!semiprime.identity_witness.has_value(), "semiprime contractions but r^[-1]V_R(I) != V_S(<f(I)>)");
    check.family = CheckFamily::stratified;
    for (int n = 1; n <= 3; ++n) {
      const StratifiedContinuity sc = prop_2_9_check(ctx, n);
      check(!sc.rank_witness, "r does not map Spec_" + std::to_string(n) + " S into Spec_" + std::to_string(n) + " R");
      check(!sc.continuity_witness, "r is not continuous on Spec_" + std::to_string(n));
      check(!sc.identity_witness, "strong preimage on Spec_" + std::to_string(n) + " differs from V_S(<f(I^n)>)");
    }
    report.analysis = analysis;
  } catch (const Error& e) {
    report.error = e.what();
  }
  return report;
}

}  // namespace ncspec
