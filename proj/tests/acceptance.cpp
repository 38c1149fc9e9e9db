// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "ncspec/harness.hpp"

using namespace ncspec;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failed_criteria = 0;

void verdict(int number, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS " : "FAIL ") << number << ": " << detail << std::endl;
  if (!ok) ++failed_criteria;
}

std::string fixed(double x, int digits) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << x;
  return out.str();
}

// ---------------------------------------------------------------------------
// 1. The displayed inequality for R = span{1, e12} inside M2(Q)
// ---------------------------------------------------------------------------

void criterion_1() {
  const auto start = Clock::now();
  const Fixture fx = fixture_ex1();
  const HomContext<Rational> ctx(fx.hom);
  const auto& r = ctx.r_algebra();
  const Ideal<Rational> i = two_sided_ideal_generated(r, std::vector<Vector<Rational>>{r->basis_element(1)});
  const bool spec_s_is_zero = ctx.spec_s().size() == 1 && ctx.spec_s().prime(0).ideal.is_zero();
  const bool spec_r_is_i = ctx.spec_r().size() == 1 && ctx.spec_r().prime(0).ideal == i;
  const bool continuous = is_continuous(ctx.r(), ctx.closed_s(), ctx.closed_r());
  const PointSet lhs = ctx.r().strong_preimage(v_of(ctx.spec_r(), i));
  const PointSet rhs = v_of(ctx.spec_s(), extended_ideal(ctx.hom(), i));
  const double elapsed = seconds_since(start);
  const bool ok = spec_s_is_zero && spec_r_is_i && continuous && lhs == PointSet{1} && rhs == 0 && elapsed < 0.1;
  verdict(1, ok,
          std::string("Spec S = {0}: ") + (spec_s_is_zero ? "yes" : "no") + ", Spec R = {" + i.describe() +
              "}: " + (spec_r_is_i ? "yes" : "no") + ", r continuous: " + (continuous ? "yes" : "no") +
              ", r^[-1]V_R(I) = " + (lhs == 1 ? "{0}" : format_point_set(lhs)) + (lhs != rhs ? " != " : " = ") +
              (rhs == 0 ? "∅" : format_point_set(rhs)) + " = V_S(<f(I)>), " + fixed(elapsed * 1000, 2) + " ms (< 100 ms)");
}

// ---------------------------------------------------------------------------
// Fuzz corpus shared by criteria 2, 4, 5 and 8
// ---------------------------------------------------------------------------

struct CorpusTotals {
  int instances = 0;
  int analysed = 0;
  int errors = 0;
  int adjoint = 0;
  int matrix_n2 = 0;
  int matrix_n3 = 0;
  std::array<FamilyTally, check_family_count> by_family{};
  std::vector<std::string> first_failures;
  double seconds = 0;

  const FamilyTally& tally(CheckFamily f) const { return by_family[static_cast<std::size_t>(f)]; }
};

CorpusTotals run_corpus(int count) {
  CorpusTotals totals;
  const auto start = Clock::now();
  for (int k = 0; k < count; ++k) {
    const InstanceSpec spec = fuzz_instance_spec(1, k, std::nullopt, 6);
    visit_field(spec.field, [&]<class Scalar>(std::type_identity<Scalar>) {
      const auto inst = generate_instance<Scalar>(spec);
      const auto report = oracle_cross_check(inst.hom, inst.matrix_size, spec.seed);
      ++totals.instances;
      if (report.error) {
        ++totals.errors;
        totals.first_failures.push_back("seed " + std::to_string(spec.seed) + ": " + *report.error);
      }
      if (report.analysis) {
        ++totals.analysed;
        totals.adjoint += report.analysis->adjoint ? 1 : 0;
      }
      if (inst.matrix_size == 2) ++totals.matrix_n2;
      if (inst.matrix_size == 3) ++totals.matrix_n3;
      for (std::size_t f = 0; f < check_family_count; ++f) {
        totals.by_family[f].checks += report.by_family[f].checks;
        totals.by_family[f].failures += report.by_family[f].failures;
      }
      for (const auto& failure : report.failures)
        if (totals.first_failures.size() < 5) totals.first_failures.push_back("seed " + std::to_string(spec.seed) + ": " + failure);
    });
  }
  totals.seconds = seconds_since(start);
  return totals;
}

void print_first_failures(const CorpusTotals& totals) {
  for (const auto& line : totals.first_failures) std::cout << "    " << line << "\n";
}

// ---------------------------------------------------------------------------
// 2. The equivalent conditions agree on fixtures and fuzzed instances
// ---------------------------------------------------------------------------

void criterion_2(const CorpusTotals& corpus) {
  int fixture_diffs = 0;
  for (const auto& fx : all_fixtures()) {
    const HomContext<Rational> ctx(fx.hom);
    const auto a = theorem_3_15_verify(ctx);
    const auto diff = compare_fixture(fx, a);
    fixture_diffs += static_cast<int>(diff.size()) + (a.consistent() ? 0 : 1);
    for (const auto& d : diff) std::cout << "    " << fx.name << ": " << d << "\n";
  }
  const auto& c = corpus.tally(CheckFamily::consistency);
  const bool ok = fixture_diffs == 0 && corpus.instances >= 500 && corpus.errors == 0 &&
                  corpus.analysed == corpus.instances && c.checks == corpus.instances && c.failures == 0 &&
                  corpus.seconds < 60.0;
  if (!ok) print_first_failures(corpus);
  verdict(2, ok,
          "3 fixtures, " + std::to_string(fixture_diffs) + " differences; " + std::to_string(corpus.instances) +
              " instances over F5/F7/Q (dim <= 6), " + std::to_string(corpus.adjoint) + " adjoint, " +
              std::to_string(corpus.analysed - corpus.adjoint) + " not adjoint, " + std::to_string(c.failures) +
              " disagreements, " + std::to_string(corpus.errors) + " errors, " + fixed(corpus.seconds, 1) + " s (< 60 s)");
}

// ---------------------------------------------------------------------------
// 3. Diagonal matrices inside T2: (1') holds but (2') fails
// ---------------------------------------------------------------------------

void criterion_3() {
  const HomContext<Rational> ctx(fixture_ex2().hom);
  const auto a = theorem_3_15_verify(ctx);
  const auto& w = a.criterion_3_13_witness;
  const bool witness_ok = w && w->p == 0 && w->q == 1;
  const bool ok = a.single_valued && a.continuous && !a.condition_2prime && !a.adjoint && witness_ok && a.consistent();
  std::string witness = w ? "(P" + std::to_string(w->p + 1) + ", Q" + std::to_string(w->q + 1) + ")" : "none";
  verdict(3, ok,
          std::string("single_valued = ") + (a.single_valued ? "true" : "false") +
              ", continuous = " + (a.continuous ? "true" : "false") +
              ", condition_2prime = " + (a.condition_2prime ? "true" : "false") +
              ", adjoint = " + (a.adjoint ? "true" : "false") + ", witness " + witness + " (expected (P1, Q2))");
}

// ---------------------------------------------------------------------------
// 4. rad(A)^n = 0 for subalgebras A of M_n
// ---------------------------------------------------------------------------

void criterion_4(const CorpusTotals& corpus) {
  // Dedicated sweep over matrix subalgebras in several fields, on top of the
  // corpus tallies.
  int checked = 0;
  int failures = 0;
  int n2 = 0;
  int n3 = 0;
  const std::array<FieldSpec, 5> fields{FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5),
                                        FieldSpec::prime(7), FieldSpec::rationals()};
  for (int k = 0; k < 200; ++k) {
    InstanceSpec spec;
    spec.seed = 40000 + static_cast<std::uint64_t>(k);
    spec.field = fields[static_cast<std::size_t>(k) % fields.size()];
    spec.kind = InstanceKind::subalgebra_of_matrix;
    visit_field(spec.field, [&]<class Scalar>(std::type_identity<Scalar>) {
      const auto inst = generate_instance<Scalar>(spec);
      if (!inst.matrix_size) return;
      const int n = *inst.matrix_size;
      (n == 2 ? n2 : n3) += 1;
      ++checked;
      const auto rad = jacobson_radical(inst.hom.source());
      if (!ideal_power(rad, n).is_zero()) ++failures;
    });
  }
  const auto& t = corpus.tally(CheckFamily::nilpotency);
  const bool ok = failures == 0 && t.failures == 0 && n2 > 0 && n3 > 0 && corpus.matrix_n2 > 0 && corpus.matrix_n3 > 0;
  verdict(4, ok,
          std::to_string(checked) + " dedicated subalgebras (" + std::to_string(n2) + " in M2, " + std::to_string(n3) +
              " in M3), " + std::to_string(failures) + " failures; corpus: " + std::to_string(t.checks) +
              " nilpotency checks (" + std::to_string(corpus.matrix_n2) + " in M2, " + std::to_string(corpus.matrix_n3) +
              " in M3), " + std::to_string(t.failures) + " failures");
}

// ---------------------------------------------------------------------------
// 5. Each P in Spec S has Q minimal over f^-1(P) with Q^S ⊆ P
// ---------------------------------------------------------------------------

void criterion_5(const CorpusTotals& corpus) {
  const auto& t = corpus.tally(CheckFamily::lemma_3_14);
  const bool ok = t.failures == 0 && t.checks == corpus.instances && corpus.errors == 0;
  verdict(5, ok, std::to_string(t.checks) + " fuzzed homomorphisms checked, " + std::to_string(t.failures) + " failures");
}

// ---------------------------------------------------------------------------
// 6. phi^c is left adjoint to phi_c iff c is continuous, exhaustively
// ---------------------------------------------------------------------------

std::vector<FiniteSpace> spaces_on(int points) {
  // Every labeled topology up to three points; one per homeomorphism class
  // on four points, within the 10-closed-set cap.
  std::vector<FiniteSpace> all = points <= 3 ? enumerate_topologies(points) : topologies_up_to_homeomorphism(points);
  std::vector<FiniteSpace> capped;
  for (auto& x : all)
    if (x.closed_count() <= 10) capped.push_back(std::move(x));
  return capped;
}

void criterion_6() {
  const auto start = Clock::now();
  std::array<std::vector<FiniteSpace>, 5> spaces;
  for (int k = 1; k <= 4; ++k) spaces[static_cast<std::size_t>(k)] = spaces_on(k);
  long long correspondences = 0;
  long long continuous = 0;
  long long discrepancies = 0;
  long long missing_right_adjoint = 0;
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (const auto& x : spaces[static_cast<std::size_t>(m)])
        for (const auto& y : spaces[static_cast<std::size_t>(n)]) {
          const std::uint64_t codes = std::uint64_t{1} << (m * n);
          std::vector<PointSet> table(static_cast<std::size_t>(m));
          for (std::uint64_t code = 0; code < codes; ++code) {
            for (int p = 0; p < m; ++p) table[static_cast<std::size_t>(p)] = static_cast<PointSet>((code >> (n * p)) & full_set(n));
            const Correspondence c(m, n, table);
            const bool cont = is_continuous(c, x, y);
            const FunctorOnClosed upper = phi_upper(c, x, y);
            const FunctorOnClosed lower = phi_lower(c, x, y);
            const bool adjoint = is_left_adjoint(upper, lower);
            const auto psi = find_right_adjoint(upper);
            ++correspondences;
            continuous += cont ? 1 : 0;
            discrepancies += adjoint != cont ? 1 : 0;
            missing_right_adjoint += psi ? 0 : 1;
            discrepancies += (psi && *psi == lower) != cont ? 1 : 0;
          }
        }
  const bool ok = discrepancies == 0 && missing_right_adjoint == 0;
  verdict(6, ok,
          std::to_string(correspondences) + " correspondences (" + std::to_string(continuous) + " continuous) between " +
              std::to_string(spaces[1].size() + spaces[2].size() + spaces[3].size()) + " labeled spaces on <= 3 points and " +
              std::to_string(spaces[4].size()) + " four-point classes, " + std::to_string(discrepancies) +
              " discrepancies, " + std::to_string(missing_right_adjoint) + " without a right adjoint, " +
              fixed(seconds_since(start), 1) + " s");
}

// ---------------------------------------------------------------------------
// 7. is_prime against the definitional oracle on every ideal, F2 and F3
// ---------------------------------------------------------------------------

void criterion_7() {
  const auto start = Clock::now();
  int algebras = 0;
  long long ideals = 0;
  long long disagreements = 0;
  auto sweep = [&](const AlgebraPtr<Residue>& a) {
    if (!enumerable(a->field(), a->dim())) return;
    ++algebras;
    for (const auto& i : exhaustive_ideal_enumeration(a)) {
      ++ideals;
      if (is_prime(i) != definitional_prime_oracle(i)) ++disagreements;
    }
  };
  for (std::uint32_t p : {2U, 3U}) {
    const FieldSpec field = FieldSpec::prime(p);
    for (int k = 0; k < 150; ++k) {
      InstanceSpec spec;
      spec.seed = 70000 + static_cast<std::uint64_t>(k);
      spec.field = field;
      const auto inst = generate_instance<Residue>(spec);
      sweep(inst.hom.source());
      sweep(inst.hom.target());
    }
    // Modular group algebras and other algebras with a radical that the
    // generator does not produce in characteristic p.
    sweep(group_algebra<Residue>(field, symmetric_group_3_table()));
    sweep(group_algebra<Residue>(field, cyclic_group_table(2)));
    sweep(group_algebra<Residue>(field, cyclic_group_table(3)));
    sweep(group_algebra<Residue>(field, cyclic_group_table(4)));
    sweep(upper_triangular_algebra<Residue>(field, 2));
    sweep(upper_triangular_algebra<Residue>(field, 3));
    sweep(matrix_algebra<Residue>(field, 2));
  }
  // Frozen hand counts guard the enumeration itself.
  const FieldSpec f2 = FieldSpec::prime(2);
  auto k = group_algebra<Residue>(f2, cyclic_group_table(1));
  const bool counts_ok = exhaustive_ideal_enumeration(upper_triangular_algebra<Residue>(f2, 2)).size() == 5 &&
                         exhaustive_ideal_enumeration(matrix_algebra<Residue>(f2, 2)).size() == 2 &&
                         exhaustive_ideal_enumeration(direct_product(*k, *k)).size() == 4;
  const bool ok = disagreements == 0 && counts_ok && ideals > 0;
  verdict(7, ok,
          std::to_string(algebras) + " algebras over F2/F3, " + std::to_string(ideals) + " two-sided ideals, " +
              std::to_string(disagreements) + " disagreements; frozen counts T2(F2)=5, M2(F2)=2, kxk=4: " +
              (counts_ok ? "match" : "MISMATCH") + ", " + fixed(seconds_since(start), 1) + " s");
}

// ---------------------------------------------------------------------------
// 8. Identities on every fuzzed instance
// ---------------------------------------------------------------------------

void criterion_8(const CorpusTotals& corpus) {
  const auto& t = corpus.tally(CheckFamily::identities);
  const bool ok = t.failures == 0 && t.checks > 0 && corpus.errors == 0 && corpus.analysed == corpus.instances;
  if (!ok) print_first_failures(corpus);
  verdict(8, ok,
          std::to_string(t.checks) + " identity checks (bimodule ideals, r(a) = r, I^a = I^S, complement duality, "
                                     "union formula) over " +
              std::to_string(corpus.instances) + " instances, " + std::to_string(t.failures) + " failures");
}

// ---------------------------------------------------------------------------
// 9. Goldie ranks and stratified continuity
// ---------------------------------------------------------------------------

bool certificate_ok(const GoldieRank& g) {
  // dim(B) = n s for a minimal left ideal of dim s, and dim(B) = n^2 dim(Z).
  return g.quotient_dim == g.rank * g.s && g.rank * g.rank * g.center_dim == g.quotient_dim;
}

void criterion_9() {
  const FieldSpec q = FieldSpec::rationals();
  bool ok = true;
  std::string detail;
  auto ranks_of = [&](const AlgebraPtr<Rational>& a) {
    const auto ranks = goldie_ranks(spec(a));
    std::vector<int> values;
    for (const auto& g : ranks) {
      values.push_back(static_cast<int>(g.rank));
      ok = ok && certificate_ok(g);
    }
    std::sort(values.begin(), values.end());
    return values;
  };
  const auto m2 = ranks_of(matrix_algebra<Rational>(q, 2));
  const auto m3 = ranks_of(matrix_algebra<Rational>(q, 3));
  const auto s3 = ranks_of(group_algebra<Rational>(q, symmetric_group_3_table()));
  const bool ranks_ok = m2 == std::vector<int>{2} && m3 == std::vector<int>{3} && s3 == std::vector<int>{1, 1, 2};
  ok = ok && ranks_ok;
  auto list = [](const std::vector<int>& v) {
    std::string out = "{";
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
    return out + "}";
  };
  detail = "M2 -> " + list(m2) + ", M3 -> " + list(m3) + ", Q[S3] -> " + list(s3) + ", certificates " +
           (ok ? "pass" : "FAIL");
  int stratified = 0;
  int stratified_failures = 0;
  for (const auto& fx : all_fixtures()) {
    const HomContext<Rational> ctx(fx.hom);
    for (int n = 1; n <= 3; ++n) {
      ++stratified;
      if (!prop_2_9_check(ctx, n).holds()) ++stratified_failures;
    }
  }
  ok = ok && stratified_failures == 0;
  verdict(9, ok,
          detail + "; stratified continuity n = 1,2,3 on 3 fixtures: " + std::to_string(stratified - stratified_failures) +
              "/" + std::to_string(stratified) + " hold");
}

}  // namespace

int main() {
  criterion_1();
  const CorpusTotals corpus = run_corpus(500);
  criterion_2(corpus);
  criterion_3();
  criterion_4(corpus);
  criterion_5(corpus);
  criterion_6();
  criterion_7();
  criterion_8(corpus);
  criterion_9();
  std::cout << (failed_criteria == 0 ? "all criteria pass" : std::to_string(failed_criteria) + " criteria fail") << "\n";
  return failed_criteria == 0 ? 0 : 1;
}
