#pragma once

// The contraction correspondence of a homomorphism f: R -> S, the
// extension annihilator I^S, the closed-set maps lambda and rho, and the
// decision procedure comparing the equivalent forms of the adjointness of
// lambda and rho.

#include <optional>
#include <string>
#include <vector>

#include "ncspec/spectrum.hpp"
#include "ncspec/topology.hpp"

namespace ncspec {

// ---------------------------------------------------------------------------
// Ideal-level operations
// ---------------------------------------------------------------------------

/// I^S = ann_S(S / S f(I)): the largest two-sided ideal of S inside the left
/// ideal S f(I).
template <ExactScalar Scalar>
Ideal<Scalar> extension_annihilator(const AlgebraHom<Scalar>& f, const Ideal<Scalar>& i) {
  if (i.parent() != f.source()) throw ValidationError("extension_annihilator: ideal is not in the source algebra");
  std::vector<Vector<Scalar>> images;
  for (Index k = 0; k < i.dim(); ++k) images.push_back(f.apply(i.carrier().basis_vector(k)));
  return annihilator_of_quotient(left_ideal_generated(f.target(), images));
}

/// Two-sided ideal of S generated by f(I).
template <ExactScalar Scalar>
Ideal<Scalar> extended_ideal(const AlgebraHom<Scalar>& f, const Ideal<Scalar>& i) {
  return two_sided_ideal_generated(f.target(), image_under_hom(f, i.carrier()));
}

/// Least t with f(Q)^t S ⊆ S f(Q). The chain f(Q)^t S descends, so the
/// search stops as soon as it stabilizes; nullopt then means no t exists.
template <ExactScalar Scalar>
std::optional<int> nearly_centralizing_check(const AlgebraHom<Scalar>& f, const Ideal<Scalar>& q) {
  const auto& s = *f.target();
  const Subspace<Scalar> fq = image_under_hom(f, q.carrier());
  const Subspace<Scalar> left = left_ideal_generated(f.target(), fq.basis_vectors()).carrier();
  const Subspace<Scalar> whole = Subspace<Scalar>::full(s.dim());
  Subspace<Scalar> power = fq;  // f(Q)^t
  std::optional<Subspace<Scalar>> previous;
  for (int t = 1; t <= s.dim() + 2; ++t) {
    const Subspace<Scalar> chain = subspace_product(s, power, whole);
    if (left.contains(chain)) return t;
    if (previous && *previous == chain) return std::nullopt;
    previous = chain;
    power = subspace_product(s, power, fq);
  }
  return std::nullopt;
}

/// A basis element of S outside f(R)·C, with C the centralizer of f(R), or
/// nullopt when f is centralizing. Any centralizing generating set lies in
/// C, so f is centralizing exactly when f(R)·C = S.
template <ExactScalar Scalar>
std::optional<Index> centralizing_witness(const AlgebraHom<Scalar>& f) {
  const auto& s = *f.target();
  const Subspace<Scalar> fr = image(f.matrix(), Subspace<Scalar>::full(f.source()->dim()));
  const Subspace<Scalar> c = centralizer(s, fr);
  const Subspace<Scalar> generated = subspace_product(s, fr, c);
  for (Index k = 0; k < s.dim(); ++k)
    if (!generated.contains(s.basis_element(k))) return k;
  return std::nullopt;
}

template <ExactScalar Scalar>
bool is_centralizing(const AlgebraHom<Scalar>& f) {
  return !centralizing_witness(f).has_value();
}

// ---------------------------------------------------------------------------
// Context: both spectra with their closed sets, built once per f
// ---------------------------------------------------------------------------

template <ExactScalar Scalar>
class HomContext {
 public:
  explicit HomContext(AlgebraHom<Scalar> f)
      : f_(std::move(f)),
        spec_r_(spec(f_.source())),
        spec_s_(spec(f_.target())),
        closed_r_(all_closed_sets(spec_r_)),
        closed_s_(all_closed_sets(spec_s_)),
        r_(build_r()) {
    for (PointSet u : closed_r_.closed_sets()) ideals_r_.push_back(i_of(spec_r_, u));
    for (PointSet v : closed_s_.closed_sets()) ideals_s_.push_back(i_of(spec_s_, v));
  }

  const AlgebraHom<Scalar>& hom() const { return f_; }
  const AlgebraPtr<Scalar>& r_algebra() const { return f_.source(); }
  const AlgebraPtr<Scalar>& s_algebra() const { return f_.target(); }
  const SpecSet<Scalar>& spec_r() const { return spec_r_; }
  const SpecSet<Scalar>& spec_s() const { return spec_s_; }
  const FiniteSpace& closed_r() const { return closed_r_; }
  const FiniteSpace& closed_s() const { return closed_s_; }
  /// Points of Spec S -> subsets of Spec R.
  const Correspondence& r() const { return r_; }
  /// f^{-1}(P) for the k-th prime of S.
  const Ideal<Scalar>& contraction(int k) const { return contractions_[static_cast<std::size_t>(k)]; }
  /// I(U) for the closed sets of Spec R, aligned with closed_r().closed_sets().
  const std::vector<Ideal<Scalar>>& radical_ideals_r() const { return ideals_r_; }
  const std::vector<Ideal<Scalar>>& radical_ideals_s() const { return ideals_s_; }
  const Ideal<Scalar>& ideal_of_r(PointSet u) const { return ideals_r_[closed_r_.index_of(u)]; }
  const Ideal<Scalar>& ideal_of_s(PointSet v) const { return ideals_s_[closed_s_.index_of(v)]; }

  const std::vector<GoldieRank>& ranks_r() const {
    if (!ranks_r_) ranks_r_ = goldie_ranks(spec_r_);
    return *ranks_r_;
  }
  const std::vector<GoldieRank>& ranks_s() const {
    if (!ranks_s_) ranks_s_ = goldie_ranks(spec_s_);
    return *ranks_s_;
  }

 private:
  Correspondence build_r() {
    std::vector<PointSet> table;
    for (const auto& p : spec_s_.primes()) {
      contractions_.push_back(preimage_under_hom(f_, p.ideal));
      table.push_back(minimal_primes_over(spec_r_, contractions_.back()));
    }
    return Correspondence(spec_s_.size(), spec_r_.size(), std::move(table));
  }

  AlgebraHom<Scalar> f_;
  SpecSet<Scalar> spec_r_;
  SpecSet<Scalar> spec_s_;
  FiniteSpace closed_r_;
  FiniteSpace closed_s_;
  std::vector<Ideal<Scalar>> contractions_;
  Correspondence r_;
  std::vector<Ideal<Scalar>> ideals_r_;
  std::vector<Ideal<Scalar>> ideals_s_;
  mutable std::optional<std::vector<GoldieRank>> ranks_r_;
  mutable std::optional<std::vector<GoldieRank>> ranks_s_;
};

template <ExactScalar Scalar>
const Correspondence& r_of(const HomContext<Scalar>& ctx) {
  return ctx.r();
}

/// r(alpha): P in Spec B -> primes of A minimal over P^alpha, for an
/// A-B-bimodule M.
template <ExactScalar Scalar>
Correspondence r_alpha(const Bimodule<Scalar>& m, const SpecSet<Scalar>& spec_a, const SpecSet<Scalar>& spec_b) {
  std::vector<PointSet> table;
  for (const auto& p : spec_b.primes()) table.push_back(minimal_primes_over(spec_a, alpha_ideal(m, p.ideal)));
  return Correspondence(spec_b.size(), spec_a.size(), std::move(table));
}

/// theta^alpha: closed V of Spec B -> V_A(I(V)^alpha).
template <ExactScalar Scalar>
FunctorOnClosed theta_alpha(const Bimodule<Scalar>& m, const SpecSet<Scalar>& spec_a, const FiniteSpace& closed_a,
                            const SpecSet<Scalar>& spec_b, const FiniteSpace& closed_b) {
  std::vector<PointSet> table;
  for (PointSet v : closed_b.closed_sets()) table.push_back(v_of(spec_a, alpha_ideal(m, i_of(spec_b, v))));
  return FunctorOnClosed(closed_b, closed_a, std::move(table));
}

/// lambda: V_S(J) -> V_R(f^{-1}(J)), tabulated with J = I(V).
template <ExactScalar Scalar>
FunctorOnClosed lambda_functor(const HomContext<Scalar>& ctx) {
  std::vector<PointSet> table;
  for (const auto& j : ctx.radical_ideals_s()) table.push_back(v_of(ctx.spec_r(), preimage_under_hom(ctx.hom(), j)));
  return FunctorOnClosed(ctx.closed_s(), ctx.closed_r(), std::move(table));
}

/// rho: V_R(I) -> V_S(I^S), tabulated with I = I(U).
template <ExactScalar Scalar>
FunctorOnClosed rho_functor(const HomContext<Scalar>& ctx) {
  std::vector<PointSet> table;
  for (const auto& i : ctx.radical_ideals_r()) table.push_back(v_of(ctx.spec_s(), extension_annihilator(ctx.hom(), i)));
  return FunctorOnClosed(ctx.closed_r(), ctx.closed_s(), std::move(table));
}

// ---------------------------------------------------------------------------
// Conditions
// ---------------------------------------------------------------------------

/// Closed U ⊆ Spec R (standing for the radical ideal I(U)) where
/// r^[-1]V_R(I) differs from V_S(I^S). Both sides only depend on sqrt(I),
/// so the radical ideals cover every ideal of R.
template <ExactScalar Scalar>
std::optional<PointSet> condition_2prime_witness(const HomContext<Scalar>& ctx) {
  const auto& us = ctx.closed_r().closed_sets();
  for (std::size_t k = 0; k < us.size(); ++k) {
    const PointSet lhs = ctx.r().strong_preimage(us[k]);
    const PointSet rhs = v_of(ctx.spec_s(), extension_annihilator(ctx.hom(), ctx.radical_ideals_r()[k]));
    if (lhs != rhs) return us[k];
  }
  return std::nullopt;
}

struct PrimePair {
  int p;  // index in Spec S
  int q;  // index in Spec R
};

/// (P, Q) with Q^S ⊆ P but Q not inside sqrt(f^{-1}(P)).
template <ExactScalar Scalar>
std::optional<PrimePair> criterion_3_13_witness(const HomContext<Scalar>& ctx) {
  std::vector<Ideal<Scalar>> extended;
  for (const auto& q : ctx.spec_r().primes()) extended.push_back(extension_annihilator(ctx.hom(), q.ideal));
  for (int p = 0; p < ctx.spec_s().size(); ++p) {
    const Ideal<Scalar> root = prime_radical_of_ideal(ctx.contraction(p));
    for (int q = 0; q < ctx.spec_r().size(); ++q)
      if (ctx.spec_s().prime(p).ideal.contains(extended[static_cast<std::size_t>(q)]) &&
          !root.contains(ctx.spec_r().prime(q).ideal))
        return PrimePair{p, q};
  }
  return std::nullopt;
}

/// A prime P of S admitting no Q minimal over f^{-1}(P) with Q^S ⊆ P.
template <ExactScalar Scalar>
std::optional<int> lemma_3_14_witness(const HomContext<Scalar>& ctx) {
  for (int p = 0; p < ctx.spec_s().size(); ++p) {
    bool found = false;
    for (int q = 0; q < ctx.spec_r().size() && !found; ++q)
      if (contains_point(ctx.r().at(p), q))
        found = ctx.spec_s().prime(p).ideal.contains(extension_annihilator(ctx.hom(), ctx.spec_r().prime(q).ideal));
    if (!found) return p;
  }
  return std::nullopt;
}

struct SemiprimeContraction {
  bool all_semiprime;
  /// Closed U ⊆ Spec R where r^[-1]V_R(I) != V_S(<f(I)>); only searched
  /// when every contraction is semiprime.
  std::optional<PointSet> identity_witness;
};

template <ExactScalar Scalar>
SemiprimeContraction semiprime_contraction_case(const HomContext<Scalar>& ctx) {
  for (int p = 0; p < ctx.spec_s().size(); ++p)
    if (!(prime_radical_of_ideal(ctx.contraction(p)) == ctx.contraction(p))) return {false, std::nullopt};
  const auto& us = ctx.closed_r().closed_sets();
  for (std::size_t k = 0; k < us.size(); ++k)
    if (ctx.r().strong_preimage(us[k]) != v_of(ctx.spec_s(), extended_ideal(ctx.hom(), ctx.radical_ideals_r()[k])))
      return {true, us[k]};
  return {true, std::nullopt};
}

/// The union over t of V_S(<f(I)^t>), t running until I^t stabilizes.
template <ExactScalar Scalar>
PointSet power_union(const HomContext<Scalar>& ctx, const Ideal<Scalar>& i) {
  PointSet out = 0;
  Ideal<Scalar> power = i;
  for (int t = 1; t <= ctx.r_algebra()->dim() + 2; ++t) {
    out |= v_of(ctx.spec_s(), extended_ideal(ctx.hom(), power));
    Ideal<Scalar> next = ideal_product(power, i);
    if (next == power) break;
    power = std::move(next);
  }
  return out;
}

/// Closed U ⊆ Spec R where r^[-1]V_R(I(U)) differs from the power union.
template <ExactScalar Scalar>
std::optional<PointSet> formula_2_4iv_witness(const HomContext<Scalar>& ctx) {
  const auto& us = ctx.closed_r().closed_sets();
  for (std::size_t k = 0; k < us.size(); ++k)
    if (ctx.r().strong_preimage(us[k]) != power_union(ctx, ctx.radical_ideals_r()[k])) return us[k];
  return std::nullopt;
}

struct StratifiedContinuity {
  int n;
  PointSet spec_n_s;
  PointSet spec_n_r;
  /// Prime of S in Spec_n S with an image outside Spec_n R.
  std::optional<int> rank_witness;
  /// Closed U of Spec R whose trace has a strong preimage that is not
  /// relatively closed in Spec_n S.
  std::optional<PointSet> continuity_witness;
  /// Closed U of Spec R where the strong preimage differs from
  /// V_S(<f(I(U)^n)>) ∩ Spec_n S.
  std::optional<PointSet> identity_witness;
  bool holds() const { return !rank_witness && !continuity_witness && !identity_witness; }
};

/// r restricted to Spec_n S -> Spec_n R: range, relative continuity, and
/// the description of preimages by V_S(<f(I^n)>).
template <ExactScalar Scalar>
StratifiedContinuity prop_2_9_check(const HomContext<Scalar>& ctx, int n) {
  StratifiedContinuity out{n, spec_n(ctx.ranks_s(), n), spec_n(ctx.ranks_r(), n), std::nullopt, std::nullopt, std::nullopt};
  for (int p = 0; p < ctx.spec_s().size(); ++p)
    if (contains_point(out.spec_n_s, p) && !is_subset(ctx.r().at(p), out.spec_n_r)) {
      out.rank_witness = p;
      break;
    }
  const std::vector<PointSet> relative_s = relative_closed_sets(ctx.closed_s(), out.spec_n_s);
  const auto& us = ctx.closed_r().closed_sets();
  for (std::size_t k = 0; k < us.size(); ++k) {
    const PointSet trace = us[k] & out.spec_n_r;
    const PointSet pulled = ctx.r().strong_preimage(trace) & out.spec_n_s;
    if (!out.continuity_witness && !std::binary_search(relative_s.begin(), relative_s.end(), pulled))
      out.continuity_witness = us[k];
    const PointSet expected =
        v_of(ctx.spec_s(), extended_ideal(ctx.hom(), ideal_power(ctx.radical_ideals_r()[k], n))) & out.spec_n_s;
    if (!out.identity_witness && pulled != expected) out.identity_witness = us[k];
  }
  return out;
}

// ---------------------------------------------------------------------------
// The decision procedure
// ---------------------------------------------------------------------------

template <ExactScalar Scalar>
struct HomAnalysis {
  // Flags.
  bool single_valued = false;
  bool continuous = false;
  bool condition_2prime = false;
  bool adjoint = false;
  bool criterion_3_13 = false;
  bool nearly_centralizing_primes = false;
  bool nearly_centralizing_ideals = false;
  bool centralizing = false;
  bool lemma_3_14 = false;

  /// t for each prime of R (nullopt when none exists).
  std::vector<std::optional<int>> prime_t;
  /// t for each closed set of Spec R, standing for its radical ideal.
  std::vector<std::optional<int>> ideal_t;

  // Witnesses, present exactly when the corresponding flag is false.
  std::optional<int> single_valued_witness;         // prime of S
  std::optional<PointSet> continuity_witness;       // closed V ⊆ Spec R
  std::optional<PointSet> condition_2prime_witness;  // closed U ⊆ Spec R
  std::optional<AdjunctionWitness> adjoint_witness;  // (V ⊆ Spec S, U ⊆ Spec R)
  std::optional<PrimePair> criterion_3_13_witness;
  std::optional<int> nearly_centralizing_prime_witness;     // prime of R
  std::optional<PointSet> nearly_centralizing_ideal_witness;  // closed U ⊆ Spec R
  std::optional<Index> centralizing_witness;                  // basis element of S
  std::optional<int> lemma_3_14_witness;                      // prime of S

  /// (ii) as one flag: single-valued, continuous and (2').
  bool condition_ii() const { return single_valued && continuous && condition_2prime; }
  bool consistent() const { return inconsistencies.empty(); }
  std::vector<std::string> inconsistencies;
};

/// Computes every condition independently and records any disagreement
/// among adjointness, condition (ii), the prime criterion and the two nearly
/// centralizing forms. Also records a centralizing map that is not nearly
/// centralizing, and a prime P of S containing Q^S for no Q in r(P).
template <ExactScalar Scalar>
HomAnalysis<Scalar> theorem_3_15_verify(const HomContext<Scalar>& ctx) {
  HomAnalysis<Scalar> a;
  a.single_valued_witness = ctx.r().single_valued_witness();
  a.single_valued = !a.single_valued_witness;
  a.continuity_witness = continuity_witness(ctx.r(), ctx.closed_s(), ctx.closed_r());
  a.continuous = !a.continuity_witness;
  a.condition_2prime_witness = condition_2prime_witness(ctx);
  a.condition_2prime = !a.condition_2prime_witness;
  a.adjoint_witness = left_adjoint_witness(lambda_functor(ctx), rho_functor(ctx));
  a.adjoint = !a.adjoint_witness;
  a.criterion_3_13_witness = criterion_3_13_witness(ctx);
  a.criterion_3_13 = !a.criterion_3_13_witness;

  for (int q = 0; q < ctx.spec_r().size(); ++q) {
    a.prime_t.push_back(nearly_centralizing_check(ctx.hom(), ctx.spec_r().prime(q).ideal));
    if (!a.prime_t.back() && !a.nearly_centralizing_prime_witness) a.nearly_centralizing_prime_witness = q;
  }
  a.nearly_centralizing_primes = !a.nearly_centralizing_prime_witness;
  const auto& us = ctx.closed_r().closed_sets();
  for (std::size_t k = 0; k < us.size(); ++k) {
    a.ideal_t.push_back(nearly_centralizing_check(ctx.hom(), ctx.radical_ideals_r()[k]));
    if (!a.ideal_t.back() && !a.nearly_centralizing_ideal_witness) a.nearly_centralizing_ideal_witness = us[k];
  }
  a.nearly_centralizing_ideals = !a.nearly_centralizing_ideal_witness;
  a.centralizing_witness = centralizing_witness(ctx.hom());
  a.centralizing = !a.centralizing_witness;
  a.lemma_3_14_witness = lemma_3_14_witness(ctx);
  a.lemma_3_14 = !a.lemma_3_14_witness;

  auto disagree = [&](const char* name, bool value) {
    if (value != a.adjoint)
      a.inconsistencies.push_back(std::string(name) + " is " + (value ? "true" : "false") + " but adjointness is " +
                                  (a.adjoint ? "true" : "false"));
  };
  disagree("single-valued + continuous + (2')", a.condition_ii());
  disagree("prime criterion", a.criterion_3_13);
  disagree("nearly centralizing on primes", a.nearly_centralizing_primes);
  disagree("nearly centralizing on ideals", a.nearly_centralizing_ideals);
  if (a.centralizing && !a.nearly_centralizing_primes)
    a.inconsistencies.push_back("centralizing but not nearly centralizing");
  if (!a.lemma_3_14) a.inconsistencies.push_back("a prime P of S contains Q^S for no Q in r(P)");
  return a;
}

}  // namespace ncspec
