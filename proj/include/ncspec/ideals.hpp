#pragma once

// Two-sided and left ideals: generation, products, contraction, annihilators,
// the radical and nilpotency.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncspec/algebra.hpp"

namespace ncspec {

template <ExactScalar Scalar>
class Ideal {
 public:
  Ideal(AlgebraPtr<Scalar> parent, Subspace<Scalar> carrier) : parent_(std::move(parent)), carrier_(std::move(carrier)) {
    if (carrier_.ambient_dim() != parent_->dim()) throw ShapeMismatch("ideal carrier does not live in its algebra");
  }

  /// Validates two-sided closure; throws ValidationError otherwise.
  static Ideal checked(AlgebraPtr<Scalar> parent, Subspace<Scalar> carrier);

  static Ideal zero(const AlgebraPtr<Scalar>& a) { return Ideal(a, Subspace<Scalar>(a->dim())); }
  static Ideal whole(const AlgebraPtr<Scalar>& a) { return Ideal(a, Subspace<Scalar>::full(a->dim())); }

  const AlgebraPtr<Scalar>& parent() const { return parent_; }
  const Subspace<Scalar>& carrier() const { return carrier_; }
  Index dim() const { return carrier_.dim(); }
  bool is_zero() const { return carrier_.is_zero(); }
  bool is_whole() const { return carrier_.is_full(); }
  bool contains(const Vector<Scalar>& v) const { return carrier_.contains(v); }
  bool contains(const Ideal& other) const { return carrier_.contains(other.carrier_); }

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.carrier_ == b.carrier_; }
  friend bool operator<(const Ideal& a, const Ideal& b) { return a.carrier_ < b.carrier_; }

  /// "span{e12, e11+e22}" over the parent's labels; "0" for the zero ideal.
  std::string describe() const {
    if (is_zero()) return "0";
    std::string out = "span{";
    for (Index i = 0; i < dim(); ++i) out += (i ? ", " : "") + parent_->format(carrier_.basis_vector(i));
    return out + "}";
  }

 private:
  AlgebraPtr<Scalar> parent_;
  Subspace<Scalar> carrier_;
};

template <ExactScalar Scalar>
class LeftIdeal {
 public:
  LeftIdeal(AlgebraPtr<Scalar> parent, Subspace<Scalar> carrier) : parent_(std::move(parent)), carrier_(std::move(carrier)) {}
  const AlgebraPtr<Scalar>& parent() const { return parent_; }
  const Subspace<Scalar>& carrier() const { return carrier_; }
  Index dim() const { return carrier_.dim(); }
  friend bool operator==(const LeftIdeal& a, const LeftIdeal& b) { return a.carrier_ == b.carrier_; }

 private:
  AlgebraPtr<Scalar> parent_;
  Subspace<Scalar> carrier_;
};

// ---------------------------------------------------------------------------
// Closure predicates
// ---------------------------------------------------------------------------

template <ExactScalar Scalar>
bool is_left_ideal(const Algebra<Scalar>& a, const Subspace<Scalar>& s) {
  for (Index i = 0; i < a.dim(); ++i)
    for (Index k = 0; k < s.dim(); ++k)
      if (!s.contains(a.left_basis_operator(i) * s.basis_vector(k))) return false;
  return true;
}

template <ExactScalar Scalar>
bool is_right_ideal(const Algebra<Scalar>& a, const Subspace<Scalar>& s) {
  for (Index i = 0; i < a.dim(); ++i)
    for (Index k = 0; k < s.dim(); ++k)
      if (!s.contains(a.right_basis_operator(i) * s.basis_vector(k))) return false;
  return true;
}

template <ExactScalar Scalar>
bool is_two_sided_ideal(const Algebra<Scalar>& a, const Subspace<Scalar>& s) {
  return is_left_ideal(a, s) && is_right_ideal(a, s);
}

template <ExactScalar Scalar>
Ideal<Scalar> Ideal<Scalar>::checked(AlgebraPtr<Scalar> parent, Subspace<Scalar> carrier) {
  if (!is_two_sided_ideal(*parent, carrier)) throw ValidationError("subspace is not a two-sided ideal");
  return Ideal(std::move(parent), std::move(carrier));
}

// ---------------------------------------------------------------------------
// Generation and arithmetic
// ---------------------------------------------------------------------------

/// span{e_i g e_j}; one pass suffices because A g A is already an ideal.
template <ExactScalar Scalar>
Ideal<Scalar> two_sided_ideal_generated(const AlgebraPtr<Scalar>& a, const std::vector<Vector<Scalar>>& gens) {
  std::vector<Vector<Scalar>> span;
  for (const auto& g : gens) {
    a->check(g);
    for (Index i = 0; i < a->dim(); ++i) {
      const Vector<Scalar> left = a->left_basis_operator(i) * g;
      for (Index j = 0; j < a->dim(); ++j) span.push_back(a->right_basis_operator(j) * left);
    }
  }
  return Ideal<Scalar>(a, Subspace<Scalar>::span(span, a->dim()));
}

template <ExactScalar Scalar>
Ideal<Scalar> two_sided_ideal_generated(const AlgebraPtr<Scalar>& a, const Subspace<Scalar>& gens) {
  return two_sided_ideal_generated(a, gens.basis_vectors());
}

/// span{e_i g}.
template <ExactScalar Scalar>
LeftIdeal<Scalar> left_ideal_generated(const AlgebraPtr<Scalar>& a, const std::vector<Vector<Scalar>>& gens) {
  std::vector<Vector<Scalar>> span;
  for (const auto& g : gens) {
    a->check(g);
    for (Index i = 0; i < a->dim(); ++i) span.push_back(a->left_basis_operator(i) * g);
  }
  return LeftIdeal<Scalar>(a, Subspace<Scalar>::span(span, a->dim()));
}

/// span{g e_j}.
template <ExactScalar Scalar>
Subspace<Scalar> right_ideal_generated(const Algebra<Scalar>& a, const std::vector<Vector<Scalar>>& gens) {
  std::vector<Vector<Scalar>> span;
  for (const auto& g : gens)
    for (Index j = 0; j < a.dim(); ++j) span.push_back(a.right_basis_operator(j) * g);
  return Subspace<Scalar>::span(span, a.dim());
}

/// span{x y : x in U, y in W} for subspaces of an algebra.
template <ExactScalar Scalar>
Subspace<Scalar> subspace_product(const Algebra<Scalar>& a, const Subspace<Scalar>& u, const Subspace<Scalar>& w) {
  std::vector<Vector<Scalar>> span;
  for (Index i = 0; i < u.dim(); ++i) {
    const Matrix<Scalar> lx = a.left_mul_operator(u.basis_vector(i));
    for (Index j = 0; j < w.dim(); ++j) span.push_back(lx * w.basis_vector(j));
  }
  return Subspace<Scalar>::span(span, a.dim());
}

namespace detail {
template <ExactScalar Scalar>
void require_same_parent(const Ideal<Scalar>& i, const Ideal<Scalar>& j, const char* op) {
  if (i.parent() != j.parent()) throw ValidationError(std::string(op) + ": ideals of different algebras");
}
}  // namespace detail

template <ExactScalar Scalar>
Ideal<Scalar> ideal_product(const Ideal<Scalar>& i, const Ideal<Scalar>& j) {
  detail::require_same_parent(i, j, "ideal_product");
  return Ideal<Scalar>(i.parent(), subspace_product(*i.parent(), i.carrier(), j.carrier()));
}

template <ExactScalar Scalar>
Ideal<Scalar> ideal_power(const Ideal<Scalar>& i, int t) {
  if (t < 1) throw ValidationError("ideal_power: exponent must be positive");
  Ideal<Scalar> result = i;
  for (int k = 1; k < t; ++k) {
    Ideal<Scalar> next = ideal_product(result, i);
    if (next == result) break;
    result = std::move(next);
  }
  return result;
}

template <ExactScalar Scalar>
Ideal<Scalar> ideal_sum(const Ideal<Scalar>& i, const Ideal<Scalar>& j) {
  detail::require_same_parent(i, j, "ideal_sum");
  return Ideal<Scalar>(i.parent(), subspace_sum(i.carrier(), j.carrier()));
}

template <ExactScalar Scalar>
Ideal<Scalar> ideal_intersect(const Ideal<Scalar>& i, const Ideal<Scalar>& j) {
  detail::require_same_parent(i, j, "ideal_intersect");
  return Ideal<Scalar>(i.parent(), subspace_intersect(i.carrier(), j.carrier()));
}

/// {r : f(r) in j}.
template <ExactScalar Scalar>
Ideal<Scalar> preimage_under_hom(const AlgebraHom<Scalar>& f, const Ideal<Scalar>& j) {
  if (j.parent() != f.target()) throw ValidationError("preimage_under_hom: ideal is not in the target");
  return Ideal<Scalar>(f.source(), preimage(f.matrix(), j.carrier()));
}

/// f(I) as a subspace of the target.
template <ExactScalar Scalar>
Subspace<Scalar> image_under_hom(const AlgebraHom<Scalar>& f, const Subspace<Scalar>& i) {
  return image(f.matrix(), i);
}

// ---------------------------------------------------------------------------
// Annihilators
// ---------------------------------------------------------------------------

/// {a : (sum_i a_i ops[i]) x in target for every x}; ops act on the carrier
/// of target.
template <ExactScalar Scalar>
Subspace<Scalar> action_annihilator(const std::vector<Matrix<Scalar>>& ops, const Subspace<Scalar>& target) {
  const auto count = static_cast<Index>(ops.size());
  const Index m = target.ambient_dim();
  if (target.is_full()) return Subspace<Scalar>::full(count);
  const Matrix<Scalar> functionals = target.annihilating_functionals();
  const Index f = functionals.rows();
  // Row block x: functionals * ops[i] * e_x, one column per i.
  Matrix<Scalar> system = zero_matrix<Scalar>(f * m, count);
  for (Index i = 0; i < count; ++i) {
    const Matrix<Scalar> image = functionals * ops[static_cast<std::size_t>(i)];
    for (Index x = 0; x < m; ++x) system.block(x * f, i, f, 1) = image.col(x);
  }
  return kernel<Scalar>(std::move(system));
}

/// ann_A(A/L) = {s : s e_j in L for all j}, the largest two-sided ideal
/// contained in L.
template <ExactScalar Scalar>
Ideal<Scalar> annihilator_of_quotient(const LeftIdeal<Scalar>& l) {
  const auto& a = *l.parent();
  std::vector<Matrix<Scalar>> ops;
  for (Index i = 0; i < a.dim(); ++i) ops.push_back(a.left_basis_operator(i));
  return Ideal<Scalar>(l.parent(), action_annihilator(ops, l.carrier()));
}

enum class Side { left, right };

/// ann of _A M (side = left) or of M_B (side = right).
template <ExactScalar Scalar>
Ideal<Scalar> bimodule_annihilator(const Bimodule<Scalar>& m, Side side) {
  const Subspace<Scalar> zero(m.dim());
  if (side == Side::left) return Ideal<Scalar>(m.left_algebra(), action_annihilator(m.left_action(), zero));
  return Ideal<Scalar>(m.right_algebra(), action_annihilator(m.right_action(), zero));
}

/// M.J as a subspace of the carrier.
template <ExactScalar Scalar>
Subspace<Scalar> bimodule_times_ideal(const Bimodule<Scalar>& m, const Ideal<Scalar>& j) {
  std::vector<Vector<Scalar>> span;
  for (Index k = 0; k < j.dim(); ++k) {
    const Matrix<Scalar> act = m.act_right(j.carrier().basis_vector(k));
    for (Index x = 0; x < m.dim(); ++x) span.push_back(act.col(x));
  }
  return Subspace<Scalar>::span(span, m.dim());
}

/// J^alpha = ann_A(M / M.J) for an A-B-bimodule M and an ideal J of B.
template <ExactScalar Scalar>
Ideal<Scalar> alpha_ideal(const Bimodule<Scalar>& m, const Ideal<Scalar>& j) {
  if (j.parent() != m.right_algebra()) throw ValidationError("alpha_ideal: ideal is not in the right algebra");
  return Ideal<Scalar>(m.left_algebra(), action_annihilator(m.left_action(), bimodule_times_ideal(m, j)));
}

// ---------------------------------------------------------------------------
// Quotients
// ---------------------------------------------------------------------------

/// A/I on the non-pivot coordinates of I's canonical basis, with the
/// projection A -> A/I.
template <ExactScalar Scalar>
std::pair<AlgebraPtr<Scalar>, AlgebraHom<Scalar>> quotient_algebra(const Ideal<Scalar>& i) {
  const auto& a = i.parent();
  if (i.is_whole()) throw ValidationError("quotient_algebra: quotient by the whole algebra");
  std::vector<bool> is_pivot(static_cast<std::size_t>(a->dim()), false);
  for (Index p : i.carrier().pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> reps;
  for (Index k = 0; k < a->dim(); ++k)
    if (!is_pivot[static_cast<std::size_t>(k)]) reps.push_back(k);
  const auto q = static_cast<Index>(reps.size());
  auto project = [&](const Vector<Scalar>& v) {
    const Vector<Scalar> r = i.carrier().reduce(v);
    Vector<Scalar> out(q);
    for (Index k = 0; k < q; ++k) out(k) = r(reps[static_cast<std::size_t>(k)]);
    return out;
  };
  std::vector<std::string> labels;
  for (Index k : reps) labels.push_back(a->labels()[static_cast<std::size_t>(k)]);
  std::vector<std::vector<Vector<Scalar>>> table(static_cast<std::size_t>(q));
  for (Index x = 0; x < q; ++x)
    for (Index y = 0; y < q; ++y) table[x].push_back(project(a->basis_product(reps[x], reps[y])));
  auto quotient = std::make_shared<const Algebra<Scalar>>(a->field(), std::move(labels), table, project(a->unit()));
  Matrix<Scalar> projection(q, a->dim());
  for (Index k = 0; k < a->dim(); ++k) projection.col(k) = project(a->basis_element(k));
  return {quotient, AlgebraHom<Scalar>(a, quotient, std::move(projection))};
}

// ---------------------------------------------------------------------------
// Radical
// ---------------------------------------------------------------------------

namespace detail {

/// Dickson: {x : tr(L_x L_y) = 0 for all y}; sound in characteristic 0 and
/// for p > dim.
template <ExactScalar Scalar>
Subspace<Scalar> trace_form_radical(const Algebra<Scalar>& a) {
  const Index n = a.dim();
  Matrix<Scalar> gram(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) gram(i, j) = (a.left_basis_operator(i) * a.left_basis_operator(j)).trace();
  return kernel<Scalar>(std::move(gram));
}

/// Radical over F_p for p <= dim (iterated trace criterion on integer
/// lifts of the regular representation):
///   I_{-1} = A,
///   I_i = {x in I_{i-1} : g_i(x y) = 0 for all basis y},
///   g_i(z) = (Tr(lift(L_z)^(p^i)) mod p^(i+1)) / p^i,
/// and rad A = I_l with l = floor(log_p dim). g_i is F_p-linear on I_{i-1}.
Subspace<Residue> small_characteristic_radical(const Algebra<Residue>& a);

}  // namespace detail

/// Jacobson radical (= prime radical for finite-dimensional algebras).
template <ExactScalar Scalar>
Ideal<Scalar> jacobson_radical(const AlgebraPtr<Scalar>& a) {
  if constexpr (std::is_same_v<Scalar, Residue>) {
    if (a->field().characteristic <= static_cast<std::uint32_t>(a->dim()))
      return Ideal<Scalar>(a, detail::small_characteristic_radical(*a));
  }
  return Ideal<Scalar>(a, detail::trace_form_radical(*a));
}

/// sqrt(I): preimage of rad(A/I).
template <ExactScalar Scalar>
Ideal<Scalar> prime_radical_of_ideal(const Ideal<Scalar>& i) {
  if (i.is_whole()) return i;
  if (i.is_zero()) return jacobson_radical(i.parent());
  auto [quotient, projection] = quotient_algebra(i);
  return preimage_under_hom(projection, jacobson_radical(quotient));
}

/// Least t with I^t contained in `modulo`; nullopt when the chain
/// I ⊇ I^2 ⊇ ... stabilizes strictly above it.
template <ExactScalar Scalar>
std::optional<int> nilpotency_index(const Ideal<Scalar>& i, const Ideal<Scalar>& modulo) {
  detail::require_same_parent(i, modulo, "nilpotency_index");
  Ideal<Scalar> power = i;
  for (int t = 1; t <= i.parent()->dim() + 1; ++t) {
    if (modulo.contains(power)) return t;
    Ideal<Scalar> next = ideal_product(power, i);
    if (next == power) return std::nullopt;
    power = std::move(next);
  }
  return std::nullopt;
}

}  // namespace ncspec
