#pragma once

// The prime spectrum of a finite-dimensional algebra: central primitive
// idempotents of the semisimple quotient, the primes as a finite ordered
// set, its Zariski closed sets, minimal primes, and Goldie ranks.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncspec/ideals.hpp"
#include "ncspec/polynomial.hpp"
#include "ncspec/random.hpp"
#include "ncspec/topology.hpp"

namespace ncspec {

// ---------------------------------------------------------------------------
// Center and idempotents
// ---------------------------------------------------------------------------

/// Z(A) = {z : z e_i = e_i z for every basis element}.
template <ExactScalar Scalar>
Subspace<Scalar> center(const Algebra<Scalar>& a) {
  const Index n = a.dim();
  Matrix<Scalar> system(n * n, n);
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k) system.block(i * n, k, n, 1) = a.basis_product(k, i) - a.basis_product(i, k);
  return kernel<Scalar>(std::move(system));
}

/// Centralizer of a subspace: {c : c u = u c for every u in the subspace}.
template <ExactScalar Scalar>
Subspace<Scalar> centralizer(const Algebra<Scalar>& a, const Subspace<Scalar>& u) {
  const Index n = a.dim();
  Matrix<Scalar> system = zero_matrix<Scalar>(std::max<Index>(u.dim(), 1) * n, n);
  for (Index i = 0; i < u.dim(); ++i)
    system.block(i * n, 0, n, n) = a.right_mul_operator(u.basis_vector(i)) - a.left_mul_operator(u.basis_vector(i));
  return kernel<Scalar>(std::move(system));
}

namespace detail {

/// Sum c_k y^k with y^0 = one.
template <ExactScalar Scalar>
Vector<Scalar> evaluate_in(const Algebra<Scalar>& a, const Polynomial<Scalar>& p, const Vector<Scalar>& y,
                           const Vector<Scalar>& one) {
  Vector<Scalar> acc = a.zero();
  const Matrix<Scalar> ly = a.left_mul_operator(y);
  for (int k = p.degree(); k >= 0; --k) acc = (ly * acc).eval() + p.coeff(k) * one;
  return acc;
}

/// Minimal polynomial of y inside the unital algebra eZ (unit `one`).
template <ExactScalar Scalar>
Polynomial<Scalar> minimal_polynomial_in(const Algebra<Scalar>& a, const Vector<Scalar>& y, const Vector<Scalar>& one,
                                         Index bound) {
  const Matrix<Scalar> ly = a.left_mul_operator(y);
  return minimal_polynomial_of_powers<Scalar>(one, [&](const Vector<Scalar>& v) { return (ly * v).eval(); }, bound);
}

/// Orthogonal idempotents e_i = (u_i * mu/q_i)(y), summing to `one`, from
/// the coprime factors q_i of the minimal polynomial mu of y.
template <ExactScalar Scalar>
std::vector<Vector<Scalar>> idempotents_from_factors(const Algebra<Scalar>& a, const Vector<Scalar>& y,
                                                     const Vector<Scalar>& one, const Polynomial<Scalar>& mu,
                                                     const std::vector<std::pair<Polynomial<Scalar>, bool>>& factors) {
  std::vector<Vector<Scalar>> out;
  for (const auto& [q, certified] : factors) {
    (void)certified;
    const Polynomial<Scalar> cofactor = mu / q;
    const auto [g, s] = gcd_inverse(cofactor, q);
    if (g.degree() != 0) throw std::logic_error("idempotent splitting: factors are not coprime");
    out.push_back(evaluate_in(a, s * cofactor, y, one));
  }
  return out;
}

enum class SplitOutcome { split, primitive, unknown };

/// Tries to split the idempotent e of the center; on success fills `parts`.
template <ExactScalar Scalar>
SplitOutcome split_central_idempotent(const Algebra<Scalar>& a, const Subspace<Scalar>& z, const Vector<Scalar>& e,
                                      std::vector<Vector<Scalar>>& parts) {
  std::vector<Vector<Scalar>> ez_gens;
  for (Index i = 0; i < z.dim(); ++i) ez_gens.push_back(a.product(e, z.basis_vector(i)));
  const Subspace<Scalar> ez = Subspace<Scalar>::span(ez_gens, a.dim());
  const Index m = ez.dim();
  if (m <= 1) return SplitOutcome::primitive;
  const std::uint32_t p = a.field().characteristic;

  auto try_split = [&](const Vector<Scalar>& y, bool& field_certificate) {
    const Polynomial<Scalar> mu = minimal_polynomial_in(a, y, e, m);
    const auto factors = coprime_factors(squarefree_part(mu, p), p);
    if (factors.size() >= 2) {
      if (squarefree_part(mu, p).degree() != mu.degree())
        throw std::logic_error("center of a semisimple algebra has a nilpotent element");
      parts = idempotents_from_factors(a, y, e, mu, factors);
      return true;
    }
    field_certificate = factors.size() == 1 && factors.front().second && mu.degree() == m;
    return false;
  };

  if constexpr (std::is_same_v<Scalar, Residue>) {
    // eZ is a product of finite fields; the Frobenius-fixed part has one
    // F_p-dimension per factor, and its elements have split minimal
    // polynomials.
    Matrix<Scalar> frob(a.dim(), m);
    for (Index j = 0; j < m; ++j) {
      const Vector<Scalar> zj = ez.basis_vector(j);
      frob.col(j) = a.power(zj, p) - zj;
    }
    const Subspace<Scalar> fixed_coords = kernel<Scalar>(std::move(frob));
    if (fixed_coords.dim() == 1) return SplitOutcome::primitive;
    const Subspace<Scalar> line = Subspace<Scalar>::span(std::vector<Vector<Scalar>>{e}, a.dim());
    for (Index k = 0; k < fixed_coords.dim(); ++k) {
      const Vector<Scalar> y = ez.basis().transpose() * fixed_coords.basis_vector(k);
      if (line.contains(y)) continue;
      bool field = false;
      if (try_split(y, field)) return SplitOutcome::split;
    }
    throw std::logic_error("Frobenius-fixed element failed to split the center");
  } else {
    SplitMix64 rng(0x5EEDC0DEULL + static_cast<std::uint64_t>(m));
    std::vector<Vector<Scalar>> candidates = ez.basis_vectors();
    for (int r = 0; r < 16; ++r) {
      Vector<Scalar> y = a.zero();
      for (Index j = 0; j < m; ++j) y += scalar_from_int<Scalar>(a.field(), rng.between(-3, 3)) * ez.basis_vector(j);
      candidates.push_back(std::move(y));
    }
    for (const auto& y : candidates) {
      bool field = false;
      if (try_split(y, field)) return SplitOutcome::split;
      if (field) return SplitOutcome::primitive;
    }
    return SplitOutcome::unknown;
  }
}

}  // namespace detail

/// Central primitive idempotents of a semisimple algebra, in the order
/// produced by the splitting (callers sort the resulting ideals).
template <ExactScalar Scalar>
std::vector<Vector<Scalar>> central_primitive_idempotents(const Algebra<Scalar>& a) {
  const Subspace<Scalar> z = center(a);
  std::vector<Vector<Scalar>> work{a.unit()}, done;
  while (!work.empty()) {
    Vector<Scalar> e = std::move(work.back());
    work.pop_back();
    std::vector<Vector<Scalar>> parts;
    switch (detail::split_central_idempotent(a, z, e, parts)) {
      case detail::SplitOutcome::primitive:
        done.push_back(std::move(e));
        break;
      case detail::SplitOutcome::split:
        for (auto& part : parts) work.push_back(std::move(part));
        break;
      case detail::SplitOutcome::unknown:
        throw NonSplitCenter("cannot split the center component at " + a.format(e) +
                             " with rational roots and low-degree certificates");
    }
  }
  return done;
}

// ---------------------------------------------------------------------------
// Spec
// ---------------------------------------------------------------------------

template <ExactScalar Scalar>
struct PrimeIdeal {
  Ideal<Scalar> ideal;
  /// dim A/P, the certificate that A/P is one simple component.
  Index quotient_dim;
};

template <ExactScalar Scalar>
class SpecSet {
 public:
  SpecSet(AlgebraPtr<Scalar> algebra, Ideal<Scalar> radical, std::vector<PrimeIdeal<Scalar>> primes)
      : algebra_(std::move(algebra)), radical_(std::move(radical)), primes_(std::move(primes)) {
    if (primes_.size() > 32) throw CapExceeded("more than 32 primes");
  }

  const AlgebraPtr<Scalar>& algebra() const { return algebra_; }
  const Ideal<Scalar>& radical() const { return radical_; }
  const std::vector<PrimeIdeal<Scalar>>& primes() const { return primes_; }
  int size() const { return static_cast<int>(primes_.size()); }
  const PrimeIdeal<Scalar>& prime(int i) const { return primes_[static_cast<std::size_t>(i)]; }
  PointSet all() const { return full_set(size()); }

 private:
  AlgebraPtr<Scalar> algebra_;
  Ideal<Scalar> radical_;
  std::vector<PrimeIdeal<Scalar>> primes_;
};

/// Semisimple quotient A/rad A with its projection.
template <ExactScalar Scalar>
std::pair<AlgebraPtr<Scalar>, AlgebraHom<Scalar>> semisimple_quotient(const Ideal<Scalar>& radical) {
  if (radical.is_zero()) return {radical.parent(), AlgebraHom<Scalar>::identity(radical.parent())};
  return quotient_algebra(radical);
}

template <ExactScalar Scalar>
SpecSet<Scalar> spec(const AlgebraPtr<Scalar>& a) {
  Ideal<Scalar> rad = jacobson_radical(a);
  auto [b, projection] = semisimple_quotient(rad);
  std::vector<PrimeIdeal<Scalar>> primes;
  for (const auto& e : central_primitive_idempotents(*b)) {
    // A'(1 - e): the sum of the other components.
    const Matrix<Scalar> right = b->right_mul_operator((b->unit() - e).eval());
    const Subspace<Scalar> others = image(right, Subspace<Scalar>::full(b->dim()));
    const Ideal<Scalar> p = preimage_under_hom(projection, Ideal<Scalar>(b, others));
    primes.push_back(PrimeIdeal<Scalar>{p, b->dim() - others.dim()});
  }
  std::sort(primes.begin(), primes.end(), [](const auto& x, const auto& y) { return x.ideal < y.ideal; });
  return SpecSet<Scalar>(a, std::move(rad), std::move(primes));
}

/// A/I simple: rad(A/I) = 0 and a single central primitive idempotent.
template <ExactScalar Scalar>
bool is_prime(const Ideal<Scalar>& i) {
  if (i.is_whole()) return false;
  AlgebraPtr<Scalar> b = i.parent();
  if (!i.is_zero()) b = quotient_algebra(i).first;
  if (!jacobson_radical(b).is_zero()) return false;
  return central_primitive_idempotents(*b).size() == 1;
}

/// The definition of primeness: for every a outside I, {b : a A b ⊆ I} = I.
/// For fixed a that set is the subspace W_a = {b : a e_k b in I for all k},
/// so only a ranges over the quotient. Over F_p with at most 2^16 quotient
/// vectors every a is checked (exact); otherwise a runs over coset
/// representatives, their pairwise sums and 64 seeded random combinations,
/// which can only err towards "prime".
template <ExactScalar Scalar>
bool definitional_prime_oracle(const Ideal<Scalar>& i) {
  if (i.is_whole()) return false;
  const auto& alg = *i.parent();
  const Index n = alg.dim();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : i.carrier().pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> reps;
  for (Index k = 0; k < n; ++k)
    if (!is_pivot[static_cast<std::size_t>(k)]) reps.push_back(k);
  const auto q = static_cast<Index>(reps.size());

  const Matrix<Scalar> functionals = i.carrier().annihilating_functionals();
  auto witness_free = [&](const Vector<Scalar>& a) {
    // W_a is the common kernel of F L_{a e_k}, F cutting out I.
    const Index f = functionals.rows();
    Matrix<Scalar> stacked(f * n, n);
    for (Index k = 0; k < n; ++k)
      stacked.block(k * f, 0, f, n) = functionals * alg.left_mul_operator(alg.product(a, alg.basis_element(k)));
    return i.carrier().contains(kernel<Scalar>(std::move(stacked)));
  };
  auto from_coords = [&](const std::vector<long long>& c) {
    Vector<Scalar> a = alg.zero();
    for (Index k = 0; k < q; ++k) a(reps[static_cast<std::size_t>(k)]) = scalar_from_int<Scalar>(alg.field(), c[static_cast<std::size_t>(k)]);
    return a;
  };

  const FieldSpec& field = alg.field();
  if (field.is_prime_field()) {
    double count = 1;
    for (Index k = 0; k < q; ++k) count *= field.characteristic;
    if (count <= 65536.0) {
      // Nonzero coordinate vectors with leading entry 1 cover every a up to
      // a scalar, and W_a only depends on a up to scalars.
      const auto p = static_cast<long long>(field.characteristic);
      std::vector<long long> c(static_cast<std::size_t>(q), 0);
      for (Index lead = 0; lead < q; ++lead) {
        std::fill(c.begin(), c.end(), 0);
        c[static_cast<std::size_t>(lead)] = 1;
        while (true) {
          if (!witness_free(from_coords(c))) return false;
          Index pos = lead + 1;
          while (pos < q && c[static_cast<std::size_t>(pos)] == p - 1) c[static_cast<std::size_t>(pos++)] = 0;
          if (pos >= q) break;
          ++c[static_cast<std::size_t>(pos)];
        }
      }
      return true;
    }
  }
  for (Index k = 0; k < q; ++k)
    if (!witness_free(alg.basis_element(reps[static_cast<std::size_t>(k)]))) return false;
  for (Index k = 0; k < q; ++k)
    for (Index l = k + 1; l < q; ++l)
      if (!witness_free((alg.basis_element(reps[static_cast<std::size_t>(k)]) +
                         alg.basis_element(reps[static_cast<std::size_t>(l)])).eval()))
        return false;
  SplitMix64 rng(0xD1CEULL);
  for (int r = 0; r < 64; ++r) {
    std::vector<long long> c(static_cast<std::size_t>(q));
    for (auto& x : c) x = rng.between(-3, 3);
    const Vector<Scalar> a = from_coords(c);
    if (!is_zero_matrix(a) && !witness_free(a)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Zariski closed sets
// ---------------------------------------------------------------------------

template <ExactScalar Scalar>
struct ClosedSet {
  PointSet members;
  /// I(U): intersection of the member primes (the whole algebra for U = ∅).
  Ideal<Scalar> defining_ideal;
};

/// V(X): primes containing X.
template <ExactScalar Scalar>
PointSet v_of(const SpecSet<Scalar>& s, const Ideal<Scalar>& x) {
  PointSet out = 0;
  for (int k = 0; k < s.size(); ++k)
    if (s.prime(k).ideal.contains(x)) out |= PointSet{1} << k;
  return out;
}

/// V of the two-sided ideal generated by a set of elements.
template <ExactScalar Scalar>
PointSet v_of(const SpecSet<Scalar>& s, const std::vector<Vector<Scalar>>& elements) {
  return v_of(s, two_sided_ideal_generated(s.algebra(), elements));
}

/// I(U).
template <ExactScalar Scalar>
Ideal<Scalar> i_of(const SpecSet<Scalar>& s, PointSet u) {
  Ideal<Scalar> out = Ideal<Scalar>::whole(s.algebra());
  for (int k = 0; k < s.size(); ++k)
    if (contains_point(u, k)) out = ideal_intersect(out, s.prime(k).ideal);
  return out;
}

/// V(I(U)).
template <ExactScalar Scalar>
PointSet closure(const SpecSet<Scalar>& s, PointSet u) {
  return v_of(s, i_of(s, u));
}

template <ExactScalar Scalar>
ClosedSet<Scalar> closed_set(const SpecSet<Scalar>& s, PointSet u) {
  Ideal<Scalar> ideal = i_of(s, u);
  if (v_of(s, ideal) != u) throw ValidationError(format_point_set(u) + " is not Zariski closed");
  return ClosedSet<Scalar>{u, std::move(ideal)};
}

/// Primes containing I that are minimal among them under inclusion.
template <ExactScalar Scalar>
PointSet minimal_primes_over(const SpecSet<Scalar>& s, const Ideal<Scalar>& i) {
  const PointSet over = v_of(s, i);
  PointSet out = 0;
  for (int k = 0; k < s.size(); ++k) {
    if (!contains_point(over, k)) continue;
    bool minimal = true;
    for (int l = 0; l < s.size() && minimal; ++l)
      if (l != k && contains_point(over, l) && s.prime(k).ideal.contains(s.prime(l).ideal) &&
          !(s.prime(k).ideal == s.prime(l).ideal))
        minimal = false;
    if (minimal) out |= PointSet{1} << k;
  }
  return out;
}

/// Every subset U with U = V(I(U)); at most 16 primes.
template <ExactScalar Scalar>
FiniteSpace all_closed_sets(const SpecSet<Scalar>& s) {
  if (s.size() > 16) throw CapExceeded("closed-set enumeration supports at most 16 primes");
  std::vector<PointSet> closed;
  for (PointSet u = 0; u <= s.all(); ++u) {
    if (closure(s, u) == u) closed.push_back(u);
    if (u == s.all()) break;
  }
  return FiniteSpace(s.size(), std::move(closed));
}

// ---------------------------------------------------------------------------
// Goldie rank
// ---------------------------------------------------------------------------

struct GoldieRank {
  int rank;
  /// Minimal dimension of a nonzero principal left ideal of A/P.
  Index s;
  Index quotient_dim;
  Index center_dim;
};

namespace detail {

template <ExactScalar Scalar>
Index principal_left_ideal_dim(const Algebra<Scalar>& b, const Vector<Scalar>& x) {
  return rank<Scalar>(b.right_mul_operator(x));
}

inline std::optional<Index> exact_sqrt(Index n) {
  Index r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) return std::nullopt;
  return r;
}

}  // namespace detail

/// Goldie rank of a simple algebra B ≅ M_N(D): N = dim B / s with s the
/// least dimension of a nonzero principal left ideal Bx. Candidates are
/// basis elements, pairwise basis products, 64 seeded random elements, and
/// zero divisors g(x) cut out of each candidate's minimal polynomial. The
/// answer is certified by dim B = N s, s ≡ 0 (mod N) and N = M where
/// M² = dim B / dim Z(B). Over F_p the division ring D is a field, so the
/// certificate always exists and an exhaustive search backs up the
/// candidates; over Q a noncommutative D (N < M) is reported as
/// RankUncertified rather than guessed.
template <ExactScalar Scalar>
GoldieRank simple_algebra_rank(const Algebra<Scalar>& b) {
  const Index d = b.dim();
  const Index zdim = center(b).dim();
  const std::uint32_t p = b.field().characteristic;
  const auto m = detail::exact_sqrt(d % zdim == 0 ? d / zdim : -1);
  if (!m) throw RankUncertified("dim A/P = " + std::to_string(d) + " is not a square times dim Z = " + std::to_string(zdim));

  Index best = d;
  std::vector<Vector<Scalar>> work;
  for (Index i = 0; i < d; ++i) work.push_back(b.basis_element(i));
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) work.push_back(b.basis_product(i, j));
  SplitMix64 rng(0x60D1EULL);
  for (int r = 0; r < 64; ++r) {
    Vector<Scalar> x(d);
    for (Index k = 0; k < d; ++k) x(k) = scalar_from_int<Scalar>(b.field(), rng.between(-4, 4));
    work.push_back(std::move(x));
  }
  std::size_t budget = work.size() * 4 + 256;
  while (!work.empty() && budget-- > 0 && best > d / *m) {
    Vector<Scalar> x = std::move(work.back());
    work.pop_back();
    if (is_zero_matrix(x)) continue;
    const Index dim_x = detail::principal_left_ideal_dim(b, x);
    if (dim_x < best) best = dim_x;
    const Polynomial<Scalar> mu = detail::minimal_polynomial_in(b, x, b.unit(), d);
    for (const auto& [q, certified] : coprime_factors(squarefree_part(mu, p), p)) {
      (void)certified;
      if (q.degree() == mu.degree()) continue;
      for (const auto& g : {mu / q, q}) {
        Vector<Scalar> y = detail::evaluate_in(b, g, x, b.unit());
        if (!is_zero_matrix(y) && detail::principal_left_ideal_dim(b, y) < dim_x) work.push_back(std::move(y));
      }
    }
  }
  auto certified = [&](Index s) {
    if (s == 0 || d % s != 0) return false;
    const Index n = d / s;
    return s % n == 0 && n == *m;
  };
  if (!certified(best) && b.field().is_prime_field()) {
    double count = 1;
    for (Index k = 0; k < d; ++k) count *= p;
    if (count > 65536.0) throw RankUncertified("candidate search missed the minimal left ideal and F_p^" + std::to_string(d) + " is too large to search");
    std::vector<long long> c(static_cast<std::size_t>(d), 0);
    for (Index lead = 0; lead < d; ++lead) {
      std::fill(c.begin(), c.end(), 0);
      c[static_cast<std::size_t>(lead)] = 1;
      while (true) {
        Vector<Scalar> x(d);
        for (Index k = 0; k < d; ++k) x(k) = scalar_from_int<Scalar>(b.field(), c[static_cast<std::size_t>(k)]);
        best = std::min(best, detail::principal_left_ideal_dim(b, x));
        Index pos = lead + 1;
        while (pos < d && c[static_cast<std::size_t>(pos)] == static_cast<long long>(p) - 1) c[static_cast<std::size_t>(pos++)] = 0;
        if (pos >= d) break;
        ++c[static_cast<std::size_t>(pos)];
      }
    }
  }
  if (!certified(best))
    throw RankUncertified("minimal left ideal search gave s = " + std::to_string(best) + " for dim " + std::to_string(d) +
                          " with sqrt(dim/dim Z) = " + std::to_string(*m));
  return GoldieRank{static_cast<int>(d / best), best, d, zdim};
}

template <ExactScalar Scalar>
GoldieRank goldie_rank(const PrimeIdeal<Scalar>& p) {
  const AlgebraPtr<Scalar> b = p.ideal.is_zero() ? p.ideal.parent() : quotient_algebra(p.ideal).first;
  return simple_algebra_rank(*b);
}

template <ExactScalar Scalar>
std::vector<GoldieRank> goldie_ranks(const SpecSet<Scalar>& s) {
  std::vector<GoldieRank> out;
  for (const auto& p : s.primes()) out.push_back(goldie_rank(p));
  return out;
}

/// Spec_n: primes with Goldie rank at most n.
inline PointSet spec_n(const std::vector<GoldieRank>& ranks, int n) {
  PointSet out = 0;
  for (std::size_t k = 0; k < ranks.size(); ++k)
    if (ranks[k].rank <= n) out |= PointSet{1} << k;
  return out;
}

template <ExactScalar Scalar>
PointSet spec_n(const SpecSet<Scalar>& s, int n) {
  return spec_n(goldie_ranks(s), n);
}

/// Closed sets of the relative topology on a subset: traces of closed sets.
inline std::vector<PointSet> relative_closed_sets(const FiniteSpace& x, PointSet subset) {
  std::vector<PointSet> out;
  for (PointSet c : x.closed_sets()) out.push_back(c & subset);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ncspec
