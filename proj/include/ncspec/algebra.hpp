#pragma once

// Finite-dimensional unital associative algebras given by structure
// constants, their homomorphisms, and bimodules.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncspec/linalg.hpp"
#include "ncspec/scalar.hpp"

namespace ncspec {

/// Render a coordinate vector as a combination of basis labels, e.g.
/// "e11+e22", "2*e12", "-1/2*x". Zero renders as "0".
template <ExactScalar Scalar>
std::string format_combination(const std::vector<std::string>& labels, const Vector<Scalar>& v,
                               const FieldSpec& field);

/// Field-aware scalar rendering ("3/4", "2 mod 5").
template <ExactScalar Scalar>
std::string format_scalar(const FieldSpec& field, const Scalar& x) {
  if constexpr (std::is_same_v<Scalar, Residue>) {
    return to_string(Residue(x.value(), field.characteristic));
  } else {
    (void)field;
    return to_string(x);
  }
}

// ---------------------------------------------------------------------------
// Algebra
// ---------------------------------------------------------------------------

template <ExactScalar Scalar>
class Algebra {
 public:
  /// table[i][j] = coordinates of e_i * e_j. Validates associativity and the
  /// unit law exhaustively; throws ValidationError naming the failing triple.
  Algebra(FieldSpec field, std::vector<std::string> labels,
          const std::vector<std::vector<Vector<Scalar>>>& table, Vector<Scalar> unit);

  const FieldSpec& field() const { return field_; }
  Index dim() const { return static_cast<Index>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vector<Scalar>& unit() const { return unit_; }

  Vector<Scalar> zero() const { return zero_vector<Scalar>(dim()); }
  Vector<Scalar> basis_element(Index i) const { return unit_vector<Scalar>(dim(), i); }
  Vector<Scalar> scalar(long long n) const { return unit_ * scalar_from_int<Scalar>(field_, n); }

  /// Matrix of y -> e_i * y.
  const Matrix<Scalar>& left_basis_operator(Index i) const { return left_[static_cast<std::size_t>(i)]; }
  /// Matrix of y -> y * e_j.
  const Matrix<Scalar>& right_basis_operator(Index j) const { return right_[static_cast<std::size_t>(j)]; }

  Vector<Scalar> basis_product(Index i, Index j) const { return left_[static_cast<std::size_t>(i)].col(j); }

  Vector<Scalar> product(const Vector<Scalar>& x, const Vector<Scalar>& y) const {
    return left_mul_operator(x) * y;
  }

  Vector<Scalar> power(const Vector<Scalar>& x, unsigned long long k) const {
    Vector<Scalar> result = unit_, base = x;
    while (k > 0) {
      if (k & 1ULL) result = product(result, base);
      k >>= 1;
      if (k > 0) base = product(base, base);
    }
    return result;
  }

  /// Regular representation: matrix of y -> x * y.
  Matrix<Scalar> left_mul_operator(const Vector<Scalar>& x) const {
    check(x);
    Matrix<Scalar> m = zero_matrix<Scalar>(dim(), dim());
    for (Index i = 0; i < dim(); ++i)
      if (!is_zero(x(i))) m += x(i) * left_[static_cast<std::size_t>(i)];
    return m;
  }

  /// Matrix of y -> y * x.
  Matrix<Scalar> right_mul_operator(const Vector<Scalar>& x) const {
    check(x);
    Matrix<Scalar> m = zero_matrix<Scalar>(dim(), dim());
    for (Index i = 0; i < dim(); ++i)
      if (!is_zero(x(i))) m += x(i) * right_[static_cast<std::size_t>(i)];
    return m;
  }

  bool is_commutative() const {
    for (Index i = 0; i < dim(); ++i)
      for (Index j = i + 1; j < dim(); ++j)
        if (basis_product(i, j) != basis_product(j, i)) return false;
    return true;
  }

  std::string format(const Vector<Scalar>& v) const { return format_combination(labels_, v, field_); }

  void check(const Vector<Scalar>& x) const {
    if (x.size() != dim())
      throw ShapeMismatch("element has " + std::to_string(x.size()) + " coordinates, algebra has dimension " +
                          std::to_string(dim()));
  }

 private:
  void validate() const;

  FieldSpec field_;
  std::vector<std::string> labels_;
  std::vector<Matrix<Scalar>> left_;
  std::vector<Matrix<Scalar>> right_;
  Vector<Scalar> unit_;
};

template <ExactScalar Scalar>
using AlgebraPtr = std::shared_ptr<const Algebra<Scalar>>;

template <ExactScalar Scalar>
Algebra<Scalar>::Algebra(FieldSpec field, std::vector<std::string> labels,
                         const std::vector<std::vector<Vector<Scalar>>>& table, Vector<Scalar> unit)
    : field_(field), labels_(std::move(labels)), unit_(std::move(unit)) {
  const auto n = static_cast<Index>(labels_.size());
  if (n == 0) throw ValidationError("algebra must have dimension at least 1");
  if (static_cast<Index>(table.size()) != n) throw ValidationError("multiplication table has wrong number of rows");
  if (unit_.size() != n) throw ValidationError("unit has wrong number of coordinates");
  left_.assign(static_cast<std::size_t>(n), zero_matrix<Scalar>(n, n));
  right_.assign(static_cast<std::size_t>(n), zero_matrix<Scalar>(n, n));
  for (Index i = 0; i < n; ++i) {
    if (static_cast<Index>(table[i].size()) != n)
      throw ValidationError("multiplication table row " + labels_[i] + " has wrong length");
    for (Index j = 0; j < n; ++j) {
      const auto& c = table[i][j];
      if (c.size() != n)
        throw ValidationError("product " + labels_[i] + "*" + labels_[j] + " has wrong number of coordinates");
      left_[i].col(j) = c;
      right_[j].col(i) = c;
    }
  }
  validate();
}

template <ExactScalar Scalar>
void Algebra<Scalar>::validate() const {
  const Index n = dim();
  for (Index i = 0; i < n; ++i) {
    const Vector<Scalar> e = basis_element(i);
    if (product(unit_, e) != e || product(e, unit_) != e)
      throw ValidationError("unit law fails at basis element " + labels_[i]);
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      // Column k of each side is (e_i e_j) e_k and e_i (e_j e_k).
      const Matrix<Scalar> lhs = left_mul_operator(basis_product(i, j));
      const Matrix<Scalar> rhs = left_[i] * left_[j];
      for (Index k = 0; k < n; ++k)
        if (lhs.col(k) != rhs.col(k))
          throw ValidationError("associativity fails at triple (" + labels_[i] + ", " + labels_[j] + ", " +
                                labels_[k] + ")");
    }
}

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

template <ExactScalar Scalar>
class AlgebraElement {
 public:
  AlgebraElement(AlgebraPtr<Scalar> parent, Vector<Scalar> coords) : parent_(std::move(parent)), coords_(std::move(coords)) {
    parent_->check(coords_);
  }
  const AlgebraPtr<Scalar>& parent() const { return parent_; }
  const Vector<Scalar>& coords() const { return coords_; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.parent_ == b.parent_ && a.coords_ == b.coords_;
  }

 private:
  AlgebraPtr<Scalar> parent_;
  Vector<Scalar> coords_;
};

template <ExactScalar Scalar>
AlgebraElement<Scalar> multiply(const AlgebraElement<Scalar>& x, const AlgebraElement<Scalar>& y) {
  if (x.parent() != y.parent()) throw ValidationError("multiply: elements belong to different algebras");
  return AlgebraElement<Scalar>(x.parent(), x.parent()->product(x.coords(), y.coords()));
}

template <ExactScalar Scalar>
Matrix<Scalar> left_mul_operator(const AlgebraElement<Scalar>& x) {
  return x.parent()->left_mul_operator(x.coords());
}

// ---------------------------------------------------------------------------
// Homomorphisms
// ---------------------------------------------------------------------------

/// Unital homomorphism; matrix is (target dim) x (source dim), column i is
/// the image of source basis element i.
template <ExactScalar Scalar>
class AlgebraHom {
 public:
  AlgebraHom(AlgebraPtr<Scalar> source, AlgebraPtr<Scalar> target, Matrix<Scalar> matrix);

  const AlgebraPtr<Scalar>& source() const { return source_; }
  const AlgebraPtr<Scalar>& target() const { return target_; }
  const Matrix<Scalar>& matrix() const { return matrix_; }

  Vector<Scalar> apply(const Vector<Scalar>& x) const { return matrix_ * x; }

  static AlgebraHom identity(const AlgebraPtr<Scalar>& a) {
    return AlgebraHom(a, a, identity_matrix<Scalar>(a->dim()));
  }

 private:
  AlgebraPtr<Scalar> source_;
  AlgebraPtr<Scalar> target_;
  Matrix<Scalar> matrix_;
};

template <ExactScalar Scalar>
AlgebraHom<Scalar>::AlgebraHom(AlgebraPtr<Scalar> source, AlgebraPtr<Scalar> target, Matrix<Scalar> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (!(source_->field() == target_->field())) throw ValidationError("homomorphism between different fields");
  if (matrix_.rows() != target_->dim() || matrix_.cols() != source_->dim())
    throw ValidationError("homomorphism matrix must be " + std::to_string(target_->dim()) + "x" +
                          std::to_string(source_->dim()));
  if (apply(source_->unit()) != target_->unit()) throw ValidationError("homomorphism does not preserve the unit");
  for (Index i = 0; i < source_->dim(); ++i)
    for (Index j = 0; j < source_->dim(); ++j)
      if (apply(source_->basis_product(i, j)) != target_->product(matrix_.col(i), matrix_.col(j)))
        throw ValidationError("homomorphism is not multiplicative at pair (" + source_->labels()[i] + ", " +
                              source_->labels()[j] + ")");
}

template <ExactScalar Scalar>
AlgebraHom<Scalar> compose(const AlgebraHom<Scalar>& g, const AlgebraHom<Scalar>& f) {
  if (f.target() != g.source()) throw ValidationError("compose: target of f is not source of g");
  return AlgebraHom<Scalar>(f.source(), g.target(), g.matrix() * f.matrix());
}

// ---------------------------------------------------------------------------
// Bimodules
// ---------------------------------------------------------------------------

/// An A-B-bimodule on k^m. left_action[i] is the matrix of v -> a_i.v and
/// right_action[j] the matrix of v -> v.b_j (both acting on columns).
template <ExactScalar Scalar>
class Bimodule {
 public:
  Bimodule(AlgebraPtr<Scalar> left_algebra, AlgebraPtr<Scalar> right_algebra, Index dim,
           std::vector<Matrix<Scalar>> left_action, std::vector<Matrix<Scalar>> right_action);

  const AlgebraPtr<Scalar>& left_algebra() const { return left_algebra_; }
  const AlgebraPtr<Scalar>& right_algebra() const { return right_algebra_; }
  Index dim() const { return dim_; }
  const std::vector<Matrix<Scalar>>& left_action() const { return left_action_; }
  const std::vector<Matrix<Scalar>>& right_action() const { return right_action_; }

  Matrix<Scalar> act_left(const Vector<Scalar>& a) const { return combine(left_action_, a); }
  Matrix<Scalar> act_right(const Vector<Scalar>& b) const { return combine(right_action_, b); }

 private:
  Matrix<Scalar> combine(const std::vector<Matrix<Scalar>>& ops, const Vector<Scalar>& x) const {
    Matrix<Scalar> m = zero_matrix<Scalar>(dim_, dim_);
    for (std::size_t i = 0; i < ops.size(); ++i)
      if (!is_zero(x(static_cast<Index>(i)))) m += x(static_cast<Index>(i)) * ops[i];
    return m;
  }

  AlgebraPtr<Scalar> left_algebra_;
  AlgebraPtr<Scalar> right_algebra_;
  Index dim_;
  std::vector<Matrix<Scalar>> left_action_;
  std::vector<Matrix<Scalar>> right_action_;
};

template <ExactScalar Scalar>
Bimodule<Scalar>::Bimodule(AlgebraPtr<Scalar> left_algebra, AlgebraPtr<Scalar> right_algebra, Index dim,
                           std::vector<Matrix<Scalar>> left_action, std::vector<Matrix<Scalar>> right_action)
    : left_algebra_(std::move(left_algebra)),
      right_algebra_(std::move(right_algebra)),
      dim_(dim),
      left_action_(std::move(left_action)),
      right_action_(std::move(right_action)) {
  const auto& a = *left_algebra_;
  const auto& b = *right_algebra_;
  if (static_cast<Index>(left_action_.size()) != a.dim() || static_cast<Index>(right_action_.size()) != b.dim())
    throw ValidationError("bimodule: one action matrix per basis element required");
  for (const auto& m : left_action_)
    if (m.rows() != dim_ || m.cols() != dim_) throw ValidationError("bimodule: action matrix has wrong shape");
  for (const auto& m : right_action_)
    if (m.rows() != dim_ || m.cols() != dim_) throw ValidationError("bimodule: action matrix has wrong shape");
  const Matrix<Scalar> id = identity_matrix<Scalar>(dim_);
  if (act_left(a.unit()) != id) throw ValidationError("bimodule: left action is not unital");
  if (act_right(b.unit()) != id) throw ValidationError("bimodule: right action is not unital");
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j)
      if (act_left(a.basis_product(i, j)) != left_action_[i] * left_action_[j])
        throw ValidationError("bimodule: left action not multiplicative at (" + a.labels()[i] + ", " +
                              a.labels()[j] + ")");
  for (Index i = 0; i < b.dim(); ++i)
    for (Index j = 0; j < b.dim(); ++j)
      if (act_right(b.basis_product(i, j)) != right_action_[j] * right_action_[i])
        throw ValidationError("bimodule: right action not multiplicative at (" + b.labels()[i] + ", " +
                              b.labels()[j] + ")");
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < b.dim(); ++j)
      if (left_action_[i] * right_action_[j] != right_action_[j] * left_action_[i])
        throw ValidationError("bimodule: actions of " + a.labels()[i] + " and " + b.labels()[j] + " do not commute");
}

enum class RegularOrientation {
  /// Carrier = target S, left action of the source R through f, right action
  /// of S (restriction of scalars).
  source_left,
  /// Carrier = target S, left action of S, right action of R through f
  /// (extension of scalars).
  target_left,
};

template <ExactScalar Scalar>
Bimodule<Scalar> regular_bimodule(const AlgebraHom<Scalar>& f, RegularOrientation orientation) {
  const auto& r = *f.source();
  const auto& s = *f.target();
  std::vector<Matrix<Scalar>> via_f, own;
  for (Index i = 0; i < s.dim(); ++i) own.push_back(orientation == RegularOrientation::source_left
                                                        ? s.right_basis_operator(i)
                                                        : s.left_basis_operator(i));
  for (Index i = 0; i < r.dim(); ++i) {
    const Vector<Scalar> image = f.matrix().col(i);
    via_f.push_back(orientation == RegularOrientation::source_left ? s.left_mul_operator(image)
                                                                   : s.right_mul_operator(image));
  }
  if (orientation == RegularOrientation::source_left)
    return Bimodule<Scalar>(f.source(), f.target(), s.dim(), std::move(via_f), std::move(own));
  return Bimodule<Scalar>(f.target(), f.source(), s.dim(), std::move(own), std::move(via_f));
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

/// M_n(k) with basis e_ij in row-major order, labels "e11", "e12", ...
template <ExactScalar Scalar>
AlgebraPtr<Scalar> matrix_algebra(const FieldSpec& field, int n);

/// Upper-triangular n x n matrices, basis e_ij (i <= j) in row-major order.
template <ExactScalar Scalar>
AlgebraPtr<Scalar> upper_triangular_algebra(const FieldSpec& field, int n);

/// k[G] for the group with the given Cayley table (entries are element
/// indices); throws ValidationError when the table is not a group.
template <ExactScalar Scalar>
AlgebraPtr<Scalar> group_algebra(const FieldSpec& field, const std::vector<std::vector<int>>& cayley_table,
                                 std::vector<std::string> element_names = {});

template <ExactScalar Scalar>
AlgebraPtr<Scalar> direct_product(const Algebra<Scalar>& a, const Algebra<Scalar>& b);

/// The algebra with basis the rows of `basis` (a canonical basis of a
/// subalgebra of `a` containing 1), together with its inclusion.
template <ExactScalar Scalar>
std::pair<AlgebraPtr<Scalar>, AlgebraHom<Scalar>> algebra_on_subspace(const AlgebraPtr<Scalar>& a,
                                                                      const Subspace<Scalar>& carrier);

/// Smallest unital subalgebra containing gens, with its inclusion.
template <ExactScalar Scalar>
std::pair<AlgebraPtr<Scalar>, AlgebraHom<Scalar>> subalgebra_from_generators(
    const AlgebraPtr<Scalar>& a, const std::vector<Vector<Scalar>>& gens);

/// Span of 1 and gens closed under products (the carrier used above).
template <ExactScalar Scalar>
Subspace<Scalar> subalgebra_closure(const Algebra<Scalar>& a, const std::vector<Vector<Scalar>>& gens);

}  // namespace ncspec

#include "ncspec/algebra_impl.hpp"
