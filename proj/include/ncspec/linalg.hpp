#pragma once

// Canonical-form linear algebra over an exact field.
//
// Every subspace is stored as its reduced row-echelon basis with zero rows
// removed, so two subspaces are equal as sets iff their stored bases are
// identical entry by entry.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ncspec/scalar.hpp"

namespace ncspec {

using Index = Eigen::Index;

template <ExactScalar Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <ExactScalar Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <ExactScalar Scalar>
Vector<Scalar> zero_vector(Index n) {
  return Vector<Scalar>::Constant(n, Scalar(0));
}

template <ExactScalar Scalar>
Matrix<Scalar> zero_matrix(Index rows, Index cols) {
  return Matrix<Scalar>::Constant(rows, cols, Scalar(0));
}

template <ExactScalar Scalar>
Matrix<Scalar> identity_matrix(Index n) {
  Matrix<Scalar> m = zero_matrix<Scalar>(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <ExactScalar Scalar>
Vector<Scalar> unit_vector(Index n, Index i) {
  Vector<Scalar> v = zero_vector<Scalar>(n);
  v(i) = Scalar(1);
  return v;
}

// Gauss-Jordan elimination in place. Returns the pivot columns; the first
// pivots.size() rows of m hold the reduced row-echelon form, the rest are 0.
template <ExactScalar Scalar>
std::vector<Index> rref_in_place(Matrix<Scalar>& m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index sel = row;
    while (sel < m.rows() && is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const Scalar factor = m(r, col);
      for (Index j = col; j < m.cols(); ++j) m(r, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Unique reduced row-echelon form, same shape as the input (zero rows last).
template <ExactScalar Scalar>
Matrix<Scalar> rref(Matrix<Scalar> m) {
  rref_in_place(m);
  return m;
}

template <ExactScalar Scalar>
Index rank(Matrix<Scalar> m) {
  return static_cast<Index>(rref_in_place(m).size());
}

// ---------------------------------------------------------------------------
// Subspace
// ---------------------------------------------------------------------------

template <ExactScalar Scalar>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Index ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Row span of `rows`.
  static Subspace span(Matrix<Scalar> rows) {
    Subspace s(rows.cols());
    auto pivots = rref_in_place(rows);
    s.basis_ = rows.topRows(static_cast<Index>(pivots.size()));
    s.pivots_ = std::move(pivots);
    return s;
  }

  static Subspace span(const std::vector<Vector<Scalar>>& vectors, Index ambient_dim) {
    Matrix<Scalar> rows(static_cast<Index>(vectors.size()), ambient_dim);
    for (Index i = 0; i < rows.rows(); ++i) {
      if (vectors[i].size() != ambient_dim) throw ShapeMismatch("span: vector length differs from ambient dimension");
      rows.row(i) = vectors[i].transpose();
    }
    return span(std::move(rows));
  }

  static Subspace full(Index ambient_dim) {
    Subspace s(ambient_dim);
    s.basis_ = identity_matrix<Scalar>(ambient_dim);
    for (Index i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
    return s;
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  const Matrix<Scalar>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  Vector<Scalar> basis_vector(Index i) const { return basis_.row(i).transpose(); }

  std::vector<Vector<Scalar>> basis_vectors() const {
    std::vector<Vector<Scalar>> out;
    out.reserve(static_cast<std::size_t>(dim()));
    for (Index i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
    return out;
  }

  /// v minus its component along the basis; zero at every pivot column.
  Vector<Scalar> reduce(Vector<Scalar> v) const {
    check_ambient(v.size());
    for (Index i = 0; i < dim(); ++i) {
      const Scalar c = v(pivots_[i]);
      if (::ncspec::is_zero(c)) continue;
      for (Index j = 0; j < ambient_; ++j) v(j) -= c * basis_(i, j);
    }
    return v;
  }

  bool contains(const Vector<Scalar>& v) const { return is_zero_matrix(reduce(v)); }

  bool contains(const Subspace& other) const {
    check_ambient(other.ambient_dim());
    for (Index i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_vector(i))) return false;
    return true;
  }

  /// Linear functionals (rows) whose common kernel is exactly this subspace.
  Matrix<Scalar> annihilating_functionals() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_ || a.dim() != b.dim()) return false;
    for (Index i = 0; i < a.basis_.rows(); ++i)
      for (Index j = 0; j < a.basis_.cols(); ++j)
        if (!(a.basis_(i, j) == b.basis_(i, j))) return false;
    return true;
  }

  /// Lexicographic order on the canonical bases (row by row, entry by entry;
  /// a proper prefix sorts first).
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    const Index rows = std::min(a.dim(), b.dim());
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < a.ambient_; ++j) {
        if (scalar_less(a.basis_(i, j), b.basis_(i, j))) return true;
        if (scalar_less(b.basis_(i, j), a.basis_(i, j))) return false;
      }
    return a.dim() < b.dim();
  }

 private:
  void check_ambient(Index n) const {
    if (n != ambient_)
      throw ShapeMismatch("ambient dimension mismatch: " + std::to_string(n) + " vs " + std::to_string(ambient_));
  }

  Index ambient_ = 0;
  Matrix<Scalar> basis_;
  std::vector<Index> pivots_;
};

// ---------------------------------------------------------------------------
// Kernel, solve
// ---------------------------------------------------------------------------

/// Right null space {x : a x = 0}, canonical basis.
template <ExactScalar Scalar>
Subspace<Scalar> kernel(Matrix<Scalar> a) {
  const Index n = a.cols();
  const auto pivots = rref_in_place(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : pivots) is_pivot[p] = true;
  std::vector<Vector<Scalar>> gens;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector<Scalar> x = zero_vector<Scalar>(n);
    x(free) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) x(pivots[r]) = -a(static_cast<Index>(r), free);
    gens.push_back(std::move(x));
  }
  return Subspace<Scalar>::span(gens, n);
}

/// Some x with a x = b (the solution with free variables set to 0), or
/// nullopt when the system is inconsistent.
template <ExactScalar Scalar>
std::optional<Matrix<Scalar>> solve(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.rows() != b.rows())
    throw ShapeMismatch("solve: a has " + std::to_string(a.rows()) + " rows, b has " + std::to_string(b.rows()));
  Matrix<Scalar> aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  const auto pivots = rref_in_place(aug);
  for (Index p : pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix<Scalar> x = zero_matrix<Scalar>(a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x.row(pivots[r]) = aug.row(static_cast<Index>(r)).tail(b.cols());
  return x;
}

template <ExactScalar Scalar>
Matrix<Scalar> Subspace<Scalar>::annihilating_functionals() const {
  // Functionals c with basis * c = 0, as rows.
  Subspace<Scalar> k = kernel<Scalar>(basis_);
  if (dim() == 0) return identity_matrix<Scalar>(ambient_);
  return k.basis();
}

// ---------------------------------------------------------------------------
// Subspace lattice operations
// ---------------------------------------------------------------------------

template <ExactScalar Scalar>
Subspace<Scalar> subspace_sum(const Subspace<Scalar>& u, const Subspace<Scalar>& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw ShapeMismatch("subspace_sum: ambient mismatch");
  Matrix<Scalar> rows(u.dim() + w.dim(), u.ambient_dim());
  rows << u.basis(), w.basis();
  return Subspace<Scalar>::span(std::move(rows));
}

/// Zassenhaus: row-reduce [[U, U], [W, 0]]; rows whose left half vanishes
/// carry a basis of U ∩ W in their right half.
template <ExactScalar Scalar>
Subspace<Scalar> subspace_intersect(const Subspace<Scalar>& u, const Subspace<Scalar>& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw ShapeMismatch("subspace_intersect: ambient mismatch");
  const Index n = u.ambient_dim();
  Matrix<Scalar> block = zero_matrix<Scalar>(u.dim() + w.dim(), 2 * n);
  block.topLeftCorner(u.dim(), n) = u.basis();
  block.topRightCorner(u.dim(), n) = u.basis();
  block.bottomLeftCorner(w.dim(), n) = w.basis();
  const auto pivots = rref_in_place(block);
  std::vector<Vector<Scalar>> gens;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] >= n) gens.push_back(block.row(static_cast<Index>(r)).tail(n).transpose());
  return Subspace<Scalar>::span(gens, n);
}

template <ExactScalar Scalar>
bool subspace_contains(const Subspace<Scalar>& u, const Vector<Scalar>& v) {
  return u.contains(v);
}

/// Image of a subspace under a linear map (columns = images of coordinates).
template <ExactScalar Scalar>
Subspace<Scalar> image(const Matrix<Scalar>& map, const Subspace<Scalar>& u) {
  if (map.cols() != u.ambient_dim()) throw ShapeMismatch("image: map does not act on this subspace");
  Matrix<Scalar> rows = u.basis() * map.transpose();
  return Subspace<Scalar>::span(std::move(rows));
}

/// {x : map x ∈ target}.
template <ExactScalar Scalar>
Subspace<Scalar> preimage(const Matrix<Scalar>& map, const Subspace<Scalar>& target) {
  if (map.rows() != target.ambient_dim()) throw ShapeMismatch("preimage: target ambient mismatch");
  if (target.is_full()) return Subspace<Scalar>::full(map.cols());
  Matrix<Scalar> system = target.annihilating_functionals() * map;
  return kernel<Scalar>(std::move(system));
}

}  // namespace ncspec
