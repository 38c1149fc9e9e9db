#pragma once

// Definitions of the algebra constructors declared in algebra.hpp.

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace ncspec {

template <ExactScalar Scalar>
std::string format_combination(const std::vector<std::string>& labels, const Vector<Scalar>& v,
                               const FieldSpec& field) {
  std::string out;
  const Scalar one = scalar_from_int<Scalar>(field, 1);
  const Scalar minus_one = -one;
  for (Index i = 0; i < v.size(); ++i) {
    if (is_zero(v(i))) continue;
    const auto& label = labels[static_cast<std::size_t>(i)];
    if (v(i) == one) {
      out += out.empty() ? label : "+" + label;
    } else if (v(i) == minus_one && !field.is_prime_field()) {
      out += "-" + label;
    } else {
      std::string c;
      if constexpr (std::is_same_v<Scalar, Residue>) {
        c = std::to_string(Residue(v(i).value(), field.characteristic).value());
      } else {
        c = to_string(v(i));
      }
      if (!out.empty() && c.front() != '-') out += "+";
      out += c + "*" + label;
    }
  }
  return out.empty() ? "0" : out;
}

namespace detail {

template <ExactScalar Scalar>
using Table = std::vector<std::vector<Vector<Scalar>>>;

template <ExactScalar Scalar>
Table<Scalar> empty_table(Index n) {
  return Table<Scalar>(static_cast<std::size_t>(n), std::vector<Vector<Scalar>>(static_cast<std::size_t>(n), zero_vector<Scalar>(n)));
}

}  // namespace detail

template <ExactScalar Scalar>
AlgebraPtr<Scalar> matrix_algebra(const FieldSpec& field, int n) {
  if (n < 1) throw ValidationError("matrix_algebra: n must be positive");
  const Index d = static_cast<Index>(n) * n;
  auto idx = [n](int i, int j) { return static_cast<Index>(i * n + j); };
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  auto table = detail::empty_table<Scalar>(d);
  const Scalar one = scalar_from_int<Scalar>(field, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) table[idx(i, j)][idx(j, l)](idx(i, l)) = one;
  Vector<Scalar> unit = zero_vector<Scalar>(d);
  for (int i = 0; i < n; ++i) unit(idx(i, i)) = one;
  return std::make_shared<const Algebra<Scalar>>(field, std::move(labels), table, std::move(unit));
}

template <ExactScalar Scalar>
AlgebraPtr<Scalar> upper_triangular_algebra(const FieldSpec& field, int n) {
  if (n < 1) throw ValidationError("upper_triangular_algebra: n must be positive");
  std::vector<std::pair<int, int>> cells;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      cells.emplace_back(i, j);
      labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  const auto d = static_cast<Index>(cells.size());
  auto find = [&](int i, int j) {
    return static_cast<Index>(std::find(cells.begin(), cells.end(), std::make_pair(i, j)) - cells.begin());
  };
  auto table = detail::empty_table<Scalar>(d);
  const Scalar one = scalar_from_int<Scalar>(field, 1);
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b)
      if (cells[a].second == cells[b].first) table[a][b](find(cells[a].first, cells[b].second)) = one;
  Vector<Scalar> unit = zero_vector<Scalar>(d);
  for (int i = 0; i < n; ++i) unit(find(i, i)) = one;
  return std::make_shared<const Algebra<Scalar>>(field, std::move(labels), table, std::move(unit));
}

template <ExactScalar Scalar>
AlgebraPtr<Scalar> group_algebra(const FieldSpec& field, const std::vector<std::vector<int>>& cayley_table,
                                 std::vector<std::string> element_names) {
  const int n = static_cast<int>(cayley_table.size());
  if (n == 0) throw ValidationError("group_algebra: empty Cayley table");
  for (const auto& row : cayley_table) {
    if (static_cast<int>(row.size()) != n) throw ValidationError("group_algebra: Cayley table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw ValidationError("group_algebra: Cayley table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (cayley_table[cayley_table[a][b]][c] != cayley_table[a][cayley_table[b][c]])
          throw ValidationError("group_algebra: not associative at (" + std::to_string(a) + ", " + std::to_string(b) +
                                ", " + std::to_string(c) + ")");
  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n; ++a) ok = ok && cayley_table[e][a] == a && cayley_table[a][e] == a;
    if (ok) identity = e;
  }
  if (identity < 0) throw ValidationError("group_algebra: no identity element");
  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n; ++b) has_inverse = has_inverse || (cayley_table[a][b] == identity && cayley_table[b][a] == identity);
    if (!has_inverse) throw ValidationError("group_algebra: element " + std::to_string(a) + " has no inverse");
  }
  if (element_names.empty())
    for (int a = 0; a < n; ++a) element_names.push_back("g" + std::to_string(a));
  if (static_cast<int>(element_names.size()) != n) throw ValidationError("group_algebra: wrong number of names");
  auto table = detail::empty_table<Scalar>(n);
  const Scalar one = scalar_from_int<Scalar>(field, 1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b](cayley_table[a][b]) = one;
  Vector<Scalar> unit = zero_vector<Scalar>(n);
  unit(identity) = one;
  return std::make_shared<const Algebra<Scalar>>(field, std::move(element_names), table, std::move(unit));
}

template <ExactScalar Scalar>
AlgebraPtr<Scalar> direct_product(const Algebra<Scalar>& a, const Algebra<Scalar>& b) {
  if (!(a.field() == b.field())) throw ValidationError("direct_product: algebras over different fields");
  const Index n = a.dim() + b.dim();
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("1." + l);
  for (const auto& l : b.labels()) labels.push_back("2." + l);
  auto table = detail::empty_table<Scalar>(n);
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) table[i][j].head(a.dim()) = a.basis_product(i, j);
  for (Index i = 0; i < b.dim(); ++i)
    for (Index j = 0; j < b.dim(); ++j) table[a.dim() + i][a.dim() + j].tail(b.dim()) = b.basis_product(i, j);
  Vector<Scalar> unit(n);
  unit << a.unit(), b.unit();
  return std::make_shared<const Algebra<Scalar>>(a.field(), std::move(labels), table, std::move(unit));
}

template <ExactScalar Scalar>
Subspace<Scalar> subalgebra_closure(const Algebra<Scalar>& a, const std::vector<Vector<Scalar>>& gens) {
  std::vector<Vector<Scalar>> seed{a.unit()};
  seed.insert(seed.end(), gens.begin(), gens.end());
  Subspace<Scalar> current = Subspace<Scalar>::span(seed, a.dim());
  // Each pass can only grow the dimension, so dim(a) passes suffice.
  for (Index pass = 0; pass <= a.dim(); ++pass) {
    std::vector<Vector<Scalar>> products = current.basis_vectors();
    for (Index i = 0; i < current.dim(); ++i)
      for (Index j = 0; j < current.dim(); ++j)
        products.push_back(a.product(current.basis_vector(i), current.basis_vector(j)));
    Subspace<Scalar> next = Subspace<Scalar>::span(products, a.dim());
    if (next == current) return current;
    current = std::move(next);
  }
  return current;
}

template <ExactScalar Scalar>
std::pair<AlgebraPtr<Scalar>, AlgebraHom<Scalar>> algebra_on_subspace(const AlgebraPtr<Scalar>& a,
                                                                      const Subspace<Scalar>& carrier) {
  const Index d = carrier.dim();
  if (!carrier.contains(a->unit())) throw ValidationError("subalgebra carrier does not contain 1");
  // Coordinates of v in the canonical basis are its entries at the pivots.
  auto coords = [&](const Vector<Scalar>& v) {
    if (!carrier.contains(v)) throw ValidationError("subalgebra carrier is not closed under multiplication");
    Vector<Scalar> c(d);
    for (Index k = 0; k < d; ++k) c(k) = v(carrier.pivots()[static_cast<std::size_t>(k)]);
    return c;
  };
  std::vector<std::string> labels;
  for (Index i = 0; i < d; ++i) labels.push_back(a->format(carrier.basis_vector(i)));
  detail::Table<Scalar> table(static_cast<std::size_t>(d));
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) table[i].push_back(coords(a->product(carrier.basis_vector(i), carrier.basis_vector(j))));
  auto sub = std::make_shared<const Algebra<Scalar>>(a->field(), std::move(labels), table, coords(a->unit()));
  Matrix<Scalar> inclusion = carrier.basis().transpose();
  return {sub, AlgebraHom<Scalar>(sub, a, std::move(inclusion))};
}

template <ExactScalar Scalar>
std::pair<AlgebraPtr<Scalar>, AlgebraHom<Scalar>> subalgebra_from_generators(const AlgebraPtr<Scalar>& a,
                                                                             const std::vector<Vector<Scalar>>& gens) {
  return algebra_on_subspace(a, subalgebra_closure(*a, gens));
}

}  // namespace ncspec
