#pragma once

// Univariate polynomials over Q and F_p, enough to split minimal
// polynomials: gcd, squarefree part, rational roots, and Berlekamp
// factorization over prime fields.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ncspec/linalg.hpp"

namespace ncspec {

/// Coefficients from the constant term upwards; no trailing zeros.
template <ExactScalar Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Scalar& a) { return Polynomial(std::vector<Scalar>{a}); }
  /// x - a
  static Polynomial linear_root(const Scalar& a) { return Polynomial(std::vector<Scalar>{-a, Scalar(1)}); }
  static Polynomial x() { return Polynomial(std::vector<Scalar>{Scalar(0), Scalar(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Scalar(0); }
  const Scalar& leading() const { return c_.back(); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Polynomial p = *this;
    const Scalar inv = Scalar(1) / leading();
    for (auto& a : p.c_) a *= inv;
    return p;
  }

  Polynomial derivative() const {
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Scalar(static_cast<long long>(i)));
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }

  /// (quotient, remainder); b must be nonzero.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Scalar> rem = a.c_;
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Scalar> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), Scalar(0));
    const Scalar inv = Scalar(1) / b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      const Scalar t = rem[static_cast<std::size_t>(k + b.degree())] * inv;
      q[static_cast<std::size_t>(k)] = t;
      if (::ncspec::is_zero(t)) continue;
      for (int j = 0; j <= b.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= t * b.c_[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
  }
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Scalar evaluate(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && ::ncspec::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

/// Monic gcd (zero if both are zero).
template <ExactScalar Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s) with g = gcd(a, m) monic and s*a = g (mod m).
template <ExactScalar Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> gcd_inverse(const Polynomial<Scalar>& a, const Polynomial<Scalar>& m) {
  Polynomial<Scalar> r0 = m, r1 = a % m, s0, s1 = Polynomial<Scalar>::constant(Scalar(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    auto s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  const Scalar inv = Scalar(1) / r0.leading();
  return {r0.monic(), (s0 * Polynomial<Scalar>::constant(inv)) % m};
}

/// Reduces untyped residue literals (such as the leading 1 of a monic
/// polynomial) into F_p so that derivatives and inverses are taken mod p.
template <ExactScalar Scalar>
Polynomial<Scalar> with_characteristic(const Polynomial<Scalar>& a, std::uint32_t characteristic) {
  if constexpr (std::is_same_v<Scalar, Residue>) {
    std::vector<Residue> c;
    for (const auto& x : a.coeffs()) c.emplace_back(x.value(), characteristic);
    return Polynomial<Residue>(std::move(c));
  } else {
    (void)characteristic;
    return a;
  }
}

/// Product of the distinct monic irreducible factors of a.
template <ExactScalar Scalar>
Polynomial<Scalar> squarefree_part(const Polynomial<Scalar>& a, std::uint32_t characteristic);

/// Monic irreducible factors (each once) of a squarefree polynomial over
/// F_p, by Berlekamp's algorithm.
std::vector<Polynomial<Residue>> berlekamp_factor(const Polynomial<Residue>& f, std::uint32_t p);

/// Distinct rational roots. Candidates come from the rational root theorem;
/// when the constant or leading coefficient is too large to factor by trial
/// division, returns nullopt.
std::optional<std::vector<Rational>> rational_roots(const Polynomial<Rational>& f);

/// Factorization into pairwise coprime monic factors of a squarefree
/// polynomial, with a flag per factor telling whether it is certified
/// irreducible. Over F_p this is the complete factorization; over Q the
/// linear factors plus one cofactor (irreducible when of degree 2 or 3).
template <ExactScalar Scalar>
std::vector<std::pair<Polynomial<Scalar>, bool>> coprime_factors(const Polynomial<Scalar>& squarefree,
                                                                 std::uint32_t characteristic);

template <ExactScalar Scalar>
Polynomial<Scalar> squarefree_part(const Polynomial<Scalar>& input, std::uint32_t characteristic) {
  const Polynomial<Scalar> a = with_characteristic(input, characteristic);
  if (a.degree() <= 0) return a.monic();
  const auto d = a.derivative();
  if (d.is_zero()) {
    // Only in characteristic p: a(x) = b(x^p) = b(x)^p since Frobenius is the
    // identity on F_p.
    std::vector<Scalar> b;
    for (int i = 0; i <= a.degree(); i += static_cast<int>(characteristic)) b.push_back(a.coeff(i));
    return squarefree_part(Polynomial<Scalar>(std::move(b)), characteristic);
  }
  const auto g = gcd(a, d);
  if (g.degree() == 0) return a.monic();
  // rad(a) = lcm(rad(a/g), rad(g)).
  const auto u = squarefree_part(a / g, characteristic);
  const auto v = squarefree_part(g, characteristic);
  return (u * v / gcd(u, v)).monic();
}

template <ExactScalar Scalar>
std::vector<std::pair<Polynomial<Scalar>, bool>> coprime_factors(const Polynomial<Scalar>& input,
                                                                 std::uint32_t characteristic) {
  const Polynomial<Scalar> f = with_characteristic(input, characteristic);
  std::vector<std::pair<Polynomial<Scalar>, bool>> out;
  if (f.degree() <= 0) return out;
  if constexpr (std::is_same_v<Scalar, Residue>) {
    for (auto& q : berlekamp_factor(f.monic(), characteristic)) out.emplace_back(std::move(q), true);
  } else {
    (void)characteristic;
    auto roots = rational_roots(f);
    Polynomial<Rational> rest = f.monic();
    if (roots) {
      for (const auto& r : *roots) {
        auto lin = Polynomial<Rational>::linear_root(r);
        rest = rest / lin;
        out.emplace_back(std::move(lin), true);
      }
    }
    if (rest.degree() > 0) {
      const bool certified = roots.has_value() && (rest.degree() == 1 || rest.degree() == 2 || rest.degree() == 3);
      out.emplace_back(rest, certified);
    }
  }
  return out;
}

/// p(M) for a square matrix M.
template <ExactScalar Scalar>
Matrix<Scalar> evaluate_at(const Polynomial<Scalar>& p, const Matrix<Scalar>& m) {
  Matrix<Scalar> acc = zero_matrix<Scalar>(m.rows(), m.cols());
  const Matrix<Scalar> id = identity_matrix<Scalar>(m.rows());
  for (int i = p.degree(); i >= 0; --i) acc = (acc * m).eval() + p.coeff(i) * id;
  return acc;
}

/// Minimal polynomial of the sequence v_0 = 1, v_1, v_2, ... of powers
/// produced by `next` (monic, first linear dependency). `max_degree` bounds
/// the search; the dependency always exists by then for dim-d carriers.
template <ExactScalar Scalar, class Next>
Polynomial<Scalar> minimal_polynomial_of_powers(const Vector<Scalar>& one, Next next, Index max_degree) {
  std::vector<Vector<Scalar>> powers{one};
  for (Index deg = 1; deg <= max_degree + 1; ++deg) {
    powers.push_back(next(powers.back()));
    const Index n = static_cast<Index>(powers.size());
    Matrix<Scalar> a(one.size(), n - 1);
    for (Index j = 0; j + 1 < n; ++j) a.col(j) = powers[static_cast<std::size_t>(j)];
    Matrix<Scalar> b = powers.back();
    if (auto sol = solve<Scalar>(a, b)) {
      std::vector<Scalar> c(static_cast<std::size_t>(n), Scalar(0));
      for (Index j = 0; j + 1 < n; ++j) c[static_cast<std::size_t>(j)] = -(*sol)(j, 0);
      c.back() = Scalar(1);
      return Polynomial<Scalar>(std::move(c));
    }
  }
  throw std::logic_error("minimal polynomial search exceeded its degree bound");
}

template <ExactScalar Scalar>
Polynomial<Scalar> minimal_polynomial(const Matrix<Scalar>& m) {
  const Index n = m.rows();
  auto flatten = [](const Matrix<Scalar>& a) {
    return Eigen::Map<const Vector<Scalar>>(a.data(), a.size()).eval();
  };
  Vector<Scalar> id = flatten(identity_matrix<Scalar>(n));
  return minimal_polynomial_of_powers<Scalar>(
      id,
      [&](const Vector<Scalar>& v) {
        Matrix<Scalar> a = Eigen::Map<const Matrix<Scalar>>(v.data(), n, n);
        return flatten(m * a);
      },
      n);
}

}  // namespace ncspec
