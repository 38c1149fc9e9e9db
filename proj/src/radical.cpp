#include "ncspec/ideals.hpp"

namespace ncspec::detail {

namespace {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

IntMatrix lift(const Matrix<Residue>& m, long long p) {
  IntMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = ((m(i, j).value() % p) + p) % p;
  return out;
}

IntMatrix mul_mod(const IntMatrix& a, const IntMatrix& b, long long mod) {
  IntMatrix c = IntMatrix::Zero(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (Index j = 0; j < b.cols(); ++j) c(i, j) = (c(i, j) + a(i, k) * b(k, j)) % mod;
    }
  return c;
}

// (Tr(lift(z)^(p^i)) mod p^(i+1)) / p^i, as a residue mod p.
long long lifted_trace(const Matrix<Residue>& lz, long long p, int i) {
  long long mod = p, exponent = 1;
  for (int k = 0; k < i; ++k) {
    mod *= p;
    exponent *= p;
  }
  IntMatrix base = lift(lz, p), result = IntMatrix::Identity(lz.rows(), lz.cols());
  for (long long e = exponent; e > 0; e >>= 1) {
    if (e & 1) result = mul_mod(result, base, mod);
    if (e > 1) base = mul_mod(base, base, mod);
  }
  long long tr = 0;
  for (Index k = 0; k < result.rows(); ++k) tr = (tr + result(k, k)) % mod;
  return (tr / (mod / p)) % p;
}

}  // namespace

Subspace<Residue> small_characteristic_radical(const Algebra<Residue>& a) {
  const auto p = static_cast<long long>(a.field().characteristic);
  const Index n = a.dim();
  int levels = 0;
  for (long long power = p; power <= n; power *= p) ++levels;
  Subspace<Residue> current = Subspace<Residue>::full(n);
  for (int i = 0; i <= levels && !current.is_zero(); ++i) {
    // G(k, j) = g_i(x_k e_j) for the basis x_k of I_{i-1}.
    Matrix<Residue> g(current.dim(), n);
    for (Index k = 0; k < current.dim(); ++k) {
      const Vector<Residue> x = current.basis_vector(k);
      for (Index j = 0; j < n; ++j) {
        const Matrix<Residue> lz = a.left_mul_operator(a.product(x, a.basis_element(j)));
        g(k, j) = Residue(lifted_trace(lz, p, i), static_cast<std::uint32_t>(p));
      }
    }
    // Coefficient vectors c with c^T G = 0.
    const Subspace<Residue> coeffs = kernel<Residue>(g.transpose());
    Matrix<Residue> next = coeffs.basis() * current.basis();
    current = Subspace<Residue>::span(std::move(next));
  }
  return current;
}

}  // namespace ncspec::detail
