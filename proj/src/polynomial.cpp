#include "ncspec/polynomial.hpp"

#include <algorithm>
#include <set>

#include <boost/multiprecision/gmp.hpp>

namespace ncspec {

namespace {

using Poly = Polynomial<Residue>;

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(Poly base, std::uint64_t e, const Poly& m) {
  Poly result = Poly::constant(Residue(1, base.is_zero() ? 0 : base.leading().modulus()));
  result = result % m;
  base = base % m;
  while (e > 0) {
    if (e & 1ULL) result = mulmod(result, base, m);
    e >>= 1;
    if (e > 0) base = mulmod(base, base, m);
  }
  return result;
}

// Try to split g using gcds with v - s; returns the pieces found (g itself
// when v does not separate it).
std::vector<Poly> split_with(const Poly& g, const Poly& v, std::uint32_t p) {
  if (p <= (1U << 16)) {
    for (std::uint32_t s = 0; s < p; ++s) {
      Poly h = gcd(g, v - Poly::constant(Residue(s, p)));
      if (h.degree() > 0 && h.degree() < g.degree()) return {h, (g / h).monic()};
    }
    return {g};
  }
  // Large p: Cantor-Zassenhaus style splitting on the Berlekamp subalgebra.
  std::mt19937_64 rng(0x9E3779B97F4A7C15ULL);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Residue shift(static_cast<long long>(rng() % p), p);
    Poly w = powmod(v - Poly::constant(shift), (p - 1) / 2, g) - Poly::constant(Residue(1, p));
    Poly h = gcd(g, w);
    if (h.degree() > 0 && h.degree() < g.degree()) return {h, (g / h).monic()};
  }
  return {g};
}

}  // namespace

std::vector<Polynomial<Residue>> berlekamp_factor(const Polynomial<Residue>& f_in, std::uint32_t p) {
  const Poly f = f_in.monic();
  const int n = f.degree();
  if (n <= 0) return {};
  if (n == 1) return {f};
  // Row i of q holds x^(i p) mod f.
  Matrix<Residue> q = zero_matrix<Residue>(n, n);
  const Poly xp = powmod(Poly::x(), p, f);
  Poly row = Poly::constant(Residue(1, p));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) q(i, j) = row.coeff(j);
    row = mulmod(row, xp, f);
  }
  for (int i = 0; i < n; ++i) q(i, i) -= Residue(1, p);
  // v (Q - I) = 0  <=>  v^p = v mod f.
  const Subspace<Residue> fixed = kernel<Residue>(q.transpose());
  const Index factor_count = fixed.dim();
  std::vector<Poly> factors{f};
  for (Index b = 0; b < fixed.dim() && static_cast<Index>(factors.size()) < factor_count; ++b) {
    std::vector<Residue> coeffs;
    for (int j = 0; j < n; ++j) coeffs.push_back(fixed.basis()(b, j));
    const Poly v(std::move(coeffs));
    if (v.degree() <= 0) continue;
    std::vector<Poly> next;
    for (const auto& g : factors) {
      if (g.degree() <= 1) {
        next.push_back(g);
        continue;
      }
      // Keep refining g with v until it no longer splits.
      std::vector<Poly> work{g};
      while (!work.empty()) {
        Poly h = work.back();
        work.pop_back();
        auto pieces = split_with(h, v % h, p);
        if (pieces.size() == 1) {
          next.push_back(h);
        } else {
          work.push_back(pieces[0]);
          work.push_back(pieces[1]);
        }
      }
    }
    factors = std::move(next);
  }
  if (static_cast<Index>(factors.size()) != factor_count)
    throw std::logic_error("Berlekamp splitting did not reach the expected factor count");
  std::sort(factors.begin(), factors.end(), [](const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
  });
  return factors;
}

namespace {

using boost::multiprecision::mpz_int;

std::optional<std::vector<mpz_int>> positive_divisors(mpz_int n) {
  if (n < 0) n = -n;
  static const mpz_int limit("1000000000000");
  if (n == 0 || n > limit) return std::nullopt;
  std::vector<mpz_int> small, large;
  for (mpz_int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots(const Polynomial<Rational>& f) {
  if (f.degree() <= 0) return std::vector<Rational>{};
  // Integer coefficients.
  mpz_int lcm = 1;
  for (const auto& c : f.coeffs()) lcm = boost::multiprecision::lcm(lcm, mpz_int(boost::multiprecision::denominator(c)));
  std::vector<mpz_int> ints;
  for (const auto& c : f.coeffs()) ints.push_back(mpz_int(boost::multiprecision::numerator(c * Rational(lcm))));
  std::vector<Rational> roots;
  std::size_t shift = 0;
  while (shift < ints.size() && ints[shift] == 0) ++shift;
  if (shift > 0) roots.push_back(Rational(0));
  const auto num_divs = positive_divisors(ints[shift]);
  const auto den_divs = positive_divisors(ints.back());
  if (!num_divs || !den_divs) return std::nullopt;
  std::set<Rational> found(roots.begin(), roots.end());
  for (const auto& a : *num_divs)
    for (const auto& b : *den_divs)
      for (int sign : {1, -1}) {
        Rational cand(mpz_int(a * sign), b);
        if (found.count(cand)) continue;
        if (is_zero(f.evaluate(cand))) found.insert(cand);
      }
  return std::vector<Rational>(found.begin(), found.end());
}

}  // namespace ncspec
