#pragma once

// Exact scalars: arbitrary-precision rationals and residues modulo a prime.
//
// Both types are usable as Eigen scalars. A Residue carries its modulus at
// runtime; a modulus of 0 marks an untyped integer literal (what Eigen
// produces for Scalar(0) / Scalar(1)), which adopts the modulus of the
// first typed operand it meets.

#include <cstdint>
#include <compare>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace ncspec {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedCharacteristic : public Error {
 public:
  using Error::Error;
};

class NonSplitCenter : public Error {
 public:
  using Error::Error;
};

class RankUncertified : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Field description
// ---------------------------------------------------------------------------

enum class FieldKind { rationals, prime_field };

struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p);

  bool is_prime_field() const { return kind == FieldKind::prime_field; }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime_number(std::uint64_t n);

inline FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime_number(p)) throw ValidationError("characteristic " + std::to_string(p) + " is not prime");
  return {FieldKind::prime_field, p};
}

// "Q" or "Fp:<p>"
FieldSpec parse_field(std::string_view text);
std::string to_string(const FieldSpec& f);

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline bool is_zero(const Rational& x) { return x.is_zero(); }
std::string to_string(const Rational& x);

// ---------------------------------------------------------------------------
// Residue modulo a prime
// ---------------------------------------------------------------------------

class Residue {
 public:
  Residue() = default;
  // NOLINTNEXTLINE(google-explicit-constructor): Eigen needs Scalar(int).
  Residue(long long literal) : value_(literal), modulus_(0) {}
  Residue(long long value, std::uint32_t modulus) : value_(value), modulus_(modulus) { normalize(); }

  std::uint32_t modulus() const { return modulus_; }
  // Canonical representative in [0, p) once typed; the raw literal otherwise.
  long long value() const { return value_; }

  Residue& operator+=(const Residue& o) { return combine(o, [](long long a, long long b) { return a + b; }); }
  Residue& operator-=(const Residue& o) { return combine(o, [](long long a, long long b) { return a - b; }); }
  Residue& operator*=(const Residue& o) { return combine(o, [](long long a, long long b) { return a * b; }); }
  Residue& operator/=(const Residue& o) { return *this *= o.inverse(); }

  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  friend Residue operator/(Residue a, const Residue& b) { return a /= b; }
  Residue operator-() const { return Residue(0, modulus_) -= *this; }
  Residue operator+() const { return *this; }

  Residue inverse() const;

  friend bool operator==(const Residue& a, const Residue& b) {
    std::uint32_t m = common_modulus(a, b);
    return a.reduced(m) == b.reduced(m);
  }
  friend std::strong_ordering operator<=>(const Residue& a, const Residue& b) {
    std::uint32_t m = common_modulus(a, b);
    return a.reduced(m) <=> b.reduced(m);
  }

  bool is_zero() const { return value_ == 0; }

 private:
  static std::uint32_t common_modulus(const Residue& a, const Residue& b) {
    if (a.modulus_ != 0 && b.modulus_ != 0 && a.modulus_ != b.modulus_)
      throw std::logic_error("residues from different prime fields mixed");
    return a.modulus_ != 0 ? a.modulus_ : b.modulus_;
  }
  long long reduced(std::uint32_t m) const {
    if (m == 0) return value_;
    long long r = value_ % static_cast<long long>(m);
    return r < 0 ? r + m : r;
  }
  template <class Op>
  Residue& combine(const Residue& o, Op op) {
    std::uint32_t m = common_modulus(*this, o);
    value_ = op(reduced(m), o.reduced(m));
    modulus_ = m;
    normalize();
    return *this;
  }
  void normalize() {
    if (modulus_ == 0) return;
    value_ %= static_cast<long long>(modulus_);
    if (value_ < 0) value_ += modulus_;
  }

  long long value_ = 0;
  std::uint32_t modulus_ = 0;
};

inline bool is_zero(const Residue& x) { return x.is_zero(); }
std::string to_string(const Residue& x);
inline std::ostream& operator<<(std::ostream& os, const Residue& x) { return os << to_string(x); }

// Eigen's generic code calls these unqualified.
inline Residue abs(const Residue& x) { return x; }
inline Residue conj(const Residue& x) { return x; }
inline Residue real(const Residue& x) { return x; }
inline Residue imag(const Residue&) { return Residue(0); }
inline Residue abs2(const Residue& x) { return x * x; }
inline Residue sqrt(const Residue&) { throw std::logic_error("sqrt undefined on residues"); }

// ---------------------------------------------------------------------------
// Field-generic helpers
// ---------------------------------------------------------------------------

template <class Scalar>
concept ExactScalar = std::is_same_v<Scalar, Rational> || std::is_same_v<Scalar, Residue>;

template <ExactScalar Scalar>
Scalar scalar_from_int(const FieldSpec& field, long long n) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    (void)field;
    return Rational(n);
  } else {
    return Residue(n, field.characteristic);
  }
}

template <ExactScalar Scalar>
Scalar scalar_from_fraction(const FieldSpec& field, long long num, long long den) {
  return scalar_from_int<Scalar>(field, num) / scalar_from_int<Scalar>(field, den);
}

// Accepts "a", "a/b", "r mod p"; throws ValidationError otherwise.
template <ExactScalar Scalar>
Scalar parse_scalar(const FieldSpec& field, std::string_view text);

template <>
Rational parse_scalar<Rational>(const FieldSpec& field, std::string_view text);
template <>
Residue parse_scalar<Residue>(const FieldSpec& field, std::string_view text);

// Total order used for canonical sorting (residues by representative,
// rationals by value).
inline bool scalar_less(const Rational& a, const Rational& b) { return a < b; }
inline bool scalar_less(const Residue& a, const Residue& b) { return a < b; }

// Dispatch a callable on the scalar type matching a runtime FieldSpec:
// f(std::type_identity<Rational>{}) or f(std::type_identity<Residue>{}).
template <class F>
decltype(auto) visit_field(const FieldSpec& field, F&& f) {
  if (field.kind == FieldKind::rationals) return std::forward<F>(f)(std::type_identity<Rational>{});
  return std::forward<F>(f)(std::type_identity<Residue>{});
}

}  // namespace ncspec

namespace Eigen {

template <>
struct NumTraits<ncspec::Residue> : GenericNumTraits<ncspec::Residue> {
  using Real = ncspec::Residue;
  using NonInteger = ncspec::Residue;
  using Nested = ncspec::Residue;
  using Literal = ncspec::Residue;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline Real highest() { return Real(0); }
  static inline Real lowest() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
