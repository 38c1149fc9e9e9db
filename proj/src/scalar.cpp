#include "ncspec/scalar.hpp"

#include <charconv>
#include <string>

namespace ncspec {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

long long parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ValidationError("malformed scalar \"" + std::string(whole) + "\"");
  return v;
}

bool is_integer_text(std::string_view s) {
  s = trim(s);
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

FieldSpec parse_field(std::string_view text) {
  text = trim(text);
  if (text == "Q") return FieldSpec::rationals();
  if (text.starts_with("Fp:")) {
    auto p = parse_integer(text.substr(3), text);
    if (p <= 1 || p > 1'000'000'007LL) throw ValidationError("unsupported prime in field \"" + std::string(text) + "\"");
    return FieldSpec::prime(static_cast<std::uint32_t>(p));
  }
  throw ValidationError("unknown field \"" + std::string(text) + "\" (expected \"Q\" or \"Fp:<p>\")");
}

std::string to_string(const FieldSpec& f) {
  return f.is_prime_field() ? "Fp:" + std::to_string(f.characteristic) : "Q";
}

std::string to_string(const Rational& x) { return x.str(); }

std::string to_string(const Residue& x) {
  if (x.modulus() == 0) return std::to_string(x.value());
  return std::to_string(x.value()) + " mod " + std::to_string(x.modulus());
}

Residue Residue::inverse() const {
  if (value_ == 0) throw std::domain_error("division by zero residue");
  if (modulus_ == 0) {
    if (value_ == 1 || value_ == -1) return *this;
    throw std::logic_error("inverse of an untyped residue literal");
  }
  long long a = value_, m = modulus_, x0 = 1, x1 = 0;
  while (m != 0) {
    long long q = a / m;
    a -= q * m;
    std::swap(a, m);
    x0 -= q * x1;
    std::swap(x0, x1);
  }
  return Residue(x0, modulus_);
}

template <>
Rational parse_scalar<Rational>(const FieldSpec& field, std::string_view text) {
  if (field.is_prime_field()) throw std::logic_error("parse_scalar<Rational> on a prime field");
  std::string_view t = trim(text);
  auto slash = t.find('/');
  std::string_view num = slash == std::string_view::npos ? t : t.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : t.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den))
    throw ValidationError("malformed rational \"" + std::string(text) + "\"");
  auto strip_plus = [](std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return std::string(s);
  };
  boost::multiprecision::mpz_int n(strip_plus(num)), d(strip_plus(den));
  if (d == 0) throw ValidationError("zero denominator in \"" + std::string(text) + "\"");
  return Rational(n, d);
}

template <>
Residue parse_scalar<Residue>(const FieldSpec& field, std::string_view text) {
  if (!field.is_prime_field()) throw std::logic_error("parse_scalar<Residue> over Q");
  std::string_view t = trim(text);
  auto pos = t.find("mod");
  if (pos != std::string_view::npos) {
    long long p = parse_integer(t.substr(pos + 3), text);
    if (p != field.characteristic)
      throw ValidationError("residue \"" + std::string(text) + "\" does not belong to " + to_string(field));
    t = t.substr(0, pos);
  }
  auto slash = t.find('/');
  if (slash != std::string_view::npos) {
    Residue n(parse_integer(t.substr(0, slash), text), field.characteristic);
    Residue d(parse_integer(t.substr(slash + 1), text), field.characteristic);
    if (d.is_zero()) throw ValidationError("zero denominator in \"" + std::string(text) + "\"");
    return n / d;
  }
  return Residue(parse_integer(t, text), field.characteristic);
}

}  // namespace ncspec
