#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace magnitude {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coefficient field: the rationals or a prime field F_p.
///
/// Elements are carried as canonical `Rational` values. Over F_p every
/// element is an integer representative in [0, p).
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws InvalidField unless `p` is prime.
  static Field prime(unsigned long p);
  /// Accepts "Q", "Fp:P" and the shorthand "FP" (e.g. "F2").
  static Field parse(std::string_view text);

  bool is_rational() const noexcept { return p_ == 0; }
  unsigned long characteristic() const noexcept { return p_; }
  std::string name() const;

  Rational reduce(const Rational& value) const;
  Rational from_integer(const Integer& value) const { return reduce(Rational(value)); }
  Rational add(const Rational& a, const Rational& b) const { return reduce(a + b); }
  Rational sub(const Rational& a, const Rational& b) const { return reduce(a - b); }
  Rational mul(const Rational& a, const Rational& b) const { return reduce(a * b); }
  Rational neg(const Rational& a) const { return reduce(-a); }
  Rational inv(const Rational& a) const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(unsigned long p) : p_(p) {}
  unsigned long p_;
};

bool is_prime(unsigned long n);

/// Exact rational written as "p/q" or an integer; rejects anything else.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& value);

}  // namespace magnitude
