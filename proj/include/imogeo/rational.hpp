#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace imogeo {

/**
 * Arbitrary-precision exact rational.
 *
 * Always held in canonical form: positive denominator, numerator and
 * denominator coprime, zero as 0/1. Every arithmetic result is exact.
 */
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Accepts "n", "n/d" or a finite decimal "i.f", each with an optional
  /// leading sign. Decimals convert exactly ("0.625" is 5/8).
  /// Throws ParseError, or ZeroDenominator for "n/0".
  static Rational parse(std::string_view text);

  /// Canonical text: "n" for integers, otherwise "n/d" in lowest terms.
  std::string to_string() const;

  /// Fixed-point text with exactly `digits` fractional digits, rounded half
  /// to even. Never prints a negative zero.
  std::string to_decimal(int digits = 6) const;

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return denominator() == 1; }
  Rational abs() const { return Rational(::abs(value_)); }
  Rational squared() const { return *this * *this; }

  /// Lossy; for display and test diagnostics only.
  double to_double() const { return value_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DivisionByZero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace imogeo
