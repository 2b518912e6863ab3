#include "imogeo/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "imogeo/error.hpp"

namespace imogeo {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidCircle: return "InvalidCircle";
    case ErrorKind::IdenticalPoints: return "IdenticalPoints";
    case ErrorKind::CoincidentLines: return "CoincidentLines";
    case ErrorKind::PointNotOnCircle: return "PointNotOnCircle";
    case ErrorKind::ConcentricCircles: return "ConcentricCircles";
    case ErrorKind::InvalidScenario: return "InvalidScenario";
    case ErrorKind::DegenerateProbe: return "DegenerateProbe";
    case ErrorKind::WrongOrdering: return "WrongOrdering";
    case ErrorKind::IndeterminateParam: return "IndeterminateParam";
  }
  return "UnknownError";
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

[[noreturn]] void parse_failure(std::string_view text) {
  throw GeometryError(ErrorKind::ParseError, "not a rational: \"" + std::string(text) + "\"");
}

mpz_class pow10(int digits) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return out;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw GeometryError(ErrorKind::ZeroDenominator, "denominator is zero");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  mpq_class value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) parse_failure(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
      throw GeometryError(ErrorKind::ZeroDenominator, "\"" + std::string(text) + "\"");
    }
    value = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) parse_failure(text);
    mpz_class scaled(std::string(whole) + std::string(frac), 10);
    value = mpq_class(scaled, pow10(static_cast<int>(frac.size())));
  } else {
    if (!all_digits(body)) parse_failure(text);
    value = mpq_class(mpz_class(std::string(body), 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(std::move(value));
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::string Rational::to_decimal(int digits) const {
  const mpz_class scale = pow10(digits);
  mpz_class magnitude = ::abs(value_.get_num()) * scale;
  const mpz_class& den = value_.get_den();

  mpz_class quotient;
  mpz_class remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), magnitude.get_mpz_t(), den.get_mpz_t());
  const int tie = cmp(mpz_class(remainder * 2), den);
  if (tie > 0 || (tie == 0 && mpz_odd_p(quotient.get_mpz_t()) != 0)) ++quotient;

  std::string units = quotient.get_str(10);
  if (units.size() <= static_cast<std::size_t>(digits)) {
    units.insert(0, static_cast<std::size_t>(digits) + 1 - units.size(), '0');
  }
  std::string out;
  if (sign() < 0 && quotient != 0) out.push_back('-');
  out.append(units, 0, units.size() - static_cast<std::size_t>(digits));
  if (digits > 0) {
    out.push_back('.');
    out.append(units, units.size() - static_cast<std::size_t>(digits));
  }
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw GeometryError(ErrorKind::DivisionByZero, "rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace imogeo
