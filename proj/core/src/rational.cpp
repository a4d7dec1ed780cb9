#include "gsv/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "gsv/error.hpp"

namespace gsv {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EvenPrimeInverted: return "EvenPrimeInverted";
    case ErrorCode::InvalidPrimeSet: return "InvalidPrimeSet";
    case ErrorCode::EvenM: return "EvenM";
    case ErrorCode::NonPositiveGenerator: return "NonPositiveGenerator";
    case ErrorCode::IndexOutsideT: return "IndexOutsideT";
    case ErrorCode::UnrepresentableRoot: return "UnrepresentableRoot";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::NotInScaleGroup: return "NotInScaleGroup";
    case ErrorCode::MixedPresentation: return "MixedPresentation";
    case ErrorCode::IndexDomain: return "IndexDomainError";
    case ErrorCode::MissingEntry: return "MissingEntry";
    case ErrorCode::NotInIdeal: return "NotInIdeal";
    case ErrorCode::DenseWithoutTruncation: return "DenseWithoutTruncation";
    case ErrorCode::DepthBeyondTruncation: return "DepthBeyondTruncation";
    case ErrorCode::InvalidTruncation: return "InvalidTruncation";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::CZero: return "CZero";
    case ErrorCode::NonHomogeneous: return "NonHomogeneous";
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorCode::Syntax, "malformed rational '" + std::string(text) + "'");
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n, d);
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace gsv
