#include "fano/rational.hpp"

#include <cctype>
#include <ostream>

#include "fano/errors.hpp"

namespace fano {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::DependentBasis: return "DependentBasis";
    case ErrorCode::ChartDegenerate: return "ChartDegenerate";
    case ErrorCode::NotPoisson: return "NotPoisson";
    case ErrorCode::InconsistentCheck: return "InconsistentCheck";
    case ErrorCode::NotOnConic: return "NotOnConic";
    case ErrorCode::DisjointnessFailure: return "DisjointnessFailure";
    case ErrorCode::ComplexFailure: return "ComplexFailure";
    case ErrorCode::TangencyFailure: return "TangencyFailure";
    case ErrorCode::IndependenceFailure: return "IndependenceFailure";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  value_ /= other.value_;
  return *this;
}

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class to_mpz(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = trim(s.substr(0, slash));
  const std::string_view den = slash == std::string_view::npos ? "1" : trim(s.substr(slash + 1));
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-')
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  mpz_class d = to_mpz(den);
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  return Rational(mpq_class(to_mpz(num), d));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace fano
