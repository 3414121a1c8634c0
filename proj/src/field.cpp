#include "magnitude/field.hpp"

#include <cctype>

#include "magnitude/error.hpp"

namespace magnitude {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorCode::ZeroOffDiagonal: return "ZeroOffDiagonal";
    case ErrorCode::TriangleViolation: return "TriangleViolation";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::NoFiniteDistance: return "NoFiniteDistance";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::CompositionViolation: return "CompositionViolation";
    case ErrorCode::UnvalidatedModule: return "UnvalidatedModule";
    case ErrorCode::ResolutionTooShort: return "ResolutionTooShort";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RelationViolation: return "RelationViolation";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
  }
  return "Unknown";
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(unsigned long p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::InvalidField, "field characteristic " + std::to_string(p) + " is not prime");
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "q") return rationals();
  std::string_view digits;
  if (text.starts_with("Fp:") || text.starts_with("fp:")) {
    digits = text.substr(3);
  } else if (text.size() > 1 && (text[0] == 'F' || text[0] == 'f')) {
    digits = text.substr(1);
  } else {
    throw Error(ErrorCode::InvalidField, "unknown field '" + std::string(text) + "'");
  }
  if (digits.empty() || digits.size() > 9) {
    throw Error(ErrorCode::InvalidField, "bad field characteristic in '" + std::string(text) + "'");
  }
  unsigned long p = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::InvalidField, "bad field characteristic in '" + std::string(text) + "'");
    }
    p = p * 10 + static_cast<unsigned long>(c - '0');
  }
  return prime(p);
}

std::string Field::name() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(p_);
}

Rational Field::reduce(const Rational& value) const {
  if (is_rational()) return value;
  Integer p(p_);
  Integer num = value.get_num() % p;
  Integer den = value.get_den() % p;
  if (den == 0) {
    throw Error(ErrorCode::InvalidField, "denominator vanishes in " + name());
  }
  Integer den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  Integer r = (num * den_inv) % p;
  if (r < 0) r += p;
  return Rational(r);
}

Rational Field::inv(const Rational& a) const {
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (is_rational()) return 1 / a;
  Integer p(p_);
  Integer v = reduce(a).get_num();
  Integer r;
  mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return Rational(r);
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return Error(ErrorCode::ParseError, "not an exact rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  auto check_int = [&](std::string_view part, bool allow_sign) {
    if (part.empty()) throw bad();
    std::size_t start = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) start = 1;
    if (start == part.size()) throw bad();
    for (std::size_t i = start; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) throw bad();
    }
  };
  std::string_view num = text.substr(0, slash);
  check_int(num, true);
  std::string num_str(num[0] == '+' ? num.substr(1) : num);
  if (slash == std::string_view::npos) return Rational(Integer(num_str));
  std::string_view den = text.substr(slash + 1);
  check_int(den, false);
  Integer d{std::string(den)};
  if (d == 0) throw bad();
  Rational r(Integer(num_str), d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  return value.get_str();
}

}  // namespace magnitude
