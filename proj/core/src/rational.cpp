#include "logvf/rational.hpp"

#include <algorithm>
#include <cctype>

#include "logvf/error.hpp"

namespace logvf {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::VariableMismatch: return "VariableMismatch";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::PrecisionRequired: return "PrecisionRequired";
    case ErrorKind::NotLogarithmic: return "NotLogarithmic";
    case ErrorKind::WrongCount: return "WrongCount";
    case ErrorKind::NotAtOrigin: return "NotAtOrigin";
    case ErrorKind::NotFree: return "NotFree";
    case ErrorKind::HasConstantPart: return "HasConstantPart";
    case ErrorKind::NonRationalEigenvalues: return "NonRationalEigenvalues";
    case ErrorKind::ProductInput: return "ProductInput";
    case ErrorKind::CertificateFailure: return "CertificateFailure";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::VanishesAtOrigin: return "VanishesAtOrigin";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size())
    fail(ErrorKind::SyntaxError, "malformed rational '" + std::string(whole) + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      fail(ErrorKind::SyntaxError, "malformed rational '" + std::string(whole) + "'");
  std::string s(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) fail(ErrorKind::SyntaxError, "zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::vector<Rational> primitive_integer_vector(std::vector<Rational> v) {
  Integer den_lcm = 1;
  for (const auto& x : v) {
    if (is_zero(x)) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  Integer num_gcd = 0;
  for (auto& x : v) {
    x *= den_lcm;
    if (!is_zero(x)) mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num_mpz_t());
  }
  if (num_gcd == 0) return v;
  auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return !is_zero(x); });
  if (sgn(*first) < 0) num_gcd = -num_gcd;
  for (auto& x : v) x /= Rational(num_gcd);
  return v;
}

}  // namespace logvf
