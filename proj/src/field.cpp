#include "altring/field.hpp"

#include <charconv>

namespace altring {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
  if (p > kMaxModulus || !is_prime(p)) {
    throw AlgebraError(ErrorKind::InvalidField,
                       std::to_string(p) + " is not a supported prime modulus");
  }
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw AlgebraError(ErrorKind::DivisionByZero, "inverse of 0 in " + name());
  // extended Euclid on (a, p)
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return from_int(s0);
}

namespace {

std::int64_t parse_integer(std::string_view text) {
  std::int64_t value = 0;
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw AlgebraError(ErrorKind::ParseError, "bad integer scalar '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

PrimeField::Element PrimeField::parse(std::string_view text) const {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_int(parse_integer(text));
  Element num = from_int(parse_integer(text.substr(0, slash)));
  Element den = from_int(parse_integer(text.substr(slash + 1)));
  if (den == 0) {
    throw AlgebraError(ErrorKind::ParseError,
                       "denominator of '" + std::string(text) + "' vanishes mod " +
                           std::to_string(p_));
  }
  return div(num, den);
}

Rationals::Element Rationals::inv(const Element& a) const {
  if (sgn(a) == 0) throw AlgebraError(ErrorKind::DivisionByZero, "inverse of 0 in Q");
  Element r = 1 / a;
  r.canonicalize();
  return r;
}

Rationals::Element Rationals::parse(std::string_view text) const {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  Element value;
  if (s.empty() || value.set_str(s, 10) != 0) {
    throw AlgebraError(ErrorKind::ParseError, "bad rational scalar '" + std::string(text) + "'");
  }
  if (value.get_den() == 0) {
    throw AlgebraError(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  value.canonicalize();
  return value;
}

}  // namespace altring
