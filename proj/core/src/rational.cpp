#include "multconv/rational.hpp"

#include "multconv/error.hpp"

#include <cctype>

namespace multconv {

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer_text(s)) fail(ErrorKind::Parse, "malformed integer '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) fail(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

int sign(const Rational& q) { return sgn(q); }
int sign(const Integer& z) { return sgn(z); }

Rational pow2(int exponent) {
  Integer p;
  if (exponent >= 0) {
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exponent));
    return Rational(p);
  }
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-exponent));
  return Rational(Integer(1), p);
}

Integer isqrt(const Integer& z) {
  if (z < 0) fail(ErrorKind::Precondition, "isqrt of negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& z) { return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0; }

}  // namespace multconv
