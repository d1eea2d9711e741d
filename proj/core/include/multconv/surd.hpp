#pragma once

#include "multconv/rational.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace multconv {

/* Trial division bound used when reducing radicands to square-free form. An
 * integer is factorizable when it is at most bound^2; larger radicands raise
 * ErrorKind::BoundExceeded. The bound is process-wide and atomic. */
std::uint64_t factorization_bound();
void set_factorization_bound(std::uint64_t bound);

/* Square-free decomposition z = square^2 * free for 1 <= z <= bound^2. */
struct SquareFreeParts {
  Integer square;
  Integer free;
};
SquareFreeParts square_free_parts(const Integer& z);

/* Exact scalar sum_i r_i sqrt(s_i) with rational r_i and distinct square-free
 * radicands s_i >= 1 (radicand 1 is the rational part). Canonical: no zero
 * coefficients are stored, so equal values have identical term maps and the
 * empty map is 0. */
class Surd {
 public:
  using Terms = std::map<Integer, Rational>;

  Surd() = default;
  Surd(const Rational& q);  // NOLINT(google-explicit-constructor)
  Surd(long q) : Surd(Rational(q)) {}  // NOLINT(google-explicit-constructor)

  /// coefficient * sqrt(radicand); radicand need not be square-free.
  static Surd root(const Integer& radicand, const Rational& coefficient = 1);
  /// Builds from raw terms, reducing radicands and merging duplicates.
  static Surd from_terms(const std::map<Integer, Rational>& raw);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept;
  /// True for c*sqrt(s) with a single term (including rationals).
  bool is_monomial() const noexcept { return terms_.size() <= 1; }
  Rational rational_part() const;

  Surd operator-() const;
  Surd& operator+=(const Surd& b);
  Surd& operator-=(const Surd& b);
  Surd& operator*=(const Surd& b);
  Surd& operator*=(const Rational& q);

  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const Surd& b) { return a *= b; }

  friend bool operator==(const Surd& a, const Surd& b) { return a.terms_ == b.terms_; }

  /// Division by a nonzero single-term surd c*sqrt(s).
  Surd divided_by_monomial(const Surd& m) const;

  double to_double() const;

 private:
  Terms terms_;
};

Surd surd_add(const Surd& a, const Surd& b);
Surd surd_mul(const Surd& a, const Surd& b);
/// Exact sqrt(q) for q >= 0; throws ErrorKind::Precondition for q < 0.
Surd surd_sqrt_of_rational(const Rational& q);
/// Exact sign, decided by rational interval enclosures of increasing precision.
int surd_sign(const Surd& a);

Surd abs(const Surd& a);
int compare(const Surd& a, const Surd& b);

/* Rational enclosure [lo, hi] of a surd at 2^-bits resolution per radical. */
struct Enclosure {
  Rational lo;
  Rational hi;
};
Enclosure enclose(const Surd& a, unsigned bits);

std::string to_string(const Surd& a);

}  // namespace multconv
