#include "multconv/surd.hpp"

#include "multconv/error.hpp"

#include <atomic>
#include <cmath>
#include <sstream>

namespace multconv {

namespace {

std::atomic<std::uint64_t> g_bound{1'000'000};

Integer bound_squared() {
  Integer b(static_cast<unsigned long>(g_bound.load()));
  return b * b;
}

void check_radicand(const Integer& r) {
  if (r > bound_squared()) {
    fail(ErrorKind::BoundExceeded, "radicand " + r.get_str() + " exceeds the factorization bound");
  }
}

SquareFreeParts square_free_small(unsigned long z) {
  unsigned long square = 1;
  unsigned long free = 1;
  unsigned long rest = z;
  for (unsigned long d = 2; d * d <= rest; d += (d == 2 ? 1 : 2)) {
    int e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) square *= d;
    if (e % 2 == 1) free *= d;
  }
  free *= rest;
  return {Integer(square), Integer(free)};
}

SquareFreeParts square_free_big(const Integer& z) {
  Integer square = 1;
  Integer free = 1;
  Integer rest = z;
  for (Integer d = 2; d * d <= rest; d += (d == 2 ? 1 : 2)) {
    int e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), d.get_mpz_t())) {
      rest /= d;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) square *= d;
    if (e % 2 == 1) free *= d;
  }
  free *= rest;
  return {square, free};
}

// sqrt(s) * sqrt(t) for square-free s, t: g * sqrt((s/g)(t/g)) with g = gcd(s, t).
std::pair<Integer, Integer> multiply_radicands(const Integer& s, const Integer& t) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t());
  Integer r = (s / g) * (t / g);
  check_radicand(r);
  return {g, r};
}

void accumulate(Surd::Terms& terms, const Integer& radicand, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(radicand, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

std::uint64_t factorization_bound() { return g_bound.load(); }

void set_factorization_bound(std::uint64_t bound) {
  if (bound < 2) fail(ErrorKind::Precondition, "factorization bound must be at least 2");
  g_bound.store(bound);
}

SquareFreeParts square_free_parts(const Integer& z) {
  if (z < 1) fail(ErrorKind::Precondition, "square-free decomposition needs a positive integer");
  check_radicand(z);
  if (z.fits_ulong_p()) return square_free_small(z.get_ui());
  return square_free_big(z);
}

Surd::Surd(const Rational& q) {
  if (q == 0) return;
  Rational c = q;
  c.canonicalize();
  terms_.emplace(Integer(1), c);
}

Surd Surd::root(const Integer& radicand, const Rational& coefficient) {
  if (radicand < 0) fail(ErrorKind::Precondition, "square root of a negative integer");
  Surd out;
  if (radicand == 0 || coefficient == 0) return out;
  const auto parts = square_free_parts(radicand);
  out.terms_.emplace(parts.free, coefficient * parts.square);
  return out;
}

Surd Surd::from_terms(const std::map<Integer, Rational>& raw) {
  Surd out;
  for (const auto& [r, c] : raw) {
    if (r < 0) fail(ErrorKind::Precondition, "negative radicand");
    if (r == 0) continue;
    const auto parts = square_free_parts(r);
    Rational coeff = c * parts.square;
    coeff.canonicalize();
    accumulate(out.terms_, parts.free, coeff);
  }
  return out;
}

bool Surd::is_rational() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1); }

Rational Surd::rational_part() const {
  auto it = terms_.find(Integer(1));
  return it == terms_.end() ? Rational(0) : it->second;
}

Surd Surd::operator-() const {
  Surd out = *this;
  for (auto& [r, c] : out.terms_) c = -c;
  return out;
}

Surd& Surd::operator+=(const Surd& b) {
  for (const auto& [r, c] : b.terms_) accumulate(terms_, r, c);
  return *this;
}

Surd& Surd::operator-=(const Surd& b) {
  for (const auto& [r, c] : b.terms_) accumulate(terms_, r, -c);
  return *this;
}

Surd& Surd::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [r, c] : terms_) c *= q;
  return *this;
}

Surd& Surd::operator*=(const Surd& b) {
  Terms out;
  for (const auto& [s, a] : terms_) {
    for (const auto& [t, c] : b.terms_) {
      auto [g, r] = multiply_radicands(s, t);
      accumulate(out, r, a * c * g);
    }
  }
  terms_ = std::move(out);
  return *this;
}

Surd Surd::divided_by_monomial(const Surd& m) const {
  if (m.is_zero()) fail(ErrorKind::Precondition, "division by zero surd");
  if (!m.is_monomial()) fail(ErrorKind::Precondition, "division by a multi-term surd is not supported");
  const auto& [s, c] = *m.terms_.begin();
  // 1 / (c sqrt(s)) = sqrt(s) / (c s)
  Surd inv;
  inv.terms_.emplace(s, Rational(1) / (c * s));
  return *this * inv;
}

double Surd::to_double() const {
  double v = 0.0;
  for (const auto& [r, c] : terms_) v += c.get_d() * std::sqrt(r.get_d());
  return v;
}

Surd surd_add(const Surd& a, const Surd& b) { return a + b; }
Surd surd_mul(const Surd& a, const Surd& b) { return a * b; }

Surd surd_sqrt_of_rational(const Rational& q) {
  if (q < 0) fail(ErrorKind::Precondition, "square root of a negative rational");
  if (q == 0) return {};
  const auto num = square_free_parts(q.get_num());
  const auto den = square_free_parts(q.get_den());
  // sqrt(p/q) = sqrt(p q) / q, p = A^2 s, q = B^2 t.
  auto [g, r] = multiply_radicands(num.free, den.free);
  Rational coef(num.square * den.square * g, q.get_den());
  coef.canonicalize();
  return Surd::root(r, coef);
}

Enclosure enclose(const Surd& a, unsigned bits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  const Integer scale_sq = scale * scale;
  Enclosure e{0, 0};
  for (const auto& [s, c] : a.terms()) {
    Rational lo, hi;
    if (s == 1) {
      lo = hi = 1;
    } else {
      const Integer r = isqrt(s * scale_sq);
      lo = Rational(r, scale);
      hi = Rational(r * r == s * scale_sq ? r : r + 1, scale);
      lo.canonicalize();
      hi.canonicalize();
    }
    if (c > 0) {
      e.lo += c * lo;
      e.hi += c * hi;
    } else {
      e.lo += c * hi;
      e.hi += c * lo;
    }
  }
  return e;
}

int surd_sign(const Surd& a) {
  if (a.is_zero()) return 0;
  if (a.is_rational()) return sign(a.rational_part());
  if (a.is_monomial()) return sign(a.terms().begin()->second);
  // Nonzero by canonical form; linear independence of square roots of distinct
  // square-free integers guarantees the enclosure eventually excludes 0.
  for (unsigned bits = 32;; bits *= 2) {
    const Enclosure e = enclose(a, bits);
    if (e.lo > 0) return 1;
    if (e.hi < 0) return -1;
  }
}

Surd abs(const Surd& a) { return surd_sign(a) < 0 ? -a : a; }

int compare(const Surd& a, const Surd& b) { return surd_sign(a - b); }

std::string to_string(const Surd& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [r, c] : a.terms()) {
    if (!first) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    const Rational mag = abs(c);
    if (r == 1) {
      out << to_string(mag);
    } else {
      if (mag != 1) out << to_string(mag) << "*";
      out << "sqrt(" << r.get_str() << ")";
    }
    first = false;
  }
  return out.str();
}

}  // namespace multconv
