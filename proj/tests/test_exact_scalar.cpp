#include "multconv/error.hpp"
#include "multconv/surd.hpp"

#include <doctest.h>

#include <random>

using namespace multconv;

namespace {

// Largest square dividing z, by plain trial division.
Integer largest_square_factor(long z) {
  long sq = 1;
  for (long p = 2; p * p <= z; ++p) {
    while (z % (p * p) == 0) {
      z /= p * p;
      sq *= p;
    }
  }
  return sq;
}

Surd r2() { return Surd::root(2); }
Surd r3() { return Surd::root(3); }

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(to_string(Rational(-1, 2)) == "-1/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK(isqrt(Integer(99)) == 9);
  CHECK(is_perfect_square(Integer(144)));
  CHECK_FALSE(is_perfect_square(Integer(2)));
}

TEST_CASE("surd_add") {
  CHECK((r2() + (-r2())).is_zero());
  const Surd s = Surd(1) + r2();
  CHECK(s.terms().size() == 2);
  CHECK(Surd::root(2, Rational(3, 2)) + Surd::root(2, Rational(1, 2)) == Surd::root(2, 2));
  CHECK(surd_add(Surd(Rational(1, 3)), Surd(Rational(1, 6))) == Surd(Rational(1, 2)));
}

TEST_CASE("surd_mul") {
  CHECK(r2() * r2() == Surd(2));
  CHECK(r2() * r3() == Surd::root(6));
  // sqrt(6) sqrt(10) = sqrt(60); the oracle pulls out the square part of 60.
  const Integer sq = largest_square_factor(60);
  CHECK(sq == 2);
  CHECK(surd_mul(Surd::root(6), Surd::root(10)) == Surd::root(15, Rational(sq)));
  CHECK(Surd::root(12) == Surd::root(3, 2));
  CHECK(Surd::root(0).is_zero());
}

TEST_CASE("surd_mul rejects radicands beyond the factorization bound") {
  const auto saved = factorization_bound();
  set_factorization_bound(10);
  CHECK_THROWS_AS(Surd::root(101), Error);
  try {
    Surd::root(101);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundExceeded);
  }
  CHECK(Surd::root(98) == Surd::root(2, 7));
  set_factorization_bound(saved);
}

TEST_CASE("surd_sqrt_of_rational") {
  CHECK(surd_sqrt_of_rational(4) == Surd(2));
  const Surd half = surd_sqrt_of_rational(Rational(1, 2));
  CHECK(half == Surd::root(2, Rational(1, 2)));
  CHECK(half * half == Surd(Rational(1, 2)));
  CHECK(surd_sqrt_of_rational(Rational(25, 9)) == Surd(Rational(5, 3)));
  CHECK_THROWS_AS(surd_sqrt_of_rational(-1), Error);
}

TEST_CASE("surd_sign") {
  CHECK(surd_sign(Surd()) == 0);
  CHECK(surd_sign(r3() - r2()) == 1);
  CHECK(surd_sign(Surd(1) - r2()) == -1);
  // 5 - 2 sqrt(6) = (sqrt 3 - sqrt 2)^2 is about 0.101.
  CHECK(surd_sign(Surd(5) - Surd::root(6, 2)) == 1);
  // 49 - 20 sqrt 6 is about 0.0102, close to zero.
  CHECK(surd_sign(Surd(49) - Surd::root(6, 20)) == 1);
  CHECK(surd_sign(Surd::root(2) + Surd::root(3) - Surd::root(10)) == -1);
  CHECK(compare(abs(Surd(1) - r2()), r2() - Surd(1)) == 0);
}

TEST_CASE("surd sign agrees with a squared comparison on random pairs") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const long a = static_cast<long>(rng() % 20) + 1;
    const long b = static_cast<long>(rng() % 20) + 1;
    const long p = static_cast<long>(rng() % 7) + 1;
    const long q = static_cast<long>(rng() % 7) + 1;
    // sign(p sqrt a - q sqrt b) = sign(p^2 a - q^2 b) for positive p, q.
    const long diff = p * p * a - q * q * b;
    const int expect = diff > 0 ? 1 : (diff < 0 ? -1 : 0);
    CHECK(surd_sign(Surd::root(a, p) - Surd::root(b, q)) == expect);
  }
}

TEST_CASE("canonical form") {
  const Surd a = Surd::from_terms({{Integer(8), Rational(1)}, {Integer(2), Rational(-2)}});
  CHECK(a.is_zero());
  const Surd b = Surd::from_terms({{Integer(18), Rational(1)}, {Integer(1), Rational(2, 4)}});
  CHECK(b.terms().size() == 2);
  CHECK(b.terms().at(Integer(2)) == 3);
  CHECK(b.terms().at(Integer(1)) == Rational(1, 2));
  CHECK(Surd(Rational(4, 2)).terms().at(Integer(1)) == 2);
  CHECK(to_string(Surd(Rational(3, 2)) - r2()) == "3/2 - sqrt(2)");
  CHECK(square_free_parts(Integer(72)).square == 6);
  CHECK(square_free_parts(Integer(72)).free == 2);
}

TEST_CASE("enclosures contain the value") {
  const Surd a = r2() + r3();
  for (unsigned bits : {4U, 16U, 40U}) {
    const Enclosure e = enclose(a, bits);
    CHECK(e.lo <= e.hi);
    CHECK(e.lo.get_d() <= a.to_double() + 1e-12);
    CHECK(e.hi.get_d() >= a.to_double() - 1e-12);
  }
}

TEST_CASE("division by a monomial") {
  const Surd a = Surd(1) + r2();
  CHECK((a * r3()).divided_by_monomial(r3()) == a);
  CHECK_THROWS_AS(a.divided_by_monomial(Surd()), Error);
}
