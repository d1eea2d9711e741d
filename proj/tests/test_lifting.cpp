#include "multconv/lifting.hpp"
#include "multconv/oracle.hpp"

#include <doctest.h>

using namespace multconv;

namespace {
SubsetMask S(int n, std::initializer_list<int> idx) { return SubsetMask::from_indices(n, idx); }
Measure D(std::initializer_list<long> x, const Surd& w = 1) { return dirac(make_point(x), w); }
}  // namespace

TEST_CASE("lift of a point mass") {
  // 1/2 (delta(1,1) + delta(-1,-1)), then radial projection multiplies by sqrt 2.
  const SphereMeasure l = lift(D({1}));
  const Surd w = Surd::root(2, Rational(1, 2));
  CHECK(l == sphere_dirac(Ray::of(make_point({1, 1})), w) + sphere_dirac(Ray::of(make_point({-1, -1})), w));
  CHECK(lift_inverse(l) == D({1}));
  CHECK(lift(Measure(2)).is_zero());
  CHECK(lift(D({0, 0})) == sphere_dirac(Ray::of(make_point({1, 0, 0}))) * Surd(Rational(1, 2)) +
                               sphere_dirac(Ray::of(make_point({-1, 0, 0}))) * Surd(Rational(1, 2)));
}

TEST_CASE("lift_inverse preconditions") {
  CHECK_THROWS_AS(lift_inverse(radial_project(D({1, 1}))), Error);
  const SphereMeasure equator = radial_project(D({0, 1}) + D({0, -1}));
  CHECK_THROWS_AS(lift_inverse(equator), Error);
}

TEST_CASE("lift identities on random measures") {
  Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 3;
    const Measure mu = gen_measure(rng, n, 5, default_pool(), true);
    const SphereMeasure l = lift(mu);
    CHECK(lift_inverse(l) == mu);
    CHECK(l.is_zero() == mu.is_zero());
    CHECK(is_even_under(l, SubsetMask::full(n + 1)));
    if (!mu.is_zero()) CHECK(degree(l) == degree(mu) + 1);
    for (const auto& e : power_set(n)) {
      CHECK(lift(restrict_order(mu, e)) == restrict_order(l, lift_set(e)));
      CHECK(lift(project(mu, e)) == sphere_project(l, lift_set(e)));
      CHECK(reflect(l, embed_set(e)) == lift(reflect(mu, e)));
    }
  }
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + t % 2;
    const Measure a = gen_measure(rng, n, 4, default_pool(), true), b = gen_measure(rng, n, 4, default_pool(), true);
    CHECK(lift(mconv(a, b)) == sconv(lift(a), lift(b)));
  }
}

TEST_CASE("lift_class") {
  const auto [support, pair] = lift_class({SubsetMask::full(2)}, no_symmetry_pair(2));
  CHECK(support == Family{SubsetMask::full(3)});
  CHECK(pair.evens == Family{SubsetMask::full(3)});
  CHECK(pair.odds.empty());
  CHECK(pair.dim == 3);
  const auto [s2, p2] = lift_class({S(2, {1}), SubsetMask::empty(2)}, antisymmetric_pair(2));
  CHECK(s2 == Family{S(3, {1, 2}), S(3, {1})});
  CHECK(p2.odds == Family{S(3, {2, 3})});

  Rng rng(32);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 3;
    const GeneratingPair p = gen_pair(rng, n);
    const Family f = gen_family(rng, n);
    Measure mu = gen_measure(rng, n, 4, default_pool());
    if (t % 2) mu = restrict_support(symmetrize(mu, p), f);
    const auto [fl, pl] = lift_class(f, p);
    CHECK(in_class(mu, f, p) == in_class(lift(mu), fl, pl));
  }
}
