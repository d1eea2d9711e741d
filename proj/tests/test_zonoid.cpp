#include "multconv/oracle.hpp"
#include "multconv/zonoid.hpp"

#include <doctest.h>

using namespace multconv;

namespace {

SubsetMask S(int n, std::initializer_list<int> idx) { return SubsetMask::from_indices(n, idx); }

// K-transform as a double sum: mass of mu at e/|e| times the support function
// of the scaled body, evaluated generator by generator.
Surd k_transform_oracle(const Zonotope& z, const SphereMeasure& mu, const Point& u) {
  Surd total;
  for (const auto& [e, w] : mu.atoms()) {
    const Surd inv = surd_sqrt_of_rational(Rational(Integer(1), e.squared_norm()));
    Rational h = 0;
    for (const auto& v : z.generators) h += abs(dot(hadamard(v, e.as_point()), u));
    total += w * inv * Surd(h);
  }
  return total;
}

}  // namespace

TEST_CASE("generating measures") {
  const SphereMeasure seg = generating_measure(Zonotope{2, {make_point({1, 0})}});
  CHECK(seg == sphere_dirac(Ray::of(make_point({1, 0})), Surd(Rational(1, 2))) +
                   sphere_dirac(Ray::of(make_point({-1, 0})), Surd(Rational(1, 2))));
  const SphereMeasure c = generating_measure(cube(3));
  CHECK(degree(c) == 1);
  CHECK(c.size() == 6);
  CHECK(generating_measure(Zonotope{2, {}}).is_zero());
  CHECK_THROWS_AS(generating_measure(Zonotope{2, {make_point({0, 0})}}), Error);
}

TEST_CASE("support functions") {
  const SphereMeasure c = generating_measure(cube(3));
  CHECK(support_function(c, make_point({1, 0, 0})) == Surd(1));
  CHECK(support_function(c, make_point({1, -2, 1})) == Surd(4));
  CHECK(support_function(c, zero_point(3)).is_zero());
  Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 3;
    Zonotope z{n, {}};
    for (int k = 0; k < 3; ++k) {
      Point v = gen_point(rng, n, default_pool());
      if (!is_zero(v)) z.generators.push_back(v);
    }
    const SphereMeasure nu = generating_measure(z);
    const Point u = gen_point(rng, n, default_pool());
    const SubsetMask e = gen_subset(rng, n);
    CHECK(support_function(nu, u) == Surd(zonotope_support(z, u)));
    Point u3 = u;
    for (auto& x : u3) x *= 3;
    CHECK(support_function(nu, u3) == Surd(3) * support_function(nu, u));
    CHECK(support_function(sphere_project(nu, e), u) == support_function(nu, project_point(u, e)));
    CHECK(generating_measure(project_zonotope(z, e)) == sphere_project(nu, e));
    CHECK(is_nonnegative(nu));
  }
}

TEST_CASE("k_transform") {
  for (int n = 2; n <= 3; ++n) {
    const Zonotope c = cube(n);
    const SphereMeasure nu = generating_measure(c);
    const SphereMeasure mu = radial_project(dirac(ones(n)) + dirac(reflect_point(ones(n), SubsetMask::full(n))));
    const Point u = n == 3 ? make_point({2, -1, 3}) : make_point({2, -1});
    CHECK(k_transform(nu, mu, u) == k_transform_oracle(c, mu, u));
    CHECK(k_transform(nu, SphereMeasure(n), u).is_zero());
    CHECK(k_transform(nu, mu, zero_point(n)).is_zero());
    CHECK_THROWS_AS(k_transform(nu, radial_project(dirac(ones(n))), u), Error);
  }
  Rng rng(42);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + t % 3;
    Zonotope z{n, {}};
    for (int k = 0; k < 2; ++k) {
      Point v = gen_point(rng, n, nonzero_pool());
      z.generators.push_back(v);
    }
    const SphereMeasure mu = m_sym(radial_project(gen_measure(rng, n, 3, default_pool(), true)));
    const Point u = gen_point(rng, n, default_pool());
    CHECK(k_transform(generating_measure(z), mu, u) == k_transform_oracle(z, mu, u));
  }
}

TEST_CASE("D-universality") {
  for (int n = 2; n <= 3; ++n) {
    const SphereMeasure c = generating_measure(cube(n));
    CHECK_FALSE(decide_d_universal(c, false).universal);
    CHECK_FALSE(decide_d_universal(c, true).universal);
    CHECK_FALSE(singleton_support_check(c));
    CHECK_FALSE(decide_d_universal(SphereMeasure(n), true).universal);
    CHECK(singleton_support_check(SphereMeasure(n)));
    const SphereMeasure s = m_sym(radial_project(sigma0(n)));
    CHECK(singleton_support_check(s));
  }
  // Generators off every coordinate hyperplane give an order-[n] generating measure.
  const Zonotope z{2, {make_point({1, 2}), make_point({-1, 1})}};
  const SphereMeasure nu = generating_measure(z);
  CHECK(singleton_support_check(nu));
  CHECK(decide_d_universal(nu, true).universal);
  CHECK_THROWS_AS(decide_d_universal(radial_project(dirac(ones(2))), true), Error);
  CHECK(project_zonotope(cube(2), S(2, {1})).generators.size() == 1);
}
