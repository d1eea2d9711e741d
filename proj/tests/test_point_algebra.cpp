#include "multconv/oracle.hpp"
#include "multconv/point.hpp"

#include <doctest.h>

using namespace multconv;

namespace {
SubsetMask S(int n, std::initializer_list<int> idx) { return SubsetMask::from_indices(n, idx); }
}  // namespace

TEST_CASE("hadamard") {
  CHECK(hadamard(make_point({1, -1}), make_point({2, 3})) == make_point({2, -3}));
  const Point x = {Rational(1, 2), Rational(-3)};
  CHECK(hadamard(x, ones(2)) == x);
  CHECK(hadamard(make_point({1, 0}), make_point({0, 1})) == zero_point(2));
  CHECK_THROWS_AS(hadamard(make_point({1}), make_point({1, 2})), Error);
}

TEST_CASE("reflect_point") {
  const Point x = make_point({2, 3});
  CHECK(reflect_point(x, SubsetMask::empty(2)) == x);
  CHECK(reflect_point(ones(3), S(3, {1, 3})) == make_point({-1, 1, -1}));
  CHECK(reflect_point(x, S(2, {1})) == make_point({-2, 3}));
}

TEST_CASE("project_point") {
  const Point x = make_point({4, -1, 2});
  CHECK(project_point(x, SubsetMask::full(3)) == x);
  CHECK(project_point(x, SubsetMask::empty(3)) == zero_point(3));
  Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    const Point y = gen_point(rng, 3, default_pool());
    const SubsetMask e = gen_subset(rng, 3), f = gen_subset(rng, 3);
    CHECK(project_point(project_point(y, f), e) == project_point(y, intersect(e, f)));
  }
}

TEST_CASE("zero_pattern") {
  CHECK(zero_pattern(zero_point(2)).is_empty());
  CHECK(zero_pattern(make_point({1, 0, -2})) == S(3, {1, 3}));
  CHECK(zero_pattern(ones(4)) == SubsetMask::full(4));
}

TEST_CASE("canonical rays") {
  CHECK(Ray::of(Point{Rational(1, 2), Rational(1, 2)}).direction() == std::vector<Integer>{1, 1});
  CHECK(Ray::of(make_point({2, -4})).direction() == std::vector<Integer>{1, -2});
  CHECK(Ray::of(make_point({3, 4})) == Ray::of(Point{Rational(3, 5), Rational(4, 5)}));
  CHECK(Ray::of(make_point({0, -6})).direction() == std::vector<Integer>{0, -1});
  CHECK(Ray::of(make_point({3, 4})).squared_norm() == 25);
  CHECK(Ray::of(make_point({1, -2})).negated() == Ray::of(make_point({-1, 2})));
  CHECK_THROWS_AS(Ray::of(zero_point(2)), Error);
  CHECK(to_string(Ray::of(make_point({2, 4}))) == "ray(1,2)");
}

TEST_CASE("norm_surd") {
  CHECK(norm_surd(make_point({3, 4})) == Surd(5));
  CHECK(norm_surd(make_point({1, 1})) == Surd::root(2));
  CHECK(norm_surd(zero_point(3)).is_zero());
  CHECK(dot(make_point({1, 2}), make_point({3, -1})) == 1);
}

TEST_CASE("point identities on random points") {
  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 3;
    const Point x = gen_point(rng, n, default_pool());
    const Point y = gen_point(rng, n, default_pool());
    const SubsetMask e = gen_subset(rng, n);
    const Point lhs = project_point(hadamard(x, y), e);
    CHECK(lhs == hadamard(project_point(x, e), y));
    CHECK(lhs == hadamard(x, project_point(y, e)));
    CHECK(lhs == hadamard(project_point(x, e), project_point(y, e)));
    CHECK(zero_pattern(hadamard(x, y)) == intersect(zero_pattern(x), zero_pattern(y)));
    CHECK(compare(norm_surd(hadamard(x, y)), norm_surd(x) * norm_surd(y)) <= 0);
    if (!is_zero(x)) {
      Rational a(rng.range(1, 9), rng.range(1, 5));
      a.canonicalize();
      Point ax = x;
      for (auto& c : ax) c *= a;
      CHECK(Ray::of(ax) == Ray::of(x));
    }
  }
}

TEST_CASE("concat") {
  CHECK(concat(make_point({1}), make_point({2, 3})) == make_point({1, 2, 3}));
  CHECK(to_string(Point{Rational(1, 2), Rational(-2)}) == "(1/2,-2)");
}
