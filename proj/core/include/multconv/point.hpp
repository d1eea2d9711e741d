#pragma once

#include "multconv/rational.hpp"
#include "multconv/subset.hpp"
#include "multconv/surd.hpp"

#include <string>
#include <vector>

namespace multconv {

using Point = std::vector<Rational>;

struct PointLess {
  bool operator()(const Point& a, const Point& b) const;
};

Point make_point(std::initializer_list<long> coords);
Point zero_point(int n);
Point ones(int n);
/// Indicator vector 1_E.
Point indicator(const SubsetMask& e);

Point hadamard(const Point& x, const Point& y);
Point reflect_point(const Point& x, const SubsetMask& f);
Point project_point(const Point& x, const SubsetMask& e);
SubsetMask zero_pattern(const Point& x);
bool is_zero(const Point& x);
Rational dot(const Point& x, const Point& y);
Rational squared_norm(const Point& x);
Surd norm_surd(const Point& x);
/// Concatenation (x, y) in dimension dim(x) + dim(y).
Point concat(const Point& x, const Point& y);

std::string to_string(const Point& x);

/* Primitive integer representative of the open ray {a x : a > 0}. Direction
 * and unit vector share their sign pattern, so zero patterns and sign
 * densities are read directly from the integer entries. */
class Ray {
 public:
  /// Throws ErrorKind::Precondition for the zero vector.
  static Ray of(const Point& x);
  static Ray of(const std::vector<Integer>& d);

  const std::vector<Integer>& direction() const noexcept { return d_; }
  int dim() const noexcept { return static_cast<int>(d_.size()); }
  Point as_point() const;
  /// Sum of squared entries; the unit vector is direction / sqrt(squared_norm).
  Integer squared_norm() const;
  Ray negated() const;

  friend bool operator==(const Ray& a, const Ray& b) { return a.d_ == b.d_; }
  friend bool operator<(const Ray& a, const Ray& b);

 private:
  explicit Ray(std::vector<Integer> d) : d_(std::move(d)) {}
  std::vector<Integer> d_;
};

inline Ray canonical_ray(const Point& x) { return Ray::of(x); }

std::string to_string(const Ray& r);

}  // namespace multconv
