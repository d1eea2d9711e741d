#pragma once

#include "multconv/sphere_measure.hpp"
#include "multconv/universality.hpp"

#include <vector>

namespace multconv {

/* Origin-symmetric zonotope: the Minkowski sum of the segments [-v, v]. */
struct Zonotope {
  int dim = 0;
  std::vector<Point> generators;
};

/// Segment generators along the coordinate axes, i.e. the cube [-1, 1]^n.
Zonotope cube(int n);
/// Image under P_E; generators that vanish are dropped.
Zonotope project_zonotope(const Zonotope& z, const SubsetMask& e);

/// Sum over generators v of (|v| / 2)(delta_{ray(v)} + delta_{ray(-v)}).
SphereMeasure generating_measure(const Zonotope& z);

/// h(u) = sum over atoms (d, w) of w |<d, u>| / |d|.
Surd support_function(const SphereMeasure& nu, const Point& u);
/// h(u) = sum over generators of |<v, u>|, straight from the segments.
Rational zonotope_support(const Zonotope& z, const Point& u);

/// T_K mu(u) evaluated as the support function of nu_K *_S mu.
Surd k_transform(const SphereMeasure& nu_k, const SphereMeasure& mu, const Point& u);

/// D-universality (or unconditional D-universality) of the body generated by nu.
UniversalityReport decide_d_universal(const SphereMeasure& nu, bool unconditional);

/// True iff M_sym(nu) has order [n] or vanishes.
bool singleton_support_check(const SphereMeasure& nu);

}  // namespace multconv
