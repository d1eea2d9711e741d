#pragma once

#include "multconv/measure.hpp"
#include "multconv/sphere_measure.hpp"

#include <utility>

namespace multconv {

/* L(mu) = P_S M_sym(delta_1 (x) mu): a measure on R^n becomes an
 * origin-symmetric measure on S^n in R^{n+1}, with the new coordinate first. */
SphereMeasure lift(const Measure& mu);

/// Inverse of lift on origin-symmetric sphere measures whose rays all have d_0 != 0.
Measure lift_inverse(const SphereMeasure& mu);

/// (support_L, (F_e^0, F_o)) in dimension n + 1.
std::pair<Family, GeneratingPair> lift_class(const Family& support, const GeneratingPair& pair);

}  // namespace multconv
