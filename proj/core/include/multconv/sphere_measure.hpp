#pragma once

#include "multconv/measure.hpp"

#include <vector>

namespace multconv {

struct RayDim {
  int operator()(const Ray& r) const { return r.dim(); }
};
struct RayLess {
  bool operator()(const Ray& a, const Ray& b) const { return a < b; }
};

/* Atomic measure on S^{n-1}: the weight at ray d is the mass at d / |d|. */
using SphereMeasure = AtomicMeasure<Ray, RayLess, RayDim>;

SphereMeasure sphere_dirac(const Ray& r, const Surd& w = 1);

/// P_S: atom (x, w), x != 0, becomes (ray(x), w |x|); the origin is dropped.
SphereMeasure radial_project(const Measure& mu);
/// A measure on R^n whose radial projection is mu: atom d with weight w / |d|.
Measure to_measure(const SphereMeasure& mu);

SphereMeasure sconv(const SphereMeasure& a, const SphereMeasure& b);
SphereMeasure sconv(const Measure& a, const Measure& b);
SphereMeasure sconv(const Measure& a, const SphereMeasure& b);
SphereMeasure sconv(const SphereMeasure& a, const Measure& b);

/// P^S_E = P_S P_E; atoms projecting to the origin vanish.
SphereMeasure sphere_project(const SphereMeasure& mu, const SubsetMask& e);

SphereMeasure reflect(const SphereMeasure& mu, const SubsetMask& f);
SphereMeasure restrict_order(const SphereMeasure& mu, const SubsetMask& e);
SphereMeasure restrict_support(const SphereMeasure& mu, const Family& support);
SphereMeasure sign_density(const SphereMeasure& mu, const SubsetMask& j);
int sign_pattern(const Ray& r, const SubsetMask& j);
SubsetMask zero_pattern(const Ray& r);

std::map<SubsetMask, SphereMeasure> coordinate_decomposition(const SphereMeasure& mu);
std::optional<SubsetMask> order_of(const SphereMeasure& mu);
int degree(const SphereMeasure& mu);

std::pair<SphereMeasure, SphereMeasure> jordan(const SphereMeasure& mu);
Surd tv_norm(const SphereMeasure& mu);
bool is_nonnegative(const SphereMeasure& mu);

SphereMeasure symmetrize(const SphereMeasure& mu, const GeneratingPair& pair);
SphereMeasure m_sym(const SphereMeasure& mu);
SphereMeasure m_unc(const SphereMeasure& mu);

bool is_even_under(const SphereMeasure& mu, const SubsetMask& f);
bool is_odd_under(const SphereMeasure& mu, const SubsetMask& f);
bool in_symmetry_class(const SphereMeasure& mu, const GeneratingPair& pair);
bool in_class(const SphereMeasure& mu, const Family& support, const GeneratingPair& pair);

/// P_S of the alternating projection sum; zero exactly when mu_[n] = 0.
SphereMeasure phat_sphere(const SphereMeasure& mu);

/* Floating-point moment g(mu; alpha) = sum of w * prod |x_j|^alpha_j over the
 * atoms. Requires support in A_[n] and alpha >= 0 with |alpha|_1 <= 1. Not used
 * by any exact decision. */
double moment_g(const Measure& mu, const std::vector<double>& alpha);
double moment_g(const SphereMeasure& mu, const std::vector<double>& alpha);

std::string to_string(const SphereMeasure& mu);

}  // namespace multconv
