#pragma once

#include "multconv/atomic.hpp"
#include "multconv/point.hpp"
#include "multconv/subset.hpp"

#include <optional>
#include <utility>

namespace multconv {

struct PointDim {
  int operator()(const Point& x) const { return static_cast<int>(x.size()); }
};

using Measure = AtomicMeasure<Point, PointLess, PointDim>;

Measure dirac(const Point& x, const Surd& w = 1);
/// delta_{1_n}, the unit of the convolution algebra.
Measure unit_measure(int n);

Measure mconv(const Measure& mu, const Measure& nu);
Measure tensor(const Measure& mu, const Measure& nu);

Measure project(const Measure& mu, const SubsetMask& e);
Measure restrict_order(const Measure& mu, const SubsetMask& e);
/// Keeps atoms whose zero pattern is a member of the family.
Measure restrict_support(const Measure& mu, const Family& support);
Measure restrict_positive(const Measure& mu);
Measure reflect(const Measure& mu, const SubsetMask& f);

/// Every nonzero coordinate component mu_E, keyed by E.
std::map<SubsetMask, Measure> coordinate_decomposition(const Measure& mu);
std::optional<SubsetMask> order_of(const Measure& mu);
int degree(const Measure& mu);

/// (mu+, mu-) with both parts non-negative and mu = mu+ - mu-.
std::pair<Measure, Measure> jordan(const Measure& mu);
Surd tv_norm(const Measure& mu);
bool is_nonnegative(const Measure& mu);

Measure sigma0(int n);
Measure delta_ej(const SubsetMask& e, const SubsetMask& j);
inline Measure delta_j(const SubsetMask& j) { return delta_ej(SubsetMask::full(j.dim), j); }
Measure sigma_sym(int n);
Measure sigma_unc(int n);

/// sigma_J(x) = product of sign(x_i) over i in J.
int sign_pattern(const Point& x, const SubsetMask& j);
Measure sign_density(const Measure& mu, const SubsetMask& j);

/// M_{F_e, F_o}: applies (I + T_F)/2 for F in F_e, then (I - T_F)/2 for F in F_o.
Measure symmetrize(const Measure& mu, const GeneratingPair& pair);
Measure m_sym(const Measure& mu);
Measure m_unc(const Measure& mu);
/// Average of T_G(mu) over the members of a subgroup g.
Measure group_average(const Measure& mu, const Family& g);

Measure unc_forward(const Measure& mu);
Measure unc_inverse(const Measure& mu);

bool is_even_under(const Measure& mu, const SubsetMask& f);
bool is_odd_under(const Measure& mu, const SubsetMask& f);
/// Support family and symmetry class membership: every atom lies in some A_E with
/// E in support, mu is even under every member of pair.evens and odd under pair.odds.
bool in_class(const Measure& mu, const Family& support, const GeneratingPair& pair);
bool in_symmetry_class(const Measure& mu, const GeneratingPair& pair);

Measure phat(const Measure& mu);

std::string to_string(const Measure& mu);

}  // namespace multconv
