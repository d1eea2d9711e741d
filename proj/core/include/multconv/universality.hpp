#pragma once

#include "multconv/measure.hpp"
#include "multconv/sphere_measure.hpp"

#include <optional>
#include <vector>

namespace multconv {

/// Largest n accepted by the deciders (enumerations are 2^n and 4^n). Default 8.
int decider_dimension_bound();
void set_decider_dimension_bound(int n);

struct Condition {
  SubsetMask e;
  SubsetMask j;
  bool satisfied = false;

  friend bool operator==(const Condition&, const Condition&) = default;
};

struct UniversalityReport {
  bool universal = true;
  std::vector<Condition> conditions;
  /// Set on negative decisions: the R^n witness or the sphere witness.
  std::optional<Measure> witness;
  std::optional<SphereMeasure> sphere_witness;
  std::vector<SubsetMask> skipped_non_proper;
};

/// Order used for reports: descending |E|, then lexicographic on the index list.
std::vector<SubsetMask> condition_order(const Family& support);

/// sigma_0 on the coordinates of E: atoms s in {1,2}^E (zero off E) with weight (-1)^(sum s).
Measure sigma0_on(const SubsetMask& e);

/* Decides whether nu is universal on M(support; pair): nu * mu = 0 forces
 * mu = 0 for every mu in the class. Checks delta_{E,J} * R_E P_E(nu) != 0 for
 * E in support and J in J(E; pair). A negative report carries a witness that
 * was verified to be nonzero, in the class and annihilated by nu. */
UniversalityReport decide_universal_rn(const Measure& nu, const Family& support, const GeneratingPair& pair);
/// Spherical analogue; the empty set must not be in support.
UniversalityReport decide_universal_sphere(const SphereMeasure& nu, const Family& support, const GeneratingPair& pair);

enum class SymmetryClass { Unconditional, Symmetric, Antisymmetric, None };
enum class Scope { Full, TopOrder, PositiveOrthant };

GeneratingPair class_pair(SymmetryClass cls, int n);
/// Support family the special decider answers for; absent for the positive orthant.
std::optional<Family> scope_support(Scope scope, int n, bool sphere);

/* Closed-form criteria for the four named classes. Full scope switches to
 * the order-[n] criterion when nu has order [n]. PositiveOrthant (R^n only)
 * ignores the class and decides universality on measures concentrated on the
 * closed positive orthant: R_F P_F(nu) != 0 for every F. */
UniversalityReport decide_special(const Measure& nu, SymmetryClass cls, Scope scope);
UniversalityReport decide_special(const SphereMeasure& nu, SymmetryClass cls, Scope scope);

enum class Parity { Even, Odd };
struct Obstruction {
  SubsetMask e;
  Parity parity;

  friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

/// Reflections fixing (or negating) nu that the pair does not prescribe.
std::vector<Obstruction> symmetry_obstruction(const Measure& nu, const GeneratingPair& pair);
std::vector<Obstruction> symmetry_obstruction(const SphereMeasure& nu, const GeneratingPair& pair);

std::string to_string(SymmetryClass cls);
std::string to_string(Scope scope);
SymmetryClass parse_symmetry_class(const std::string& s);
Scope parse_scope(const std::string& s);

}  // namespace multconv
