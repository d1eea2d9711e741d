#include "multconv/universality.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace multconv {

namespace {

std::atomic<int> g_dim_bound{8};

void check_dimension(int n) {
  if (n < 1) fail(ErrorKind::Precondition, "universality deciders need dimension >= 1");
  if (n > g_dim_bound.load()) {
    fail(ErrorKind::BoundExceeded, "dimension " + std::to_string(n) + " exceeds the decider bound " + std::to_string(g_dim_bound.load()));
  }
}

bool condition_less(const Condition& a, const Condition& b) {
  if (a.e != b.e) {
    if (a.e.size() != b.e.size()) return a.e.size() > b.e.size();
    return lex_less(a.e, b.e);
  }
  return lex_less(a.j, b.j);
}

std::vector<SubsetMask> sorted_index_set(const SubsetMask& e, const GeneratingPair& pair) {
  auto js = index_set(e, pair);
  std::sort(js.begin(), js.end(), lex_less);
  return js;
}

std::vector<Measure> witness_candidates(const SubsetMask& e, const SubsetMask& j) {
  const Measure d = delta_ej(e, j);
  return {d, mconv(d, sigma0_on(e))};
}

Measure rn_witness(const Measure& nu, const Condition& c, const Family& support, const GeneratingPair& pair) {
  for (const auto& w : witness_candidates(c.e, c.j)) {
    if (!w.is_zero() && in_class(w, support, pair) && mconv(nu, w).is_zero()) return w;
  }
  throw std::logic_error("no verified witness for failing condition E=" + to_string(c.e) + " J=" + to_string(c.j));
}

SphereMeasure sphere_witness(const SphereMeasure& nu, const Condition& c, const Family& support, const GeneratingPair& pair) {
  for (const auto& m : witness_candidates(c.e, c.j)) {
    const SphereMeasure w = radial_project(m);
    if (!w.is_zero() && in_class(w, support, pair) && sconv(nu, w).is_zero()) return w;
  }
  throw std::logic_error("no verified sphere witness for failing condition E=" + to_string(c.e) + " J=" + to_string(c.j));
}

// Sorts the conditions, sets the decision and attaches a witness for the first failure.
template <class WitnessFn>
void finish(UniversalityReport& report, WitnessFn make_witness) {
  std::sort(report.conditions.begin(), report.conditions.end(), condition_less);
  report.universal = true;
  for (const auto& c : report.conditions) {
    if (!c.satisfied) {
      report.universal = false;
      make_witness(c);
      break;
    }
  }
}

Family nonempty_subsets(int n) {
  Family f = power_set(n);
  f.erase(SubsetMask::empty(n));
  return f;
}

template <class M>
std::vector<Obstruction> obstructions(const M& nu, const GeneratingPair& pair) {
  const SymmetryPair g = gamma(pair);
  if (!g.proper) fail(ErrorKind::Precondition, "symmetry_obstruction: generating pair is not proper");
  require_same_dim(nu.dim(), pair.dim, "symmetry_obstruction");
  std::vector<Obstruction> out;
  for (const auto& e : condition_order(power_set(nu.dim()))) {
    if (is_even_under(nu, e) && !g.evens.contains(e)) out.push_back({e, Parity::Even});
    if (is_odd_under(nu, e) && !g.odds.contains(e)) out.push_back({e, Parity::Odd});
  }
  return out;
}

}  // namespace

int decider_dimension_bound() { return g_dim_bound.load(); }

void set_decider_dimension_bound(int n) {
  if (n < 1 || n > SubsetMask::max_dim) fail(ErrorKind::Precondition, "decider bound must lie in [1, 63]");
  g_dim_bound.store(n);
}

std::vector<SubsetMask> condition_order(const Family& support) {
  std::vector<SubsetMask> out(support.begin(), support.end());
  std::sort(out.begin(), out.end(), [](const SubsetMask& a, const SubsetMask& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return lex_less(a, b);
  });
  return out;
}

Measure sigma0_on(const SubsetMask& e) {
  Measure out(e.dim);
  for (const auto& twos : subsets_of(e)) {
    Point s = indicator(e);
    for (int i : twos.indices()) s[i - 1] = 2;
    const int parity = (e.size() + twos.size()) % 2;
    out.add(s, Surd(parity ? -1 : 1));
  }
  return out;
}

UniversalityReport decide_universal_rn(const Measure& nu, const Family& support, const GeneratingPair& pair) {
  check_dimension(nu.dim());
  require_same_dim(nu.dim(), pair.dim, "decide_universal_rn");
  UniversalityReport report;
  for (const auto& e : condition_order(support)) {
    require_same_dim(e.dim, nu.dim(), "decide_universal_rn support");
    if (!is_proper(restrict_pair(pair, e))) {
      report.skipped_non_proper.push_back(e);
      continue;
    }
    const Measure rho = restrict_order(project(nu, e), e);
    for (const auto& j : sorted_index_set(e, pair)) {
      report.conditions.push_back({e, j, !mconv(delta_ej(e, j), rho).is_zero()});
    }
  }
  finish(report, [&](const Condition& c) { report.witness = rn_witness(nu, c, support, pair); });
  return report;
}

UniversalityReport decide_universal_sphere(const SphereMeasure& nu, const Family& support, const GeneratingPair& pair) {
  check_dimension(nu.dim());
  require_same_dim(nu.dim(), pair.dim, "decide_universal_sphere");
  if (support.contains(SubsetMask::empty(nu.dim()))) {
    fail(ErrorKind::Precondition, "decide_universal_sphere: the empty set cannot be a support member on the sphere");
  }
  UniversalityReport report;
  for (const auto& e : condition_order(support)) {
    require_same_dim(e.dim, nu.dim(), "decide_universal_sphere support");
    if (!is_proper(restrict_pair(pair, e))) {
      report.skipped_non_proper.push_back(e);
      continue;
    }
    const SphereMeasure rho = restrict_order(sphere_project(nu, e), e);
    for (const auto& j : sorted_index_set(e, pair)) {
      report.conditions.push_back({e, j, !sconv(delta_ej(e, j), rho).is_zero()});
    }
  }
  finish(report, [&](const Condition& c) { report.sphere_witness = sphere_witness(nu, c, support, pair); });
  return report;
}

GeneratingPair class_pair(SymmetryClass cls, int n) {
  switch (cls) {
    case SymmetryClass::Unconditional: return unconditional_pair(n);
    case SymmetryClass::Symmetric: return symmetric_pair(n);
    case SymmetryClass::Antisymmetric: return antisymmetric_pair(n);
    case SymmetryClass::None: return no_symmetry_pair(n);
  }
  fail(ErrorKind::Precondition, "unknown symmetry class");
}

std::optional<Family> scope_support(Scope scope, int n, bool sphere) {
  switch (scope) {
    case Scope::Full: return sphere ? nonempty_subsets(n) : power_set(n);
    case Scope::TopOrder: return Family{SubsetMask::full(n)};
    case Scope::PositiveOrthant: return std::nullopt;
  }
  return std::nullopt;
}

UniversalityReport decide_special(const Measure& nu, SymmetryClass cls, Scope scope) {
  const int n = nu.dim();
  check_dimension(n);
  const SubsetMask full = SubsetMask::full(n);
  UniversalityReport report;

  if (scope == Scope::PositiveOrthant) {
    // Atomic products on an open orthant have no zero divisors, so only the
    // projected top-order parts R_F P_F(nu) matter.
    for (const auto& f : condition_order(power_set(n))) {
      report.conditions.push_back({f, SubsetMask::empty(n), !restrict_order(project(nu, f), f).is_zero()});
    }
    finish(report, [&](const Condition& c) {
      const Measure w = sigma0_on(c.e);
      if (w.is_zero() || !(restrict_positive(w) == w) || !mconv(nu, w).is_zero()) {
        throw std::logic_error("positive-orthant witness failed verification");
      }
      report.witness = w;
    });
    return report;
  }

  const GeneratingPair pair = class_pair(cls, n);
  const Family support = *scope_support(scope, n, false);
  const bool unc = cls == SymmetryClass::Unconditional;

  if (scope == Scope::TopOrder) {
    const Measure top = restrict_order(nu, full);
    if (unc) {
      report.conditions.push_back({full, SubsetMask::empty(n), !restrict_order(m_unc(nu), full).is_zero()});
    } else {
      for (const auto& j : sorted_index_set(full, pair)) {
        report.conditions.push_back({full, j, !mconv(delta_j(j), top).is_zero()});
      }
    }
  } else if (order_of(nu) == full) {
    if (unc) {
      report.conditions.push_back({SubsetMask::empty(n), SubsetMask::empty(n), !nu.total_mass().is_zero()});
    } else {
      for (const auto& j : sorted_index_set(full, pair)) {
        report.conditions.push_back({j, j, !mconv(delta_ej(j, j), nu).is_zero()});
      }
    }
  } else if (unc) {
    const Measure m = m_unc(nu);
    for (const auto& e : condition_order(support)) {
      report.conditions.push_back({e, SubsetMask::empty(n), !restrict_order(project(m, e), e).is_zero()});
    }
  } else {
    for (const auto& e : condition_order(support)) {
      if (!is_proper(restrict_pair(pair, e))) {
        report.skipped_non_proper.push_back(e);
        continue;
      }
      const Measure rho = restrict_order(project(nu, e), e);
      for (const auto& j : sorted_index_set(e, pair)) {
        report.conditions.push_back({e, j, !mconv(delta_j(j), rho).is_zero()});
      }
    }
  }
  finish(report, [&](const Condition& c) { report.witness = rn_witness(nu, c, support, pair); });
  return report;
}

UniversalityReport decide_special(const SphereMeasure& nu, SymmetryClass cls, Scope scope) {
  const int n = nu.dim();
  check_dimension(n);
  if (scope == Scope::PositiveOrthant) {
    fail(ErrorKind::Precondition, "the positive-orthant scope is only defined on R^n");
  }
  const SubsetMask full = SubsetMask::full(n);
  const GeneratingPair pair = class_pair(cls, n);
  const Family support = *scope_support(scope, n, true);
  const bool unc = cls == SymmetryClass::Unconditional;
  UniversalityReport report;

  auto dimension_one = [&] {
    for (int i = 1; i <= n; ++i) {
      const SubsetMask e = SubsetMask::singleton(n, i);
      report.conditions.push_back({e, SubsetMask::empty(n), !m_sym(sphere_project(nu, e)).is_zero()});
    }
  };

  if (scope == Scope::TopOrder) {
    const SphereMeasure top = restrict_order(nu, full);
    if (unc) {
      report.conditions.push_back({full, SubsetMask::empty(n), !restrict_order(m_unc(nu), full).is_zero()});
    } else {
      for (const auto& j : sorted_index_set(full, pair)) {
        report.conditions.push_back({full, j, !sconv(delta_j(j), top).is_zero()});
      }
    }
  } else if (order_of(nu) == full) {
    for (const auto& j : sorted_index_set(full, pair)) {
      if (j.is_empty()) continue;
      report.conditions.push_back({j, j, !sconv(delta_ej(j, j), nu).is_zero()});
    }
    if (pair.odds.empty()) dimension_one();
  } else if (unc) {
    const SphereMeasure m = m_unc(nu);
    for (const auto& e : condition_order(support)) {
      report.conditions.push_back({e, SubsetMask::empty(n), !restrict_order(sphere_project(m, e), e).is_zero()});
    }
  } else {
    for (const auto& e : condition_order(support)) {
      if (!is_proper(restrict_pair(pair, e))) {
        report.skipped_non_proper.push_back(e);
        continue;
      }
      const SphereMeasure rho = restrict_order(sphere_project(nu, e), e);
      for (const auto& j : sorted_index_set(e, pair)) {
        report.conditions.push_back({e, j, !sconv(delta_j(j), rho).is_zero()});
      }
    }
  }
  finish(report, [&](const Condition& c) { report.sphere_witness = sphere_witness(nu, c, support, pair); });
  return report;
}

std::vector<Obstruction> symmetry_obstruction(const Measure& nu, const GeneratingPair& pair) { return obstructions(nu, pair); }
std::vector<Obstruction> symmetry_obstruction(const SphereMeasure& nu, const GeneratingPair& pair) { return obstructions(nu, pair); }

std::string to_string(SymmetryClass cls) {
  switch (cls) {
    case SymmetryClass::Unconditional: return "unconditional";
    case SymmetryClass::Symmetric: return "symmetric";
    case SymmetryClass::Antisymmetric: return "antisymmetric";
    case SymmetryClass::None: return "none";
  }
  return "?";
}

std::string to_string(Scope scope) {
  switch (scope) {
    case Scope::Full: return "full";
    case Scope::TopOrder: return "top-order";
    case Scope::PositiveOrthant: return "positive-orthant";
  }
  return "?";
}

SymmetryClass parse_symmetry_class(const std::string& s) {
  if (s == "unconditional") return SymmetryClass::Unconditional;
  if (s == "symmetric") return SymmetryClass::Symmetric;
  if (s == "antisymmetric") return SymmetryClass::Antisymmetric;
  if (s == "none") return SymmetryClass::None;
  fail(ErrorKind::Parse, "unknown symmetry class '" + s + "'");
}

Scope parse_scope(const std::string& s) {
  if (s == "full") return Scope::Full;
  if (s == "top-order") return Scope::TopOrder;
  if (s == "positive-orthant") return Scope::PositiveOrthant;
  fail(ErrorKind::Parse, "unknown scope '" + s + "'");
}

}  // namespace multconv
