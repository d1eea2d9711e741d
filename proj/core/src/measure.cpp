#include "multconv/measure.hpp"

#include <bit>
#include <sstream>

namespace multconv {

namespace {

const Rational kHalf(1, 2);

Measure half_sum(const Measure& mu, const SubsetMask& f, bool odd) {
  Measure t = reflect(mu, f);
  Measure out = odd ? mu - t : mu + t;
  out *= Surd(kHalf);
  return out;
}

}  // namespace

Measure dirac(const Point& x, const Surd& w) {
  Measure m(static_cast<int>(x.size()));
  m.add(x, w);
  return m;
}

Measure unit_measure(int n) { return dirac(ones(n)); }

Measure mconv(const Measure& mu, const Measure& nu) {
  require_same_dim(mu.dim(), nu.dim(), "mconv");
  Measure out(mu.dim());
  for (const auto& [x, v] : mu.atoms()) {
    for (const auto& [y, w] : nu.atoms()) out.add(hadamard(x, y), v * w);
  }
  return out;
}

Measure tensor(const Measure& mu, const Measure& nu) {
  Measure out(mu.dim() + nu.dim());
  for (const auto& [x, v] : mu.atoms()) {
    for (const auto& [y, w] : nu.atoms()) out.add(concat(x, y), v * w);
  }
  return out;
}

Measure project(const Measure& mu, const SubsetMask& e) {
  require_same_dim(mu.dim(), e.dim, "project");
  return mu.pushforward([&](const Point& x) { return project_point(x, e); });
}

Measure restrict_order(const Measure& mu, const SubsetMask& e) {
  require_same_dim(mu.dim(), e.dim, "restrict_order");
  return mu.filter([&](const Point& x) { return zero_pattern(x) == e; });
}

Measure restrict_support(const Measure& mu, const Family& support) {
  return mu.filter([&](const Point& x) { return support.contains(zero_pattern(x)); });
}

Measure restrict_positive(const Measure& mu) {
  return mu.filter([](const Point& x) {
    for (const auto& c : x) {
      if (c < 0) return false;
    }
    return true;
  });
}

Measure reflect(const Measure& mu, const SubsetMask& f) {
  require_same_dim(mu.dim(), f.dim, "reflect");
  return mu.pushforward([&](const Point& x) { return reflect_point(x, f); });
}

std::map<SubsetMask, Measure> coordinate_decomposition(const Measure& mu) {
  std::map<SubsetMask, Measure> parts;
  for (const auto& [x, w] : mu.atoms()) {
    auto [it, inserted] = parts.try_emplace(zero_pattern(x), mu.dim());
    it->second.add(x, w);
  }
  return parts;
}

std::optional<SubsetMask> order_of(const Measure& mu) {
  const auto parts = coordinate_decomposition(mu);
  if (parts.size() != 1) return std::nullopt;
  return parts.begin()->first;
}

int degree(const Measure& mu) {
  int d = -1;
  for (const auto& [x, w] : mu.atoms()) d = std::max(d, zero_pattern(x).size());
  return d;
}

std::pair<Measure, Measure> jordan(const Measure& mu) {
  Measure pos(mu.dim());
  Measure neg(mu.dim());
  for (const auto& [x, w] : mu.atoms()) {
    if (surd_sign(w) > 0) pos.add(x, w);
    else neg.add(x, -w);
  }
  return {pos, neg};
}

Surd tv_norm(const Measure& mu) {
  Surd s;
  for (const auto& [x, w] : mu.atoms()) s += abs(w);
  return s;
}

bool is_nonnegative(const Measure& mu) {
  for (const auto& [x, w] : mu.atoms()) {
    if (surd_sign(w) < 0) return false;
  }
  return true;
}

Measure sigma0(int n) {
  if (n < 1) fail(ErrorKind::Precondition, "sigma0 needs n >= 1");
  if (n > SubsetMask::max_dim) fail(ErrorKind::BoundExceeded, "sigma0 dimension too large");
  Measure out(n);
  for (const auto& e : subsets_of(SubsetMask::full(n))) {
    // Coordinates in e take value 2, the rest 1; the sign is (-1)^(sum s_j).
    Point s = ones(n);
    for (int i : e.indices()) s[i - 1] = 2;
    const int parity = (n + e.size()) % 2;
    out.add(s, Surd(parity ? -1 : 1));
  }
  return out;
}

Measure delta_ej(const SubsetMask& e, const SubsetMask& j) {
  require_same_dim(e.dim, j.dim, "delta_ej");
  if (!j.subset_of(e)) fail(ErrorKind::Precondition, "delta_ej: J must be a subset of E");
  Measure out(e.dim);
  const Rational scale(Integer(1), Integer(1) << e.size());
  for (const auto& neg : subsets_of(e)) {
    // s_i = -1 on neg, +1 on e \ neg, 0 off e.
    Point s = indicator(e);
    for (int i : neg.indices()) s[i - 1] = -1;
    const int parity = std::popcount(neg.bits & j.bits) % 2;
    out.add(s, Surd(parity ? -scale : scale));
  }
  return out;
}

Measure sigma_sym(int n) {
  Measure out(n);
  out.add(ones(n), Surd(kHalf));
  Point m = ones(n);
  for (auto& c : m) c = -1;
  out.add(m, Surd(kHalf));
  return out;
}

Measure sigma_unc(int n) { return delta_ej(SubsetMask::full(n), SubsetMask::empty(n)); }

int sign_pattern(const Point& x, const SubsetMask& j) {
  int s = 1;
  for (int i : j.indices()) s *= sign(x[i - 1]);
  return s;
}

Measure sign_density(const Measure& mu, const SubsetMask& j) {
  require_same_dim(mu.dim(), j.dim, "sign_density");
  Measure out(mu.dim());
  for (const auto& [x, w] : mu.atoms()) {
    const int s = sign_pattern(x, j);
    if (s != 0) out.add(x, s > 0 ? w : -w);
  }
  return out;
}

Measure symmetrize(const Measure& mu, const GeneratingPair& pair) {
  require_same_dim(mu.dim(), pair.dim, "symmetrize");
  Measure out = mu;
  for (const auto& f : pair.evens) out = half_sum(out, f, false);
  for (const auto& f : pair.odds) out = half_sum(out, f, true);
  return out;
}

Measure m_sym(const Measure& mu) { return symmetrize(mu, symmetric_pair(mu.dim())); }

Measure m_unc(const Measure& mu) {
  // The singletons generate P_n, and M^+ of a generating set equals the group average.
  Measure out = mu;
  for (int i = 1; i <= mu.dim(); ++i) out = half_sum(out, SubsetMask::singleton(mu.dim(), i), false);
  return out;
}

Measure group_average(const Measure& mu, const Family& g) {
  if (!is_subgroup(g, mu.dim())) fail(ErrorKind::Precondition, "group_average: family is not a subgroup");
  Measure out(mu.dim());
  for (const auto& f : g) out += reflect(mu, f);
  out *= Surd(Rational(1, static_cast<long>(g.size())));
  return out;
}

Measure unc_forward(const Measure& mu) {
  if (!(restrict_positive(mu) == mu)) fail(ErrorKind::Precondition, "unc_forward: measure has atoms outside the closed positive orthant");
  return m_unc(mu);
}

Measure unc_inverse(const Measure& mu) {
  for (int i = 1; i <= mu.dim(); ++i) {
    if (!is_even_under(mu, SubsetMask::singleton(mu.dim(), i))) {
      fail(ErrorKind::Precondition, "unc_inverse: measure is not unconditional");
    }
  }
  Measure out(mu.dim());
  const Measure positive = restrict_positive(mu);
  for (const auto& [x, w] : positive.atoms()) {
    const int k = zero_pattern(x).size();
    out.add(x, w * Surd(Rational(Integer(1) << k)));
  }
  return out;
}

bool is_even_under(const Measure& mu, const SubsetMask& f) { return reflect(mu, f) == mu; }
bool is_odd_under(const Measure& mu, const SubsetMask& f) { return reflect(mu, f) == -mu; }

bool in_symmetry_class(const Measure& mu, const GeneratingPair& pair) {
  for (const auto& f : pair.evens) {
    if (!is_even_under(mu, f)) return false;
  }
  for (const auto& f : pair.odds) {
    if (!is_odd_under(mu, f)) return false;
  }
  return true;
}

bool in_class(const Measure& mu, const Family& support, const GeneratingPair& pair) {
  return restrict_support(mu, support) == mu && in_symmetry_class(mu, pair);
}

Measure phat(const Measure& mu) {
  Measure out(mu.dim());
  for (const auto& e : subsets_of(SubsetMask::full(mu.dim()))) {
    Measure p = project(mu, e);
    if (e.size() % 2) out -= p;
    else out += p;
  }
  return out;
}

std::string to_string(const Measure& mu) {
  if (mu.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [x, w] : mu.atoms()) {
    if (!first) out << " + ";
    out << "(" << to_string(w) << ")*delta" << to_string(x);
    first = false;
  }
  return out.str();
}

}  // namespace multconv
