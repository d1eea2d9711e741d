#include "multconv/sphere_measure.hpp"

#include <cmath>
#include <sstream>

namespace multconv {

namespace {

const Rational kHalf(1, 2);

SphereMeasure half_sum(const SphereMeasure& mu, const SubsetMask& f, bool odd) {
  SphereMeasure t = reflect(mu, f);
  SphereMeasure out = odd ? mu - t : mu + t;
  out *= Surd(kHalf);
  return out;
}

void check_alpha(const std::vector<double>& alpha, int n) {
  require_same_dim(static_cast<int>(alpha.size()), n, "moment_g");
  double total = 0.0;
  for (double a : alpha) {
    if (!(a >= 0.0)) fail(ErrorKind::Precondition, "moment_g: alpha must be componentwise non-negative");
    total += a;
  }
  if (total > 1.0) fail(ErrorKind::Precondition, "moment_g: alpha must have l1 norm at most 1");
}

}  // namespace

SphereMeasure sphere_dirac(const Ray& r, const Surd& w) {
  SphereMeasure m(r.dim());
  m.add(r, w);
  return m;
}

SphereMeasure radial_project(const Measure& mu) {
  SphereMeasure out(mu.dim());
  for (const auto& [x, w] : mu.atoms()) {
    if (is_zero(x)) continue;
    out.add(Ray::of(x), w * norm_surd(x));
  }
  return out;
}

Measure to_measure(const SphereMeasure& mu) {
  Measure out(mu.dim());
  for (const auto& [r, w] : mu.atoms()) {
    out.add(r.as_point(), w * surd_sqrt_of_rational(Rational(Integer(1), r.squared_norm())));
  }
  return out;
}

SphereMeasure sconv(const SphereMeasure& a, const SphereMeasure& b) {
  require_same_dim(a.dim(), b.dim(), "sconv");
  SphereMeasure out(a.dim());
  for (const auto& [d, v] : a.atoms()) {
    const Integer nd = d.squared_norm();
    for (const auto& [e, w] : b.atoms()) {
      std::vector<Integer> de(d.direction().size());
      Integer nde = 0;
      for (std::size_t i = 0; i < de.size(); ++i) {
        de[i] = d.direction()[i] * e.direction()[i];
        nde += de[i] * de[i];
      }
      if (nde == 0) continue;
      // |d e| / (|d| |e|) as a single square root.
      Rational ratio(nde, nd * e.squared_norm());
      ratio.canonicalize();
      out.add(Ray::of(de), v * w * surd_sqrt_of_rational(ratio));
    }
  }
  return out;
}

SphereMeasure sconv(const Measure& a, const Measure& b) { return sconv(radial_project(a), radial_project(b)); }
SphereMeasure sconv(const Measure& a, const SphereMeasure& b) { return sconv(radial_project(a), b); }
SphereMeasure sconv(const SphereMeasure& a, const Measure& b) { return sconv(a, radial_project(b)); }

SphereMeasure sphere_project(const SphereMeasure& mu, const SubsetMask& e) {
  require_same_dim(mu.dim(), e.dim, "sphere_project");
  SphereMeasure out(mu.dim());
  for (const auto& [d, w] : mu.atoms()) {
    std::vector<Integer> p = d.direction();
    Integer np = 0;
    for (int i = 1; i <= e.dim; ++i) {
      if (!e.contains(i)) p[i - 1] = 0;
      np += p[i - 1] * p[i - 1];
    }
    if (np == 0) continue;
    Rational ratio(np, d.squared_norm());
    ratio.canonicalize();
    out.add(Ray::of(p), w * surd_sqrt_of_rational(ratio));
  }
  return out;
}

SphereMeasure reflect(const SphereMeasure& mu, const SubsetMask& f) {
  require_same_dim(mu.dim(), f.dim, "reflect");
  return mu.pushforward([&](const Ray& r) {
    std::vector<Integer> d = r.direction();
    for (int i : f.indices()) d[i - 1] = -d[i - 1];
    return Ray::of(d);
  });
}

SubsetMask zero_pattern(const Ray& r) {
  SubsetMask e = SubsetMask::empty(r.dim());
  for (int i = 0; i < r.dim(); ++i) {
    if (r.direction()[i] != 0) e.bits |= std::uint64_t{1} << i;
  }
  return e;
}

int sign_pattern(const Ray& r, const SubsetMask& j) {
  int s = 1;
  for (int i : j.indices()) s *= sign(r.direction()[i - 1]);
  return s;
}

SphereMeasure restrict_order(const SphereMeasure& mu, const SubsetMask& e) {
  require_same_dim(mu.dim(), e.dim, "restrict_order");
  return mu.filter([&](const Ray& r) { return zero_pattern(r) == e; });
}

SphereMeasure restrict_support(const SphereMeasure& mu, const Family& support) {
  return mu.filter([&](const Ray& r) { return support.contains(zero_pattern(r)); });
}

SphereMeasure sign_density(const SphereMeasure& mu, const SubsetMask& j) {
  require_same_dim(mu.dim(), j.dim, "sign_density");
  SphereMeasure out(mu.dim());
  for (const auto& [r, w] : mu.atoms()) {
    const int s = sign_pattern(r, j);
    if (s != 0) out.add(r, s > 0 ? w : -w);
  }
  return out;
}

std::map<SubsetMask, SphereMeasure> coordinate_decomposition(const SphereMeasure& mu) {
  std::map<SubsetMask, SphereMeasure> parts;
  for (const auto& [r, w] : mu.atoms()) {
    auto [it, inserted] = parts.try_emplace(zero_pattern(r), mu.dim());
    it->second.add(r, w);
  }
  return parts;
}

std::optional<SubsetMask> order_of(const SphereMeasure& mu) {
  const auto parts = coordinate_decomposition(mu);
  if (parts.size() != 1) return std::nullopt;
  return parts.begin()->first;
}

int degree(const SphereMeasure& mu) {
  int d = -1;
  for (const auto& [r, w] : mu.atoms()) d = std::max(d, zero_pattern(r).size());
  return d;
}

std::pair<SphereMeasure, SphereMeasure> jordan(const SphereMeasure& mu) {
  SphereMeasure pos(mu.dim());
  SphereMeasure neg(mu.dim());
  for (const auto& [r, w] : mu.atoms()) {
    if (surd_sign(w) > 0) pos.add(r, w);
    else neg.add(r, -w);
  }
  return {pos, neg};
}

Surd tv_norm(const SphereMeasure& mu) {
  Surd s;
  for (const auto& [r, w] : mu.atoms()) s += abs(w);
  return s;
}

bool is_nonnegative(const SphereMeasure& mu) {
  for (const auto& [r, w] : mu.atoms()) {
    if (surd_sign(w) < 0) return false;
  }
  return true;
}

SphereMeasure symmetrize(const SphereMeasure& mu, const GeneratingPair& pair) {
  require_same_dim(mu.dim(), pair.dim, "symmetrize");
  SphereMeasure out = mu;
  for (const auto& f : pair.evens) out = half_sum(out, f, false);
  for (const auto& f : pair.odds) out = half_sum(out, f, true);
  return out;
}

SphereMeasure m_sym(const SphereMeasure& mu) { return symmetrize(mu, symmetric_pair(mu.dim())); }

SphereMeasure m_unc(const SphereMeasure& mu) {
  SphereMeasure out = mu;
  for (int i = 1; i <= mu.dim(); ++i) out = half_sum(out, SubsetMask::singleton(mu.dim(), i), false);
  return out;
}

bool is_even_under(const SphereMeasure& mu, const SubsetMask& f) { return reflect(mu, f) == mu; }
bool is_odd_under(const SphereMeasure& mu, const SubsetMask& f) { return reflect(mu, f) == -mu; }

bool in_symmetry_class(const SphereMeasure& mu, const GeneratingPair& pair) {
  for (const auto& f : pair.evens) {
    if (!is_even_under(mu, f)) return false;
  }
  for (const auto& f : pair.odds) {
    if (!is_odd_under(mu, f)) return false;
  }
  return true;
}

bool in_class(const SphereMeasure& mu, const Family& support, const GeneratingPair& pair) {
  return restrict_support(mu, support) == mu && in_symmetry_class(mu, pair);
}

SphereMeasure phat_sphere(const SphereMeasure& mu) {
  SphereMeasure out(mu.dim());
  for (const auto& e : subsets_of(SubsetMask::full(mu.dim()))) {
    SphereMeasure p = sphere_project(mu, e);
    if (e.size() % 2) out -= p;
    else out += p;
  }
  return out;
}

double moment_g(const Measure& mu, const std::vector<double>& alpha) {
  check_alpha(alpha, mu.dim());
  double total = 0.0;
  for (const auto& [x, w] : mu.atoms()) {
    if (zero_pattern(x).size() != mu.dim()) fail(ErrorKind::Precondition, "moment_g: support must lie in A_[n]");
    double m = w.to_double();
    for (std::size_t i = 0; i < x.size(); ++i) m *= std::pow(std::fabs(x[i].get_d()), alpha[i]);
    total += m;
  }
  return total;
}

double moment_g(const SphereMeasure& mu, const std::vector<double>& alpha) {
  check_alpha(alpha, mu.dim());
  double total = 0.0;
  for (const auto& [r, w] : mu.atoms()) {
    if (zero_pattern(r).size() != mu.dim()) fail(ErrorKind::Precondition, "moment_g: support must lie in A_[n]");
    const double norm = std::sqrt(r.squared_norm().get_d());
    double m = w.to_double();
    for (std::size_t i = 0; i < alpha.size(); ++i) m *= std::pow(std::fabs(r.direction()[i].get_d()) / norm, alpha[i]);
    total += m;
  }
  return total;
}

std::string to_string(const SphereMeasure& mu) {
  if (mu.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [r, w] : mu.atoms()) {
    if (!first) out << " + ";
    out << "(" << to_string(w) << ")*" << to_string(r);
    first = false;
  }
  return out.str();
}

}  // namespace multconv
