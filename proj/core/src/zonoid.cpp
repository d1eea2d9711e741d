#include "multconv/zonoid.hpp"

namespace multconv {

namespace {

void require_symmetric(const SphereMeasure& mu, const char* where) {
  if (!is_even_under(mu, SubsetMask::full(mu.dim()))) {
    fail(ErrorKind::Precondition, std::string(where) + ": measure is not origin-symmetric");
  }
}

}  // namespace

Zonotope cube(int n) {
  Zonotope z{n, {}};
  for (int i = 1; i <= n; ++i) z.generators.push_back(indicator(SubsetMask::singleton(n, i)));
  return z;
}

Zonotope project_zonotope(const Zonotope& z, const SubsetMask& e) {
  Zonotope out{z.dim, {}};
  for (const auto& v : z.generators) {
    Point p = project_point(v, e);
    if (!is_zero(p)) out.generators.push_back(std::move(p));
  }
  return out;
}

SphereMeasure generating_measure(const Zonotope& z) {
  SphereMeasure out(z.dim);
  for (const auto& v : z.generators) {
    require_same_dim(static_cast<int>(v.size()), z.dim, "generating_measure");
    if (is_zero(v)) fail(ErrorKind::Precondition, "generating_measure: zero generator");
    const Surd half_norm = norm_surd(v) * Surd(Rational(1, 2));
    const Ray r = Ray::of(v);
    out.add(r, half_norm);
    out.add(r.negated(), half_norm);
  }
  return out;
}

Surd support_function(const SphereMeasure& nu, const Point& u) {
  require_same_dim(nu.dim(), static_cast<int>(u.size()), "support_function");
  Surd h;
  for (const auto& [r, w] : nu.atoms()) {
    const Rational ip = dot(r.as_point(), u);
    if (ip == 0) continue;
    h += w * surd_sqrt_of_rational(Rational(ip * ip / Rational(r.squared_norm())));
  }
  return h;
}

Rational zonotope_support(const Zonotope& z, const Point& u) {
  Rational h = 0;
  for (const auto& v : z.generators) h += abs(dot(v, u));
  return h;
}

Surd k_transform(const SphereMeasure& nu_k, const SphereMeasure& mu, const Point& u) {
  require_symmetric(mu, "k_transform");
  return support_function(sconv(nu_k, mu), u);
}

UniversalityReport decide_d_universal(const SphereMeasure& nu, bool unconditional) {
  require_symmetric(nu, "decide_d_universal");
  const int n = nu.dim();
  Family support = power_set(n);
  support.erase(SubsetMask::empty(n));
  return decide_universal_sphere(nu, support, unconditional ? unconditional_pair(n) : symmetric_pair(n));
}

bool singleton_support_check(const SphereMeasure& nu) {
  const SphereMeasure m = m_sym(nu);
  return m.is_zero() || order_of(m) == SubsetMask::full(nu.dim());
}

}  // namespace multconv
