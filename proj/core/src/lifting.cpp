#include "multconv/lifting.hpp"

namespace multconv {

SphereMeasure lift(const Measure& mu) {
  if (mu.dim() + 1 > SubsetMask::max_dim) fail(ErrorKind::BoundExceeded, "lift: dimension too large");
  const Measure prepended = tensor(dirac(make_point({1})), mu);
  return radial_project(m_sym(prepended));
}

Measure lift_inverse(const SphereMeasure& mu) {
  const int n = mu.dim() - 1;
  if (n < 0) fail(ErrorKind::Precondition, "lift_inverse: sphere dimension must be at least 1");
  Measure out(n);
  for (const auto& [r, w] : mu.atoms()) {
    const auto& d = r.direction();
    if (d[0] == 0) fail(ErrorKind::Precondition, "lift_inverse: atom on the equator " + to_string(r));
    if (!(mu.weight(r.negated()) == w)) fail(ErrorKind::Precondition, "lift_inverse: measure is not origin-symmetric");
    if (d[0] < 0) continue;
    Point x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      x[i] = Rational(d[i + 1], d[0]);
      x[i].canonicalize();
    }
    // Weight 2 w d_0 / |d|: the atom at d / |d| came from |(1, x)| * w / 2 in each hemisphere.
    Rational ratio(d[0] * d[0], r.squared_norm());
    ratio.canonicalize();
    out.add(x, Surd(2) * w * surd_sqrt_of_rational(ratio));
  }
  return out;
}

std::pair<Family, GeneratingPair> lift_class(const Family& support, const GeneratingPair& pair) {
  Family lifted;
  for (const auto& e : support) lifted.insert(lift_set(e));
  return {lifted, lift_pair(pair)};
}

}  // namespace multconv
