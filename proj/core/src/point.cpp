#include "multconv/point.hpp"

#include "multconv/error.hpp"

#include <sstream>

namespace multconv {

namespace {

int dim_of(const Point& x) { return static_cast<int>(x.size()); }

}  // namespace

bool PointLess::operator()(const Point& a, const Point& b) const {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

Point make_point(std::initializer_list<long> coords) {
  Point p;
  for (long c : coords) p.emplace_back(c);
  return p;
}

Point zero_point(int n) { return Point(static_cast<std::size_t>(n), Rational(0)); }
Point ones(int n) { return Point(static_cast<std::size_t>(n), Rational(1)); }

Point indicator(const SubsetMask& e) {
  Point p = zero_point(e.dim);
  for (int i : e.indices()) p[i - 1] = 1;
  return p;
}

Point hadamard(const Point& x, const Point& y) {
  require_same_dim(dim_of(x), dim_of(y), "hadamard");
  Point out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * y[i];
  return out;
}

Point reflect_point(const Point& x, const SubsetMask& f) {
  require_same_dim(dim_of(x), f.dim, "reflect_point");
  Point out = x;
  for (int i : f.indices()) out[i - 1] = -out[i - 1];
  return out;
}

Point project_point(const Point& x, const SubsetMask& e) {
  require_same_dim(dim_of(x), e.dim, "project_point");
  Point out = x;
  for (int i = 1; i <= e.dim; ++i) {
    if (!e.contains(i)) out[i - 1] = 0;
  }
  return out;
}

SubsetMask zero_pattern(const Point& x) {
  SubsetMask e = SubsetMask::empty(dim_of(x));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) e.bits |= std::uint64_t{1} << i;
  }
  return e;
}

bool is_zero(const Point& x) {
  for (const auto& c : x) {
    if (c != 0) return false;
  }
  return true;
}

Rational dot(const Point& x, const Point& y) {
  require_same_dim(dim_of(x), dim_of(y), "dot");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Rational squared_norm(const Point& x) { return dot(x, x); }

Surd norm_surd(const Point& x) { return surd_sqrt_of_rational(squared_norm(x)); }

Point concat(const Point& x, const Point& y) {
  Point out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

std::string to_string(const Point& x) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out << ",";
    out << to_string(x[i]);
  }
  out << ")";
  return out.str();
}

Ray Ray::of(const Point& x) {
  if (is_zero(x)) fail(ErrorKind::Precondition, "canonical_ray: zero vector has no direction");
  Integer l = 1;
  for (const auto& c : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> d;
  d.reserve(x.size());
  for (const auto& c : x) d.push_back(c.get_num() * (l / c.get_den()));
  return of(d);
}

Ray Ray::of(const std::vector<Integer>& d) {
  Integer g = 0;
  for (const auto& c : d) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) fail(ErrorKind::Precondition, "canonical_ray: zero vector has no direction");
  std::vector<Integer> out;
  out.reserve(d.size());
  for (const auto& c : d) out.push_back(c / g);
  return Ray(std::move(out));
}

Point Ray::as_point() const {
  Point p;
  p.reserve(d_.size());
  for (const auto& c : d_) p.emplace_back(c);
  return p;
}

Integer Ray::squared_norm() const {
  Integer s = 0;
  for (const auto& c : d_) s += c * c;
  return s;
}

Ray Ray::negated() const {
  std::vector<Integer> d = d_;
  for (auto& c : d) c = -c;
  return Ray(std::move(d));
}

bool operator<(const Ray& a, const Ray& b) {
  if (a.d_.size() != b.d_.size()) return a.d_.size() < b.d_.size();
  for (std::size_t i = 0; i < a.d_.size(); ++i) {
    const int c = cmp(a.d_[i], b.d_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string to_string(const Ray& r) {
  std::ostringstream out;
  out << "ray(";
  for (std::size_t i = 0; i < r.direction().size(); ++i) {
    if (i) out << ",";
    out << r.direction()[i].get_str();
  }
  out << ")";
  return out.str();
}

}  // namespace multconv
