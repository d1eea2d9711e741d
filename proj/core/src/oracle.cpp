#include "multconv/oracle.hpp"

#include "multconv/lifting.hpp"
#include "multconv/universality.hpp"
#include "multconv/zonoid.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace multconv {

namespace {

std::vector<Rational> make_pool(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (const char* s : items) out.push_back(parse_rational(s));
  return out;
}

}  // namespace

const std::vector<Rational>& default_pool() {
  static const auto pool = make_pool({"-2", "-1", "-1/2", "0", "1/2", "1", "2"});
  return pool;
}

const std::vector<Rational>& nonzero_pool() {
  static const auto pool = make_pool({"-2", "-1", "-1/2", "1/2", "1", "2"});
  return pool;
}

const std::vector<Rational>& positive_pool() {
  static const auto pool = make_pool({"0", "1/2", "1", "2"});
  return pool;
}

Rational gen_rational(Rng& rng) {
  int num = rng.range(-3, 3);
  if (num == 0) num = 1;
  Rational q(num, rng.range(1, 3));
  q.canonicalize();
  return q;
}

Surd gen_weight(Rng& rng, bool surds) {
  const Rational q = gen_rational(rng);
  if (surds && rng.below(4) == 0) return Surd::root(rng.coin() ? 2 : 3, q);
  return Surd(q);
}

Surd gen_surd(Rng& rng) {
  static const int radicands[] = {1, 2, 3, 5, 6};
  Surd s;
  const int terms = rng.range(0, 3);
  for (int k = 0; k < terms; ++k) s += Surd::root(radicands[rng.below(5)], gen_rational(rng));
  return s;
}

Point gen_point(Rng& rng, int dim, const std::vector<Rational>& pool) {
  Point p;
  p.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) p.push_back(pool[rng.below(pool.size())]);
  return p;
}

Measure gen_measure(Rng& rng, int dim, int atom_count, const std::vector<Rational>& pool, bool surds) {
  Measure m(dim);
  for (int k = 0; k < atom_count; ++k) {
    Point x = gen_point(rng, dim, pool);
    m.add(x, gen_weight(rng, surds));
  }
  return m;
}

Measure gen_measure(std::uint64_t seed, int dim, int atom_count, const std::vector<Rational>& pool) {
  Rng rng(seed);
  return gen_measure(rng, dim, atom_count, pool, false);
}

SubsetMask gen_subset(Rng& rng, int n) {
  return {rng.next() & SubsetMask::full(n).bits, n};
}

GeneratingPair gen_pair(Rng& rng, int n) {
  GeneratingPair p{{}, {}, n};
  const int ne = rng.range(0, 2);
  const int no = rng.range(0, 2);
  for (int k = 0; k < ne; ++k) p.evens.insert(gen_subset(rng, n));
  for (int k = 0; k < no; ++k) p.odds.insert(gen_subset(rng, n));
  return p;
}

Family gen_subgroup(Rng& rng, int n) {
  Family gens;
  const int k = rng.range(0, 3);
  for (int i = 0; i < k; ++i) gens.insert(gen_subset(rng, n));
  return generated_group(gens, n);
}

Family gen_family(Rng& rng, int n, bool nonempty_members) {
  Family f;
  for (const auto& e : subsets_of(SubsetMask::full(n))) {
    if (nonempty_members && e.is_empty()) continue;
    if (rng.coin()) f.insert(e);
  }
  if (f.empty()) f.insert(SubsetMask::full(n));
  return f;
}

Measure brute_force_convolution(const Measure& mu, const Measure& nu) {
  require_same_dim(mu.dim(), nu.dim(), "brute_force_convolution");
  std::vector<std::pair<Point, Surd>> acc;
  for (const auto& [x, v] : mu.atoms()) {
    for (const auto& [y, w] : nu.atoms()) {
      Point z(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] * y[i];
      const Surd c = v * w;
      bool merged = false;
      for (auto& [p, s] : acc) {
        if (p == z) {
          s += c;
          merged = true;
          break;
        }
      }
      if (!merged) acc.emplace_back(std::move(z), c);
    }
  }
  Measure out(mu.dim());
  for (const auto& [p, s] : acc) {
    if (!s.is_zero()) out.add(p, s);
  }
  return out;
}

Ops default_ops() {
  return {[](const Measure& a, const Measure& b) { return mconv(a, b); }};
}

namespace {

struct Inputs {
  int n = 1;
  std::vector<Measure> measures;
  std::vector<GeneratingPair> pairs;
  std::vector<SubsetMask> sets;
  std::vector<Family> families;
  std::vector<Surd> scalars;
  std::vector<Point> points;
};

using Gen = std::function<Inputs(Rng&, int)>;
using Check = std::function<bool(const Inputs&, const Ops&)>;

struct Suite {
  Gen gen;
  Check check;
};

std::string describe_family(const Family& f) {
  std::string s = "{";
  bool first = true;
  for (const auto& e : f) {
    if (!first) s += ",";
    s += to_string(e);
    first = false;
  }
  return s + "}";
}

std::string describe(const Inputs& in) {
  std::ostringstream out;
  out << "n=" << in.n;
  for (std::size_t i = 0; i < in.measures.size(); ++i) out << "; m" << i << "=" << to_string(in.measures[i]);
  for (std::size_t i = 0; i < in.pairs.size(); ++i) {
    out << "; pair" << i << "=(" << describe_family(in.pairs[i].evens) << "," << describe_family(in.pairs[i].odds) << ")";
  }
  for (std::size_t i = 0; i < in.sets.size(); ++i) out << "; set" << i << "=" << to_string(in.sets[i]);
  for (std::size_t i = 0; i < in.families.size(); ++i) out << "; family" << i << "=" << describe_family(in.families[i]);
  for (std::size_t i = 0; i < in.scalars.size(); ++i) out << "; s" << i << "=" << to_string(in.scalars[i]);
  for (std::size_t i = 0; i < in.points.size(); ++i) out << "; p" << i << "=" << to_string(in.points[i]);
  return out.str();
}

int dim_for(int trial, int max_dim = 3) { return 1 + trial % max_dim; }

std::vector<SubsetMask> all_subsets(int n) { return subsets_of(SubsetMask::full(n)); }

bool canonical(const Surd& a) {
  for (const auto& [r, c] : a.terms()) {
    if (c == 0 || r < 1 || square_free_parts(r).square != 1) return false;
  }
  return true;
}

GeneratingPair gen_proper_pair(Rng& rng, int n) {
  while (true) {
    GeneratingPair p = gen_pair(rng, n);
    if (is_proper(p)) return p;
  }
}

// Random measure that is frequently forced into a symmetry class or stripped
// of its top-order part, so that negative decisions occur regularly.
Measure gen_structured(Rng& rng, int n, int atoms) {
  Measure m = gen_measure(rng, n, atoms, rng.coin() ? default_pool() : nonzero_pool(), false);
  switch (rng.below(4)) {
    case 0: m = symmetrize(m, gen_pair(rng, n)); break;
    case 1: m = m - restrict_order(m, SubsetMask::full(n)); break;
    default: break;
  }
  return m;
}

Gen measures_gen(int count, int atoms, const std::vector<Rational>& pool, int max_dim, bool surds = false) {
  return [=](Rng& rng, int trial) {
    Inputs in;
    in.n = dim_for(trial, max_dim);
    for (int k = 0; k < count; ++k) in.measures.push_back(gen_measure(rng, in.n, atoms, pool, surds));
    in.sets.push_back(gen_subset(rng, in.n));
    in.sets.push_back(gen_subset(rng, in.n));
    in.scalars.push_back(gen_surd(rng));
    in.scalars.push_back(gen_surd(rng));
    return in;
  };
}

Gen pair_gen(int max_dim) {
  return [=](Rng& rng, int trial) {
    Inputs in;
    in.n = dim_for(trial, max_dim);
    in.pairs.push_back(gen_pair(rng, in.n));
    return in;
  };
}

Gen points_gen(int count) {
  return [=](Rng& rng, int trial) {
    Inputs in;
    in.n = dim_for(trial, 3);
    for (int k = 0; k < count; ++k) in.points.push_back(gen_point(rng, in.n, default_pool()));
    in.sets.push_back(gen_subset(rng, in.n));
    in.scalars.push_back(Surd(Rational(rng.range(1, 5), rng.range(1, 4))));
    return in;
  };
}

Rational positive_scalar(const Surd& s) { return s.rational_part(); }

const Measure& M(const Inputs& in, std::size_t i) { return in.measures.at(i); }

std::map<std::string, Suite> build_registry() {
  std::map<std::string, Suite> r;

  // exact-scalar
  r["surd-field-laws"] = {
      [](Rng& rng, int) {
        Inputs in;
        for (int k = 0; k < 3; ++k) in.scalars.push_back(gen_surd(rng));
        return in;
      },
      [](const Inputs& in, const Ops&) {
        const Surd &a = in.scalars[0], &b = in.scalars[1], &c = in.scalars[2];
        return a + b == b + a && a * b == b * a && (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) &&
               a * (b + c) == a * b + a * c && (a - a).is_zero() && a * Surd(1) == a && a + Surd() == a &&
               canonical(a + b) && canonical(a * b * c) && ((a == b) == (a - b).is_zero());
      }};
  r["surd-sign-square"] = {
      [](Rng& rng, int) {
        Inputs in;
        in.scalars.push_back(gen_surd(rng));
        return in;
      },
      [](const Inputs& in, const Ops&) {
        const Surd& a = in.scalars[0];
        const int s = surd_sign(a);
        if (surd_sign(a * a) < 0) return false;
        if ((s == 0) != a.is_zero()) return false;
        if (surd_sign(-a) != -s) return false;
        const double d = a.to_double();
        if (std::fabs(d) > 1e-9 && (d > 0 ? 1 : -1) != s) return false;
        return true;
      }};
  r["surd-sqrt-roundtrip"] = {
      [](Rng& rng, int) {
        Inputs in;
        Rational q(rng.range(0, 60), rng.range(1, 40));
        q.canonicalize();
        in.scalars.push_back(Surd(q));
        return in;
      },
      [](const Inputs& in, const Ops&) {
        const Rational q = in.scalars.empty() ? Rational(0) : in.scalars[0].rational_part();
        const Surd s = surd_sqrt_of_rational(q);
        return s * s == Surd(q) && surd_sign(s) >= 0 && s.is_monomial() && canonical(s);
      }};

  // subset-lattice
  r["boolean-group"] = {pair_gen(4), [](const Inputs& in, const Ops&) {
                          const auto all = all_subsets(in.n);
                          const SubsetMask zero = SubsetMask::empty(in.n);
                          for (const auto& a : all) {
                            if (symdiff(a, zero) != a || !symdiff(a, a).is_empty()) return false;
                            for (const auto& b : all) {
                              if (symdiff(a, b) != symdiff(b, a)) return false;
                              for (const auto& c : all) {
                                if (symdiff(symdiff(a, b), c) != symdiff(a, symdiff(b, c))) return false;
                              }
                            }
                          }
                          return true;
                        }};
  r["distribution-law"] = {pair_gen(4), [](const Inputs& in, const Ops&) {
                             const auto all = all_subsets(in.n);
                             for (const auto& e : all) {
                               for (const auto& f : all) {
                                 for (const auto& g : all) {
                                   if (intersect(symdiff(e, f), g) != symdiff(intersect(e, g), intersect(f, g))) return false;
                                 }
                               }
                             }
                             return true;
                           }};
  r["gamma-sym-pair"] = {pair_gen(4), [](const Inputs& in, const Ops&) {
                           const auto& p = in.pairs[0];
                           const SymmetryPair g = gamma(p);
                           if (!satisfies_symmetry_pair_laws(g.as_generating())) return false;
                           bool disjoint = true;
                           for (const auto& e : g.evens) disjoint = disjoint && !g.odds.contains(e);
                           if (disjoint != g.proper) return false;
                           for (const auto& e : p.evens) {
                             if (!g.evens.contains(e)) return false;
                           }
                           for (const auto& e : p.odds) {
                             if (!g.odds.contains(e)) return false;
                           }
                           Family all = p.evens;
                           all.insert(p.odds.begin(), p.odds.end());
                           Family both = g.evens;
                           both.insert(g.odds.begin(), g.odds.end());
                           return both == generated_group(all, in.n);
                         }};
  r["gamma-idempotent"] = {pair_gen(4), [](const Inputs& in, const Ops&) {
                             const SymmetryPair g = gamma(in.pairs[0]);
                             return gamma(g.as_generating()) == g;
                           }};
  r["restrict-gamma-commute"] = {pair_gen(4), [](const Inputs& in, const Ops&) {
                                   const auto& p = in.pairs[0];
                                   const SymmetryPair g = gamma(p);
                                   for (const auto& e : all_subsets(in.n)) {
                                     const SymmetryPair lhs = gamma(restrict_pair(p, e));
                                     if (lhs.evens != restrict_family(g.evens, e) || lhs.odds != restrict_family(g.odds, e)) return false;
                                   }
                                   return true;
                                 }};
  r["index-set-proper"] = {pair_gen(4), [](const Inputs& in, const Ops&) {
                             const auto& p = in.pairs[0];
                             const GeneratingPair g = gamma(p).as_generating();
                             for (const auto& e : all_subsets(in.n)) {
                               const auto js = index_set(e, p);
                               if (js != index_set(e, g)) return false;
                               if (js.empty() != !is_proper(restrict_pair(p, e))) return false;
                             }
                             return true;
                           }};
  r["j-s-g-impl"] = {
      [](Rng& rng, int trial) {
        Inputs in;
        in.n = dim_for(trial, 4);
        in.pairs.push_back(gen_proper_pair(rng, in.n));
        return in;
      },
      [](const Inputs& in, const Ops&) {
        const SymmetryPair g = gamma(in.pairs[0]);
        const SubsetMask full = SubsetMask::full(in.n);
        const auto jg = index_set(full, g.as_generating());
        for (const auto& e : all_subsets(in.n)) {
          const auto je = index_set(full, GeneratingPair{{e}, {}, in.n});
          const auto jo = index_set(full, GeneratingPair{{}, {e}, in.n});
          const Family se(je.begin(), je.end());
          const Family so(jo.begin(), jo.end());
          bool in_e = true, in_o = true;
          for (const auto& j : jg) {
            in_e = in_e && se.contains(j);
            in_o = in_o && so.contains(j);
          }
          if (in_e != g.evens.contains(e) || in_o != g.odds.contains(e)) return false;
        }
        return true;
      }};
  r["j-dual-involution"] = {
      [](Rng& rng, int trial) {
        Inputs in;
        in.n = dim_for(trial, 4);
        in.families.push_back(gen_subgroup(rng, in.n));
        return in;
      },
      [](const Inputs& in, const Ops&) {
        const Family d = j_dual(in.families[0], in.n);
        return is_subgroup(d, in.n) && j_dual(d, in.n) == in.families[0];
      }};
  r["proper-lifting"] = {pair_gen(4), [](const Inputs& in, const Ops&) {
                           const auto& p = in.pairs[0];
                           const GeneratingPair lp = lift_pair(p);
                           for (const auto& e : all_subsets(in.n)) {
                             if (is_proper(restrict_pair(p, e)) != is_proper(restrict_pair(lp, lift_set(e)))) return false;
                           }
                           return true;
                         }};
  r["lifting-restriction-commute"] = {
      [](Rng& rng, int trial) {
        Inputs in;
        in.n = dim_for(trial, 4);
        in.families.push_back(gen_family(rng, in.n));
        return in;
      },
      [](const Inputs& in, const Ops&) {
        const Family& f = in.families[0];
        const Family lifted = script_lift(f, SubsetMask::full(in.n));
        for (const auto& e : all_subsets(in.n)) {
          if (script_lift(restrict_family(f, e), e) != restrict_family(lifted, lift_set(e))) return false;
        }
        return true;
      }};

  // point-algebra
  r["proj-hadamard"] = {points_gen(2), [](const Inputs& in, const Ops&) {
                          const Point &x = in.points[0], &y = in.points[1];
                          const SubsetMask& e = in.sets[0];
                          const Point lhs = project_point(hadamard(x, y), e);
                          return lhs == hadamard(project_point(x, e), y) && lhs == hadamard(x, project_point(y, e)) &&
                                 lhs == hadamard(project_point(x, e), project_point(y, e));
                        }};
  r["zero-pattern-product"] = {points_gen(2), [](const Inputs& in, const Ops&) {
                                 return zero_pattern(hadamard(in.points[0], in.points[1])) ==
                                        intersect(zero_pattern(in.points[0]), zero_pattern(in.points[1]));
                               }};
  r["ray-scaling"] = {points_gen(1), [](const Inputs& in, const Ops&) {
                        const Point& x = in.points[0];
                        if (is_zero(x)) return true;
                        const Rational a = positive_scalar(in.scalars[0]);
                        Point ax = x;
                        for (auto& c : ax) c *= a;
                        const Ray r = Ray::of(x);
                        const SubsetMask full = SubsetMask::full(in.n);
                        return Ray::of(ax) == r && zero_pattern(r) == zero_pattern(x) && sign_pattern(r, full) == sign_pattern(x, full);
                      }};
  r["norm-submultiplicative"] = {points_gen(2), [](const Inputs& in, const Ops&) {
                                   const Point &x = in.points[0], &y = in.points[1];
                                   const Surd nx = norm_surd(x);
                                   return compare(norm_surd(hadamard(x, y)), nx * norm_surd(y)) <= 0 && nx * nx == Surd(squared_norm(x));
                                 }};

  // measure-core
  r["algebra-laws"] = {measures_gen(3, 4, default_pool(), 3, true), [](const Inputs& in, const Ops& ops) {
                         const Measure &a = M(in, 0), &b = M(in, 1), &c = M(in, 2);
                         const Surd &s = in.scalars[0], &t = in.scalars[1];
                         const Measure ab = ops.mconv(a, b);
                         return ab == ops.mconv(b, a) && ops.mconv(ab, c) == ops.mconv(a, ops.mconv(b, c)) &&
                                ops.mconv(a, s * b + t * c) == s * ab + t * ops.mconv(a, c) &&
                                ops.mconv(a, unit_measure(in.n)) == a && ab.total_mass() == a.total_mass() * b.total_mass() &&
                                ops.mconv(dirac(zero_point(in.n)), a) == dirac(zero_point(in.n), a.total_mass());
                       }};
  r["brute-force-agreement"] = {measures_gen(2, 5, default_pool(), 3, true), [](const Inputs& in, const Ops& ops) {
                                  return ops.mconv(M(in, 0), M(in, 1)) == brute_force_convolution(M(in, 0), M(in, 1));
                                }};
  r["coordinate-decomposition-product"] = {measures_gen(2, 5, default_pool(), 3), [](const Inputs& in, const Ops& ops) {
                                             const Measure prod = ops.mconv(M(in, 0), M(in, 1));
                                             const auto all = all_subsets(in.n);
                                             for (const auto& g : all) {
                                               Measure sum(in.n);
                                               for (const auto& e : all) {
                                                 for (const auto& f : all) {
                                                   if (intersect(e, f) == g) sum += ops.mconv(restrict_order(M(in, 0), e), restrict_order(M(in, 1), f));
                                                 }
                                               }
                                               if (!(restrict_order(prod, g) == sum)) return false;
                                             }
                                             return true;
                                           }};
  r["symmetry-decomposition"] = {measures_gen(1, 8, default_pool(), 3, true), [](const Inputs& in, const Ops& ops) {
                                   Measure sum(in.n);
                                   for (const auto& k : all_subsets(in.n)) sum += ops.mconv(delta_j(k), M(in, 0));
                                   return sum == M(in, 0);
                                 }};
  r["delta-sum-identity"] = {measures_gen(0, 0, default_pool(), 4), [](const Inputs& in, const Ops&) {
                               Measure sum(in.n);
                               for (const auto& j : all_subsets(in.n)) sum += delta_j(j);
                               if (!(sum == unit_measure(in.n))) return false;
                               for (const auto& e : all_subsets(in.n)) {
                                 for (const auto& j : subsets_of(e)) {
                                   const Measure d = delta_ej(e, j);
                                   for (const auto& f : subsets_of(e)) {
                                     const Measure expect = j.subset_of(f) ? delta_ej(f, j) : Measure(in.n);
                                     if (!(project(d, f) == expect)) return false;
                                   }
                                 }
                               }
                               return true;
                             }};
  r["delta-product"] = {measures_gen(0, 0, default_pool(), 3), [](const Inputs& in, const Ops& ops) {
                          for (const auto& j : all_subsets(in.n)) {
                            for (const auto& k : all_subsets(in.n)) {
                              const Measure expect = j == k ? delta_j(j) : Measure(in.n);
                              if (!(ops.mconv(delta_j(j), delta_j(k)) == expect)) return false;
                            }
                          }
                          return true;
                        }};
  r["reflection-delta-sign"] = {measures_gen(1, 6, default_pool(), 3), [](const Inputs& in, const Ops& ops) {
                                  const auto all = all_subsets(in.n);
                                  for (const auto& f : all) {
                                    for (const auto& e : all) {
                                      for (const auto& j : subsets_of(e)) {
                                        const Measure d = delta_ej(e, j);
                                        const bool odd = std::popcount(j.bits & f.bits) % 2 == 1;
                                        if (!(reflect(d, f) == (odd ? -d : d))) return false;
                                        if (is_odd_under(d, f) != odd || is_even_under(d, f) == odd) return false;
                                      }
                                    }
                                    for (const auto& j : all) {
                                      const Measure dn = ops.mconv(delta_j(j), M(in, 0));
                                      const bool odd = std::popcount(j.bits & f.bits) % 2 == 1;
                                      if (!(reflect(dn, f) == (odd ? -dn : dn))) return false;
                                    }
                                  }
                                  return true;
                                }};
  r["even-odd-index"] = {
      [](Rng& rng, int trial) {
        Inputs in;
        in.n = dim_for(trial, 3);
        in.pairs.push_back(gen_pair(rng, in.n));
        Measure m = gen_measure(rng, in.n, 5, default_pool(), false);
        if (rng.coin()) m = symmetrize(m, in.pairs[0]);
        in.measures.push_back(m);
        return in;
      },
      [](const Inputs& in, const Ops& ops) {
        const auto js = index_set(SubsetMask::full(in.n), in.pairs[0]);
        const Family allowed(js.begin(), js.end());
        bool rhs = true;
        for (const auto& j : all_subsets(in.n)) {
          if (!allowed.contains(j) && !ops.mconv(delta_j(j), M(in, 0)).is_zero()) rhs = false;
        }
        return in_symmetry_class(M(in, 0), in.pairs[0]) == rhs;
      }};
  r["sym-antisym"] = {measures_gen(2, 5, default_pool(), 3), [](const Inputs& in, const Ops& ops) {
                        return ops.mconv(m_sym(M(in, 0)), symmetrize(M(in, 1), antisymmetric_pair(in.n))).is_zero();
                      }};
  r["sym-pair-symmetrisation"] = {pair_gen(3), [](const Inputs& in, const Ops&) {
                                    const auto& p = in.pairs[0];
                                    const SymmetryPair g = gamma(p);
                                    const Measure rho = symmetrize(unit_measure(in.n), p);
                                    const SubsetMask full = SubsetMask::full(in.n);
                                    if (!in_class(rho, {full}, g.as_generating())) return false;
                                    Family group = g.evens;
                                    group.insert(g.odds.begin(), g.odds.end());
                                    for (const auto& [x, w] : rho.atoms()) {
                                      bool found = false;
                                      for (const auto& h : group) found = found || x == reflect_point(ones(in.n), h);
                                      if (!found) return false;
                                    }
                                    const bool a0_positive = surd_sign(rho.weight(ones(in.n))) > 0;
                                    if (g.proper != !rho.is_zero() || g.proper != a0_positive) return false;
                                    for (const auto& e : all_subsets(in.n)) {
                                      if (!group.contains(e)) {
                                        const Measure t = reflect(rho, e);
                                        for (const auto& [x, w] : rho.atoms()) {
                                          if (t.atoms().contains(x)) return false;
                                        }
                                      }
                                      if (g.proper) {
                                        if (is_even_under(rho, e) != g.evens.contains(e)) return false;
                                        if (is_odd_under(rho, e) != g.odds.contains(e)) return false;
                                      }
                                    }
                                    return true;
                                  }};
  r["reflect-commute"] = {measures_gen(2, 5, default_pool(), 3), [](const Inputs& in, const Ops& ops) {
                            const Measure &a = M(in, 0), &b = M(in, 1);
                            const SubsetMask &f = in.sets[0], &e = in.sets[1];
                            return reflect(project(a, e), f) == project(reflect(a, f), e) &&
                                   reflect(restrict_order(a, e), f) == restrict_order(reflect(a, f), e) &&
                                   reflect(ops.mconv(a, b), f) == ops.mconv(reflect(a, f), b) &&
                                   restrict_positive(restrict_order(a, e)) == restrict_order(restrict_positive(a), e);
                          }};
  r["banach-norm"] = {measures_gen(2, 5, default_pool(), 3, true), [](const Inputs& in, const Ops& ops) {
                        const Measure &a = M(in, 0), &b = M(in, 1);
                        if (compare(tv_norm(ops.mconv(a, b)), tv_norm(a) * tv_norm(b)) > 0) return false;
                        const auto [pos, neg] = jordan(a);
                        if (!is_nonnegative(pos) || !is_nonnegative(neg) || !(pos - neg == a)) return false;
                        for (const auto& [x, w] : pos.atoms()) {
                          if (neg.atoms().contains(x)) return false;
                        }
                        return tv_norm(a) == pos.total_mass() + neg.total_mass();
                      }};
  r["projection-product"] = {measures_gen(2, 5, default_pool(), 3), [](const Inputs& in, const Ops& ops) {
                               const Measure &a = M(in, 0), &b = M(in, 1);
                               const SubsetMask &e = in.sets[0], &f = in.sets[1];
                               const Measure lhs = project(ops.mconv(a, b), e);
                               return lhs == ops.mconv(project(a, e), b) && lhs == ops.mconv(a, project(b, e)) &&
                                      project(project(a, f), e) == project(a, intersect(e, f));
                             }};
  r["sigma0-top-order"] = {measures_gen(1, 6, default_pool(), 3), [](const Inputs& in, const Ops& ops) {
                             const SubsetMask full = SubsetMask::full(in.n);
                             const Measure s = sigma0(in.n);
                             if (!(ops.mconv(M(in, 0), s) == ops.mconv(restrict_order(M(in, 0), full), s))) return false;
                             for (const auto& e : all_subsets(in.n)) {
                               if (e != full && !project(s, e).is_zero()) return false;
                             }
                             return phat(s) == (in.n % 2 ? -s : s) && order_of(s) == full;
                           }};
  r["density-conv"] = {measures_gen(2, 5, default_pool(), 3), [](const Inputs& in, const Ops& ops) {
                         const Measure &a = M(in, 0), &b = M(in, 1);
                         const SubsetMask& j = in.sets[0];
                         return sign_density(ops.mconv(a, b), j) == ops.mconv(sign_density(a, j), sign_density(b, j)) &&
                                ops.mconv(delta_j(SubsetMask::empty(in.n)), sign_density(a, j)) ==
                                    sign_density(ops.mconv(delta_j(j), a), j);
                       }};
  r["unc-bijection"] = {
      [](Rng& rng, int trial) {
        Inputs in;
        in.n = dim_for(trial, 3);
        in.measures.push_back(gen_measure(rng, in.n, 5, positive_pool(), true));
        in.measures.push_back(gen_measure(rng, in.n, 5, default_pool(), true));
        return in;
      },
      [](const Inputs& in, const Ops&) {
        const Measure u = m_unc(M(in, 1));
        return unc_inverse(unc_forward(M(in, 0))) == M(in, 0) && unc_forward(unc_inverse(u)) == u &&
               unc_forward(unit_measure(in.n)) == sigma_unc(in.n) &&
               unc_forward(dirac(zero_point(in.n))) == dirac(zero_point(in.n));
      }};
  r["phat-criterion"] = {
      [](Rng& rng, int trial) {
        Inputs in;
        in.n = dim_for(trial, 3);
        Measure m = gen_measure(rng, in.n, 6, default_pool(), true);
        if (trial % 2) m -= restrict_order(m, SubsetMask::full(in.n));
        in.measures.push_back(m);
        return in;
      },
      [](const Inputs& in, const Ops&) {
        const Measure top = restrict_order(M(in, 0), SubsetMask::full(in.n));
        const Measure p = phat(M(in, 0));
        return p.is_zero() == top.is_zero() && p == phat(top);
      }};
  r["symmetrize-idempotent"] = {
      [](Rng& rng, int trial) {
        Inputs in;
        in.n = dim_for(trial, 3);
        in.measures.push_back(gen_measure(rng, in.n, 5, default_pool(), true));
        in.pairs.push_back(gen_pair(rng, in.n));
        return in;
      },
      [](const Inputs& in, const Ops&) {
        const Measure m = symmetrize(M(in, 0), in.pairs[0]);
        return symmetrize(m, in.pairs[0]) == m && in_symmetry_class(m, in.pairs[0]) &&
               in_symmetry_class(m, gamma(in.pairs[0]).as_generating());
      }};
  r["group-average"] = {
      [](Rng& rng, int trial) {
        Inputs in;
        in.n = dim_for(trial, 3);
        in.measures.push_back(gen_measure(rng, in.n, 5, default_pool(), true));
        in.families.push_back(gen_subgroup(rng, in.n));
        return in;
      },
      [](const Inputs& in, const Ops& ops) {
        const Measure& a = M(in, 0);
        const Family& g = in.families[0];
        return symmetrize(a, GeneratingPair{g, {}, in.n}) == group_average(a, g) &&
               m_sym(a) == ops.mconv(a, sigma_sym(in.n)) && m_unc(a) == ops.mconv(a, sigma_unc(in.n));
      }};

  // sphere-measure
  r["sphere-algebra-laws"] = {measures_gen(3, 4, default_pool(), 3, true), [](const Inputs& in, const Ops&) {
                                const SphereMeasure a = radial_project(M(in, 0)), b = radial_project(M(in, 1)), c = radial_project(M(in, 2));
                                const Surd &s = in.scalars[0], &t = in.scalars[1];
                                const SphereMeasure ab = sconv(a, b);
                                return ab == sconv(b, a) && sconv(ab, c) == sconv(a, sconv(b, c)) &&
                                       sconv(a, s * b + t * c) == s * ab + t * sconv(a, c) && sconv(unit_measure(in.n), a) == a;
                              }};
  r["sphere-banach"] = {measures_gen(2, 5, default_pool(), 3, true), [](const Inputs& in, const Ops&) {
                          const SphereMeasure a = radial_project(M(in, 0)), b = radial_project(M(in, 1));
                          return compare(tv_norm(sconv(a, b)), tv_norm(a) * tv_norm(b)) <= 0;
                        }};
  r["ps-pe-ps"] = {measures_gen(1, 6, default_pool(), 3, true), [](const Inputs& in, const Ops&) {
                     const Measure& a = M(in, 0);
                     const SubsetMask& e = in.sets[0];
                     const SphereMeasure ps = radial_project(a);
                     const SphereMeasure pe = radial_project(project(a, e));
                     return radial_project(project(to_measure(ps), e)) == pe && sphere_project(ps, e) == pe &&
                            radial_project(to_measure(ps)) == ps;
                   }};
  r["ps-product"] = {measures_gen(2, 5, default_pool(), 3, true), [](const Inputs& in, const Ops& ops) {
                       const Measure &a = M(in, 0), &b = M(in, 1);
                       const SphereMeasure lhs = radial_project(ops.mconv(a, b));
                       return lhs == radial_project(ops.mconv(to_measure(radial_project(a)), b)) && lhs == sconv(a, b);
                     }};
  r["ps-decomp"] = {measures_gen(1, 6, default_pool(), 3, true), [](const Inputs& in, const Ops&) {
                      const SphereMeasure ps = radial_project(M(in, 0));
                      for (const auto& e : all_subsets(in.n)) {
                        if (!(restrict_order(ps, e) == radial_project(restrict_order(M(in, 0), e)))) return false;
                      }
                      return true;
                    }};
  r["ps-reflect-commute"] = {
      [](Rng& rng, int trial) {
        Inputs in;
        in.n = dim_for(trial, 3);
        in.measures.push_back(gen_measure(rng, in.n, 5, default_pool(), true));
        in.sets.push_back(gen_subset(rng, in.n));
        in.pairs.push_back(gen_pair(rng, in.n));
        return in;
      },
      [](const Inputs& in, const Ops&) {
        const Measure& a = M(in, 0);
        return radial_project(reflect(a, in.sets[0])) == reflect(radial_project(a), in.sets[0]) &&
               radial_project(symmetrize(a, in.pairs[0])) == symmetrize(radial_project(a), in.pairs[0]);
      }};
  r["sphere-density-conv"] = {measures_gen(2, 5, default_pool(), 3, true), [](const Inputs& in, const Ops&) {
                                const SphereMeasure a = radial_project(M(in, 0)), b = radial_project(M(in, 1));
                                const SubsetMask& j = in.sets[0];
                                return sign_density(sconv(a, b), j) == sconv(sign_density(a, j), sign_density(b, j));
                              }};
  r["sphere-decomp"] = {measures_gen(2, 5, default_pool(), 3), [](const Inputs& in, const Ops&) {
                          const SphereMeasure a = radial_project(M(in, 0)), b = radial_project(M(in, 1));
                          const SphereMeasure c = sconv(a, b);
                          const auto parts = coordinate_decomposition(c);
                          if (parts.contains(SubsetMask::empty(in.n))) return false;
                          SphereMeasure sum(in.n);
                          for (const auto& [g, part] : parts) sum += part;
                          if (!(sum == c)) return false;
                          const auto all = all_subsets(in.n);
                          for (const auto& g : all) {
                            if (g.is_empty()) continue;
                            SphereMeasure expect(in.n);
                            for (const auto& e : all) {
                              for (const auto& f : all) {
                                if (intersect(e, f) == g) expect += sconv(restrict_order(a, e), restrict_order(b, f));
                              }
                            }
                            if (!(restrict_order(c, g) == expect)) return false;
                          }
                          return true;
                        }};
  r["sphere-projection-product"] = {measures_gen(2, 5, default_pool(), 3, true), [](const Inputs& in, const Ops&) {
                                      const SphereMeasure a = radial_project(M(in, 0)), b = radial_project(M(in, 1));
                                      const SubsetMask &e = in.sets[0], &f = in.sets[1];
                                      const SphereMeasure lhs = sphere_project(sconv(a, b), e);
                                      return lhs == sconv(sphere_project(a, e), b) && lhs == sconv(a, sphere_project(b, e)) &&
                                             sphere_project(sphere_project(a, f), e) == sphere_project(a, intersect(e, f)) &&
                                             sphere_project(a, SubsetMask::full(in.n)) == a;
                                    }};
  r["phat-sphere"] = {
      [](Rng& rng, int trial) {
        Inputs in;
        in.n = dim_for(trial, 3);
        Measure m = gen_measure(rng, in.n, 6, default_pool(), true);
        if (trial % 2) m -= restrict_order(m, SubsetMask::full(in.n));
        in.measures.push_back(m);
        return in;
      },
      [](const Inputs& in, const Ops&) {
        const SphereMeasure a = radial_project(M(in, 0));
        const SphereMeasure p = phat_sphere(a);
        return p.is_zero() == restrict_order(a, SubsetMask::full(in.n)).is_zero() && p == radial_project(phat(to_measure(a)));
      }};
  r["moment-multiplicative"] = {
      [](Rng& rng, int trial) {
        Inputs in;
        in.n = dim_for(trial, 3);
        in.measures.push_back(gen_measure(rng, in.n, 4, nonzero_pool(), true));
        in.measures.push_back(gen_measure(rng, in.n, 4, nonzero_pool(), true));
        Point alpha;
        for (int i = 0; i < in.n; ++i) alpha.emplace_back(rng.range(0, 4), 4 * in.n);
        for (auto& a : alpha) a.canonicalize();
        in.points.push_back(alpha);
        return in;
      },
      [](const Inputs& in, const Ops& ops) {
        std::vector<double> alpha;
        for (const auto& a : in.points[0]) alpha.push_back(a.get_d());
        const std::vector<double> zero(alpha.size(), 0.0);
        const Measure &a = M(in, 0), &b = M(in, 1);
        const double lhs = moment_g(ops.mconv(a, b), alpha);
        return std::fabs(lhs - moment_g(a, alpha) * moment_g(b, alpha)) < 1e-9 &&
               std::fabs(moment_g(unit_measure(in.n), alpha) - 1.0) < 1e-12 &&
               std::fabs(moment_g(a, zero) - a.total_mass().to_double()) < 1e-9;
      }};

  // universality
  r["witness-soundness"] = {
      [](Rng& rng, int trial) {
        Inputs in;
        in.n = dim_for(trial, 3);
        in.measures.push_back(gen_structured(rng, in.n, 5));
        in.pairs.push_back(gen_pair(rng, in.n));
        in.families.push_back(gen_family(rng, in.n));
        in.families.push_back(gen_family(rng, in.n, true));
        return in;
      },
      [](const Inputs& in, const Ops& ops) {
        const Measure& nu = M(in, 0);
        const auto& p = in.pairs[0];
        const UniversalityReport r = decide_universal_rn(nu, in.families[0], p);
        bool all = true;
        for (const auto& c : r.conditions) all = all && c.satisfied;
        if (all != r.universal || r.universal == r.witness.has_value()) return false;
        if (r.witness) {
          const Measure& w = *r.witness;
          if (w.is_zero() || !in_class(w, in.families[0], p) || !ops.mconv(nu, w).is_zero()) return false;
        }
        const SphereMeasure snu = radial_project(nu);
        const UniversalityReport s = decide_universal_sphere(snu, in.families[1], p);
        all = true;
        for (const auto& c : s.conditions) all = all && c.satisfied;
        if (all != s.universal || s.universal == s.sphere_witness.has_value()) return false;
        if (s.sphere_witness) {
          const SphereMeasure& w = *s.sphere_witness;
          if (w.is_zero() || !in_class(w, in.families[1], p) || !sconv(snu, w).is_zero()) return false;
        }
        return true;
      }};
  r["deltaj-mu-nu"] = {
      [](Rng& rng, int trial) {
        Inputs in;
        in.n = dim_for(trial, 3);
        for (int k = 0; k < 2; ++k) {
          Measure m = gen_measure(rng, in.n, 4, nonzero_pool(), true);
          if (rng.coin()) m = symmetrize(m, gen_pair(rng, in.n));
          in.measures.push_back(m);
        }
        return in;
      },
      [](const Inputs& in, const Ops& ops) {
        const Measure &a = M(in, 0), &b = M(in, 1);
        const Measure ab = ops.mconv(a, b);
        for (const auto& j : all_subsets(in.n)) {
          const Measure d = delta_j(j);
          const bool lhs = !ops.mconv(d, ab).is_zero();
          const bool rhs = !ops.mconv(d, a).is_zero() && !ops.mconv(d, b).is_zero();
          if (lhs != rhs) return false;
        }
        return true;
      }};
  r["top-order-restriction"] = {
      [](Rng& rng, int trial) {
        Inputs in;
        in.n = dim_for(trial, 3);
        in.measures.push_back(gen_structured(rng, in.n, 6));
        in.pairs.push_back(gen_pair(rng, in.n));
        return in;
      },
      [](const Inputs& in, const Ops&) {
        const Family top{SubsetMask::full(in.n)};
        const bool whole = decide_universal_rn(M(in, 0), top, in.pairs[0]).universal;
        const bool restricted = decide_universal_rn(restrict_order(M(in, 0), SubsetMask::full(in.n)), top, in.pairs[0]).universal;
        return !whole || restricted;
      }};
  r["special-agree-rn"] = {
      [](Rng& rng, int trial) {
        Inputs in;
        in.n = dim_for(trial, 3);
        in.measures.push_back(gen_structured(rng, in.n, 5));
        return in;
      },
      [](const Inputs& in, const Ops&) {
        const Measure& nu = M(in, 0);
        for (auto cls : {SymmetryClass::Unconditional, SymmetryClass::Symmetric, SymmetryClass::Antisymmetric, SymmetryClass::None}) {
          for (auto scope : {Scope::Full, Scope::TopOrder}) {
            const auto special = decide_special(nu, cls, scope);
            const auto general = decide_universal_rn(nu, *scope_support(scope, in.n, false), class_pair(cls, in.n));
            if (special.universal != general.universal) return false;
          }
        }
        const bool unc = decide_special(nu, SymmetryClass::Unconditional, Scope::Full).universal;
        return !unc || decide_special(nu, SymmetryClass::None, Scope::PositiveOrthant).universal;
      }};
  r["special-agree-sphere"] = {
      [](Rng& rng, int trial) {
        Inputs in;
        in.n = dim_for(trial, 3);
        in.measures.push_back(gen_structured(rng, in.n, 5));
        return in;
      },
      [](const Inputs& in, const Ops&) {
        const SphereMeasure nu = radial_project(M(in, 0));
        for (auto cls : {SymmetryClass::Unconditional, SymmetryClass::Symmetric, SymmetryClass::Antisymmetric, SymmetryClass::None}) {
          for (auto scope : {Scope::Full, Scope::TopOrder}) {
            const auto special = decide_special(nu, cls, scope);
            const auto general = decide_universal_sphere(nu, *scope_support(scope, in.n, true), class_pair(cls, in.n));
            if (special.universal != general.universal) return false;
          }
        }
        return true;
      }};
  r["lifting-universality"] = {
      [](Rng& rng, int trial) {
        Inputs in;
        in.n = dim_for(trial, 2);
        in.measures.push_back(gen_structured(rng, in.n, 4));
        in.pairs.push_back(gen_pair(rng, in.n));
        in.families.push_back(gen_family(rng, in.n));
        return in;
      },
      [](const Inputs& in, const Ops&) {
        const auto [support_l, pair_l] = lift_class(in.families[0], in.pairs[0]);
        const bool rn = decide_universal_rn(M(in, 0), in.families[0], in.pairs[0]).universal;
        return rn == decide_universal_sphere(lift(M(in, 0)), support_l, pair_l).universal;
      }};
  r["obstruction-prefilter"] = {
      [](Rng& rng, int trial) {
        Inputs in;
        in.n = dim_for(trial, 3);
        in.measures.push_back(gen_structured(rng, in.n, 5));
        in.pairs.push_back(gen_proper_pair(rng, in.n));
        Family f = gen_family(rng, in.n);
        f.insert(SubsetMask::full(in.n));
        in.families.push_back(f);
        return in;
      },
      [](const Inputs& in, const Ops&) {
        const auto& p = in.pairs[0];
        const auto obs = symmetry_obstruction(M(in, 0), p);
        if (!obs.empty() && decide_universal_rn(M(in, 0), in.families[0], p).universal) return false;
        return symmetry_obstruction(symmetrize(unit_measure(in.n), p), p).empty();
      }};

  // lifting
  r["lift-roundtrip"] = {measures_gen(1, 6, default_pool(), 3, true), [](const Inputs& in, const Ops&) {
                           const SphereMeasure l = lift(M(in, 0));
                           return lift_inverse(l) == M(in, 0) && l.is_zero() == M(in, 0).is_zero() &&
                                  is_even_under(l, SubsetMask::full(in.n + 1)) && lift(lift_inverse(l)) == l;
                         }};
  r["lift-product"] = {measures_gen(2, 4, default_pool(), 2, true), [](const Inputs& in, const Ops& ops) {
                         return lift(ops.mconv(M(in, 0), M(in, 1))) == sconv(lift(M(in, 0)), lift(M(in, 1)));
                       }};
  r["lift-decomp-degree"] = {measures_gen(1, 6, default_pool(), 3, true), [](const Inputs& in, const Ops&) {
                               const SphereMeasure l = lift(M(in, 0));
                               for (const auto& e : all_subsets(in.n)) {
                                 if (!(lift(restrict_order(M(in, 0), e)) == restrict_order(l, lift_set(e)))) return false;
                               }
                               const auto o = order_of(M(in, 0));
                               const auto ol = order_of(l);
                               if (o.has_value() != ol.has_value() || (o && lift_set(*o) != *ol)) return false;
                               return M(in, 0).is_zero() || degree(l) == degree(M(in, 0)) + 1;
                             }};
  r["lift-reflect"] = {measures_gen(1, 6, default_pool(), 3, true), [](const Inputs& in, const Ops&) {
                         const SphereMeasure l = lift(M(in, 0));
                         for (const auto& e : all_subsets(in.n)) {
                           if (!(reflect(l, embed_set(e)) == lift(reflect(M(in, 0), e)))) return false;
                         }
                         return true;
                       }};
  r["lift-projection"] = {measures_gen(1, 6, default_pool(), 3, true), [](const Inputs& in, const Ops&) {
                            const SphereMeasure l = lift(M(in, 0));
                            for (const auto& e : all_subsets(in.n)) {
                              if (!(lift(project(M(in, 0), e)) == sphere_project(l, lift_set(e)))) return false;
                            }
                            return true;
                          }};
  r["lift-class-transfer"] = {
      [](Rng& rng, int trial) {
        Inputs in;
        in.n = dim_for(trial, 3);
        in.pairs.push_back(gen_pair(rng, in.n));
        in.families.push_back(gen_family(rng, in.n));
        Measure m = gen_measure(rng, in.n, 5, default_pool(), false);
        if (rng.coin()) m = symmetrize(m, in.pairs[0]);
        if (rng.coin()) m = restrict_support(m, in.families[0]);
        in.measures.push_back(m);
        return in;
      },
      [](const Inputs& in, const Ops&) {
        const auto [support_l, pair_l] = lift_class(in.families[0], in.pairs[0]);
        return in_class(M(in, 0), in.families[0], in.pairs[0]) == in_class(lift(M(in, 0)), support_l, pair_l);
      }};

  // zonoid
  auto zonotope_gen = [](const std::vector<Rational>& pool, int max_dim) -> Gen {
    return [=](Rng& rng, int trial) {
      Inputs in;
      in.n = dim_for(trial, max_dim);
      const int count = rng.range(1, 4);
      for (int k = 0; k < count; ++k) {
        Point v = gen_point(rng, in.n, pool);
        if (!is_zero(v)) in.points.push_back(v);
      }
      if (in.points.empty()) in.points.push_back(ones(in.n));
      in.sets.push_back(gen_subset(rng, in.n));
      in.scalars.push_back(Surd(Rational(rng.range(1, 5), rng.range(1, 4))));
      in.measures.push_back(gen_measure(rng, in.n, 3, default_pool(), true));
      return in;
    };
  };
  // The last point is reused as the direction u.
  r["support-homogeneous"] = {zonotope_gen(default_pool(), 3), [](const Inputs& in, const Ops&) {
                                const Zonotope z{in.n, in.points};
                                const SphereMeasure nu = generating_measure(z);
                                const Point& u = in.points.back();
                                const Rational a = positive_scalar(in.scalars[0]);
                                Point au = u;
                                for (auto& c : au) c *= a;
                                return support_function(nu, au) == Surd(a) * support_function(nu, u) &&
                                       support_function(nu, zero_point(in.n)).is_zero() &&
                                       support_function(nu, u) == Surd(zonotope_support(z, u)) && is_nonnegative(nu) &&
                                       is_even_under(nu, SubsetMask::full(in.n));
                              }};
  r["zonotope-projection"] = {zonotope_gen(default_pool(), 3), [](const Inputs& in, const Ops&) {
                                const Zonotope z{in.n, in.points};
                                const SubsetMask& e = in.sets[0];
                                const SphereMeasure nu = generating_measure(z);
                                const Point& u = in.points.back();
                                return generating_measure(project_zonotope(z, e)) == sphere_project(nu, e) &&
                                       support_function(sphere_project(nu, e), u) == support_function(nu, project_point(u, e));
                              }};
  r["k-transform-two-routes"] = {zonotope_gen(default_pool(), 3), [](const Inputs& in, const Ops&) {
                                   const SphereMeasure nu = generating_measure(Zonotope{in.n, in.points});
                                   const SphereMeasure mu = m_sym(radial_project(M(in, 0)));
                                   const Point& u = in.points.back();
                                   Surd direct;
                                   for (const auto& [e, w] : mu.atoms()) {
                                     const Surd inv_norm = surd_sqrt_of_rational(Rational(Integer(1), e.squared_norm()));
                                     direct += w * inv_norm * support_function(nu, hadamard(e.as_point(), u));
                                   }
                                   return k_transform(nu, mu, u) == direct;
                                 }};
  r["univ-geom"] = {zonotope_gen(nonzero_pool(), 3), [](const Inputs& in, const Ops&) {
                      const SphereMeasure nu = generating_measure(Zonotope{in.n, in.points});
                      const bool singleton = singleton_support_check(nu);
                      const bool top = order_of(m_sym(nu)) == SubsetMask::full(in.n);
                      if (singleton != top) return false;
                      return !top || decide_d_universal(nu, true).universal;
                    }};
  return r;
}

const std::map<std::string, Suite>& registry() {
  static const std::map<std::string, Suite> r = build_registry();
  return r;
}

// Failure means the check returned false or threw.
bool fails(const Suite& s, const Inputs& in, const Ops& ops, std::string& message) {
  try {
    if (s.check(in, ops)) return false;
    message = "property violated";
  } catch (const std::exception& e) {
    message = std::string("exception: ") + e.what();
  }
  return true;
}

Inputs shrink(const Suite& s, Inputs in, const Ops& ops, std::string& message) {
  bool progress = true;
  int budget = 500;
  while (progress && budget > 0) {
    progress = false;
    for (std::size_t m = 0; m < in.measures.size() && !progress; ++m) {
      std::vector<std::pair<Point, Surd>> atoms(in.measures[m].atoms().begin(), in.measures[m].atoms().end());
      for (std::size_t k = 0; k < atoms.size() && !progress && budget > 0; ++k, --budget) {
        // Drop atom k.
        Inputs trial = in;
        trial.measures[m] = Measure(in.measures[m].dim());
        for (std::size_t i = 0; i < atoms.size(); ++i) {
          if (i != k) trial.measures[m].add(atoms[i].first, atoms[i].second);
        }
        std::string msg;
        if (fails(s, trial, ops, msg)) {
          in = std::move(trial);
          message = msg;
          progress = true;
          break;
        }
        // Replace the weight by +-1 and the coordinates by their signs.
        trial = in;
        Point simple = atoms[k].first;
        for (auto& c : simple) c = sign(c);
        const Surd unit_weight(surd_sign(atoms[k].second) < 0 ? -1 : 1);
        if (simple == atoms[k].first && unit_weight == atoms[k].second) continue;
        trial.measures[m] = Measure(in.measures[m].dim());
        for (std::size_t i = 0; i < atoms.size(); ++i) {
          if (i == k) trial.measures[m].add(simple, unit_weight);
          else trial.measures[m].add(atoms[i].first, atoms[i].second);
        }
        if (fails(s, trial, ops, msg)) {
          in = std::move(trial);
          message = msg;
          progress = true;
        }
      }
    }
  }
  return in;
}

}  // namespace

std::vector<std::string> suite_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, s] : registry()) ids.push_back(id);
  return ids;
}

bool has_suite(const std::string& id) { return registry().contains(id); }

SuiteReport run_property_suite(const std::string& suite_id, std::uint64_t seed, int trials) {
  return run_property_suite(suite_id, seed, trials, default_ops());
}

SuiteReport run_property_suite(const std::string& suite_id, std::uint64_t seed, int trials, const Ops& ops) {
  auto it = registry().find(suite_id);
  if (it == registry().end()) fail(ErrorKind::Precondition, "unknown suite '" + suite_id + "'");
  if (trials < 0) fail(ErrorKind::Precondition, "trial count must be non-negative");
  const Suite& suite = it->second;
  SuiteReport report{suite_id, seed, trials, 0, true, std::nullopt, {}};
  for (int t = 0; t < trials; ++t) {
    Rng rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(t + 1));
    const Inputs in = suite.gen(rng, t);
    std::string message;
    if (!fails(suite, in, ops, message)) {
      ++report.passed;
      continue;
    }
    const Inputs small = shrink(suite, in, ops, message);
    report.ok = false;
    report.failed_trial = t;
    report.counterexample = message + " at " + describe(small);
    break;
  }
  return report;
}

}  // namespace multconv
