#include "multconv/json_io.hpp"

#include <fstream>
#include <sstream>

namespace multconv {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

const Json& array_of(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  return j;
}

int dim_from(const Json& j) {
  const Json& d = field(j, "dim");
  if (!d.is_number_integer()) bad("'dim' must be an integer");
  const long long n = d.get<long long>();
  if (n < 0 || n > SubsetMask::max_dim) bad("'dim' out of range");
  return static_cast<int>(n);
}

Rational rational_from(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      bad(e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("expected a rational string");
}

Integer integer_from(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) bad("bad integer '" + j.get<std::string>() + "'");
    return z;
  }
  bad("expected an integer");
}

}  // namespace

Json to_json(const Surd& a) {
  Json out = Json::array();
  for (const auto& [r, c] : a.terms()) {
    Json radicand = r.fits_slong_p() ? Json(r.get_si()) : Json(r.get_str());
    out.push_back(Json::array({to_string(c), radicand}));
  }
  return out;
}

Surd surd_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return Surd(rational_from(j));
  std::map<Integer, Rational> raw;
  for (const auto& term : array_of(j, "surd")) {
    if (!term.is_array() || term.size() != 2) bad("surd term must be [coefficient, radicand]");
    const Integer r = integer_from(term[1]);
    if (r < 1) bad("surd radicand must be positive");
    raw[r] += rational_from(term[0]);
  }
  try {
    return Surd::from_terms(raw);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BoundExceeded) throw;
    bad(e.what());
  }
}

Json to_json(const SubsetMask& e) {
  Json out = Json::array();
  for (int i : e.indices()) out.push_back(i);
  return out;
}

SubsetMask subset_from_json(const Json& j, int n) {
  std::vector<int> idx;
  for (const auto& v : array_of(j, "subset")) {
    if (!v.is_number_integer()) bad("subset entries must be integers");
    const long long i = v.get<long long>();
    if (i < 1 || i > n) bad("subset index " + std::to_string(i) + " outside [1," + std::to_string(n) + "]");
    idx.push_back(static_cast<int>(i));
  }
  return SubsetMask::from_indices(n, idx);
}

Json to_json(const Family& f) {
  std::vector<SubsetMask> members(f.begin(), f.end());
  std::sort(members.begin(), members.end(), lex_less);
  Json out = Json::array();
  for (const auto& e : members) out.push_back(to_json(e));
  return out;
}

Family family_from_json(const Json& j, int n) {
  Family f;
  for (const auto& e : array_of(j, "family")) f.insert(subset_from_json(e, n));
  return f;
}

Json to_json(const GeneratingPair& p) {
  Json out;
  out["evens"] = to_json(p.evens);
  out["odds"] = to_json(p.odds);
  out["dim"] = p.dim;
  return out;
}

GeneratingPair pair_from_json(const Json& j) {
  const int n = dim_from(j);
  return {family_from_json(field(j, "evens"), n), family_from_json(field(j, "odds"), n), n};
}

Json to_json(const Point& x) {
  Json out = Json::array();
  for (const auto& c : x) out.push_back(to_string(c));
  return out;
}

Point point_from_json(const Json& j) {
  Point x;
  for (const auto& c : array_of(j, "point")) x.push_back(rational_from(c));
  return x;
}

Json to_json(const Ray& r) {
  Json out = Json::array();
  for (const auto& c : r.direction()) out.push_back(c.get_str());
  return out;
}

Ray ray_from_json(const Json& j) {
  std::vector<Integer> d;
  for (const auto& c : array_of(j, "ray")) d.push_back(integer_from(c));
  try {
    return Ray::of(d);
  } catch (const Error& e) {
    bad(e.what());
  }
}

Json to_json(const Measure& mu) {
  Json atoms = Json::array();
  for (const auto& [x, w] : mu.atoms()) atoms.push_back(Json{{"point", to_json(x)}, {"weight", to_json(w)}});
  return Json{{"dim", mu.dim()}, {"atoms", atoms}};
}

Measure measure_from_json(const Json& j) {
  const int n = dim_from(j);
  Measure mu(n);
  for (const auto& a : array_of(field(j, "atoms"), "atoms")) {
    Point x = point_from_json(field(a, "point"));
    if (static_cast<int>(x.size()) != n) bad("atom point has wrong dimension");
    mu.add(x, surd_from_json(field(a, "weight")));
  }
  return mu;
}

Json to_json(const SphereMeasure& mu) {
  Json atoms = Json::array();
  for (const auto& [r, w] : mu.atoms()) atoms.push_back(Json{{"ray", to_json(r)}, {"weight", to_json(w)}});
  return Json{{"dim", mu.dim()}, {"atoms", atoms}};
}

SphereMeasure sphere_measure_from_json(const Json& j) {
  const int n = dim_from(j);
  SphereMeasure mu(n);
  for (const auto& a : array_of(field(j, "atoms"), "atoms")) {
    const Ray r = ray_from_json(field(a, "ray"));
    if (r.dim() != n) bad("atom ray has wrong dimension");
    mu.add(r, surd_from_json(field(a, "weight")));
  }
  return mu;
}

Json to_json(const Zonotope& z) {
  Json gens = Json::array();
  for (const auto& v : z.generators) gens.push_back(to_json(v));
  return Json{{"dim", z.dim}, {"generators", gens}};
}

Zonotope zonotope_from_json(const Json& j) {
  Zonotope z;
  z.dim = dim_from(j);
  for (const auto& v : array_of(field(j, "generators"), "generators")) {
    Point x = point_from_json(v);
    if (static_cast<int>(x.size()) != z.dim) bad("generator has wrong dimension");
    z.generators.push_back(std::move(x));
  }
  return z;
}

Json to_json(const UniversalityReport& r, int n, bool sphere) {
  Json conditions = Json::array();
  for (const auto& c : r.conditions) conditions.push_back(Json{{"E", to_json(c.e)}, {"J", to_json(c.j)}, {"ok", c.satisfied}});
  Json skipped = Json::array();
  for (const auto& e : r.skipped_non_proper) skipped.push_back(to_json(e));
  Json witness = nullptr;
  if (r.witness) witness = to_json(*r.witness);
  if (r.sphere_witness) witness = to_json(*r.sphere_witness);
  return Json{{"universal", r.universal}, {"dim", n},         {"space", sphere ? "sphere" : "rn"},
              {"conditions", conditions},  {"witness", witness}, {"skipped", skipped}};
}

UniversalityReport report_from_json(const Json& j) {
  UniversalityReport r;
  const int n = dim_from(j);
  const Json& u = field(j, "universal");
  if (!u.is_boolean()) bad("'universal' must be a boolean");
  r.universal = u.get<bool>();
  for (const auto& c : array_of(field(j, "conditions"), "conditions")) {
    const Json& ok = field(c, "ok");
    if (!ok.is_boolean()) bad("'ok' must be a boolean");
    r.conditions.push_back({subset_from_json(field(c, "E"), n), subset_from_json(field(c, "J"), n), ok.get<bool>()});
  }
  for (const auto& e : array_of(field(j, "skipped"), "skipped")) r.skipped_non_proper.push_back(subset_from_json(e, n));
  const Json& w = field(j, "witness");
  if (!w.is_null()) {
    const Json& space = field(j, "space");
    if (space == "sphere") r.sphere_witness = sphere_measure_from_json(w);
    else if (space == "rn") r.witness = measure_from_json(w);
    else bad("'space' must be \"rn\" or \"sphere\"");
  }
  return r;
}

Json to_json(const SuiteReport& r) {
  Json out{{"suite", r.suite}, {"seed", r.seed}, {"trials", r.trials}, {"passed", r.passed}, {"ok", r.ok}};
  out["failed_trial"] = r.failed_trial ? Json(*r.failed_trial) : Json(nullptr);
  out["counterexample"] = r.ok ? Json(nullptr) : Json(r.counterexample);
  return out;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

}  // namespace multconv
