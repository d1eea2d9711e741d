// multconv: command line front end for the measure library.
#include "multconv/json_io.hpp"
#include "multconv/lifting.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace multconv;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNegative = 3;

struct Output {
  Json json;
  std::string pretty;
  int code = kExitOk;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

// "1,3" -> {1,3}; "" or "{}" -> empty set.
SubsetMask parse_subset_arg(const std::string& text, int n) {
  std::string t = trim(text);
  if (t.size() >= 2 && t.front() == '{' && t.back() == '}') t = t.substr(1, t.size() - 2);
  std::vector<int> idx;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    int i = 0;
    try {
      std::size_t used = 0;
      i = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "bad subset index '" + item + "'");
    }
    if (i < 1 || i > n) fail(ErrorKind::Parse, "subset index " + item + " outside [1," + std::to_string(n) + "]");
    idx.push_back(i);
  }
  return SubsetMask::from_indices(n, idx);
}

// Sets separated by ';', e.g. "1,2;3;{}".
Family parse_family_arg(const std::string& text, int n) {
  Family f;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (trim(item).empty()) continue;
    f.insert(parse_subset_arg(item, n));
  }
  return f;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string pretty_report(const UniversalityReport& r) {
  std::ostringstream out;
  out << "universal: " << yes_no(r.universal) << "\n";
  for (const auto& c : r.conditions) {
    out << "  E=" << to_string(c.e) << " J=" << to_string(c.j) << " " << (c.satisfied ? "ok" : "FAILS") << "\n";
  }
  for (const auto& e : r.skipped_non_proper) out << "  skipped (not proper): E=" << to_string(e) << "\n";
  if (r.witness) out << "witness: " << to_string(*r.witness) << "\n";
  if (r.sphere_witness) out << "witness: " << to_string(*r.sphere_witness) << "\n";
  return out.str();
}

struct Args {
  std::vector<std::string> files;
  bool sphere = false;
  std::string e;
  std::string evens;
  std::string odds;
  std::string support = "all";
  std::string sets;
  std::string special;
  std::string check;
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 100;
};

Output run_convolve(const Args& a) {
  const Json x = read_json_file(a.files.at(0));
  const Json y = read_json_file(a.files.at(1));
  if (a.sphere) {
    const SphereMeasure r = sconv(sphere_measure_from_json(x), sphere_measure_from_json(y));
    return {to_json(r), to_string(r) + "\n"};
  }
  const Measure r = mconv(measure_from_json(x), measure_from_json(y));
  return {to_json(r), to_string(r) + "\n"};
}

Output run_project(const Args& a) {
  const Json x = read_json_file(a.files.at(0));
  if (a.sphere) {
    const SphereMeasure mu = sphere_measure_from_json(x);
    const SphereMeasure r = sphere_project(mu, parse_subset_arg(a.e, mu.dim()));
    return {to_json(r), to_string(r) + "\n"};
  }
  const Measure mu = measure_from_json(x);
  const Measure r = project(mu, parse_subset_arg(a.e, mu.dim()));
  return {to_json(r), to_string(r) + "\n"};
}

template <class M>
Output decompose_impl(const M& mu) {
  Json parts = Json::array();
  std::ostringstream pretty;
  for (const auto& [e, part] : coordinate_decomposition(mu)) {
    parts.push_back(Json{{"E", to_json(e)}, {"measure", to_json(part)}});
    pretty << "E=" << to_string(e) << ": " << to_string(part) << "\n";
  }
  const auto o = order_of(mu);
  const int d = degree(mu);
  pretty << "order: " << (o ? to_string(*o) : std::string("none")) << "\ndegree: " << d << "\n";
  return {Json{{"components", parts}, {"order", o ? to_json(*o) : Json(nullptr)}, {"degree", d}}, pretty.str()};
}

Output run_decompose(const Args& a) {
  const Json x = read_json_file(a.files.at(0));
  if (a.sphere) return decompose_impl(sphere_measure_from_json(x));
  return decompose_impl(measure_from_json(x));
}

template <class M>
Output symmetrize_impl(const M& mu, const Args& a) {
  const int n = mu.dim();
  const GeneratingPair p{parse_family_arg(a.evens, n), parse_family_arg(a.odds, n), n};
  const M r = symmetrize(mu, p);
  const SymmetryPair g = gamma(p);
  Json out{{"result", to_json(r)}, {"gamma", to_json(g.as_generating())}, {"proper", g.proper}};
  std::ostringstream pretty;
  pretty << to_string(r) << "\ngamma evens: " << to_json(g.evens).dump() << "\ngamma odds: " << to_json(g.odds).dump()
         << "\nproper: " << yes_no(g.proper) << "\n";
  return {out, pretty.str()};
}

Output run_symmetrize(const Args& a) {
  const Json x = read_json_file(a.files.at(0));
  if (a.sphere) return symmetrize_impl(sphere_measure_from_json(x), a);
  return symmetrize_impl(measure_from_json(x), a);
}

Output run_lift(const Args& a) {
  const SphereMeasure r = lift(measure_from_json(read_json_file(a.files.at(0))));
  return {to_json(r), to_string(r) + "\n"};
}

Output run_lift_inverse(const Args& a) {
  const Measure r = lift_inverse(sphere_measure_from_json(read_json_file(a.files.at(0))));
  return {to_json(r), to_string(r) + "\n"};
}

Output report_output(const UniversalityReport& r, int n, bool sphere) {
  return {to_json(r, n, sphere), pretty_report(r), r.universal ? kExitOk : kExitNegative};
}

Output run_universal(const Args& a) {
  const Json x = read_json_file(a.files.at(0));
  const SphereMeasure snu = a.sphere ? sphere_measure_from_json(x) : SphereMeasure(0);
  const Measure nu = a.sphere ? Measure(0) : measure_from_json(x);
  const int n = a.sphere ? snu.dim() : nu.dim();

  if (!a.special.empty()) {
    if (!a.evens.empty() || !a.odds.empty()) fail(ErrorKind::Precondition, "--special excludes --evens/--odds");
    const SymmetryClass cls = parse_symmetry_class(a.special);
    Scope scope = Scope::Full;
    if (a.support == "top") scope = Scope::TopOrder;
    else if (a.support == "positive-orthant") scope = Scope::PositiveOrthant;
    else if (a.support != "all") fail(ErrorKind::Precondition, "--special takes --support all|top|positive-orthant");
    return report_output(a.sphere ? decide_special(snu, cls, scope) : decide_special(nu, cls, scope), n, a.sphere);
  }

  const GeneratingPair p{parse_family_arg(a.evens, n), parse_family_arg(a.odds, n), n};
  Family support;
  if (a.support == "all") {
    support = *scope_support(Scope::Full, n, a.sphere);
  } else if (a.support == "top") {
    support = {SubsetMask::full(n)};
  } else if (a.support == "list") {
    support = parse_family_arg(a.sets, n);
  } else {
    fail(ErrorKind::Precondition, "--support must be all, top or list");
  }
  return report_output(a.sphere ? decide_universal_sphere(snu, support, p) : decide_universal_rn(nu, support, p), n, a.sphere);
}

Output run_zonoid(const Args& a) {
  const Zonotope z = zonotope_from_json(read_json_file(a.files.at(0)));
  const SphereMeasure nu = generating_measure(z);
  if (a.check == "d-universal" || a.check == "unc-d-universal") {
    return report_output(decide_d_universal(nu, a.check == "unc-d-universal"), z.dim, true);
  }
  if (a.check == "singleton-support") {
    const bool ok = singleton_support_check(nu);
    return {Json{{"check", a.check}, {"result", ok}}, "singleton-support: " + yes_no(ok) + "\n", ok ? kExitOk : kExitNegative};
  }
  fail(ErrorKind::Precondition, "--check must be d-universal, unc-d-universal or singleton-support");
}

Output run_verify(const Args& a) {
  std::vector<std::string> ids;
  if (a.suite == "all") ids = suite_ids();
  else if (has_suite(a.suite)) ids = {a.suite};
  else fail(ErrorKind::Precondition, "unknown suite '" + a.suite + "'");
  Json reports = Json::array();
  std::ostringstream pretty;
  bool all_ok = true;
  for (const auto& id : ids) {
    const SuiteReport r = run_property_suite(id, a.seed, a.trials);
    all_ok = all_ok && r.ok;
    reports.push_back(to_json(r));
    pretty << (r.ok ? "PASS " : "FAIL ") << id << " (" << r.passed << "/" << r.trials << ")";
    if (!r.ok) pretty << ": " << r.counterexample;
    pretty << "\n";
  }
  Json out = ids.size() == 1 ? reports[0] : Json{{"ok", all_ok}, {"suites", reports}};
  return {out, pretty.str(), all_ok ? kExitOk : 1};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact multiplicative convolution of atomic measures"};
  app.require_subcommand(1);
  app.fallthrough();
  Args args;
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "pretty"}));

  auto files = [&](CLI::App* sub, int count) {
    sub->add_option("files", args.files, "Input JSON files")->required()->expected(count);
  };
  auto sphere = [&](CLI::App* sub) { sub->add_flag("--sphere", args.sphere, "Treat inputs as sphere measures"); };
  auto pair = [&](CLI::App* sub) {
    sub->add_option("--evens", args.evens, "Even generators, e.g. \"1,2;3\"");
    sub->add_option("--odds", args.odds, "Odd generators");
  };

  auto* convolve = app.add_subcommand("convolve", "A*B, or the spherical product with --sphere");
  files(convolve, 2);
  sphere(convolve);
  auto* proj = app.add_subcommand("project", "Coordinate projection P_E");
  files(proj, 1);
  sphere(proj);
  proj->add_option("--E", args.e, "Coordinates kept, e.g. 1,3")->required();
  auto* decompose = app.add_subcommand("decompose", "Coordinate decomposition with order and degree");
  files(decompose, 1);
  sphere(decompose);
  auto* sym = app.add_subcommand("symmetrize", "Symmetrize under a generating pair");
  files(sym, 1);
  sphere(sym);
  pair(sym);
  auto* lift_cmd = app.add_subcommand("lift", "Lift a measure on R^n to the sphere in R^(n+1)");
  files(lift_cmd, 1);
  auto* unlift = app.add_subcommand("lift-inverse", "Invert the lift");
  files(unlift, 1);
  auto* universal = app.add_subcommand("universal", "Decide universality; exit 3 when not universal");
  files(universal, 1);
  sphere(universal);
  pair(universal);
  universal->add_option("--support", args.support, "all, top, list (with --sets) or positive-orthant (with --special)");
  universal->add_option("--sets", args.sets, "Support family for --support list, e.g. \"1,2;{}\"");
  universal->add_option("--special", args.special, "unconditional, symmetric, antisymmetric or none");
  auto* zonoid = app.add_subcommand("zonoid", "Zonotope checks");
  files(zonoid, 1);
  zonoid->add_option("--check", args.check, "d-universal, unc-d-universal or singleton-support")->required();
  auto* verify = app.add_subcommand("verify", "Run a property suite (or all); exit 0 iff every trial passes");
  verify->add_option("--suite", args.suite, "Suite id or 'all'")->required();
  verify->add_option("--seed", args.seed, "Seed");
  verify->add_option("--trials", args.trials, "Trials per suite");
  app.add_subcommand("suites", "List suite ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  Output out;
  try {
    if (*convolve) out = run_convolve(args);
    else if (*proj) out = run_project(args);
    else if (*decompose) out = run_decompose(args);
    else if (*sym) out = run_symmetrize(args);
    else if (*lift_cmd) out = run_lift(args);
    else if (*unlift) out = run_lift_inverse(args);
    else if (*universal) out = run_universal(args);
    else if (*zonoid) out = run_zonoid(args);
    else if (*verify) out = run_verify(args);
    else {
      Json ids = Json::array();
      std::string pretty;
      for (const auto& id : suite_ids()) {
        ids.push_back(id);
        pretty += id + "\n";
      }
      out = {ids, pretty};
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: missing input\n";
    return kExitInput;
  }
  std::cout << (format == "json" ? out.json.dump(2) + "\n" : out.pretty);
  return out.code;
}
