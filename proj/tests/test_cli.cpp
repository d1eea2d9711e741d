#include "multconv/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace multconv;

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(MULTCONV_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_file(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "multconv_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string write_json(const std::string& name, const Json& j) { return write_file(name, j.dump()); }

}  // namespace

TEST_CASE("json round trips") {
  const Surd s = Surd(Rational(3, 2)) - Surd::root(2);
  CHECK(to_json(s).dump() == R"([["3/2",1],["-1",2]])");
  CHECK(surd_from_json(to_json(s)) == s);
  const Measure mu = dirac(Point{Rational(1, 2), Rational(-2)}, s) + dirac(make_point({0, 3}));
  CHECK(measure_from_json(to_json(mu)) == mu);
  const SphereMeasure sm = radial_project(mu);
  CHECK(sphere_measure_from_json(to_json(sm)) == sm);
  const GeneratingPair p{{SubsetMask::from_indices(3, {1, 2})}, {SubsetMask::empty(3)}, 3};
  const GeneratingPair p2 = pair_from_json(to_json(p));
  CHECK(p2.evens == p.evens);
  CHECK(p2.odds == p.odds);
  CHECK(to_json(p).dump() == R"({"evens":[[1,2]],"odds":[[]],"dim":3})");
  const Zonotope z{2, {make_point({1, 2})}};
  CHECK(to_json(zonotope_from_json(to_json(z))) == to_json(z));

  const UniversalityReport r = decide_universal_rn(dirac(make_point({1})) + dirac(make_point({-1})), {SubsetMask::full(1)},
                                                   no_symmetry_pair(1));
  const Json rj = to_json(r, 1, false);
  CHECK(to_json(report_from_json(rj), 1, false) == rj);
}

TEST_CASE("json parse errors") {
  CHECK_THROWS_AS(parse_json_text("{\"dim\":"), Error);
  CHECK_THROWS_AS(measure_from_json(parse_json_text(R"({"dim":2,"atoms":[{"point":["1"],"weight":"1"}]})")), Error);
  CHECK_THROWS_AS(measure_from_json(parse_json_text(R"({"atoms":[]})")), Error);
  CHECK_THROWS_AS(surd_from_json(parse_json_text(R"([["1",0]])")), Error);
  CHECK_THROWS_AS(subset_from_json(parse_json_text("[0]"), 2), Error);
  CHECK_THROWS_AS(ray_from_json(parse_json_text(R"(["0","0"])")), Error);
}

TEST_CASE("convolve two point masses") {
  const std::string a = write_file("a.json", R"({"dim":2,"atoms":[{"point":["2","-1/2"],"weight":[["1",1]]}]})");
  const std::string b = write_file("b.json", R"({"dim":2,"atoms":[{"point":["3","4"],"weight":"2"}]})");
  const Run r = run("convolve " + a + " " + b);
  CHECK(r.code == 0);
  const Measure m = measure_from_json(parse_json_text(r.out));
  CHECK(m == dirac(make_point({6, -2}), 2));
  CHECK(to_json(m) == parse_json_text(r.out));

  const Run s = run("convolve --sphere " + write_json("sa.json", to_json(radial_project(measure_from_json(read_json_file(a))))) + " " +
                    write_json("sb.json", to_json(radial_project(measure_from_json(read_json_file(b))))));
  CHECK(s.code == 0);
  CHECK(sphere_measure_from_json(parse_json_text(s.out)) == sconv(measure_from_json(read_json_file(a)), measure_from_json(read_json_file(b))));
}

TEST_CASE("universal exit codes") {
  const std::string s3 = write_json("sigma0.json", to_json(sigma0(3)));
  CHECK(run("universal " + s3 + " --support top").code == 0);
  const std::string pm = write_json("pm.json", to_json(dirac(make_point({1})) + dirac(make_point({-1}))));
  const Run r = run("universal " + pm + " --support top");
  CHECK(r.code == 3);
  const UniversalityReport rep = report_from_json(parse_json_text(r.out));
  CHECK_FALSE(rep.universal);
  REQUIRE(rep.witness.has_value());
  CHECK(mconv(dirac(make_point({1})) + dirac(make_point({-1})), *rep.witness).is_zero());
  CHECK(run("universal " + pm + " --support top --evens 1").code == 0);
  CHECK(run("universal " + pm + " --support list --sets \"1;{}\" --evens 1").code == 0);
  CHECK(run("universal " + pm + " --special unconditional").code == 0);
  CHECK(run("universal " + pm + " --special none --support positive-orthant").code == 0);
  CHECK(run("universal " + write_json("spm.json", to_json(radial_project(sigma0(2)))) + " --sphere --support top").code == 0);
}

TEST_CASE("input errors exit 2 without output") {
  const std::string bad = write_file("bad.json", "{\"dim\":2");
  const std::string pm = write_json("pm1.json", to_json(dirac(make_point({1}))));
  for (const std::string& args : std::vector<std::string>{"convolve " + bad + " " + bad, "project " + pm + " --E 2", "universal " + pm + " --support nope",
                                  "universal " + pm + " --sphere", "lift-inverse " + pm, "convolve " + pm,
                                  "verify --suite nope", "project /nonexistent.json --E 1", "zonoid " + pm + " --check d-universal",
                                  "universal " + pm + " --evens 1 --special symmetric"}) {
    const Run r = run(args);
    INFO(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
  }
}

TEST_CASE("other subcommands") {
  const Measure mu = dirac(make_point({1, 0})) + dirac(make_point({2, -1}), 3);
  const std::string f = write_json("mu.json", to_json(mu));

  const Run p = run("project " + f + " --E 1");
  CHECK(p.code == 0);
  CHECK(measure_from_json(parse_json_text(p.out)) == project(mu, SubsetMask::from_indices(2, {1})));

  const Run d = run("decompose " + f);
  CHECK(d.code == 0);
  const Json dj = parse_json_text(d.out);
  CHECK(dj["degree"] == 2);
  CHECK(dj["order"].is_null());
  CHECK(dj["components"].size() == 2);

  const Run s = run("symmetrize " + f + " --evens \"1,2\"");
  CHECK(s.code == 0);
  const Json sj = parse_json_text(s.out);
  CHECK(measure_from_json(sj["result"]) == m_sym(mu));
  CHECK(sj["proper"] == true);

  const Run l = run("lift " + f);
  CHECK(l.code == 0);
  const SphereMeasure lm = sphere_measure_from_json(parse_json_text(l.out));
  const Run li = run("lift-inverse " + write_json("lifted.json", to_json(lm)));
  CHECK(li.code == 0);
  CHECK(measure_from_json(parse_json_text(li.out)) == mu);

  const std::string cube2 = write_json("cube.json", to_json(cube(2)));
  CHECK(run("zonoid " + cube2 + " --check d-universal").code == 3);
  CHECK(run("zonoid " + cube2 + " --check singleton-support").code == 3);
  const std::string zz = write_file("z.json", R"({"dim":2,"generators":[["1","2"],["-1","1"]]})");
  CHECK(run("zonoid " + zz + " --check unc-d-universal").code == 0);

  const Run v = run("verify --suite banach-norm --seed 3 --trials 20");
  CHECK(v.code == 0);
  const Json vj = parse_json_text(v.out);
  CHECK(vj["ok"] == true);
  CHECK(vj["passed"] == 20);
  CHECK(run("--format pretty verify --suite banach-norm --trials 5").out.rfind("PASS", 0) == 0);
}
