// Copyright 2026 The kacgalois Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "kacgalois/cli.hpp"
#include "kacgalois/jones.hpp"

using namespace kacgalois;

namespace {

std::string fixture(const std::string& name) { return std::string(KACGALOIS_FIXTURE_DIR) + "/" + name + ".json"; }

RunResult run_on(Command c, const std::string& path, double tol = 1e-9, std::uint64_t seed = 0) {
  RunConfig cfg;
  cfg.command = c;
  cfg.input_path = path;
  cfg.tolerance = tol;
  cfg.seed = seed;
  return run(cfg);
}

std::string temp_file(const std::string& name, const std::string& text) {
  std::string path = std::string(KACGALOIS_TEST_TMP) + "/" + name;
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

}  // namespace

TEST_CASE("command names round trip") {
  for (Command c : {Command::validate, Command::dual, Command::check_duality, Command::coreps, Command::coideals,
                    Command::galois, Command::jones, Command::selftest})
    CHECK(parse_command(command_name(c)) == c);
  CHECK_FALSE(parse_command("frobnicate").has_value());
}

TEST_CASE("validate on the group algebra of Z2") {
  RunResult r = run_on(Command::validate, fixture("group_algebra_Z2"));
  CHECK(r.exit_code == 0);
  CHECK(r.report["passed"] == true);
  CHECK(r.report["version"] == kVersion);
  CHECK(r.report["input_fnv1a64"] == hex64(fnv1a64(read_file(fixture("group_algebra_Z2")))));
  for (auto& [name, c] : r.report["checks"].items()) {
    CAPTURE(name);
    if (c.contains("value")) CHECK(c["value"].get<double>() < 1e-10);
  }
}

TEST_CASE("galois on functions on S3") {
  RunResult r = run_on(Command::galois, fixture("function_algebra_S3"));
  CHECK(r.exit_code == 0);
  const json& coideals = r.report["result"]["coideals"];
  REQUIRE(coideals.size() == 6);
  std::vector<int> dims;
  for (const json& c : coideals) dims.push_back(c["dim"]);
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<int>{1, 2, 3, 3, 3, 6});
  CHECK(r.report["result"]["tilde_pairs"].size() == 6);
  CHECK(r.report["checks"]["order_reversing"]["passed"] == true);
}

TEST_CASE("coideals, coreps, dual and check-duality pass on fixtures") {
  for (Command c : {Command::coideals, Command::coreps, Command::dual, Command::check_duality}) {
    CAPTURE(command_name(c));
    RunResult r = run_on(c, fixture("group_algebra_S3"));
    CHECK(r.exit_code == 0);
  }
  RunResult r = run_on(Command::coreps, fixture("function_algebra_Q8"));
  CHECK(r.report["result"]["dimension_sum"] == 8);
}

TEST_CASE("jones reports mirror the library") {
  for (const char* name : {"inclusion_c_in_c2_e13", "inclusion_c_in_m2_weighted", "inclusion_golden_markov"}) {
    CAPTURE(name);
    RunResult r = run_on(Command::jones, fixture(name));
    CHECK(r.exit_code == 0);
    Inclusion inc = inclusion_from_document(inclusion_from_json(parse_json_text(read_file(fixture(name)))));
    BasicExtension ext = basic_extension(inc);
    RelCommReport rc = relcomm_decomposition(inc, ext);
    const json& rel = r.report["result"]["relative_commutant"];
    CHECK(rel["extremal"] == rc.extremal);
    REQUIRE(rel["summands"].size() == rc.summands.size());
    for (size_t s = 0; s < rc.summands.size(); ++s)
      CHECK(rel["summands"][s]["a_squared"].get<std::vector<double>>() == rc.summands[s].a_squared);
    CHECK(rel["slots"]["B1"] == 0);
  }
  RunResult w = run_on(Command::jones, fixture("inclusion_c_in_m2_weighted"));
  CHECK(w.report["result"]["relative_commutant"]["extremal"] == false);
  CHECK(w.report["result"]["index"]["total"].get<double>() == doctest::Approx(4.5).epsilon(1e-10));
}

TEST_CASE("reports are deterministic") {
  for (Command c : {Command::galois, Command::jones}) {
    std::string path = c == Command::jones ? fixture("inclusion_golden_markov") : fixture("function_algebra_Z4");
    RunResult a = run_on(c, path, 1e-9, 3), b = run_on(c, path, 1e-9, 3);
    CHECK(render(a.report, Format::json) == render(b.report, Format::json));
    CHECK(render(a.report, Format::text) == render(b.report, Format::text));
  }
}

TEST_CASE("exit codes") {
  CHECK(run_on(Command::validate, "/nonexistent/file.json").exit_code == 2);
  std::string bad = temp_file("bad.json", "{\"dim\": 2");
  RunResult parse = run_on(Command::dual, bad);
  CHECK(parse.exit_code == 2);
  CHECK(parse.report["error"]["type"] == "ParseError");

  json z2 = parse_json_text(read_file(fixture("group_algebra_Z2")));
  z2["counit"][1] = json::array({0.5, 0.0});
  std::string broken = temp_file("broken.json", z2.dump());
  CHECK(run_on(Command::validate, broken).exit_code == 1);
  RunResult axioms = run_on(Command::dual, broken);
  CHECK(axioms.exit_code == 2);
  CHECK(axioms.report["error"]["type"] == "AxiomError");

  json inc = parse_json_text(read_file(fixture("inclusion_c_in_c2_e13")));
  for (json& row : inc["E_matrix"])
    for (json& v : row) v = json::array({v[0].get<double>() * 0.5, v[1].get<double>() * 0.5});
  std::string half = temp_file("half.json", inc.dump());
  RunResult e = run_on(Command::jones, half);
  CHECK(e.exit_code == 2);
  CHECK(e.report["error"]["type"] == "InvalidExpectationError");
  CHECK(e.report["error"]["detail"]["residuals"]["unital"].get<double>() > 0.1);
  CHECK(run_on(Command::validate, half).exit_code == 1);

  CHECK(run_on(Command::validate, fixture("group_algebra_Z2"), -1.0).exit_code == 2);
  CHECK(run_on(Command::validate, "").exit_code == 2);
  // a tolerance below rounding error makes checks fail, never exit 0
  RunResult strict = run_on(Command::validate, fixture("group_algebra_S3"), 1e-300);
  CHECK(strict.exit_code == 1);
  CHECK(strict.report["passed"] == false);
  CHECK(run_on(Command::dual, fixture("group_algebra_S3"), 1e-300).exit_code == 2);
}

TEST_CASE("text rendering") {
  RunResult r = run_on(Command::validate, fixture("group_algebra_Z2"));
  std::string text = render(r.report, Format::text);
  CHECK(text.find("passed: true") != std::string::npos);
  CHECK(text.find("version: 0.1.0") != std::string::npos);
  CHECK(render(r.report, Format::json).front() == '{');
}

TEST_CASE("selftest over the bundled fixtures") {
  RunConfig cfg;
  cfg.command = Command::selftest;
  cfg.fixture_dir = KACGALOIS_FIXTURE_DIR;
  cfg.seed = 2;
  cfg.random_inclusions = 2;
  RunResult r = run(cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.report["passed"] == true);
  CHECK(r.report["result"]["suites"].size() == 12 + 1 + 8 + 2);
  cfg.fixture_dir = "/nonexistent";
  CHECK(run(cfg).exit_code == 2);
}
