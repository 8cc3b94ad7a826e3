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


#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "kacgalois/cli.hpp"

#ifndef KACGALOIS_FIXTURE_DIR
#define KACGALOIS_FIXTURE_DIR "fixtures"
#endif

int main(int argc, char** argv) {
  using namespace kacgalois;
  CLI::App app{"Finite Kac algebras, coideals and the Jones basic construction"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  cfg.fixture_dir = KACGALOIS_FIXTURE_DIR;
  std::string format = "json";
  app.add_option("--tolerance", cfg.tolerance, "Residual threshold")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--output", cfg.output_path, "Write the report here instead of standard output");

  const std::map<std::string, std::string> help = {
      {"validate", "Check the axioms of a Kac algebra or an inclusion document"},
      {"dual", "Build the dual Kac algebra from the multiplicative unitary"},
      {"check-duality", "Pairing laws, biduality and the Heisenberg identities"},
      {"coreps", "Irreducible corepresentations, orthogonality and Fourier round trip"},
      {"coideals", "Enumerate left coideal subalgebras"},
      {"galois", "Galois correspondence between coideals of the algebra and of its dual"},
      {"jones", "Basic construction, dual weight, index and relative commutant"},
      {"selftest", "Run every command over the bundled fixtures"}};
  for (const auto& [name, text] : help) {
    CLI::App* sub = app.add_subcommand(name, text);
    if (name == "selftest") {
      sub->add_option("--fixtures", cfg.fixture_dir, "Fixture directory")->capture_default_str();
      sub->add_option("--random", cfg.random_inclusions, "Number of random inclusions")
          ->check(CLI::NonNegativeNumber)
          ->capture_default_str();
    } else {
      sub->add_option("input", cfg.input_path, "Input JSON file")->required();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cout << render(error_document("", "UsageError", e.what()), Format::json);
    return 2;
  }
  cfg.command = *parse_command(app.get_subcommands().front()->get_name());
  cfg.format = format == "text" ? Format::text : Format::json;

  RunResult result = run(cfg);
  std::string text = render(result.report, cfg.format);
  if (cfg.output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << cfg.output_path << "\n";
      return 2;
    }
    out << text;
  }
  return result.exit_code;
}
