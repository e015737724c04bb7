// Copyright 2026 The qplee Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <iostream>

#include "qplee/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"qplee: Lee codes over Z_p^{2k} built from norm and hyperbola subsets"};
  app.require_subcommand(1, 1);

  qplee::cli::RunConfig cfg;
  std::uint32_t p = 0;
  std::string family;
  std::uint64_t cap = 0;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", p, "odd prime p");
    sub->add_option("--k", cfg.k, "extension degree k")->capture_default_str();
    sub->add_option("--family", family, "plus or minus");
    sub->add_option("--format", cfg.format, "json or text")->capture_default_str();
    sub->add_option("--out", cfg.out, "write the report to this file");
    sub->add_option("--cap", cap, "size cap on q^2");
    sub->add_option("--matrix", cfg.matrix, "parity-check matrix file (text or JSON)");
    sub->add_option("--seed", cfg.seed, "seed for randomized round trips")->capture_default_str();
    sub->add_option("--csv", cfg.csv, "spectrum: write all eigenvalues as CSV");
  };
  const std::pair<const char*, const char*> commands[] = {
      {"admissible", "report whether (p, k, family) is covered by the constructions"},
      {"subset", "cumulative subset-sum layers and quasi-perfect verdict"},
      {"spectrum", "Cayley graph spectrum and Ramanujan classification"},
      {"code-gen", "parity-check matrix and code parameters"},
      {"code-verify", "cross-check (t, R) and run a seeded decoding round trip"},
      {"decode", "decode words read from standard input"},
      {"lemma-suite", "brute-force lemma battery over F_{p^k}"},
  };
  for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: ParseError: " << e.what() << '\n';
    return qplee::cli::kExitPrecondition;
  }

  const auto* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  if (sub->count("--p")) cfg.p = p;
  if (sub->count("--cap")) cfg.cap = cap;
  if (sub->count("--family")) {
    try {
      cfg.family = qplee::parse_family(family);
    } catch (const qplee::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return qplee::cli::kExitPrecondition;
    }
  }
  return qplee::cli::run(cfg, std::cin, std::cout, std::cerr);
}
