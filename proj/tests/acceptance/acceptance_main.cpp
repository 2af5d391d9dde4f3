// Copyright 2026 The tunehorizon Authors.
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


// Acceptance suite runner: one PASS/FAIL line per criterion.
//
//   acceptance_tests [--only NAME]...
//
// Exits 0 when every selected criterion passes, 1 otherwise, 2 on bad usage.

#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "th/cli/verify.hpp"

int main(int argc, char** argv) {
  std::vector<const th::cli::Criterion*> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg != "--only" || i + 1 >= argc) {
      std::fprintf(stderr, "usage: %s [--only NAME]...\n", argv[0]);
      return 2;
    }
    const auto* c = th::cli::find_criterion(argv[++i]);
    if (c == nullptr) {
      std::fprintf(stderr, "unknown criterion '%s'\n", argv[i]);
      return 2;
    }
    selected.push_back(c);
  }
  if (selected.empty()) {
    for (const auto& c : th::cli::criteria()) selected.push_back(&c);
  }

  th::cli::VerifyHooks hooks;
#ifdef TH_CLI_PATH
  hooks.cli_path = TH_CLI_PATH;
#endif

  int failed = 0;
  for (const auto* c : selected) {
    const auto r = th::cli::run_criterion(*c, hooks);
    failed += r.passed ? 0 : 1;
    std::printf("%s criterion %2d %-18s (%.2f s, budget %.0f s): %s\n", r.passed ? "PASS" : "FAIL",
                c->number, std::string(c->name).c_str(), r.seconds, r.budget_seconds,
                r.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
