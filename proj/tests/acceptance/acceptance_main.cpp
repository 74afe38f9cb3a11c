// Copyright 2026 The hmds Authors
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


// Runs every acceptance criterion and prints one line per criterion. The exit
// status is nonzero when any criterion fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "hmds/acceptance.hpp"
#include "hmds/error.hpp"

int main(int argc, char** argv) {
  const std::string suite = argc > 1 ? argv[1] : "all";
  int failures = 0;
  int inconclusive = 0;
  try {
    const auto results = hmds::run_acceptance(suite, {}, [](const hmds::CriterionResult& r) {
      std::cout << hmds::format_criterion(r) << std::endl;
    });
    for (const auto& r : results) {
      if (r.verdict == hmds::Verdict::kFail) ++failures;
      if (r.verdict == hmds::Verdict::kInconclusive) ++inconclusive;
    }
    std::cout << "acceptance: " << results.size() - failures - inconclusive << " pass, " << failures << " fail, "
              << inconclusive << " inconclusive" << std::endl;
  } catch (const hmds::Error& e) {
    std::cerr << e.what() << std::endl;
    return 2;
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
