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

#ifndef HMDS_ACCEPTANCE_HPP_
#define HMDS_ACCEPTANCE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hmds/mdscheck.hpp"

namespace hmds {

struct CriterionResult {
  int id = 0;
  std::string title;
  Verdict verdict = Verdict::kFail;
  // Short human-readable facts (counts, parameters, disagreements).
  std::string summary;
  double seconds = 0;
  double limit_seconds = 0;
};

struct AcceptanceOptions {
  std::size_t threads = 0;
  std::uint64_t seed = 0;
};

// Suites: constructions (1-5), lower-bound (6-7), certificates (8),
// oracles (9), duality (10), properties (11), all (1-11); a bare number runs
// that criterion alone.
const std::vector<std::string>& AcceptanceSuiteNames();
// Throws Error(kInvalidArgument) for an unknown suite.
std::vector<int> acceptance_suite_criteria(const std::string& suite);
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});
// Runs the criteria in order, calling `on_result` after each one.
std::vector<CriterionResult> run_acceptance(const std::string& suite, const AcceptanceOptions& options = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});
// `criterion <id> <PASS|FAIL|INCONCLUSIVE> <title> (<seconds>s of <limit>s): <summary>`
std::string format_criterion(const CriterionResult& result);

}  // namespace hmds

#endif  // HMDS_ACCEPTANCE_HPP_
