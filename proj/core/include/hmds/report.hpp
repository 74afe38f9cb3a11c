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

#ifndef HMDS_REPORT_HPP_
#define HMDS_REPORT_HPP_

#include <string>
#include <utility>
#include <vector>

#include "hmds/mdscheck.hpp"

namespace hmds {

enum class ReportFormat { kText, kJsonLines };

struct ReportOptions {
  ReportFormat format = ReportFormat::kText;
  // Omitting the timing makes reports byte-identical across runs.
  bool include_time = true;
};

// One line (no trailing newline):
// `property=<name> verdict=<v> tuples=<count> time_ms=<t> [witness=<w>] [key=value...]`
// or a JSON object with the same fields and a `details` object.
std::string format_report(const CheckReport& report, const ReportOptions& options = {});

// A free-form record (one line) in the same format, for results that are not
// CheckReports (constructions, searches, certificates).
std::string format_record(const std::vector<std::pair<std::string, std::string>>& fields,
                          const ReportOptions& options = {});

}  // namespace hmds

#endif  // HMDS_REPORT_HPP_
