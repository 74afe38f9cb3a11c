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


#include "hmds/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace hmds {
namespace {

std::string FormatMillis(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", ms);
  return buf;
}

std::string WitnessOf(const CheckReport& r) {
  if (r.witness) return r.witness->to_string();
  return r.witness_text;
}

}  // namespace

std::string format_report(const CheckReport& r, const ReportOptions& options) {
  const std::string witness = WitnessOf(r);
  if (options.format == ReportFormat::kJsonLines) {
    nlohmann::ordered_json j;
    j["property"] = r.property;
    j["verdict"] = VerdictName(r.verdict);
    j["tuples"] = r.tuples;
    if (options.include_time) j["time_ms"] = std::stod(FormatMillis(r.time_ms));
    if (!witness.empty()) j["witness"] = witness;
    if (r.reduced_witness) j["reduced_witness"] = r.reduced_witness->to_string();
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.details) details[key] = value;
    j["details"] = details;
    return j.dump();
  }
  std::string out = "property=" + r.property + " verdict=" + VerdictName(r.verdict) +
                    " tuples=" + std::to_string(r.tuples);
  if (options.include_time) out += " time_ms=" + FormatMillis(r.time_ms);
  if (!witness.empty()) out += " witness=" + witness;
  if (r.reduced_witness) out += " reduced_witness=" + r.reduced_witness->to_string();
  for (const auto& [key, value] : r.details) out += " " + key + "=" + value;
  return out;
}

std::string format_record(const std::vector<std::pair<std::string, std::string>>& fields,
                          const ReportOptions& options) {
  if (options.format == ReportFormat::kJsonLines) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [key, value] : fields) j[key] = value;
    return j.dump();
  }
  std::string out;
  for (const auto& [key, value] : fields) {
    if (!out.empty()) out += ' ';
    out += key + "=" + value;
  }
  return out;
}

}  // namespace hmds
