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


#include "hmds/code_io.hpp"

#include <fstream>
#include <sstream>

#include "hmds/error.hpp"
#include "hmds/text.hpp"

namespace hmds {

std::string serialize_code(const CodeSpec& code,
                           const std::vector<std::pair<std::string, std::string>>& provenance) {
  std::string out;
  for (const auto& [key, value] : provenance) out += "# " + key + "=" + value + "\n";
  out += code.field->describe();
  out += "code n=" + std::to_string(code.n) + " k=" + std::to_string(code.k) +
         " kind=" + (code.is_rs() ? "rs" : "explicit") + "\n";
  if (code.is_rs()) {
    for (const FieldElement& g : code.generators) out += "gen " + g.to_string() + "\n";
  } else {
    for (std::size_t i = 0; i < code.matrix.rows(); ++i) {
      out += "row";
      for (std::size_t j = 0; j < code.matrix.cols(); ++j) out += " " + code.matrix.at(i, j).to_string();
      out += "\n";
    }
  }
  return out;
}

CodeFile parse_code(const std::string& textual) {
  CodeFile result;
  std::vector<std::string> field_lines;
  std::vector<std::string> body;
  std::string header;
  std::istringstream in(textual);
  std::string raw;
  while (std::getline(in, raw)) {
    const std::string line = text::Trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string rest = text::Trim(line.substr(1));
      const std::size_t eq = rest.find('=');
      if (eq != std::string::npos) result.provenance.emplace_back(rest.substr(0, eq), rest.substr(eq + 1));
      continue;
    }
    if (header.empty()) {
      if (text::StartsWith(line, "code ")) {
        header = line;
      } else {
        field_lines.push_back(line);
      }
    } else {
      body.push_back(line);
    }
  }
  if (header.empty()) throw Error(ErrorCode::kParseError, "missing 'code n= k= kind=' line");
  const FieldPtr field = parse_field_block(field_lines);
  auto kv = text::ParseKeyValues(header);
  if (!kv.count("n") || !kv.count("k") || !kv.count("kind")) {
    throw Error(ErrorCode::kParseError, "code line needs n=, k= and kind=");
  }
  const std::size_t n = text::ParseU64(kv["n"]);
  const std::size_t k = text::ParseU64(kv["k"]);
  const std::string kind = kv["kind"];
  if (kind == "rs") {
    std::vector<FieldElement> gens;
    for (const std::string& line : body) {
      if (!text::StartsWith(line, "gen ")) throw Error(ErrorCode::kParseError, "expected 'gen' line: " + line);
      gens.push_back(parse_element(field, line.substr(4)));
    }
    if (gens.size() != n) throw Error(ErrorCode::kParseError, "expected n gen lines");
    result.code = CodeSpec::reed_solomon(field, std::move(gens), k);
  } else if (kind == "explicit") {
    std::vector<std::vector<FieldElement>> rows;
    for (const std::string& line : body) {
      if (!text::StartsWith(line, "row")) throw Error(ErrorCode::kParseError, "expected 'row' line: " + line);
      std::vector<FieldElement> row;
      for (const std::string& part : text::Split(text::Trim(line.substr(3)), ' ')) {
        if (!part.empty()) row.push_back(parse_element(field, part));
      }
      if (row.size() != n) throw Error(ErrorCode::kParseError, "row length differs from n");
      rows.push_back(std::move(row));
    }
    if (rows.size() != k) throw Error(ErrorCode::kParseError, "expected k row lines");
    if (k == 0) {
      result.code.field = field;
      result.code.n = n;
      result.code.k = 0;
      result.code.matrix = MatrixF(field, 0, n);
    } else {
      result.code = CodeSpec::explicit_code(MatrixF::from_rows(field, rows));
    }
  } else {
    throw Error(ErrorCode::kParseError, "unknown code kind: " + kind);
  }
  return result;
}

CodeFile read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_code(buf.str());
}

void write_code_file(const std::string& path, const CodeSpec& code,
                     const std::vector<std::pair<std::string, std::string>>& provenance) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << serialize_code(code, provenance);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "failed writing " + path);
}

}  // namespace hmds
