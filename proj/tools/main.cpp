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


// Command-line front end: construct codes, run checks and searches, verify
// the polynomial certificates and run the acceptance suites.
//
// Exit codes: 0 pass, 1 fail, 2 usage or parse error, 3 budget exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hmds/acceptance.hpp"
#include "hmds/applications.hpp"
#include "hmds/certificates.hpp"
#include "hmds/code_io.hpp"
#include "hmds/constructions.hpp"
#include "hmds/error.hpp"
#include "hmds/mdscheck.hpp"
#include "hmds/report.hpp"
#include "hmds/text.hpp"

namespace {

using hmds::CheckReport;
using hmds::Error;
using hmds::ErrorCode;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct GlobalOptions {
  std::size_t threads = 0;
  std::uint64_t seed = 0;
  std::string format = "text";
  bool no_time = false;

  hmds::ReportOptions report() const {
    hmds::ReportOptions r;
    r.format = format == "json" ? hmds::ReportFormat::kJsonLines : hmds::ReportFormat::kText;
    r.include_time = !no_time;
    return r;
  }
  hmds::CheckOptions check(const std::string& method = "auto") const {
    hmds::CheckOptions c;
    c.threads = threads;
    if (method == "block") c.method = hmds::CheckOptions::Method::kBlock;
    if (method == "product") c.method = hmds::CheckOptions::Method::kProductMatrix;
    if (method == "pairing") c.method = hmds::CheckOptions::Method::kPairing;
    return c;
  }
};

int ExitFor(const CheckReport& r) { return r.passed() ? kExitPass : kExitFail; }

int Emit(const CheckReport& r, const GlobalOptions& g) {
  std::cout << hmds::format_report(r, g.report()) << "\n";
  return ExitFor(r);
}

std::pair<std::uint64_t, std::uint64_t> ParseRatio(const std::string& s) {
  const std::vector<std::string> parts = hmds::text::Split(s, '/');
  if (parts.size() == 1) return {hmds::text::ParseU64(parts[0]), 1};
  if (parts.size() != 2) throw Error(ErrorCode::kParseError, "expected a ratio like 1/3: " + s);
  return {hmds::text::ParseU64(parts[0]), hmds::text::ParseU64(parts[1])};
}

struct ConstructArgs {
  std::string name;
  std::size_t n = 0;
  std::optional<std::size_t> k, ell, degree;
  std::optional<std::uint64_t> q;
  bool bch = false;
  std::uint64_t cap = std::uint64_t{1} << 20;
  std::string out;
};

int RunConstruct(const ConstructArgs& a, const GlobalOptions& g) {
  hmds::ConstructionParams p;
  p.name = a.name;
  p.n = a.n;
  p.k = a.k;
  p.ell = a.ell;
  p.degree = a.degree;
  p.q = a.q;
  p.bch = a.bch;
  p.coefficient_cap = a.cap;
  const hmds::Construction c = hmds::construct(p);
  for (const std::string& w : c.warnings) std::cerr << "warning: " << w << "\n";
  if (a.out.empty() || a.out == "-") {
    std::cout << hmds::serialize_code(c.code, c.provenance);
  } else {
    hmds::write_code_file(a.out, c.code, c.provenance);
    std::vector<std::pair<std::string, std::string>> fields = {{"construction", c.name}, {"file", a.out}};
    fields.insert(fields.end(), c.provenance.begin(), c.provenance.end());
    std::cout << hmds::format_record(fields, g.report()) << "\n";
  }
  return kExitPass;
}

struct CheckArgs {
  std::string file;
  std::string property = "mds3";
  std::size_t ell = 3;
  std::string method = "auto";
  std::size_t m = 3;
  std::size_t list = 2;
  std::uint64_t budget = hmds::kDefaultEnumerationBudget;
};

int RunCheck(const CheckArgs& a, const GlobalOptions& g) {
  const hmds::CodeSpec code = hmds::read_code_file(a.file).code;
  const std::string& prop = a.property;
  if (prop == "mds") return Emit(hmds::is_mds(code, g.check()), g);
  if (prop == "mds3") {
    if (a.method == "auto" && code.is_rs()) return Emit(hmds::is_mds3_rs_fast(code, g.check()), g);
    if (a.method == "pairing") return Emit(hmds::is_mds3_rs_fast(code, g.check()), g);
    return Emit(hmds::is_mds_ell(code, 3, g.check(a.method)), g);
  }
  if (prop == "mdsL" || prop == "mdsl") return Emit(hmds::is_mds_ell(code, a.ell, g.check(a.method)), g);
  if (prop == "lb") return Emit(hmds::lb_witness_projective(code), g);
  if (prop == "ld") return Emit(hmds::ld_mds_check(code, a.list, true, a.budget), g);
  if (prop == "duality") return Emit(hmds::duality_test(code, a.ell, a.budget), g);
  if (prop == "mr") {
    hmds::MrOptions mr;
    mr.seed = g.seed;
    mr.threads = g.threads;
    return Emit(hmds::mr_check(hmds::parity_column_tensor(code, a.m), mr), g);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown property: " + prop);
}

struct SearchArgs {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t q = 0;
  std::uint64_t budget = hmds::kDefaultSearchBudget;
  bool exemplars = false;
};

int RunSearch(const SearchArgs& a, const GlobalOptions& g) {
  const auto pq = hmds::AsPrimePower(a.q);
  if (!pq) throw Error(ErrorCode::kInvalidArgument, "q must be a prime power");
  const hmds::FieldPtr field = hmds::MakeBaseField(*pq);
  const hmds::SearchResult s = hmds::exhaustive_code_search(a.n, a.k, field, a.budget, g.threads);
  std::vector<std::pair<std::string, std::string>> fields = {
      {"search", "mds3"},
      {"n", std::to_string(a.n)},
      {"k", std::to_string(a.k)},
      {"q", std::to_string(a.q)},
      {"count", std::to_string(s.count)},
      {"distinct_codes", std::to_string(s.distinct_codes)},
      {"candidates", std::to_string(s.candidates)},
      {"mds_codes", std::to_string(s.mds_codes)}};
  if (!g.no_time) {
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(3);
    t << s.time_ms;
    fields.emplace_back("time_ms", t.str());
  }
  std::cout << hmds::format_record(fields, g.report()) << "\n";
  if (a.exemplars) {
    for (const hmds::CodeSpec& c : s.exemplars) std::cout << hmds::serialize_code(c) << "\n";
  }
  return kExitPass;
}

struct TensorArgs {
  std::string row;
  std::string col;
  std::size_t m = 3;
  std::string pattern;
  std::uint64_t budget = 1'000'000;
  std::size_t samples = 20'000;
};

int RunTensor(const TensorArgs& a, const GlobalOptions& g) {
  const hmds::CodeSpec row = hmds::read_code_file(a.row).code;
  const hmds::TensorCodeSpec spec = a.col.empty() ? hmds::parity_column_tensor(row, a.m)
                                                  : hmds::TensorCodeSpec{hmds::read_code_file(a.col).code, row};
  if (!a.pattern.empty()) {
    const hmds::ErasurePattern e = hmds::ErasurePattern::parse(a.pattern == "-" ? "" : a.pattern, spec.m(), spec.n());
    const hmds::MatrixF h = hmds::tensor_parity(spec);
    const bool ok = hmds::pattern_correctable(h, e.linear());
    hmds::GenericTensorOracle oracle(spec.m(), spec.n(), spec.a(), spec.b(), g.seed);
    const bool generic = oracle.correctable(hmds::MaskOf(e.linear()));
    std::cout << hmds::format_record({{"pattern", e.to_string()},
                                      {"correctable", ok ? "yes" : "no"},
                                      {"generic_correctable", generic ? "yes" : "no"},
                                      {"parity_rank", std::to_string(h.rows())}},
                                     g.report())
              << "\n";
    return ok ? kExitPass : kExitFail;
  }
  hmds::MrOptions mr;
  mr.seed = g.seed;
  mr.threads = g.threads;
  mr.pattern_budget = a.budget;
  mr.samples = a.samples;
  return Emit(hmds::mr_check(spec, mr), g);
}

struct LdArgs {
  std::string file;
  std::size_t list = 2;
  bool exact = false;
  std::string radius;
  bool dual = false;
  std::uint64_t budget = hmds::kDefaultEnumerationBudget;
};

int RunLd(const LdArgs& a, const GlobalOptions& g) {
  hmds::CodeSpec code = hmds::read_code_file(a.file).code;
  if (a.dual) code = hmds::dual_code(code);
  if (!a.radius.empty()) {
    const auto [num, den] = ParseRatio(a.radius);
    return Emit(hmds::worst_case_ld_check(code, a.list, num, den, a.budget), g);
  }
  return Emit(hmds::ld_mds_check(code, a.list, !a.exact, a.budget), g);
}

struct CertArgs {
  bool char2 = false;
  std::string data;
  std::uint64_t budget = hmds::kDefaultPairBudget;
};

int RunCertificates(const CertArgs& a, const GlobalOptions& g) {
  int exit = kExitPass;
  auto line = [&](const std::string& name, const std::string& verdict,
                  std::vector<std::pair<std::string, std::string>> extra) {
    std::vector<std::pair<std::string, std::string>> fields = {{"certificate", name}, {"verdict", verdict}};
    fields.insert(fields.end(), extra.begin(), extra.end());
    std::cout << hmds::format_record(fields, g.report()) << "\n";
    if (verdict == "fail") exit = kExitFail;
    if (verdict == "inconclusive" && exit == kExitPass) exit = kExitBudget;
  };
  std::optional<hmds::ClaimQData> data;
  if (!a.data.empty()) {
    std::ifstream in(a.data);
    if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + a.data);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      data = hmds::parse_claim_q_data(buf.str());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kChecksumMismatch) throw;
      line("q-data-checksum", "fail", {{"error", "checksum mismatch"}});
      return kExitFail;
    }
  }
  for (hmds::Coeff p : {hmds::Coeff{7}, hmds::Coeff{11}}) {
    const bool ok = data ? hmds::verify_claim_q_identity(p, *data) : hmds::verify_claim_q_identity(p);
    line("q-identity", ok ? "pass" : "fail", {{"characteristic", std::to_string(p)}});
  }
  line("p1-checksum", hmds::verify_p1_checksum(7) ? "pass" : "fail", {{"characteristic", "7"}});
  auto membership = [&](const std::string& name, auto&& run) {
    for (const hmds::MonomialOrder& order : {hmds::MonomialOrder::DegRevLex(), hmds::MonomialOrder::Lex()}) {
      try {
        const hmds::MembershipResult m = run(order);
        line(name, m.member ? "pass" : "fail",
             {{"order", order.name()},
              {"pairs", std::to_string(m.pairs_processed)},
              {"basis_size", std::to_string(m.basis_size)},
              {"remainder_terms", std::to_string(m.remainder.size())}});
        return;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kBudgetExceeded) throw;
      }
    }
    line(name, "inconclusive", {{"reason", "pair budget exceeded under both orders"}});
  };
  membership("claim-groebner", [&](const hmds::MonomialOrder& o) { return hmds::check_claim_groebner(o, a.budget); });
  if (a.char2) {
    membership("char2-membership",
               [&](const hmds::MonomialOrder& o) { return hmds::verify_char2_membership(o, a.budget); });
  }
  return exit;
}

int RunAcceptance(const std::string& suite, const GlobalOptions& g) {
  hmds::acceptance_suite_criteria(suite);  // validates the name before running anything
  hmds::AcceptanceOptions o;
  o.threads = g.threads;
  o.seed = g.seed;
  std::optional<int> first_failure;
  hmds::run_acceptance(suite, o, [&](const hmds::CriterionResult& r) {
    std::cout << hmds::format_criterion(r) << std::endl;
    if (r.verdict == hmds::Verdict::kFail && !first_failure) first_failure = r.id;
  });
  if (first_failure) {
    std::cout << "first failing criterion: " << *first_failure << "\n";
    return kExitFail;
  }
  return kExitPass;
}

int ExitForError(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kBudgetExceeded:
      return kExitBudget;
    case ErrorCode::kParseError:
    case ErrorCode::kInvalidArgument:
      return kExitUsage;
    default:
      return kExitFail;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hmds: construct and verify higher-order MDS codes"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--threads", g.threads, "Worker threads (0: HMDS_THREADS or all cores)");
  app.add_option("--seed", g.seed, "Seed for randomized oracles")->capture_default_str();
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_flag("--no-time", g.no_time, "Omit timings so reports are byte-identical across runs");

  ConstructArgs ca;
  CLI::App* construct = app.add_subcommand("construct", "Build an explicit code and write its code file");
  construct->add_option("--name", ca.name, "k3-n4 | k3-n3 | k4-general | k5-weak | general-ell")->required();
  construct->add_option("--n", ca.n, "Code length")->required();
  construct->add_option("--k", ca.k, "Dimension (k4-general, k5-weak, general-ell)");
  construct->add_option("--ell", ca.ell, "Order l (general-ell)");
  construct->add_option("--degree", ca.degree, "Extension degree (k5-weak) or per-level degree D (general-ell)");
  construct->add_option("--q", ca.q, "Base field order override (k5-weak)");
  construct->add_flag("--bch", ca.bch, "Sidon set from BCH parity-check columns (k5-weak)");
  construct->add_option("--cap", ca.cap, "Coefficient cap per element (general-ell)");
  construct->add_option("-o,--out", ca.out, "Output file (default: standard output)");

  CheckArgs ck;
  CLI::App* check = app.add_subcommand("check", "Check a property of a code file");
  check->add_option("file", ck.file, "Code file")->required();
  check->add_option("--property", ck.property, "mds | mds3 | mdsL | lb | ld | duality | mr")->capture_default_str();
  check->add_option("--ell", ck.ell, "Order l for mdsL and duality")->capture_default_str();
  check->add_option("--method", ck.method, "auto | block | product | pairing")
      ->check(CLI::IsMember({"auto", "block", "product", "pairing"}))
      ->capture_default_str();
  check->add_option("--m", ck.m, "Column length of the tensor (mr)")->capture_default_str();
  check->add_option("--list", ck.list, "List size L (ld)")->capture_default_str();
  check->add_option("--budget", ck.budget, "Enumeration budget (ld, duality)")->capture_default_str();

  SearchArgs sa;
  CLI::App* search = app.add_subcommand("search", "Count MDS(3) codes among all [n,k] codes over F_q");
  search->add_option("--n", sa.n, "Code length")->required();
  search->add_option("--k", sa.k, "Dimension")->required();
  search->add_option("--q", sa.q, "Field order (prime power)")->required();
  search->add_option("--budget", sa.budget, "Maximum candidates")->capture_default_str();
  search->add_flag("--exemplars", sa.exemplars, "Print up to ten MDS(3) codes found");

  TensorArgs ta;
  CLI::App* tensor = app.add_subcommand("tensor-check", "Maximal recoverability of a tensor code");
  tensor->add_option("--row", ta.row, "Row code file")->required();
  tensor->add_option("--col", ta.col, "Column code file (default: [m, m-1] parity code)");
  tensor->add_option("--m", ta.m, "Column length when --col is absent")->capture_default_str();
  tensor->add_option("--pattern", ta.pattern, "Single erasure pattern `r,c;r,c` (1-based; `-` for none) to test");
  tensor->add_option("--budget", ta.budget, "Exhaustive pattern budget")->capture_default_str();
  tensor->add_option("--samples", ta.samples, "Samples when over budget")->capture_default_str();

  LdArgs la;
  CLI::App* ld = app.add_subcommand("ld-check", "List-decoding checks");
  ld->add_option("file", la.file, "Code file")->required();
  ld->add_option("--list", la.list, "List size L")->capture_default_str();
  ld->add_flag("--exact", la.exact, "Check LD-MDS(L) only instead of every level up to L");
  ld->add_option("--radius", la.radius, "Worst-case radius rho as num/den (switches to the worst-case check)");
  ld->add_flag("--dual", la.dual, "Check the dual of the code");
  ld->add_option("--budget", la.budget, "Enumeration budget")->capture_default_str();

  CertArgs cert;
  CLI::App* certs = app.add_subcommand("verify-certificates", "Verify the polynomial certificates");
  certs->add_flag("--char2", cert.char2, "Also verify the characteristic-2 membership");
  certs->add_option("--data", cert.data, "Q-identity data file (default: embedded copy)");
  certs->add_option("--budget", cert.budget, "Buchberger pair budget")->capture_default_str();

  std::string suite;
  CLI::App* acceptance = app.add_subcommand("acceptance", "Run an acceptance suite");
  acceptance->add_option("suite", suite, "constructions | lower-bound | certificates | oracles | duality | "
                                         "properties | all | <criterion number>")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (construct->parsed()) return RunConstruct(ca, g);
    if (check->parsed()) return RunCheck(ck, g);
    if (search->parsed()) return RunSearch(sa, g);
    if (tensor->parsed()) return RunTensor(ta, g);
    if (ld->parsed()) return RunLd(la, g);
    if (certs->parsed()) return RunCertificates(cert, g);
    if (acceptance->parsed()) return RunAcceptance(suite, g);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitForError(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
