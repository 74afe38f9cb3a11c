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

#ifndef HMDS_APPLICATIONS_HPP_
#define HMDS_APPLICATIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hmds/codes.hpp"
#include "hmds/mdscheck.hpp"

namespace hmds {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 50'000'000;

// Pass iff no L + 1 distinct vectors share a syndrome under the parity check of
// `code` with total weight <= L (n - k). With `up_to`, every level 1..L is
// checked (LD-MDS(<= L)).
CheckReport ld_mds_check(const CodeSpec& code, std::size_t list_size, bool up_to = true,
                         std::uint64_t budget = kDefaultEnumerationBudget);
// Compares MDS(l + 1) of `code` with LD-MDS(<= l) of its dual; pass iff the
// two verdicts agree.
CheckReport duality_test(const CodeSpec& code, std::size_t ell, std::uint64_t budget = kDefaultEnumerationBudget);
// Pass iff every Hamming ball of radius floor(rho n), rho = num / den, holds at
// most L codewords.
CheckReport worst_case_ld_check(const CodeSpec& code, std::size_t list_size, std::uint64_t radius_numerator,
                                std::uint64_t radius_denominator,
                                std::uint64_t budget = kDefaultEnumerationBudget);

// A set of cells of the m x n grid.
struct ErasurePattern {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // 0-based (row, column)

  // 1-based `r,c` pairs separated by semicolons.
  std::string to_string() const;
  static ErasurePattern parse(const std::string& text, std::size_t m, std::size_t n);
  std::vector<std::size_t> linear() const;
};

// C_col (an [m, m - a] code) tensored with C_row (an [n, n - b] code).
struct TensorCodeSpec {
  CodeSpec col;
  CodeSpec row;
  std::size_t m() const { return col.n; }
  std::size_t n() const { return row.n; }
  std::size_t a() const { return col.n - col.k; }
  std::size_t b() const { return row.n - row.k; }
};

// C_col = the [m, m - 1] parity code over the row code's field.
TensorCodeSpec parity_column_tensor(const CodeSpec& row, std::size_t m);
// Parity-check matrix of the tensor code; column index r * n + c stands for
// cell (r, c). Rows form a basis (rank mn - (m - a)(n - b)).
MatrixF tensor_parity(const TensorCodeSpec& spec);
MatrixF tensor_parity_from_checks(const MatrixF& h_col, const MatrixF& h_row);
bool pattern_correctable(const MatrixF& parity, const std::vector<std::size_t>& cells);

// Correctability of patterns for generic component codes of a given shape:
// random parity checks over the large prime field, majority over the trials.
// Results are memoized per pattern.
class GenericTensorOracle {
 public:
  GenericTensorOracle(std::size_t m, std::size_t n, std::size_t a, std::size_t b, std::uint64_t seed,
                      std::size_t trials = kGenericTrials);
  bool correctable(Mask cells);
  std::size_t rank() const { return rank_; }

 private:
  std::vector<MatrixF> parity_;
  std::size_t rank_ = 0;
  std::mutex mutex_;
  std::map<Mask, bool> memo_;
};

struct MrOptions {
  std::uint64_t pattern_budget = 1'000'000;
  std::size_t samples = 20'000;
  std::uint64_t seed = 0;
  std::size_t threads = 0;
  // Shared oracle for repeated checks of the same shape (optional).
  std::shared_ptr<GenericTensorOracle> oracle;
};
// Pass iff every pattern is correctable exactly when it is for generic
// component codes. Patterns larger than the generic parity rank are never
// correctable and are skipped; above the budget a fixed-seed sample is used.
CheckReport mr_check(const TensorCodeSpec& spec, const MrOptions& options = {});

}  // namespace hmds

#endif  // HMDS_APPLICATIONS_HPP_
