/* Copyright (c) 2026 The antiorb Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */


#pragma once

// Gaussian elimination over Q(zeta_p).

#include <cstddef>
#include <vector>

#include "antiorb/cyclotomic.hpp"

namespace antiorb {

/// Incremental reduced row echelon form; rows are fed one at a time so that
/// huge, highly redundant systems never need to be materialized.
class CycRowReducer {
 public:
  CycRowReducer(unsigned p, std::size_t ncols);

  /// Returns true if the row raised the rank.
  bool add_row(std::vector<CycNum> row);
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return ncols_; }
  bool full() const noexcept { return rows_.size() == ncols_; }
  /// Basis of {a : R a = 0}, one vector per free column.
  std::vector<std::vector<CycNum>> nullspace() const;

 private:
  unsigned p_;
  std::size_t ncols_;
  std::vector<std::vector<CycNum>> rows_;  // RREF, pivots ascending
  std::vector<std::size_t> pivots_;
};

std::vector<std::vector<CycNum>> nullspace(unsigned p, std::size_t ncols, const std::vector<std::vector<CycNum>>& rows);

/// Scales a vector by a positive rational so every coefficient lies in
/// Z[zeta_p] with coprime content.
std::vector<CycNum> clear_denominators(const std::vector<CycNum>& v);

}  // namespace antiorb
