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


#include "antiorb/exact_linalg.hpp"

#include <algorithm>

#include "antiorb/errors.hpp"

namespace antiorb {

CycRowReducer::CycRowReducer(unsigned p, std::size_t ncols) : p_(p), ncols_(ncols) { require_odd_prime(p); }

bool CycRowReducer::add_row(std::vector<CycNum> row) {
  if (row.size() != ncols_) throw UsageError("CycRowReducer: row length mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const CycNum c = row[pivots_[r]];
    if (c.is_zero()) continue;
    for (std::size_t j = pivots_[r]; j < ncols_; ++j) {
      if (!rows_[r][j].is_zero()) row[j] -= c * rows_[r][j];
    }
  }
  std::size_t lead = 0;
  while (lead < ncols_ && row[lead].is_zero()) ++lead;
  if (lead == ncols_) return false;
  const CycNum inv = row[lead].inverse();
  for (std::size_t j = lead; j < ncols_; ++j) {
    if (!row[j].is_zero()) row[j] *= inv;
  }
  for (auto& other : rows_) {
    const CycNum c = other[lead];
    if (c.is_zero()) continue;
    for (std::size_t j = lead; j < ncols_; ++j) {
      if (!row[j].is_zero()) other[j] -= c * row[j];
    }
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(row));
  return true;
}

std::vector<std::vector<CycNum>> CycRowReducer::nullspace() const {
  std::vector<std::vector<CycNum>> out;
  std::vector<bool> is_pivot(ncols_, false);
  for (auto c : pivots_) is_pivot[c] = true;
  for (std::size_t free = 0; free < ncols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<CycNum> v(ncols_, CycNum(p_));
    v[free] = CycNum::from_int(p_, 1);
    for (std::size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = -rows_[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<CycNum>> nullspace(unsigned p, std::size_t ncols, const std::vector<std::vector<CycNum>>& rows) {
  CycRowReducer red(p, ncols);
  for (const auto& r : rows) {
    red.add_row(r);
    if (red.full()) break;
  }
  return red.nullspace();
}

std::vector<CycNum> clear_denominators(const std::vector<CycNum>& v) {
  mpz_class den = 1;
  mpz_class content = 0;
  for (const auto& x : v) {
    for (const auto& c : x.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  for (const auto& x : v) {
    for (const auto& c : x.coeffs()) {
      const mpz_class n = c.get_num() * (den / c.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    }
  }
  if (content == 0) return v;
  mpq_class factor(den, content);
  factor.canonicalize();
  std::vector<CycNum> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.scaled(factor));
  return out;
}

}  // namespace antiorb
