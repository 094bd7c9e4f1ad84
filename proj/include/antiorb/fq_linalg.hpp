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

// Dense matrices and univariate polynomials over a small finite field.
// Sizes in this project are tiny (a handful of rows), so everything is
// straightforward O(n^3) elimination on element indices.

#include <cstdint>
#include <vector>

#include "antiorb/finite_field.hpp"

namespace antiorb {

using Elem = FqField::Elem;

class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  FqMatrix(std::size_t rows, std::size_t cols, std::vector<Elem> data);

  static FqMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Elem>& data() const noexcept { return data_; }
  bool is_zero() const;

  bool operator==(const FqMatrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

FqMatrix mat_mul(const FqField& f, const FqMatrix& a, const FqMatrix& b);
FqMatrix mat_add(const FqField& f, const FqMatrix& a, const FqMatrix& b);
FqMatrix mat_scale(const FqField& f, Elem s, const FqMatrix& a);
FqMatrix transpose(const FqMatrix& a);
std::size_t rank(const FqField& f, FqMatrix a);
/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const FqField& f, FqMatrix& a);
/// Basis of {v : a v = 0}, as columns of the returned matrix.
FqMatrix kernel(const FqField& f, const FqMatrix& a);
/// Throws ArithmeticError when singular.
FqMatrix inverse(const FqField& f, const FqMatrix& a);
bool is_nilpotent(const FqField& f, const FqMatrix& a);

/// Polynomial over F_q, coefficients low to high, no trailing zeros.
using FqPoly = std::vector<Elem>;

void poly_trim(FqPoly& a);
int poly_degree(const FqPoly& a);
FqPoly poly_mul(const FqField& f, const FqPoly& a, const FqPoly& b);
FqPoly poly_sub(const FqField& f, const FqPoly& a, const FqPoly& b);
/// Quotient and remainder; b must be nonzero.
std::pair<FqPoly, FqPoly> poly_divmod(const FqField& f, FqPoly a, const FqPoly& b);
FqPoly poly_gcd(const FqField& f, FqPoly a, FqPoly b);
FqPoly poly_make_monic(const FqField& f, FqPoly a);
FqPoly poly_powmod(const FqField& f, FqPoly base, std::uint64_t e, const FqPoly& mod);

/// det(x I - a), monic of degree n.
FqPoly charpoly(const FqField& f, const FqMatrix& a);
/// g(a) for a square matrix.
FqMatrix poly_eval(const FqField& f, const FqPoly& g, const FqMatrix& a);
/// Distinct monic irreducible factors, sorted by (degree, coefficients).
std::vector<FqPoly> distinct_irreducible_factors(const FqField& f, const FqPoly& a);
/// Companion matrix of a monic polynomial.
FqMatrix companion(const FqField& f, const FqPoly& g);

}  // namespace antiorb
