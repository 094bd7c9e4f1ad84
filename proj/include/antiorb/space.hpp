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

// Coordinatized F_q-spaces and exact function tables on them.
//
// A point is a coordinate vector (x_0, ..., x_{N-1}) of field elements and
// has mixed-radix index sum_j index(x_j) q^j. Every space carries a perfect
// pairing with a dual space of the same dimension, always of monomial shape:
//   kappa(x, y) = sum_j coef_j * x_j * y_{perm_j}.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "antiorb/cyclotomic.hpp"
#include "antiorb/finite_field.hpp"
#include "antiorb/segments.hpp"

namespace antiorb {

using Elem = FqField::Elem;

struct QuiverShape {
  unsigned m = 1;
  int eps = 1;  // +1 or -1
  DimVector dims;

  /// Number of coordinates: sum_i nu_i * nu_{i+eps}.
  std::size_t dim() const;
  /// Offset of block i in the coordinate list; block i is nu_{i+eps} x nu_i.
  std::size_t block_offset(unsigned i) const;
  unsigned target(unsigned i) const { return static_cast<unsigned>((i + m + eps) % m); }
  unsigned source_of(unsigned i) const { return static_cast<unsigned>((i + m - eps) % m); }

  bool operator==(const QuiverShape&) const = default;
};

class SpaceDescriptor {
 public:
  enum class Kind { quiver, generic, product };

  SpaceDescriptor() = default;

  /// E^eps_V with coordinates (i, row, col) ordered by i, then row-major.
  static SpaceDescriptor quiver(FieldPtr field, unsigned m, int eps, DimVector dims);
  static SpaceDescriptor generic(FieldPtr field, std::string name, std::string dual_name,
                                 std::vector<std::string> coords, std::vector<std::string> dual_coords,
                                 std::vector<std::uint32_t> perm, std::vector<Elem> coef);
  /// Cartesian product; coordinates concatenated, the dual is the product of duals.
  static SpaceDescriptor product(std::vector<SpaceDescriptor> factors);

  Kind kind() const noexcept { return kind_; }
  const FieldPtr& field() const noexcept { return field_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  /// q^N; throws BudgetExceeded above 2^40.
  std::uint64_t size() const;
  const std::vector<std::string>& coords() const noexcept { return coords_; }
  const std::vector<std::uint32_t>& pairing_perm() const noexcept { return perm_; }
  const std::vector<Elem>& pairing_coef() const noexcept { return coef_; }
  const std::optional<QuiverShape>& quiver_shape() const noexcept { return quiver_; }
  const std::vector<SpaceDescriptor>& factors() const noexcept { return factors_; }

  SpaceDescriptor dual() const;
  Elem pairing(std::span<const Elem> x, std::span<const Elem> y) const;

  std::vector<Elem> decode(std::uint64_t index) const;
  void decode(std::uint64_t index, std::span<Elem> out) const;
  std::uint64_t encode(std::span<const Elem> coords) const;

  bool operator==(const SpaceDescriptor& other) const;

 private:
  Kind kind_ = Kind::generic;
  FieldPtr field_;
  std::string name_;
  std::string dual_name_;
  std::vector<std::string> coords_;
  std::vector<std::string> dual_coords_;
  std::vector<std::uint32_t> perm_;
  std::vector<Elem> coef_;
  std::optional<QuiverShape> quiver_;
  std::vector<SpaceDescriptor> factors_;
};

/// Point budget shared by every dense enumeration; ANTIORB_BUDGET overrides.
std::uint64_t default_point_budget();
void check_budget(const std::string& what, std::uint64_t requested, std::uint64_t budget);

/// Dense table of exact values in Z[zeta_p] over a space, stored as p-1
/// canonical coefficient planes of int64.
class FuncTable {
 public:
  FuncTable() = default;
  explicit FuncTable(SpaceDescriptor space);
  FuncTable(SpaceDescriptor space, std::uint64_t budget);

  const SpaceDescriptor& space() const noexcept { return space_; }
  unsigned p() const noexcept { return p_; }
  std::uint64_t size() const noexcept { return size_; }

  CycNum value(std::uint64_t i) const;
  /// Throws ArithmeticError for non-integral values or coefficient overflow.
  void set(std::uint64_t i, const CycNum& v);
  void set_int(std::uint64_t i, std::int64_t v);
  std::int64_t coeff(unsigned plane, std::uint64_t i) const { return data_[plane * size_ + i]; }
  std::int64_t& coeff(unsigned plane, std::uint64_t i) { return data_[plane * size_ + i]; }
  bool is_zero_at(std::uint64_t i) const;
  bool is_zero() const;
  std::int64_t max_abs() const;

  /// this[i] += a[ia] * b[ib], exact in Z[zeta_p].
  void add_product(std::uint64_t i, const FuncTable& a, std::uint64_t ia, const FuncTable& b, std::uint64_t ib);
  void add_value(std::uint64_t i, const FuncTable& a, std::uint64_t ia);

  std::span<const std::int64_t> raw() const noexcept { return data_; }
  std::span<std::int64_t> raw() noexcept { return data_; }

  /// Number of sqrt(q) factors the table must be divided by to give the
  /// normalized Fourier convention (each unnormalized transform adds N).
  int sqrt_q_exponent() const noexcept { return sqrt_q_exponent_; }
  void set_sqrt_q_exponent(int e) noexcept { sqrt_q_exponent_ = e; }

  bool values_equal(const FuncTable& other) const;

 private:
  SpaceDescriptor space_;
  unsigned p_ = 0;
  std::uint64_t size_ = 0;
  std::vector<std::int64_t> data_;
  int sqrt_q_exponent_ = 0;
};

struct ColinearityReport {
  bool colinear = false;
  bool degenerate = false;       // both tables identically zero
  std::optional<CycNum> scalar;  // rhs = scalar * lhs when colinear and not degenerate
};

/// Decides whether rhs is an exact Q(zeta_p)-multiple of lhs.
ColinearityReport colinear(const FuncTable& lhs, const FuncTable& rhs);

/// If c is +-q^k for an integer k (possibly negative), returns k.
std::optional<int> q_power_exponent(const CycNum& c, unsigned q);

}  // namespace antiorb
