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

// Finite fields F_q = F_p[t]/(g(t)) for small q, with a fixed enumeration
// order: the element sum_j c_j t^j has index sum_j c_j p^j. Index 0 is zero
// and index 1 is one. All arithmetic goes through precomputed q*q tables.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "antiorb/cyclotomic.hpp"

namespace antiorb {

class FqField {
 public:
  using Elem = std::uint32_t;

  /// Field with the shipped modulus for q (prime q, or q in {9, 25}).
  static std::shared_ptr<const FqField> make(unsigned q);
  /// Field F_p[t]/(modulus); modulus is monic, coefficients low to high,
  /// and must be irreducible over F_p.
  static std::shared_ptr<const FqField> make(unsigned p, std::vector<unsigned> modulus);

  unsigned p() const noexcept { return p_; }
  unsigned k() const noexcept { return k_; }
  unsigned q() const noexcept { return q_; }
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  /// Throws ArithmeticError on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// Absolute trace to F_p, as an integer in [0, p).
  unsigned trace(Elem a) const { return trace_[a]; }
  /// Image of an integer in the prime field.
  Elem from_int(long v) const;
  std::vector<unsigned> coeffs(Elem a) const;
  Elem from_coeffs(const std::vector<unsigned>& c) const;
  /// Smallest-index generator of the multiplicative group.
  Elem primitive_root() const noexcept { return gamma_; }
  bool is_square(Elem a) const;

  /// psi(x) = zeta_p^{Tr(x)}.
  CycNum character(Elem x) const { return CycNum::zeta_power(p_, static_cast<long>(trace(x))); }

  bool operator==(const FqField& other) const { return p_ == other.p_ && modulus_ == other.modulus_; }

  std::string describe() const;

 private:
  FqField(unsigned p, std::vector<unsigned> modulus);

  unsigned p_;
  unsigned k_;
  unsigned q_;
  std::vector<unsigned> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::vector<unsigned> trace_;
  Elem gamma_ = 1;
};

using FieldPtr = std::shared_ptr<const FqField>;

/// Monic polynomials over F_p given low-to-high; irreducibility by trial division.
bool is_irreducible_over_prime_field(unsigned p, const std::vector<unsigned>& poly);

/// A field element bundled with its field, for the value-level API.
class FqElem {
 public:
  FqElem(FieldPtr field, FqField::Elem index);

  const FieldPtr& field() const noexcept { return field_; }
  FqField::Elem index() const noexcept { return index_; }
  std::vector<unsigned> coeffs() const { return field_->coeffs(index_); }
  bool is_zero() const noexcept { return index_ == 0; }

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator*(const FqElem& o) const;
  FqElem operator/(const FqElem& o) const;
  FqElem operator-() const { return {field_, field_->neg(index_)}; }
  FqElem inv() const { return {field_, field_->inv(index_)}; }
  FqElem pow(std::uint64_t e) const { return {field_, field_->pow(index_, e)}; }
  unsigned trace() const { return field_->trace(index_); }

  bool operator==(const FqElem& o) const { return *field_ == *o.field_ && index_ == o.index_; }

 private:
  void require_same_field(const FqElem& o) const;

  FieldPtr field_;
  FqField::Elem index_;
};

enum class FqOp { add, sub, mul, inv, pow };

/// Binary ops use b; inv ignores b; pow raises a to the exponent b.index()
/// read as an integer (use FqElem::pow for larger exponents).
FqElem fq_arith(const FqElem& a, const FqElem& b, FqOp op);

/// psi(x) = zeta_p^{Tr(x)}.
CycNum additive_character(const FqElem& x);

}  // namespace antiorb
