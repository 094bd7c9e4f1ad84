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

// Exact arithmetic in the cyclotomic field Q(zeta_p) for an odd prime p.
//
// A value is stored as p-1 rational coefficients c_0..c_{p-2} of
// sum_j c_j zeta^j. The power zeta^{p-1} never appears: it is rewritten as
// -(1 + zeta + ... + zeta^{p-2}), so coefficient vectors are canonical and
// equality is coefficientwise.

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace antiorb {

class CycNum {
 public:
  CycNum() = default;
  /// Zero of Q(zeta_p).
  explicit CycNum(unsigned p);

  static CycNum from_int(unsigned p, long value);
  static CycNum from_rational(unsigned p, const mpq_class& value);
  /// zeta^k for any integer k.
  static CycNum zeta_power(unsigned p, long k);
  /// Accepts p-1 canonical coefficients or p redundant ones (reduced here).
  static CycNum from_coeffs(unsigned p, std::vector<mpq_class> coeffs);
  static CycNum from_int_coeffs(unsigned p, std::span<const std::int64_t> coeffs);

  unsigned p() const noexcept { return p_; }
  bool valid() const noexcept { return p_ != 0; }
  const std::vector<mpq_class>& coeffs() const noexcept { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_integral() const;
  /// Throws ArithmeticError unless the value lies in Q.
  mpq_class rational_value() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& other);
  CycNum& operator-=(const CycNum& other);
  CycNum& operator*=(const CycNum& other);
  CycNum& operator/=(const CycNum& other);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);

  CycNum scaled(const mpq_class& factor) const;
  /// Image under zeta -> zeta^k, gcd(k, p) = 1.
  CycNum galois(long k) const;
  /// Complex conjugation, zeta -> zeta^{-1}.
  CycNum conj() const { return galois(-1); }
  /// Field norm to Q: product of all Galois conjugates.
  mpq_class norm() const;
  CycNum inverse() const;

  /// Evaluates at exp(2 pi i * root_index / p); used only for bound checks.
  std::complex<double> embed(unsigned root_index) const;

  /// Human-readable form, e.g. "-1", "2*z + 1/3*z^3".
  std::string to_string() const;

 private:
  void require_same_field(const CycNum& other) const;

  unsigned p_ = 0;
  std::vector<mpq_class> c_;
};

enum class CycOp { add, sub, mul, div };

CycNum cyc_arith(const CycNum& a, const CycNum& b, CycOp op);
std::complex<double> embed_complex(const CycNum& a, unsigned root_index);

/// Throws UsageError unless p is an odd prime.
void require_odd_prime(unsigned p);
bool is_prime(std::uint64_t n);

}  // namespace antiorb
