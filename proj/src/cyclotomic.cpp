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

#include "antiorb/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "antiorb/errors.hpp"

namespace antiorb {

namespace {

long mod_floor(long a, long p) {
  long r = a % p;
  return r < 0 ? r + p : r;
}

// Canonical p-1 coefficients from a length-p vector in Z[x]/(x^p - 1).
std::vector<mpq_class> reduce(std::vector<mpq_class> full, unsigned p) {
  const mpq_class top = full[p - 1];
  full.resize(p - 1);
  if (top != 0) {
    for (auto& c : full) c -= top;
  }
  return full;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_odd_prime(unsigned p) {
  if (p < 3 || !is_prime(p)) {
    throw UsageError("cyclotomic order must be an odd prime, got " + std::to_string(p));
  }
}

CycNum::CycNum(unsigned p) : p_(p), c_(p - 1) { require_odd_prime(p); }

CycNum CycNum::from_int(unsigned p, long value) {
  CycNum r(p);
  r.c_[0] = value;
  return r;
}

CycNum CycNum::from_rational(unsigned p, const mpq_class& value) {
  CycNum r(p);
  r.c_[0] = value;
  return r;
}

CycNum CycNum::zeta_power(unsigned p, long k) {
  require_odd_prime(p);
  std::vector<mpq_class> full(p);
  full[static_cast<std::size_t>(mod_floor(k, p))] = 1;
  CycNum r;
  r.p_ = p;
  r.c_ = reduce(std::move(full), p);
  return r;
}

CycNum CycNum::from_coeffs(unsigned p, std::vector<mpq_class> coeffs) {
  require_odd_prime(p);
  CycNum r;
  r.p_ = p;
  if (coeffs.size() == p - 1) {
    r.c_ = std::move(coeffs);
  } else if (coeffs.size() == p) {
    r.c_ = reduce(std::move(coeffs), p);
  } else {
    throw UsageError("CycNum needs p-1 or p coefficients, got " + std::to_string(coeffs.size()));
  }
  for (auto& c : r.c_) c.canonicalize();
  return r;
}

CycNum CycNum::from_int_coeffs(unsigned p, std::span<const std::int64_t> coeffs) {
  std::vector<mpq_class> v;
  v.reserve(coeffs.size());
  for (std::int64_t c : coeffs) v.emplace_back(static_cast<long>(c));
  return from_coeffs(p, std::move(v));
}

void CycNum::require_same_field(const CycNum& other) const {
  if (p_ != other.p_ || p_ == 0) {
    throw UsageError("CycNum operands live in different cyclotomic fields (p=" + std::to_string(p_) +
                     " vs p=" + std::to_string(other.p_) + ")");
  }
}

bool CycNum::is_zero() const {
  for (const auto& c : c_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t j = 1; j < c_.size(); ++j) {
    if (c_[j] != 0) return false;
  }
  return true;
}

bool CycNum::is_integral() const {
  for (const auto& c : c_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

mpq_class CycNum::rational_value() const {
  if (!is_rational()) throw ArithmeticError("cyclotomic value " + to_string() + " is not rational");
  return c_.empty() ? mpq_class(0) : c_[0];
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& other) {
  require_same_field(other);
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += other.c_[j];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& other) {
  require_same_field(other);
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= other.c_[j];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& other) {
  require_same_field(other);
  const unsigned p = p_;
  std::vector<mpq_class> full(p);
  for (unsigned i = 0; i + 1 < p; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j + 1 < p; ++j) {
      if (other.c_[j] == 0) continue;
      full[(i + j) % p] += c_[i] * other.c_[j];
    }
  }
  c_ = reduce(std::move(full), p);
  return *this;
}

CycNum& CycNum::operator/=(const CycNum& other) {
  require_same_field(other);
  *this *= other.inverse();
  return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
  return a.p_ == b.p_ && a.c_ == b.c_;
}

CycNum CycNum::scaled(const mpq_class& factor) const {
  CycNum r = *this;
  for (auto& c : r.c_) c *= factor;
  return r;
}

CycNum CycNum::galois(long k) const {
  const long p = p_;
  const long kk = mod_floor(k, p);
  if (kk == 0) throw UsageError("Galois exponent must be prime to p");
  std::vector<mpq_class> full(p_);
  for (long j = 0; j + 1 < p; ++j) full[static_cast<std::size_t>((j * kk) % p)] = c_[j];
  CycNum r;
  r.p_ = p_;
  r.c_ = reduce(std::move(full), p_);
  return r;
}

mpq_class CycNum::norm() const {
  CycNum acc = *this;
  for (long k = 2; k < static_cast<long>(p_); ++k) acc *= galois(k);
  return acc.rational_value();
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero in Q(zeta_" + std::to_string(p_) + ")");
  // a^{-1} = (prod_{k=2}^{p-1} sigma_k(a)) / N(a)
  CycNum others = CycNum::from_int(p_, 1);
  for (long k = 2; k < static_cast<long>(p_); ++k) others *= galois(k);
  CycNum full = others * *this;
  const mpq_class n = full.rational_value();
  return others.scaled(1 / n);
}

std::complex<double> CycNum::embed(unsigned root_index) const {
  if (root_index < 1 || root_index >= p_) {
    throw UsageError("root index must lie in [1, p-1], got " + std::to_string(root_index));
  }
  std::complex<double> acc{0.0, 0.0};
  for (unsigned j = 0; j + 1 < p_; ++j) {
    if (c_[j] == 0) continue;
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>((static_cast<std::uint64_t>(root_index) * j) % p_) / p_;
    acc += c_[j].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    const mpq_class& c = c_[j];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << 'z';
      if (j > 1) os << '^' << j;
    }
  }
  return first ? "0" : os.str();
}

CycNum cyc_arith(const CycNum& a, const CycNum& b, CycOp op) {
  switch (op) {
    case CycOp::add: return a + b;
    case CycOp::sub: return a - b;
    case CycOp::mul: return a * b;
    case CycOp::div: return a / b;
  }
  throw UsageError("unknown cyclotomic operation");
}

std::complex<double> embed_complex(const CycNum& a, unsigned root_index) { return a.embed(root_index); }

}  // namespace antiorb
