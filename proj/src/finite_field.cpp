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

#include "antiorb/finite_field.hpp"

#include <map>
#include <sstream>

#include "antiorb/errors.hpp"

namespace antiorb {

namespace {

using Poly = std::vector<unsigned>;  // low to high, over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
    }
    trim(a);
  }
  return a;
}

const std::map<unsigned, std::pair<unsigned, Poly>>& shipped_moduli() {
  // q -> (p, monic modulus low-to-high)
  static const std::map<unsigned, std::pair<unsigned, Poly>> table = {
      {3, {3, {0, 1}}},   {5, {5, {0, 1}}},      {7, {7, {0, 1}}},   {11, {11, {0, 1}}},
      {13, {13, {0, 1}}}, {17, {17, {0, 1}}},    {19, {19, {0, 1}}}, {23, {23, {0, 1}}},
      {9, {3, {1, 0, 1}}},  // t^2 + 1
      {25, {5, {2, 0, 1}}},  // t^2 + 2
  };
  return table;
}

}  // namespace

bool is_irreducible_over_prime_field(unsigned p, const std::vector<unsigned>& poly) {
  Poly g = poly;
  trim(g);
  if (g.size() < 2) return false;
  const std::size_t deg = g.size() - 1;
  if (deg == 1) return true;
  // Try every monic divisor of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly h(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        h[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      h[d] = 1;
      if (poly_mod(g, h, p).empty()) return false;
    }
  }
  return true;
}

std::shared_ptr<const FqField> FqField::make(unsigned q) {
  const auto& table = shipped_moduli();
  auto it = table.find(q);
  if (it == table.end()) {
    throw UsageError("no shipped modulus for q=" + std::to_string(q) +
                     " (supported: odd primes up to 23, 9, 25)");
  }
  return make(it->second.first, it->second.second);
}

std::shared_ptr<const FqField> FqField::make(unsigned p, std::vector<unsigned> modulus) {
  return std::shared_ptr<const FqField>(new FqField(p, std::move(modulus)));
}

FqField::FqField(unsigned p, std::vector<unsigned> modulus) : p_(p), modulus_(std::move(modulus)) {
  require_odd_prime(p);
  for (auto& c : modulus_) c %= p;
  trim(modulus_);
  if (modulus_.size() < 2 || modulus_.back() != 1) {
    throw UsageError("field modulus must be monic of degree >= 1");
  }
  if (!is_irreducible_over_prime_field(p, modulus_)) {
    throw UsageError("field modulus is reducible over F_" + std::to_string(p));
  }
  k_ = static_cast<unsigned>(modulus_.size() - 1);
  q_ = 1;
  for (unsigned i = 0; i < k_; ++i) q_ *= p_;
  if (q_ > 1024) throw UsageError("field too large for table arithmetic: q=" + std::to_string(q_));

  add_.resize(std::size_t{q_} * q_);
  mul_.resize(std::size_t{q_} * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  trace_.resize(q_);
  for (Elem a = 0; a < q_; ++a) {
    const Poly ca = coeffs(a);
    Poly na(k_);
    for (unsigned j = 0; j < k_; ++j) na[j] = (p_ - ca[j]) % p_;
    neg_[a] = from_coeffs(na);
    for (Elem b = 0; b < q_; ++b) {
      const Poly cb = coeffs(b);
      Poly s(k_);
      for (unsigned j = 0; j < k_; ++j) s[j] = (ca[j] + cb[j]) % p_;
      add_[a * q_ + b] = from_coeffs(s);
      Poly prod(2 * k_ - 1, 0);
      for (unsigned i = 0; i < k_; ++i) {
        for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
      }
      Poly r = poly_mod(prod, modulus_, p_);
      r.resize(k_, 0);
      mul_[a * q_ + b] = from_coeffs(r);
    }
  }
  for (Elem a = 1; a < q_; ++a) {
    for (Elem b = 1; b < q_; ++b) {
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
    }
  }
  // Tr(x) = x + x^p + ... + x^{p^{k-1}}, lands in the prime field.
  for (Elem a = 0; a < q_; ++a) {
    Elem acc = 0;
    Elem frob = a;
    for (unsigned j = 0; j < k_; ++j) {
      acc = add(acc, frob);
      frob = pow(frob, p_);
    }
    if (acc >= p_) throw ArithmeticError("trace left the prime field; modulus tables corrupt");
    trace_[a] = acc;
  }
  for (Elem g = 1; g < q_; ++g) {
    Elem x = g;
    unsigned order = 1;
    while (x != 1) {
      x = mul(x, g);
      ++order;
    }
    if (order == q_ - 1) {
      gamma_ = g;
      break;
    }
  }
}

FqField::Elem FqField::inv(Elem a) const {
  if (a == 0) throw ArithmeticError("inversion of zero in F_" + std::to_string(q_));
  return inv_[a];
}

FqField::Elem FqField::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  Elem base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

FqField::Elem FqField::from_int(long v) const {
  const long p = p_;
  long r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

std::vector<unsigned> FqField::coeffs(Elem a) const {
  std::vector<unsigned> c(k_);
  for (unsigned j = 0; j < k_; ++j) {
    c[j] = a % p_;
    a /= p_;
  }
  return c;
}

FqField::Elem FqField::from_coeffs(const std::vector<unsigned>& c) const {
  Elem idx = 0;
  Elem scale = 1;
  for (unsigned j = 0; j < k_; ++j) {
    idx += (j < c.size() ? c[j] % p_ : 0) * scale;
    scale *= p_;
  }
  return idx;
}

bool FqField::is_square(Elem a) const {
  if (a == 0) return true;
  return pow(a, (q_ - 1) / 2) == 1;
}

std::string FqField::describe() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (k_ > 1) {
    os << " = F_" << p_ << "[t]/(";
    bool first = true;
    for (std::size_t j = modulus_.size(); j-- > 0;) {
      if (modulus_[j] == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (modulus_[j] != 1 || j == 0) os << modulus_[j];
      if (j >= 1) os << 't';
      if (j > 1) os << '^' << j;
    }
    os << ')';
  }
  return os.str();
}

FqElem::FqElem(FieldPtr field, FqField::Elem index) : field_(std::move(field)), index_(index) {
  if (!field_) throw UsageError("FqElem needs a field");
  if (index_ >= field_->q()) throw UsageError("field element index out of range");
}

void FqElem::require_same_field(const FqElem& o) const {
  if (!(*field_ == *o.field_)) throw UsageError("field mismatch between operands");
}

FqElem FqElem::operator+(const FqElem& o) const {
  require_same_field(o);
  return {field_, field_->add(index_, o.index_)};
}

FqElem FqElem::operator-(const FqElem& o) const {
  require_same_field(o);
  return {field_, field_->sub(index_, o.index_)};
}

FqElem FqElem::operator*(const FqElem& o) const {
  require_same_field(o);
  return {field_, field_->mul(index_, o.index_)};
}

FqElem FqElem::operator/(const FqElem& o) const {
  require_same_field(o);
  return {field_, field_->div(index_, o.index_)};
}

FqElem fq_arith(const FqElem& a, const FqElem& b, FqOp op) {
  switch (op) {
    case FqOp::add: return a + b;
    case FqOp::sub: return a - b;
    case FqOp::mul: return a * b;
    case FqOp::inv: return a.inv();
    case FqOp::pow: return a.pow(b.index());
  }
  throw UsageError("unknown field operation");
}

CycNum additive_character(const FqElem& x) { return x.field()->character(x.index()); }

}  // namespace antiorb
