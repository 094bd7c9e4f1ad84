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


#include "antiorb/space.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "antiorb/errors.hpp"

namespace antiorb {

namespace {

constexpr std::uint64_t kMaxTablePoints = std::uint64_t{1} << 40;

std::string dims_tag(const DimVector& dims) {
  std::string s = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dims[i]);
  }
  return s + ")";
}

std::string quiver_name(int eps, const DimVector& dims) {
  return std::string("E^") + (eps > 0 ? "+" : "-") + "_" + dims_tag(dims);
}

// Multiplies two canonical Z[zeta_p] elements into a length-p accumulator.
void mul_into(unsigned p, const std::int64_t* a, std::size_t sa, const std::int64_t* b, std::size_t sb,
              __int128* acc) {
  for (unsigned i = 0; i + 1 < p; ++i) {
    const std::int64_t ai = a[i * sa];
    if (ai == 0) continue;
    for (unsigned j = 0; j + 1 < p; ++j) {
      const std::int64_t bj = b[j * sb];
      if (bj == 0) continue;
      acc[(i + j) % p] += static_cast<__int128>(ai) * bj;
    }
  }
}

bool fits64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

std::size_t QuiverShape::dim() const {
  std::size_t n = 0;
  for (unsigned i = 0; i < m; ++i) n += std::size_t{dims[i]} * dims[target(i)];
  return n;
}

std::size_t QuiverShape::block_offset(unsigned i) const {
  std::size_t n = 0;
  for (unsigned j = 0; j < i; ++j) n += std::size_t{dims[j]} * dims[target(j)];
  return n;
}

SpaceDescriptor SpaceDescriptor::quiver(FieldPtr field, unsigned m, int eps, DimVector dims) {
  if (!field) throw UsageError("quiver space needs a field");
  if (m == 0) throw UsageError("quiver needs m >= 1");
  if (eps != 1 && eps != -1) throw UsageError("eps must be +1 or -1");
  if (dims.size() != m) throw UsageError("dims length must equal m");
  QuiverShape shape{m, eps, dims};
  QuiverShape dual_shape{m, -eps, dims};

  SpaceDescriptor s;
  s.kind_ = Kind::quiver;
  s.field_ = std::move(field);
  s.name_ = quiver_name(eps, dims);
  s.dual_name_ = quiver_name(-eps, dims);
  for (unsigned i = 0; i < m; ++i) {
    const unsigned rows = dims[shape.target(i)];
    for (unsigned r = 0; r < rows; ++r) {
      for (unsigned c = 0; c < dims[i]; ++c) {
        s.coords_.push_back("T" + std::to_string(i) + "[" + std::to_string(r) + "," + std::to_string(c) + "]");
        // (i, r, c) pairs with block i+eps of the dual, entry (c, r).
        const unsigned j = shape.target(i);
        const std::size_t off = dual_shape.block_offset(j);
        s.perm_.push_back(static_cast<std::uint32_t>(off + std::size_t{c} * dims[j] + r));
      }
    }
  }
  for (unsigned i = 0; i < m; ++i) {
    const unsigned rows = dims[dual_shape.target(i)];
    for (unsigned r = 0; r < rows; ++r) {
      for (unsigned c = 0; c < dims[i]; ++c) {
        s.dual_coords_.push_back("T" + std::to_string(i) + "[" + std::to_string(r) + "," + std::to_string(c) +
                                 "]");
      }
    }
  }
  s.coef_.assign(s.coords_.size(), s.field_->one());
  s.quiver_ = shape;
  return s;
}

SpaceDescriptor SpaceDescriptor::generic(FieldPtr field, std::string name, std::string dual_name,
                                         std::vector<std::string> coords, std::vector<std::string> dual_coords,
                                         std::vector<std::uint32_t> perm, std::vector<Elem> coef) {
  if (!field) throw UsageError("generic space needs a field");
  const std::size_t n = coords.size();
  if (dual_coords.size() != n || perm.size() != n || coef.size() != n) {
    throw UsageError("generic space: coords, dual coords, perm and coef must have equal length");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    if (perm[j] >= n || seen[perm[j]]) throw UsageError("generic space: pairing perm is not a bijection");
    seen[perm[j]] = true;
    if (coef[j] == 0 || coef[j] >= field->q()) throw UsageError("generic space: pairing coefficient must be a unit");
  }
  SpaceDescriptor s;
  s.kind_ = Kind::generic;
  s.field_ = std::move(field);
  s.name_ = std::move(name);
  s.dual_name_ = std::move(dual_name);
  s.coords_ = std::move(coords);
  s.dual_coords_ = std::move(dual_coords);
  s.perm_ = std::move(perm);
  s.coef_ = std::move(coef);
  return s;
}

SpaceDescriptor SpaceDescriptor::product(std::vector<SpaceDescriptor> factors) {
  if (factors.empty()) throw UsageError("product space needs at least one factor");
  SpaceDescriptor s;
  s.kind_ = Kind::product;
  s.field_ = factors.front().field_;
  std::size_t off = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const auto& f = factors[k];
    if (!(*f.field_ == *s.field_)) throw UsageError("product space factors over different fields");
    if (k) {
      s.name_ += " x ";
      s.dual_name_ += " x ";
    }
    s.name_ += f.name_;
    s.dual_name_ += f.dual_name_;
    const std::string pre = std::to_string(k) + ":";
    for (const auto& c : f.coords_) s.coords_.push_back(pre + c);
    for (const auto& c : f.dual_coords_) s.dual_coords_.push_back(pre + c);
    for (auto v : f.perm_) s.perm_.push_back(static_cast<std::uint32_t>(v + off));
    s.coef_.insert(s.coef_.end(), f.coef_.begin(), f.coef_.end());
    off += f.dim();
  }
  s.factors_ = std::move(factors);
  return s;
}

std::uint64_t SpaceDescriptor::size() const {
  std::uint64_t n = 1;
  const std::uint64_t q = field_->q();
  for (std::size_t j = 0; j < dim(); ++j) {
    if (n > kMaxTablePoints / q) throw BudgetExceeded("space " + name_ + " size", kMaxTablePoints + 1, kMaxTablePoints);
    n *= q;
  }
  return n;
}

SpaceDescriptor SpaceDescriptor::dual() const {
  if (kind_ == Kind::quiver) return quiver(field_, quiver_->m, -quiver_->eps, quiver_->dims);
  if (kind_ == Kind::product) {
    std::vector<SpaceDescriptor> duals;
    duals.reserve(factors_.size());
    for (const auto& f : factors_) duals.push_back(f.dual());
    return product(std::move(duals));
  }
  const std::size_t n = dim();
  std::vector<std::uint32_t> inv(n);
  std::vector<Elem> coef(n);
  for (std::size_t j = 0; j < n; ++j) {
    inv[perm_[j]] = static_cast<std::uint32_t>(j);
    coef[perm_[j]] = coef_[j];
  }
  return generic(field_, dual_name_, name_, dual_coords_, coords_, std::move(inv), std::move(coef));
}

Elem SpaceDescriptor::pairing(std::span<const Elem> x, std::span<const Elem> y) const {
  if (x.size() != dim() || y.size() != dim()) throw UsageError("pairing: coordinate vector length mismatch");
  const FqField& f = *field_;
  Elem acc = 0;
  for (std::size_t j = 0; j < dim(); ++j) acc = f.add(acc, f.mul(coef_[j], f.mul(x[j], y[perm_[j]])));
  return acc;
}

std::vector<Elem> SpaceDescriptor::decode(std::uint64_t index) const {
  std::vector<Elem> out(dim());
  decode(index, out);
  return out;
}

void SpaceDescriptor::decode(std::uint64_t index, std::span<Elem> out) const {
  const unsigned q = field_->q();
  for (std::size_t j = 0; j < dim(); ++j) {
    out[j] = static_cast<Elem>(index % q);
    index /= q;
  }
}

std::uint64_t SpaceDescriptor::encode(std::span<const Elem> coords) const {
  const unsigned q = field_->q();
  std::uint64_t idx = 0;
  for (std::size_t j = coords.size(); j-- > 0;) idx = idx * q + coords[j];
  return idx;
}

bool SpaceDescriptor::operator==(const SpaceDescriptor& other) const {
  if (kind_ != other.kind_ || !field_ || !other.field_) return kind_ == other.kind_ && !field_ && !other.field_;
  return *field_ == *other.field_ && name_ == other.name_ && coords_ == other.coords_ && perm_ == other.perm_ &&
         coef_ == other.coef_ && quiver_ == other.quiver_;
}

std::uint64_t default_point_budget() {
  if (const char* env = std::getenv("ANTIORB_BUDGET")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v >= 1.0) || v > 1e15) {
      throw UsageError(std::string("ANTIORB_BUDGET is not a positive number: ") + env);
    }
    return static_cast<std::uint64_t>(v);
  }
  return 20'000'000;
}

void check_budget(const std::string& what, std::uint64_t requested, std::uint64_t budget) {
  if (requested > budget) throw BudgetExceeded(what, requested, budget);
}

FuncTable::FuncTable(SpaceDescriptor space) : FuncTable(std::move(space), default_point_budget()) {}

FuncTable::FuncTable(SpaceDescriptor space, std::uint64_t budget) : space_(std::move(space)) {
  size_ = space_.size();
  check_budget("function table on " + space_.name(), size_, budget);
  p_ = space_.field()->p();
  data_.assign(std::size_t{p_ - 1} * size_, 0);
}

CycNum FuncTable::value(std::uint64_t i) const {
  std::vector<std::int64_t> c(p_ - 1);
  for (unsigned k = 0; k + 1 < p_; ++k) c[k] = coeff(k, i);
  return CycNum::from_int_coeffs(p_, c);
}

void FuncTable::set(std::uint64_t i, const CycNum& v) {
  if (v.p() != p_) throw UsageError("FuncTable::set: value from a different cyclotomic field");
  if (!v.is_integral()) throw ArithmeticError("FuncTable stores Z[zeta_p] values only: " + v.to_string());
  for (unsigned k = 0; k + 1 < p_; ++k) {
    const mpz_class num = v.coeffs()[k].get_num();
    if (!num.fits_slong_p()) throw ArithmeticError("FuncTable::set: coefficient overflows int64");
    coeff(k, i) = num.get_si();
  }
}

void FuncTable::set_int(std::uint64_t i, std::int64_t v) {
  coeff(0, i) = v;
  for (unsigned k = 1; k + 1 < p_; ++k) coeff(k, i) = 0;
}

bool FuncTable::is_zero_at(std::uint64_t i) const {
  for (unsigned k = 0; k + 1 < p_; ++k) {
    if (coeff(k, i) != 0) return false;
  }
  return true;
}

bool FuncTable::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
}

std::int64_t FuncTable::max_abs() const {
  std::int64_t m = 0;
  for (std::int64_t v : data_) {
    if (v == std::numeric_limits<std::int64_t>::min()) return std::numeric_limits<std::int64_t>::max();
    m = std::max(m, v < 0 ? -v : v);
  }
  return m;
}

void FuncTable::add_product(std::uint64_t i, const FuncTable& a, std::uint64_t ia, const FuncTable& b,
                            std::uint64_t ib) {
  if (a.p_ != p_ || b.p_ != p_) throw UsageError("add_product: mismatched cyclotomic fields");
  __int128 acc[32] = {};
  mul_into(p_, a.data_.data() + ia, a.size_, b.data_.data() + ib, b.size_, acc);
  for (unsigned k = 0; k + 1 < p_; ++k) {
    const __int128 v = static_cast<__int128>(coeff(k, i)) + acc[k] - acc[p_ - 1];
    if (!fits64(v)) throw ArithmeticError("FuncTable coefficient overflow in add_product");
    coeff(k, i) = static_cast<std::int64_t>(v);
  }
}

void FuncTable::add_value(std::uint64_t i, const FuncTable& a, std::uint64_t ia) {
  if (a.p_ != p_) throw UsageError("add_value: mismatched cyclotomic fields");
  for (unsigned k = 0; k + 1 < p_; ++k) {
    const __int128 v = static_cast<__int128>(coeff(k, i)) + a.coeff(k, ia);
    if (!fits64(v)) throw ArithmeticError("FuncTable coefficient overflow in add_value");
    coeff(k, i) = static_cast<std::int64_t>(v);
  }
}

bool FuncTable::values_equal(const FuncTable& other) const {
  return p_ == other.p_ && size_ == other.size_ && data_ == other.data_;
}

ColinearityReport colinear(const FuncTable& lhs, const FuncTable& rhs) {
  if (lhs.p() != rhs.p() || lhs.size() != rhs.size()) throw UsageError("colinear: tables on different spaces");
  ColinearityReport rep;
  const unsigned p = lhs.p();
  std::uint64_t i0 = lhs.size();
  for (std::uint64_t i = 0; i < lhs.size(); ++i) {
    if (!lhs.is_zero_at(i)) {
      i0 = i;
      break;
    }
  }
  if (i0 == lhs.size()) {
    rep.degenerate = rhs.is_zero();
    rep.colinear = rep.degenerate;
    return rep;
  }
  // rhs(i) * lhs(i0) == lhs(i) * rhs(i0) for every i.
  const auto L = lhs.raw();
  const auto R = rhs.raw();
  const std::uint64_t n = lhs.size();
  for (std::uint64_t i = 0; i < n; ++i) {
    if (lhs.is_zero_at(i) && rhs.is_zero_at(i)) continue;
    __int128 a[32] = {};
    __int128 b[32] = {};
    mul_into(p, R.data() + i, n, L.data() + i0, n, a);
    mul_into(p, L.data() + i, n, R.data() + i0, n, b);
    for (unsigned k = 0; k + 1 < p; ++k) {
      if (a[k] - a[p - 1] != b[k] - b[p - 1]) return rep;
    }
  }
  rep.colinear = true;
  rep.scalar = rhs.value(i0) / lhs.value(i0);
  return rep;
}

std::optional<int> q_power_exponent(const CycNum& c, unsigned q) {
  if (!c.valid() || !c.is_rational() || q < 2) return std::nullopt;
  mpq_class v = abs(c.rational_value());
  if (v == 0) return std::nullopt;
  mpz_class num = v.get_num();
  mpz_class den = v.get_den();
  if (num != 1 && den != 1) return std::nullopt;
  int sign = den == 1 ? 1 : -1;
  mpz_class x = den == 1 ? num : den;
  int k = 0;
  while (x != 1) {
    if (x % q != 0) return std::nullopt;
    x /= q;
    ++k;
  }
  return sign * k;
}

}  // namespace antiorb
