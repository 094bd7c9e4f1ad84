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

#include "antiorb/segments.hpp"

#include <algorithm>
#include <numeric>

#include "antiorb/errors.hpp"

namespace antiorb {

SegmentClass SegmentClass::make(unsigned m, long start, unsigned len) {
  if (m == 0) throw UsageError("segment modulus must be >= 1");
  if (len == 0) throw UsageError("segment length must be >= 1");
  long a = start % static_cast<long>(m);
  if (a < 0) a += m;
  return {m, static_cast<unsigned>(a), len};
}

DimVector SegmentClass::dims() const {
  DimVector d(m, 0);
  for (unsigned j = 0; j < len; ++j) ++d[(start + j) % m];
  return d;
}

PartitionMult PartitionMult::from_parts(const std::vector<unsigned>& parts) {
  PartitionMult r;
  for (unsigned part : parts) {
    if (part == 0) throw UsageError("partition parts must be positive");
    r.set(part, r.get(part) + 1);
  }
  return r;
}

unsigned PartitionMult::get(unsigned n) const {
  auto it = mult_.find(n);
  return it == mult_.end() ? 0 : it->second;
}

void PartitionMult::set(unsigned n, unsigned count) {
  if (n == 0) throw UsageError("partition multiplicities are indexed by positive integers");
  if (count == 0) {
    mult_.erase(n);
  } else {
    mult_[n] = count;
  }
}

unsigned PartitionMult::underline() const {
  unsigned total = 0;
  for (const auto& [n, c] : mult_) total += n * c;
  return total;
}

std::vector<unsigned> PartitionMult::parts() const {
  std::vector<unsigned> out;
  for (auto it = mult_.rbegin(); it != mult_.rend(); ++it) out.insert(out.end(), it->second, it->first);
  return out;
}

unsigned Multisegment::get(const SegmentClass& cls) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), cls,
                             [](const auto& e, const SegmentClass& c) { return e.first < c; });
  return (it != entries_.end() && it->first == cls) ? it->second : 0;
}

void Multisegment::add(const SegmentClass& cls, unsigned count) {
  if (cls.m != m_) throw UsageError("segment class modulus differs from multisegment modulus");
  if (count == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), cls,
                             [](const auto& e, const SegmentClass& c) { return e.first < c; });
  if (it != entries_.end() && it->first == cls) {
    it->second += count;
  } else {
    entries_.insert(it, {cls, count});
  }
}

void Multisegment::remove(const SegmentClass& cls, unsigned count) {
  if (count == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), cls,
                             [](const auto& e, const SegmentClass& c) { return e.first < c; });
  if (it == entries_.end() || !(it->first == cls) || it->second < count) {
    throw UsageError("removing more copies of a segment than present");
  }
  it->second -= count;
  if (it->second == 0) entries_.erase(it);
}

DimVector Multisegment::dims() const {
  DimVector d(m_, 0);
  for (const auto& [cls, mult] : entries_) {
    for (unsigned j = 0; j < cls.len; ++j) d[(cls.start + j) % m_] += mult;
  }
  return d;
}

unsigned Multisegment::max_len() const {
  unsigned best = 0;
  for (const auto& e : entries_) best = std::max(best, e.first.len);
  return best;
}

bool is_aperiodic(const Multisegment& sigma) {
  const unsigned m = sigma.m();
  const unsigned top = sigma.max_len();
  for (unsigned len = 1; len <= top; ++len) {
    bool all_present = true;
    for (unsigned a = 0; a < m && all_present; ++a) {
      all_present = sigma.get(SegmentClass{m, a, len}) > 0;
    }
    if (all_present) return false;
  }
  return true;
}

HatPair hat_bijection(const Multisegment& sigma_tilde) {
  const unsigned m = sigma_tilde.m();
  HatPair out{sigma_tilde, PartitionMult{}};
  const unsigned top = sigma_tilde.max_len();
  for (unsigned len = 1; len <= top; ++len) {
    unsigned lowest = sigma_tilde.get(SegmentClass{m, 0, len});
    for (unsigned a = 1; a < m; ++a) lowest = std::min(lowest, sigma_tilde.get(SegmentClass{m, a, len}));
    if (lowest == 0) continue;
    out.rho.set(len, lowest);
    for (unsigned a = 0; a < m; ++a) out.sigma.remove(SegmentClass{m, a, len}, lowest);
  }
  return out;
}

Multisegment hat_unbijection(const HatPair& pair) {
  if (!is_aperiodic(pair.sigma)) throw UsageError("hat_unbijection expects an aperiodic multisegment");
  Multisegment out = pair.sigma;
  const unsigned m = out.m();
  for (const auto& [len, count] : pair.rho.entries()) {
    for (unsigned a = 0; a < m; ++a) out.add(SegmentClass{m, a, len}, count);
  }
  return out;
}

namespace {

void enumerate_rec(const std::vector<SegmentClass>& classes, std::size_t next, DimVector& remaining,
                   Multisegment& current, std::vector<Multisegment>& out) {
  if (std::all_of(remaining.begin(), remaining.end(), [](unsigned r) { return r == 0; })) {
    out.push_back(current);
    return;
  }
  if (next == classes.size()) return;
  const SegmentClass& cls = classes[next];
  const DimVector cover = cls.dims();
  unsigned bound = UINT32_MAX;
  for (unsigned v = 0; v < cover.size(); ++v) {
    if (cover[v] > 0) bound = std::min(bound, remaining[v] / cover[v]);
  }
  for (unsigned k = 0;; ++k) {
    enumerate_rec(classes, next + 1, remaining, current, out);
    if (k == bound) break;
    for (unsigned v = 0; v < cover.size(); ++v) remaining[v] -= cover[v];
    current.add(cls, 1);
  }
  for (unsigned v = 0; v < cover.size(); ++v) remaining[v] += cover[v] * bound;
  if (bound > 0) current.remove(cls, bound);
}

}  // namespace

std::vector<Multisegment> enumerate_multisegments(unsigned m, const DimVector& nu) {
  if (m == 0) throw UsageError("modulus must be >= 1");
  if (nu.size() != m) throw UsageError("dimension vector length must equal m");
  const unsigned total = std::accumulate(nu.begin(), nu.end(), 0U);
  std::vector<SegmentClass> classes;
  for (unsigned a = 0; a < m; ++a) {
    for (unsigned len = 1; len <= total; ++len) classes.push_back(SegmentClass{m, a, len});
  }
  std::vector<Multisegment> out;
  DimVector remaining = nu;
  Multisegment current(m);
  enumerate_rec(classes, 0, remaining, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

MultisegmentCounts count_multisegments(unsigned m, const DimVector& nu) {
  MultisegmentCounts c;
  for (const auto& s : enumerate_multisegments(m, nu)) {
    ++c.all;
    if (is_aperiodic(s)) ++c.aperiodic;
  }
  return c;
}

namespace {

void partitions_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& parts,
                    std::vector<PartitionMult>& out) {
  if (remaining == 0) {
    out.push_back(PartitionMult::from_parts(parts));
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    parts.push_back(part);
    partitions_rec(remaining - part, part, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<PartitionMult> partitions_of(unsigned t) {
  std::vector<PartitionMult> out;
  std::vector<unsigned> parts;
  partitions_rec(t, t, parts, out);
  return out;
}

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class hook_dim(const PartitionMult& rho) {
  const std::vector<unsigned> rows = rho.parts();
  if (rows.empty()) return 1;
  std::vector<unsigned> cols(rows.front(), 0);
  for (unsigned r : rows) {
    for (unsigned j = 0; j < r; ++j) ++cols[j];
  }
  mpz_class hooks = 1;
  for (unsigned i = 0; i < rows.size(); ++i) {
    for (unsigned j = 0; j < rows[i]; ++j) hooks *= (rows[i] - j) + (cols[j] - i) - 1;
  }
  return factorial(rho.underline()) / hooks;
}

mpz_class rank_formula(unsigned m, const std::vector<PartitionMult>& nonzero_eigen_parts,
                       const PartitionMult& zero_part) {
  unsigned z = zero_part.underline();
  mpz_class denom = factorial(zero_part.underline());
  mpz_class dims = hook_dim(zero_part);
  for (const auto& pi : nonzero_eigen_parts) {
    z += pi.underline();
    denom *= factorial(pi.underline());
    dims *= hook_dim(pi);
  }
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), m, z - zero_part.underline());
  return factorial(z) / denom * power * dims;
}

}  // namespace antiorb
