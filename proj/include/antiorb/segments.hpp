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

// Segment combinatorics for the cyclic quiver with vertex set Z/m: segment
// classes, multisegments, aperiodicity, the (aperiodic, partition) splitting
// of a multisegment, and the integer counts attached to partitions.

#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace antiorb {

using DimVector = std::vector<unsigned>;

/// The class of the segment [a, a+len-1] modulo m; start is kept in [0, m).
struct SegmentClass {
  unsigned m = 1;
  unsigned start = 0;
  unsigned len = 1;

  static SegmentClass make(unsigned m, long start, unsigned len);

  /// Graded dimension of the indecomposable V_beta: 1 at each covered vertex.
  DimVector dims() const;

  auto operator<=>(const SegmentClass&) const = default;
};

/// A finitely supported map Z_{>0} -> N, read as a partition with mult(n)
/// parts of size n.
class PartitionMult {
 public:
  PartitionMult() = default;
  static PartitionMult from_parts(const std::vector<unsigned>& parts);

  unsigned get(unsigned n) const;
  void set(unsigned n, unsigned count);
  /// sum_n mult(n) * n
  unsigned underline() const;
  bool is_zero() const { return mult_.empty(); }
  /// Parts in non-increasing order.
  std::vector<unsigned> parts() const;
  const std::map<unsigned, unsigned>& entries() const noexcept { return mult_; }

  auto operator<=>(const PartitionMult&) const = default;

 private:
  std::map<unsigned, unsigned> mult_;
};

/// A finitely supported map from segment classes to N, stored as a sorted
/// association list without zero entries.
class Multisegment {
 public:
  explicit Multisegment(unsigned m = 1) : m_(m) {}

  unsigned m() const noexcept { return m_; }
  unsigned get(const SegmentClass& cls) const;
  void add(const SegmentClass& cls, unsigned count = 1);
  /// Removes count copies; throws if fewer are present.
  void remove(const SegmentClass& cls, unsigned count);
  const std::vector<std::pair<SegmentClass, unsigned>>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  /// |sigma| = sum sigma(beta) |V_beta|
  DimVector dims() const;
  unsigned max_len() const;

  auto operator<=>(const Multisegment&) const = default;

 private:
  unsigned m_;
  std::vector<std::pair<SegmentClass, unsigned>> entries_;
};

struct HatPair {
  Multisegment sigma;
  PartitionMult rho;

  auto operator<=>(const HatPair&) const = default;
};

bool is_aperiodic(const Multisegment& sigma);

/// sigma~ -> (sigma, rho) with rho(len) = min over the m rotations of that
/// length, sigma = sigma~ minus rho(len) copies of every class of that length.
HatPair hat_bijection(const Multisegment& sigma_tilde);
Multisegment hat_unbijection(const HatPair& pair);

/// All multisegments with |sigma| = nu, sorted.
std::vector<Multisegment> enumerate_multisegments(unsigned m, const DimVector& nu);

struct MultisegmentCounts {
  std::uint64_t all = 0;
  std::uint64_t aperiodic = 0;
};
MultisegmentCounts count_multisegments(unsigned m, const DimVector& nu);

/// All partitions of t, as PartitionMult.
std::vector<PartitionMult> partitions_of(unsigned t);

/// Dimension of the irreducible S_n-representation for the partition rho.
mpz_class hook_dim(const PartitionMult& rho);

/// Rank z! / prod_l(|pi_l|!) * m^{z - |pi_0|} * prod_l N_{pi_l}, where
/// z = sum over all l (including l = 0) of |pi_l|.
mpz_class rank_formula(unsigned m, const std::vector<PartitionMult>& nonzero_eigen_parts,
                       const PartitionMult& zero_part);

mpz_class factorial(unsigned n);

}  // namespace antiorb
