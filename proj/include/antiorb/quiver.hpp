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

// Representations of the cyclic quiver Z/m with arrows i -> i+eps, their
// decomposition into indecomposables, orbit and stratum labels, and
// enumeration of rational orbits.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "antiorb/fq_linalg.hpp"
#include "antiorb/segments.hpp"
#include "antiorb/space.hpp"

namespace antiorb {

struct GradedDims {
  unsigned m = 1;
  DimVector nu;

  unsigned total() const;
  /// dim E^eps_V = sum_i nu_i * nu_{i+eps}; the same for both signs.
  std::size_t space_dim() const;
};

class QuiverRep {
 public:
  QuiverRep() = default;
  /// The zero representation.
  QuiverRep(FieldPtr field, unsigned m, int eps, DimVector dims);

  static QuiverRep from_blocks(FieldPtr field, unsigned m, int eps, DimVector dims, std::vector<FqMatrix> blocks);
  static QuiverRep from_coords(const SpaceDescriptor& space, std::span<const Elem> coords);
  static QuiverRep from_index(const SpaceDescriptor& space, std::uint64_t index);

  const FieldPtr& field() const noexcept { return field_; }
  unsigned m() const noexcept { return shape_.m; }
  int eps() const noexcept { return shape_.eps; }
  const DimVector& dims() const noexcept { return shape_.dims; }
  const QuiverShape& shape() const noexcept { return shape_; }
  unsigned target(unsigned i) const { return shape_.target(i); }

  /// Block i: the nu_{i+eps} x nu_i matrix of T restricted to V_i.
  const FqMatrix& block(unsigned i) const { return blocks_[i]; }
  FqMatrix& block(unsigned i) { return blocks_[i]; }

  std::vector<Elem> coords() const;
  std::uint64_t index() const;
  SpaceDescriptor space() const;

  /// T as an endomorphism of V = V_0 + ... + V_{m-1}.
  FqMatrix full_matrix() const;
  /// The j-fold composite starting at V_a, a map V_a -> V_{a + j eps}.
  FqMatrix composite(unsigned a, unsigned j) const;

  /// g . T with T_i -> g_{i+eps} T_i g_i^{-1}.
  QuiverRep act(const std::vector<FqMatrix>& g) const;

  bool operator==(const QuiverRep& o) const { return shape_ == o.shape_ && blocks_ == o.blocks_; }

 private:
  FieldPtr field_;
  QuiverShape shape_;
  std::vector<FqMatrix> blocks_;
};

struct EigenPart {
  FqPoly g;  // monic irreducible, g != x; roots are eigenvalues of T^m
  PartitionMult rho;

  auto operator<=>(const EigenPart&) const = default;
};

struct OrbitLabel {
  unsigned m = 1;
  DimVector dims;
  Multisegment nilpotent_part;
  std::vector<EigenPart> eigen_parts;  // sorted by (deg g, coefficients)

  auto operator<=>(const OrbitLabel&) const = default;
  /// |nilpotent_part| + sum deg(g) underline(rho_g) 1 == dims.
  bool degree_identity_holds() const;
  std::string to_string() const;
};

struct StratumLabel {
  unsigned z = 0;
  Multisegment sigma;
  bool valid = true;

  auto operator<=>(const StratumLabel&) const = default;
  std::string to_string() const;
};

bool is_nilpotent(const QuiverRep& t);

/// Multisegment of a nilpotent T; throws UsageError otherwise.
Multisegment segment_multiplicities(const QuiverRep& t);
/// Multisegment of the nilpotent summand of an arbitrary T.
Multisegment nilpotent_part(const QuiverRep& t);

OrbitLabel decompose(const QuiverRep& t);
StratumLabel stratum_label(const QuiverRep& t);

/// Direct sum of segment models and (U(n), T(lambda)) models realizing the label.
QuiverRep representative(const FieldPtr& field, int eps, const OrbitLabel& label);

/// Graded dims of the g-primary summand (g = x gives the nilpotent summand).
DimVector primary_dims(const QuiverRep& t, const FqPoly& g);

/// T^m - lambda is nilpotent on V (the locus E^{eps,lambda}_V).
bool in_eigen_locus(const QuiverRep& t, Elem lambda);

struct EigenPointCount {
  Elem lambda = 0;
  std::uint64_t eigen_locus = 0;  // #E^{eps,lambda}_V
  std::uint64_t d_count = 0;      // #{S : S^m = lambda}
  std::uint64_t nilpotent = 0;    // nilpotent s x s matrices, counted
  bool holds() const { return eigen_locus == d_count * nilpotent; }
};

/// Exact point counts for V = (s, ..., s) and every lambda != 0. All q^{s^2 m}
/// tuples of blocks are counted by convolving histograms of block products.
std::vector<EigenPointCount> eigen_point_counts(const FieldPtr& field, unsigned m, unsigned s, std::uint64_t budget);

// --- orbit enumeration ------------------------------------------------------

/// A point orbit: sorted point indices; the minimum is the representative.
struct PointOrbit {
  std::vector<std::uint64_t> points;
  std::uint64_t representative() const { return points.front(); }
};

/// BFS closure of a locus under linear generators acting on coordinate
/// column vectors. The locus (filter) must be invariant. Orbits are sorted by
/// minimal point index.
std::vector<PointOrbit> enumerate_orbits(const SpaceDescriptor& space, const std::vector<FqMatrix>& generators,
                                         const std::function<bool(std::uint64_t)>& in_locus, std::uint64_t budget);

/// Generators of GL(nu_i) per vertex: I + c E_rs and diag(gamma, 1, ...).
std::vector<std::vector<FqMatrix>> gl_generators(const FieldPtr& field, const DimVector& dims);
/// The same generators as coordinate maps on E^eps_V.
std::vector<FqMatrix> quiver_group_generators(const SpaceDescriptor& space);

struct RationalOrbit {
  PointOrbit orbit;
  OrbitLabel label;
};

std::vector<RationalOrbit> enumerate_rational_orbits(const FieldPtr& field, unsigned m, const DimVector& dims,
                                                     int eps, bool nilpotent_only, std::uint64_t budget);

/// Marks the nilpotent points of a quiver space.
std::vector<bool> nilpotent_mask(const SpaceDescriptor& space, std::uint64_t budget);

}  // namespace antiorb
