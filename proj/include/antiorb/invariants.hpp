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

// Invariant functions on quiver spaces: orbit indicators, the biorbital
// space, parabolic induction and restriction at function level, their
// commutation with the Fourier transform, and flag-count functions.
//
// Induction convention: the first part is the subrepresentation. For parts
// (f_1, ..., f_s), (Ind f)(T) sums over graded T-stable flags
// 0 = V^0 < V^1 < ... < V^s = V with V^j / V^{j-1} of dims |U^j| the
// product of f_j on the successive quotients. Restriction uses the standard
// coordinate flag with the same ordering and sums over the strictly
// block-upper entries.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "antiorb/fourier.hpp"
#include "antiorb/quiver.hpp"
#include "antiorb/space.hpp"

namespace antiorb {

FuncTable orbit_indicator(const SpaceDescriptor& space, const PointOrbit& orbit);

/// Group generators as coordinate maps: GL per vertex on a quiver space,
/// block diagonal over the factors of a product of quiver spaces.
std::vector<FqMatrix> group_generators(const SpaceDescriptor& space);

/// Checks f(g x) == f(x) for every generator on up to sample_limit points
/// (all points when the space is smaller).
bool is_invariant(const FuncTable& f, std::uint64_t sample_limit = 4096);

/// One seeded random integer in [-3, 3] per rational orbit.
FuncTable random_invariant_function(const SpaceDescriptor& space, std::uint64_t seed, std::uint64_t budget);

struct BiorbitalSpace {
  std::size_t dimension = 0;
  std::vector<PointOrbit> orbits;          // coefficient basis: indicators of these
  std::vector<std::vector<CycNum>> basis;  // denominators cleared
  std::vector<FuncTable> functions;        // sum_j basis[k][j] 1_{O_j}
  std::uint64_t distinct_rows = 0;
  bool verified = false;  // every basis transform vanishes off the dual locus
};

/// Functions spanned by the given orbit indicators whose transforms vanish
/// at every dual point outside dual_locus.
BiorbitalSpace biorbital_from_orbits(const SpaceDescriptor& space, std::vector<PointOrbit> orbits,
                                     const std::vector<bool>& dual_locus);

/// Quiver case: orbits are the nilpotent rational orbits of E^eps_V.
BiorbitalSpace biorbital_space(const FieldPtr& field, unsigned m, const DimVector& dims, int eps,
                               std::uint64_t budget);

struct InducePart {
  DimVector dims;
  FuncTable f;  // on E^eps of these dims
};

FuncTable induce(const FieldPtr& field, unsigned m, int eps, const std::vector<InducePart>& parts,
                 std::uint64_t budget);

/// Output lives on the product of E^eps over the parts, in part order.
FuncTable restrict_to_levi(const FuncTable& f, const std::vector<DimVector>& parts, std::uint64_t budget);

/// dim of the nilradical: sum over k < l and vertices i of d_k[i+eps] * d_l[i].
std::size_t nilradical_dim(unsigned m, int eps, const std::vector<DimVector>& parts);

/// All graded subspaces of F_q^n of dimension k, as RREF k x n matrices.
std::vector<FqMatrix> grassmannian(const FqField& f, unsigned k, unsigned n);

struct CommutationReport {
  ColinearityReport colinearity;
  std::optional<int> q_exponent;  // scalar = +-q^k when it is a power of q
  int predicted_exponent = 0;     // dimension of the relevant nilradical
  bool degenerate() const { return colinearity.degenerate; }
  bool passed() const { return colinearity.colinear && (degenerate() || q_exponent.has_value()); }
};

/// Compares F(Ind_eps f) with Ind_{-eps}(F f_j); scalar is the first over the second.
CommutationReport check_fourier_induction_commutes(const FieldPtr& field, unsigned m, int eps,
                                                   const std::vector<InducePart>& parts, std::uint64_t budget);

/// Compares Res_{-eps}(F f) with F(Res_eps f); scalar is the first over the second.
CommutationReport check_fourier_restriction_commutes(const FuncTable& f, const std::vector<DimVector>& parts,
                                                     std::uint64_t budget);

/// Distinct orderings of the unit pieces of dims, as vertex sequences.
std::vector<std::vector<unsigned>> flag_types(const DimVector& dims);

/// Number of complete graded T-stable flags of the given type, i.e. the
/// iterated induction of delta_0 on one-dimensional pieces.
FuncTable flag_count_function(const FieldPtr& field, unsigned m, const DimVector& dims, int eps,
                              const std::vector<unsigned>& flag_type, std::uint64_t budget);

struct EigenStratumReport {
  std::uint64_t points_checked = 0;  // dual points with T'^m invertible
  std::uint64_t mismatches = 0;
  bool passed() const { return points_checked > 0 && mismatches == 0; }
};

/// Graded dims (1, ..., 1): the transform of the indicator of E^{eps,lambda}
/// against K^m(lambda lambda') at every T' in E^{-eps} with T'^m = lambda' != 0.
EigenStratumReport check_eigen_stratum_transform(const FieldPtr& field, unsigned m, int eps, Elem lambda,
                                                 std::uint64_t budget);

struct SupportStrata {
  std::set<StratumLabel> labels;
  unsigned max_z = 0;
  std::set<Multisegment> sigma_at_max_z;
};

/// Stratum labels met by the support of a table on a quiver space.
SupportStrata support_strata(const FuncTable& g);

/// Index of the coordinatewise Frobenius image x -> x^p.
std::uint64_t frobenius_index(const SpaceDescriptor& space, std::uint64_t index);

}  // namespace antiorb
