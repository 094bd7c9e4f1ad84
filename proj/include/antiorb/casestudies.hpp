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

// The non-quiver worked examples: a split quadric, a graded piece of sp_6,
// the symmetric-square piece of gl_2n, and the coadjoint action of the 4x4
// unitriangular group.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "antiorb/fq_linalg.hpp"
#include "antiorb/quiver.hpp"
#include "antiorb/space.hpp"

namespace antiorb {

// --- shared helpers -----------------------------------------------------------

/// Space with a pairing given by a Gram matrix gram(j, k) = kappa(e_j, e'_k).
/// Throws UsageError unless every row and column has exactly one nonzero entry.
SpaceDescriptor monomial_space(FieldPtr field, std::string name, std::string dual_name,
                               std::vector<std::string> coords, std::vector<std::string> dual_coords,
                               const FqMatrix& gram);

/// Matrix of a linear map on coordinate vectors, built column by column.
FqMatrix coordinate_map(std::size_t n, const std::function<std::vector<Elem>(const std::vector<Elem>&)>& fn);

/// Standard symplectic Gram matrix on (e_1, f_1, ..., e_n, f_n).
FqMatrix symplectic_gram(const FqField& f, std::size_t n);

/// Symplectic transvections x -> x + c <v, x> v for v a basis vector or a sum
/// of two basis vectors and c in F_q^*. They generate Sp(gram).
std::vector<FqMatrix> symplectic_generators(const FqField& f, const FqMatrix& gram);

/// Size of the matrix group generated by gens (BFS over elements, capped).
std::uint64_t matrix_group_order(const FqField& f, const std::vector<FqMatrix>& gens, std::uint64_t cap);

// --- quadric --------------------------------------------------------------------

struct QuadricLevelCheck {
  Elem lambda = 0;
  std::uint64_t points_checked = 0;
  bool ok = true;
};

struct QuadricReport {
  unsigned q = 0;
  unsigned n_dim = 0;  // N
  std::uint64_t q0_points = 0;
  std::uint64_t q0_expected = 0;
  std::int64_t f0_at_zero = 0;
  std::int64_t self_dual_scalar = 0;  // q^{N/2}
  bool self_dual = false;
  std::int64_t kloosterman_scalar = 0;  // q^{(N-2)/2}
  std::vector<QuadricLevelCheck> levels;
  std::size_t solution_dim = 0;
  bool solution_spanned_by_f0 = false;

  bool q0_count_ok() const { return q0_points == q0_expected; }
  bool kloosterman_ok() const;
  bool passed() const;
};

/// Split form on F_q^N: n hyperbolic planes, (x, y) = sum x_{2k} y_{2k+1} + x_{2k+1} y_{2k}.
SpaceDescriptor quadric_space(const FieldPtr& field, unsigned n_dim);
/// Q(x) = (x, x) / 2.
Elem quadric_value(const FqField& f, const std::vector<Elem>& x);
/// 0 off Q_0, 1 on Q_0 minus 0, 1 + q^{(N-2)/2} at 0.
FuncTable quadric_f0(const SpaceDescriptor& space);
QuadricReport quadric_check(const FieldPtr& field, unsigned n_dim, std::optional<Elem> lambda, std::uint64_t budget);

// --- symplectic pair ------------------------------------------------------------

struct SymplecticOrbitInfo {
  std::string name;  // "0", "O'", "O"
  std::uint64_t size = 0;
  std::uint64_t representative = 0;
  std::vector<std::size_t> rank_sequence;  // rank T^k, k = 1, 2, 3
};

struct SymplecticReport {
  unsigned q = 0;
  std::size_t nilpotent_points = 0;
  std::vector<SymplecticOrbitInfo> orbits;
  std::size_t biorbital_dim = 0;
  bool biorbital_verified = false;
  // Basis adapted to closures: one function involving O, one supported on cl(O').
  std::vector<std::vector<CycNum>> adapted_basis;
  bool closure_supports_ok = false;

  bool passed() const;
};

/// E = {T in sp(V) : T V_0 in V_1, T V_1 in V_0}, dim V_0 = 2, dim V_1 = 4,
/// coordinatized by the block A : V_0 -> V_1 (4 x 2, row-major).
SpaceDescriptor symplectic_space(const FieldPtr& field);
/// The full 6 x 6 endomorphism for the coordinates of A.
FqMatrix symplectic_full_matrix(const FqField& f, const std::vector<Elem>& a);
/// Sp(V_0) x Sp(V_1) acting on A by A -> k_1 A k_0^{-1}.
std::vector<FqMatrix> symplectic_group_generators(const FqField& f);
SymplecticReport symplectic_check(const FieldPtr& field, std::uint64_t budget);

// --- symmetric-square piece -----------------------------------------------------

struct SymmetricReport {
  unsigned q = 0;
  unsigned n = 0;
  std::size_t space_dim = 0;
  std::uint64_t nilpotent_points = 0;
  std::size_t nilpotent_orbits = 0;
  std::size_t biorbital_dim = 0;
  bool biorbital_verified = false;

  /// Exploratory: zero is expected, a nonzero value is reported, not failed.
  bool matches_expectation() const { return biorbital_dim == 0; }
};

/// E = {T : <Tx, y> = <x, Ty>} = J^{-1} (skew matrices), coordinates S_ij, i < j.
SpaceDescriptor symmetric_space(const FieldPtr& field, unsigned n);
FqMatrix symmetric_full_matrix(const FqField& f, unsigned n, const std::vector<Elem>& s);
std::vector<FqMatrix> symmetric_group_generators(const FqField& f, unsigned n);
SymmetricReport symmetric_case_check(const FieldPtr& field, unsigned n, std::uint64_t budget);

// --- unipotent coadjoint example ------------------------------------------------

struct UnipotentStratum {
  unsigned index = 0;  // 1..5
  std::uint64_t points = 0;
  std::size_t orbit_count = 0;
  unsigned expected_orbit_dim = 0;
  bool orbit_sizes_ok = true;
  std::size_t support_ok = 0;  // orbits whose transform is supported in the stated locus
  std::size_t form_ok = 0;     // orbits whose transform is a constant times psi(form) there
  bool form_asserted = true;   // false for stratum 4

  bool passed() const;
};

struct UnipotentReport {
  unsigned q = 0;
  bool partition_ok = false;
  std::uint64_t total_orbit_points = 0;
  std::vector<UnipotentStratum> strata;

  bool passed() const;
};

/// h = strictly lower 4 x 4 matrices, coordinates b21, b31, b32, b41, b42, b43;
/// the dual g = strictly upper, a12, a13, a23, a14, a24, a34, paired by sum a_ij b_ji.
SpaceDescriptor unipotent_space(const FieldPtr& field);
/// Stratum 1..5 of a point of h.
unsigned unipotent_stratum(const std::vector<Elem>& b);
/// b -> lower part of g b g^{-1} for g = I + c E_ij, i < j.
std::vector<FqMatrix> unipotent_group_generators(const FqField& f);
UnipotentReport unipotent_check(const FieldPtr& field, std::uint64_t budget);

}  // namespace antiorb
