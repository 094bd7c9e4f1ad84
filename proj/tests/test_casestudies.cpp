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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "antiorb/casestudies.hpp"
#include "antiorb/errors.hpp"
#include "antiorb/fourier.hpp"
#include "antiorb/invariants.hpp"

using namespace antiorb;

namespace {

constexpr std::uint64_t kBudget = 20'000'000;

// Brute-force Kloosterman sum over all (x1, x2) with x1 x2 = lambda.
CycNum k2_oracle(const FqField& f, Elem lambda) {
  CycNum s(f.p());
  for (Elem x = 1; x < f.q(); ++x) s = s + f.character(f.add(x, f.div(lambda, x)));
  return s;
}

Elem tr_product(const FqField& f, const FqMatrix& a, const FqMatrix& b) {
  const auto m = mat_mul(f, a, b);
  Elem t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t = f.add(t, m(i, i));
  return t;
}

}  // namespace

TEST_CASE("symplectic groups are generated by the transvections") {
  auto f3 = FqField::make(3);
  auto f5 = FqField::make(5);
  CHECK(matrix_group_order(*f3, symplectic_generators(*f3, symplectic_gram(*f3, 1)), 1'000'000) == 24);
  CHECK(matrix_group_order(*f5, symplectic_generators(*f5, symplectic_gram(*f5, 1)), 1'000'000) == 120);
  CHECK(matrix_group_order(*f3, symplectic_generators(*f3, symplectic_gram(*f3, 2)), 1'000'000) == 51840);
  for (const auto& g : symplectic_generators(*f3, symplectic_gram(*f3, 2))) {
    const auto j = symplectic_gram(*f3, 2);
    CHECK(mat_mul(*f3, transpose(g), mat_mul(*f3, j, g)) == j);
  }
}

TEST_CASE("monomial spaces") {
  auto f = FqField::make(3);
  FqMatrix g(2, 2);
  g(0, 1) = 1;
  g(1, 0) = 2;
  const auto s = monomial_space(f, "X", "Y", {"a", "b"}, {"c", "d"}, g);
  CHECK(s.pairing(std::vector<Elem>{1, 1}, std::vector<Elem>{1, 1}) == 0);
  CHECK(s.pairing(std::vector<Elem>{1, 0}, std::vector<Elem>{0, 1}) == 1);
  g(0, 0) = 1;
  CHECK_THROWS_AS(monomial_space(f, "X", "Y", {"a", "b"}, {"c", "d"}, g), UsageError);
}

TEST_CASE("quadric") {
  for (unsigned q : {3u, 5u}) {
    auto f = FqField::make(q);
    const auto r = quadric_check(f, 4, std::nullopt, kBudget);
    CHECK(r.q0_points == q * q * q + q * q - q);
    CHECK(r.q0_count_ok());
    CHECK(r.f0_at_zero == 1 + static_cast<std::int64_t>(q));
    CHECK(r.self_dual);
    CHECK(r.self_dual_scalar == static_cast<std::int64_t>(q * q));
    CHECK(r.kloosterman_ok());
    CHECK(r.levels.size() == q - 1);
    CHECK(r.solution_dim == 1);
    CHECK(r.solution_spanned_by_f0);
    CHECK(r.passed());
  }
  auto f = FqField::make(3);
  CHECK(k2_oracle(*f, 1) == CycNum::from_int(3, -1));
  // Spot value: Q_1 and x with Q(x) = 1 give q * K^2(1) = -3.
  const auto space = quadric_space(f, 4);
  FuncTable ind(space);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    if (quadric_value(*f, space.decode(i)) == 1) ind.set_int(i, 1);
  }
  const std::vector<Elem> x{1, 1, 0, 0};
  CHECK(fourier_at(ind, space.dual().encode(x)) == CycNum::from_int(3, -3));
  CHECK(fourier(ind).value(space.dual().encode(x)) == CycNum::from_int(3, -3));
  // A single lambda; larger N.
  CHECK(quadric_check(f, 4, Elem{2}, kBudget).levels.size() == 1);
  CHECK(quadric_check(f, 6, std::nullopt, kBudget).passed());
  CHECK_THROWS_AS(quadric_check(f, 3, std::nullopt, kBudget), UsageError);
  CHECK_THROWS_AS(quadric_check(FqField::make(9), 2, std::nullopt, kBudget), UsageError);
}

TEST_CASE("quadric Kloosterman values against a brute-force oracle") {
  auto f = FqField::make(5);
  const auto space = quadric_space(f, 4);
  std::vector<Elem> qv(space.size());
  for (std::uint64_t i = 0; i < qv.size(); ++i) qv[i] = quadric_value(*f, space.decode(i));
  for (Elem lam = 1; lam < 5; ++lam) {
    FuncTable ind(space);
    for (std::uint64_t i = 0; i < qv.size(); ++i) {
      if (qv[i] == lam) ind.set_int(i, 1);
    }
    const auto hat = fourier(ind);
    for (std::uint64_t x = 0; x < qv.size(); x += 7) {
      if (qv[x] == 0) continue;
      CHECK(hat.value(x) == CycNum::from_int(5, 5) * k2_oracle(*f, f->mul(lam, qv[x])));
    }
  }
}

TEST_CASE("symplectic pair") {
  auto f = FqField::make(3);
  const auto space = symplectic_space(f);
  CHECK(space.dim() == 8);
  const auto j = symplectic_gram(*f, 3);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = space.decode(rng() % space.size());
    const auto y = space.decode(rng() % space.size());
    const auto t = symplectic_full_matrix(*f, x);
    // T in sp(V): T^T J + J T = 0; and T swaps the grading.
    CHECK(mat_add(*f, mat_mul(*f, transpose(t), j), mat_mul(*f, j, t)).is_zero());
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) CHECK(t(r, c) == 0);
    CHECK(space.pairing(x, y) == tr_product(*f, t, symplectic_full_matrix(*f, y)));
  }
  const auto r = symplectic_check(f, kBudget);
  REQUIRE(r.orbits.size() == 3);
  CHECK(r.orbits[0].name == "0");
  CHECK(r.orbits[0].representative == 0);
  const std::uint64_t group_order = 24ull * 51840ull;
  std::uint64_t total = 0;
  for (const auto& o : r.orbits) {
    CHECK(group_order % o.size == 0);
    total += o.size;
  }
  CHECK(total == r.nilpotent_points);
  CHECK(r.biorbital_dim == 2);
  CHECK(r.biorbital_verified);
  CHECK(r.closure_supports_ok);
  CHECK(r.passed());

  // Labels are constant on orbits.
  const auto nil = [&](std::uint64_t i) { return is_nilpotent(*f, symplectic_full_matrix(*f, space.decode(i))); };
  for (const auto& o : enumerate_orbits(space, symplectic_group_generators(*f), nil, kBudget)) {
    std::set<std::vector<std::size_t>> seqs;
    for (auto pt : o.points) {
      const auto t = symplectic_full_matrix(*f, space.decode(pt));
      seqs.insert({rank(*f, t), rank(*f, mat_mul(*f, t, t))});
    }
    CHECK(seqs.size() == 1);
  }
}

TEST_CASE("symmetric-square piece") {
  for (unsigned q : {3u, 5u}) {
    auto f = FqField::make(q);
    const auto r1 = symmetric_case_check(f, 1, kBudget);
    CHECK(r1.space_dim == 1);
    CHECK(r1.nilpotent_points == 1);
    CHECK(r1.biorbital_dim == 0);
    CHECK(r1.matches_expectation());
  }
  auto f = FqField::make(3);
  const auto space = symmetric_space(f, 2);
  CHECK(space.dim() == 6);
  const auto j = symplectic_gram(*f, 2);
  for (std::uint64_t i = 0; i < space.size(); i += 13) {
    const auto t = symmetric_full_matrix(*f, 2, space.decode(i));
    // <Tx, y> = <x, Ty>: T^T J = J T.
    CHECK(mat_mul(*f, transpose(t), j) == mat_mul(*f, j, t));
  }
  const auto r2 = symmetric_case_check(f, 2, kBudget);
  CHECK(r2.biorbital_verified);
  const std::string note = "symmetric n=2 q=3 biorbital dimension " + std::to_string(r2.biorbital_dim);
  MESSAGE(note);
}

TEST_CASE("unipotent coadjoint example") {
  auto f = FqField::make(3);
  const auto space = unipotent_space(f);
  // Coadjoint generators preserve the pairing against conjugation on g.
  std::mt19937_64 rng(3);
  const auto gens = unipotent_group_generators(*f);
  std::size_t gi = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t jj = i + 1; jj < 4; ++jj)
      for (Elem c = 1; c < 3; ++c, ++gi) {
        FqMatrix g = FqMatrix::identity(4), ginv = FqMatrix::identity(4);
        g(i, jj) = c;
        ginv(i, jj) = f->neg(c);
        for (int t = 0; t < 10; ++t) {
          const auto b = space.decode(rng() % space.size());
          const auto a = space.dual().decode(rng() % space.size());
          // a as a matrix: coordinates a12, a13, a23, a14, a24, a34.
          const std::size_t rows[6] = {0, 0, 1, 0, 1, 2}, cols[6] = {1, 2, 2, 3, 3, 3};
          FqMatrix am(4, 4);
          for (std::size_t k = 0; k < 6; ++k) am(rows[k], cols[k]) = a[k];
          const auto ga = mat_mul(*f, g, mat_mul(*f, am, ginv));
          std::vector<Elem> a2(6), b2(6, 0);
          for (std::size_t k = 0; k < 6; ++k) a2[k] = ga(rows[k], cols[k]);
          for (std::size_t r = 0; r < 6; ++r)
            for (std::size_t k = 0; k < 6; ++k) b2[r] = f->add(b2[r], f->mul(gens[gi](r, k), b[k]));
          CHECK(space.pairing(b2, a2) == space.pairing(b, a));
        }
      }

  // Fixed point (x, y, z) in U1: transform is psi(x a12 + y a23 + z a34) everywhere.
  std::vector<Elem> b{1, 0, 2, 0, 0, 1};
  CHECK(unipotent_stratum(b) == 1);
  PointOrbit fixed;
  fixed.points.push_back(space.encode(b));
  const auto hat = fourier(orbit_indicator(space, fixed));
  const auto dual = space.dual();
  for (std::uint64_t i = 0; i < dual.size(); ++i) {
    const auto a = dual.decode(i);
    const Elem form = f->add(f->add(a[0], f->mul(2, a[2])), a[5]);
    CHECK(hat.value(i) == f->character(form));
  }
  PointOrbit zero;
  zero.points.push_back(0);
  const auto one = fourier(orbit_indicator(space, zero));
  for (std::uint64_t i = 0; i < one.size(); ++i) CHECK(one.value(i) == CycNum::from_int(3, 1));

  for (unsigned q : {3u, 5u}) {
    const auto r = unipotent_check(FqField::make(q), kBudget);
    CHECK(r.partition_ok);
    CHECK(r.total_orbit_points == static_cast<std::uint64_t>(q * q * q) * q * q * q);
    REQUIRE(r.strata.size() == 5);
    for (const auto& s : r.strata) {
      CHECK(s.orbit_sizes_ok);
      CHECK(s.support_ok == s.orbit_count);
      if (s.form_asserted) CHECK(s.form_ok == s.orbit_count);
    }
    CHECK(r.strata[0].orbit_count == q * q * q);
    if (q == 3) CHECK(r.strata[3].points / r.strata[3].orbit_count == 81);
    CHECK(r.passed());
  }
}

TEST_CASE("generic transforms agree with the naive sum") {
  auto f = FqField::make(3);
  for (const auto& space : {quadric_space(f, 4), symplectic_space(f), unipotent_space(f)}) {
    std::mt19937_64 rng(11);
    FuncTable t(space);
    for (std::uint64_t i = 0; i < t.size(); ++i) t.set_int(i, static_cast<std::int64_t>(rng() % 5) - 2);
    const auto hat = fourier(t);
    for (std::uint64_t y = 0; y < hat.size(); y += 97) CHECK(hat.value(y) == fourier_at(t, y));
  }
}
