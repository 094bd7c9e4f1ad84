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

#include <map>
#include <set>

#include "antiorb/errors.hpp"
#include "antiorb/exact_linalg.hpp"
#include "antiorb/invariants.hpp"

using namespace antiorb;

namespace {

constexpr std::uint64_t kBudget = 2'000'000;

using Vec = std::vector<Elem>;

// --- independent flag oracle --------------------------------------------------

std::vector<Vec> all_vectors(const FqField& f, unsigned n) {
  std::vector<Vec> out;
  Vec v(n, 0);
  for (;;) {
    out.push_back(v);
    std::size_t j = 0;
    while (j < n && ++v[j] == f.q()) v[j++] = 0;
    if (j == n) break;
  }
  return out;
}

Vec lin(const FqField& f, const std::vector<Vec>& basis, const Vec& coef, unsigned n) {
  Vec v(n, 0);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (unsigned r = 0; r < n; ++r) v[r] = f.add(v[r], f.mul(coef[k], basis[k][r]));
  return v;
}

// Subspaces of F_q^n of dim k as (basis, element set), deduplicated by the set.
std::vector<std::pair<std::vector<Vec>, std::set<Vec>>> subspaces(const FqField& f, unsigned k, unsigned n) {
  std::map<std::set<Vec>, std::vector<Vec>> found;
  const auto vecs = all_vectors(f, n);
  const auto coefs = all_vectors(f, k);
  std::vector<std::size_t> pick(k, 0);
  for (;;) {
    std::vector<Vec> basis;
    for (auto p : pick) basis.push_back(vecs[p]);
    std::set<Vec> span;
    for (const auto& c : coefs) span.insert(lin(f, basis, c, n));
    if (span.size() == coefs.size() && !found.count(span)) found[span] = basis;
    std::size_t j = 0;
    while (j < k && ++pick[j] == vecs.size()) pick[j++] = 0;
    if (j == k) break;
  }
  std::vector<std::pair<std::vector<Vec>, std::set<Vec>>> out;
  for (auto& [s, b] : found) out.emplace_back(b, s);
  return out;
}

Vec apply_block(const FqField& f, const FqMatrix& a, const Vec& v) {
  Vec out(a.rows(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r] = f.add(out[r], f.mul(a(r, c), v[c]));
  return out;
}

// Coordinates of v in basis b by exhaustive search.
Vec solve(const FqField& f, const std::vector<Vec>& b, const Vec& v) {
  for (const auto& c : all_vectors(f, static_cast<unsigned>(b.size()))) {
    if (lin(f, b, c, static_cast<unsigned>(v.size())) == v) return c;
  }
  FAIL("vector not in span");
  return {};
}

// (Ind f)(T) for two parts by enumerating graded subspaces and solving for
// the induced maps coordinate by coordinate.
FuncTable induce_oracle(const FieldPtr& field, unsigned m, int eps, const DimVector& d1, const FuncTable& f1,
                        const DimVector& d2, const FuncTable& f2) {
  const FqField& f = *field;
  DimVector nu(m);
  for (unsigned i = 0; i < m; ++i) nu[i] = d1[i] + d2[i];
  const auto space = SpaceDescriptor::quiver(field, m, eps, nu);
  FuncTable out(space);
  std::vector<std::vector<std::pair<std::vector<Vec>, std::set<Vec>>>> subs(m);
  for (unsigned i = 0; i < m; ++i) subs[i] = subspaces(f, d1[i], nu[i]);
  for (std::uint64_t x = 0; x < space.size(); ++x) {
    const auto t = QuiverRep::from_index(space, x);
    std::vector<std::size_t> pick(m, 0);
    for (;;) {
      bool stable = true;
      for (unsigned i = 0; i < m && stable; ++i) {
        for (const auto& b : subs[i][pick[i]].first) {
          if (!subs[t.target(i)][pick[t.target(i)]].second.count(apply_block(f, t.block(i), b))) stable = false;
        }
      }
      if (stable) {
        // Bases: W_i, then complement vectors chosen greedily from the standard basis.
        std::vector<std::vector<Vec>> wb(m), full(m);
        for (unsigned i = 0; i < m; ++i) {
          wb[i] = subs[i][pick[i]].first;
          full[i] = wb[i];
          for (unsigned e = 0; e < nu[i] && full[i].size() < nu[i]; ++e) {
            Vec u(nu[i], 0);
            u[e] = 1;
            auto trial = full[i];
            trial.push_back(u);
            std::set<Vec> span;
            for (const auto& c : all_vectors(f, static_cast<unsigned>(trial.size())))
              span.insert(lin(f, trial, c, nu[i]));
            std::uint64_t expect = 1;
            for (std::size_t k = 0; k < trial.size(); ++k) expect *= f.q();
            if (span.size() == expect) full[i] = trial;
          }
        }
        QuiverRep t1(field, m, eps, d1), t2(field, m, eps, d2);
        for (unsigned i = 0; i < m; ++i) {
          const unsigned tg = t.target(i);
          for (unsigned c = 0; c < nu[i]; ++c) {
            const Vec img = solve(f, full[tg], apply_block(f, t.block(i), full[i][c]));
            for (unsigned r = 0; r < nu[tg]; ++r) {
              if (c < d1[i] && r < d1[tg]) t1.block(i)(r, c) = img[r];
              if (c >= d1[i] && r >= d1[tg]) t2.block(i)(r - d1[tg], c - d1[i]) = img[r];
            }
          }
        }
        out.add_product(x, f1, t1.index(), f2, t2.index());
      }
      std::size_t j = 0;
      while (j < m && ++pick[j] == subs[j].size()) pick[j++] = 0;
      if (j == m) break;
    }
  }
  return out;
}

FuncTable delta0(const FieldPtr& f, unsigned m, int eps, const DimVector& d) {
  FuncTable t(SpaceDescriptor::quiver(f, m, eps, d));
  t.set_int(0, 1);
  return t;
}

FuncTable rand_inv(const FieldPtr& f, unsigned m, int eps, const DimVector& d, std::uint64_t seed) {
  return random_invariant_function(SpaceDescriptor::quiver(f, m, eps, d), seed, kBudget);
}

}  // namespace

TEST_CASE("orbit indicators") {
  auto f = FqField::make(3);
  const auto s = SpaceDescriptor::quiver(f, 2, 1, {1, 1});
  const auto orbits = enumerate_rational_orbits(f, 2, {1, 1}, 1, false, kBudget);
  const auto d = orbit_indicator(s, orbits[0].orbit);
  CHECK(d.value(0) == CycNum::from_int(3, 1));
  for (std::uint64_t i = 1; i < d.size(); ++i) CHECK(d.is_zero_at(i));
  PointOrbit all;
  for (std::uint64_t i = 0; i < s.size(); ++i) all.points.push_back(i);
  const auto one = orbit_indicator(s, all);
  for (std::uint64_t i = 0; i < s.size(); ++i) CHECK(one.value(i) == CycNum::from_int(3, 1));
  // Orbit of blocks (1, 0): index 1 (coordinate T0 = 1).
  for (const auto& o : orbits) {
    if (o.orbit.points.front() == 1) {
      const auto ind = orbit_indicator(s, o.orbit);
      int ones = 0;
      for (std::uint64_t i = 0; i < s.size(); ++i) ones += !ind.is_zero_at(i);
      CHECK(ones == 2);
    }
  }
}

TEST_CASE("grassmannian sizes are Gaussian binomials") {
  auto f = FqField::make(3);
  CHECK(grassmannian(*f, 1, 2).size() == 4);
  CHECK(grassmannian(*f, 2, 4).size() == 130);
  CHECK(grassmannian(*f, 0, 3).size() == 1);
  CHECK(grassmannian(*f, 3, 3).size() == 1);
  CHECK(grassmannian(*f, 2, 1).empty());
}

TEST_CASE("biorbital space examples") {
  auto f = FqField::make(3);
  CHECK(biorbital_space(f, 1, {1}, 1, kBudget).dimension == 0);
  CHECK(biorbital_space(f, 1, {2}, 1, kBudget).dimension == 0);
  const auto b = biorbital_space(f, 2, {1, 1}, 1, kBudget);
  CHECK(b.dimension == 2);
  CHECK(b.dimension == count_multisegments(2, {1, 1}).aperiodic);
  CHECK(b.verified);
  const auto z = biorbital_space(f, 2, {0, 0}, 1, kBudget);
  CHECK(z.dimension == 1);
  CHECK(z.verified);
  // Every basis function is supported on nilpotents and its transform vanishes off them.
  const auto space = SpaceDescriptor::quiver(f, 2, 1, {1, 1});
  const auto nil = nilpotent_mask(space, kBudget);
  const auto dnil = nilpotent_mask(space.dual(), kBudget);
  for (const auto& fn : b.functions) {
    const auto fh = fourier(fn);
    for (std::uint64_t i = 0; i < space.size(); ++i) {
      if (!nil[i]) CHECK(fn.is_zero_at(i));
      if (!dnil[i]) CHECK(fh.is_zero_at(i));
    }
  }
}

TEST_CASE("exact nullspace") {
  const auto one = CycNum::from_int(3, 1), z = CycNum::zeta_power(3, 1);
  // Rows (1, z, 0) and (0, 1, 1 + z).
  const auto ns = nullspace(3, 3, {{one, z, CycNum(3)}, {CycNum(3), one, one + z}});
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] + z * ns[0][1] == CycNum(3));
  CHECK(ns[0][1] + (one + z) * ns[0][2] == CycNum(3));
  const auto cl = clear_denominators({CycNum::from_rational(3, mpq_class(1, 2)), CycNum::from_rational(3, mpq_class(1, 3))});
  CHECK(cl[0] == CycNum::from_int(3, 3));
  CHECK(cl[1] == CycNum::from_int(3, 2));
}

TEST_CASE("induction matches the flag-enumeration oracle") {
  auto f = FqField::make(3);
  struct Case {
    unsigned m;
    int eps;
    DimVector d1, d2;
  };
  for (const auto& c : std::vector<Case>{{2, 1, {1, 1}, {1, 0}},
                                         {2, -1, {1, 0}, {1, 1}},
                                         {2, 1, {0, 1}, {1, 0}},
                                         {3, 1, {1, 0, 1}, {0, 1, 0}},
                                         {1, 1, {1}, {1}}}) {
    for (std::uint64_t seed : {1u, 2u}) {
      const auto f1 = rand_inv(f, c.m, c.eps, c.d1, seed);
      const auto f2 = rand_inv(f, c.m, c.eps, c.d2, seed + 10);
      const auto got = induce(f, c.m, c.eps, {{c.d1, f1}, {c.d2, f2}}, kBudget);
      const auto want = induce_oracle(f, c.m, c.eps, c.d1, f1, c.d2, f2);
      CHECK(got.values_equal(want));
      CHECK(is_invariant(got));
    }
  }
}

TEST_CASE("induction worked examples") {
  auto f = FqField::make(3);
  const auto f1 = rand_inv(f, 2, 1, {1, 1}, 5);
  const auto ind = induce(f, 2, 1, {{{1, 1}, f1}, {{0, 0}, delta0(f, 2, 1, {0, 0})}}, kBudget);
  CHECK(ind.values_equal(f1));
  // Flag count at T = 0 for dims (1,1) is 1 whatever the order.
  const auto a = induce(f, 2, 1, {{{1, 0}, delta0(f, 2, 1, {1, 0})}, {{0, 1}, delta0(f, 2, 1, {0, 1})}}, kBudget);
  CHECK(a.value(0) == CycNum::from_int(3, 1));

  // Eigenvalue-distinct parts: value 1 on the open orbit.
  const auto s11 = SpaceDescriptor::quiver(f, 2, 1, {1, 1});
  auto level = [&](Elem lam) {
    FuncTable t(s11);
    for (std::uint64_t i = 0; i < s11.size(); ++i) {
      const auto x = s11.decode(i);
      if (f->mul(x[0], x[1]) == lam) t.set_int(i, 1);
    }
    return t;
  };
  const auto ind2 = induce(f, 2, 1, {{{1, 1}, level(1)}, {{1, 1}, level(2)}}, kBudget);
  const auto s22 = SpaceDescriptor::quiver(f, 2, 1, {2, 2});
  int hits = 0;
  for (std::uint64_t i = 0; i < s22.size(); ++i) {
    const auto l = decompose(QuiverRep::from_index(s22, i));
    const bool open = l.nilpotent_part.is_zero() && l.eigen_parts.size() == 2;
    if (open) {
      ++hits;
      CHECK(ind2.value(i) == CycNum::from_int(3, 1));
    }
  }
  CHECK(hits > 0);
  CHECK_THROWS_AS(induce(f, 2, 1, {{{1, 1}, level(1)}, {{1, 1}, [&] {
                                      FuncTable t(s11);
                                      t.set_int(1, 1);
                                      return t;
                                    }()}},
                         kBudget),
                  UsageError);
}

TEST_CASE("induction is transitive") {
  auto f = FqField::make(3);
  const auto f1 = rand_inv(f, 2, 1, {1, 1}, 1);
  const auto f2 = rand_inv(f, 2, 1, {1, 0}, 2);
  const auto f3 = rand_inv(f, 2, 1, {0, 1}, 3);
  const auto all = induce(f, 2, 1, {{{1, 1}, f1}, {{1, 0}, f2}, {{0, 1}, f3}}, kBudget);
  const auto left = induce(f, 2, 1, {{{2, 1}, induce(f, 2, 1, {{{1, 1}, f1}, {{1, 0}, f2}}, kBudget)}, {{0, 1}, f3}},
                           kBudget);
  CHECK(all.values_equal(left));
}

TEST_CASE("restriction against a direct block-upper oracle") {
  auto f = FqField::make(3);
  const auto s = SpaceDescriptor::quiver(f, 2, 1, {2, 2});
  const auto g = rand_inv(f, 2, 1, {2, 2}, 9);
  const auto ind = induce(f, 2, 1, {{{1, 1}, rand_inv(f, 2, 1, {1, 1}, 3)}, {{1, 1}, rand_inv(f, 2, 1, {1, 1}, 4)}},
                          kBudget);
  for (const auto* fn : {&g, &ind}) {
    const auto res = restrict_to_levi(*fn, {{1, 1}, {1, 1}}, kBudget);
    // Coordinates of E^+_(2,2): block 0 = T0 (2x2, V0 -> V1), block 1 = T1 (V1 -> V0).
    // Block-upper means entry (1, 0) of each block vanishes.
    FuncTable want(res.space());
    for (std::uint64_t i = 0; i < s.size(); ++i) {
      const auto x = s.decode(i);
      if (x[2] != 0 || x[6] != 0) continue;
      const std::vector<Elem> lev{x[0], x[4], x[3], x[7]};
      want.add_value(res.space().encode(lev), *fn, i);
    }
    CHECK(res.values_equal(want));
  }
  // delta_0 restricts to delta_0, constant 1 to q^(dim n).
  FuncTable d(s);
  d.set_int(0, 1);
  const auto rd = restrict_to_levi(d, {{1, 1}, {1, 1}}, kBudget);
  CHECK(rd.value(0) == CycNum::from_int(3, 1));
  for (std::uint64_t i = 1; i < rd.size(); ++i) CHECK(rd.is_zero_at(i));
  FuncTable one(s);
  for (std::uint64_t i = 0; i < s.size(); ++i) one.set_int(i, 1);
  const auto r1 = restrict_to_levi(one, {{1, 1}, {1, 1}}, kBudget);
  CHECK(nilradical_dim(2, 1, {{1, 1}, {1, 1}}) == 2);
  for (std::uint64_t i = 0; i < r1.size(); ++i) CHECK(r1.value(i) == CycNum::from_int(3, 9));
  CHECK(is_invariant(r1));
}

TEST_CASE("commutation checks") {
  auto f = FqField::make(3);
  const auto r0 = check_fourier_induction_commutes(
      f, 2, 1, {{{1, 1}, delta0(f, 2, 1, {1, 1})}, {{1, 1}, delta0(f, 2, 1, {1, 1})}}, kBudget);
  CHECK(r0.passed());
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto r = check_fourier_induction_commutes(
        f, 2, 1, {{{1, 0}, rand_inv(f, 2, 1, {1, 0}, seed)}, {{0, 1}, rand_inv(f, 2, 1, {0, 1}, seed + 1)},
                  {{1, 1}, rand_inv(f, 2, 1, {1, 1}, seed + 2)}},
        kBudget);
    CHECK(r.passed());
    if (r.q_exponent) CHECK(*r.q_exponent == r.predicted_exponent);
    const auto g = rand_inv(f, 2, -1, {2, 2}, seed);
    const auto rr = check_fourier_restriction_commutes(g, {{1, 1}, {1, 1}}, kBudget);
    CHECK(rr.passed());
    if (rr.q_exponent) CHECK(*rr.q_exponent == rr.predicted_exponent);
  }
  const auto zero = check_fourier_restriction_commutes(FuncTable(SpaceDescriptor::quiver(f, 2, 1, {2, 2})),
                                                       {{1, 1}, {1, 1}}, kBudget);
  CHECK(zero.degenerate());
  CHECK(zero.passed());
  CHECK_FALSE(zero.colinearity.scalar);
}

TEST_CASE("flag count functions") {
  auto f = FqField::make(3);
  CHECK(flag_types({1, 1}).size() == 2);
  CHECK(flag_types({2, 1}).size() == 3);
  for (const auto& dims : std::vector<DimVector>{{1, 1}, {2, 1}}) {
    const auto s = SpaceDescriptor::quiver(f, 2, 1, dims);
    const auto nil = nilpotent_mask(s, kBudget);
    const auto dnil = nilpotent_mask(s.dual(), kBudget);
    for (const auto& type : flag_types(dims)) {
      const auto fl = flag_count_function(f, 2, dims, 1, type, kBudget);
      // At T = 0 every flag counts: product over vertices of [nu_i]_q!.
      long at0 = 1;
      for (unsigned v : dims) at0 *= v == 2 ? 4 : 1;
      CHECK(fl.value(0) == CycNum::from_int(3, at0));
      for (std::uint64_t i = 0; i < s.size(); ++i) {
        if (!nil[i]) CHECK(fl.is_zero_at(i));
      }
      const auto dual_fl = flag_count_function(f, 2, dims, -1, type, kBudget);
      const auto rep = colinear(dual_fl, fourier(fl));
      CHECK(rep.colinear);
      for (std::uint64_t i = 0; i < s.size(); ++i) {
        if (!dnil[i]) CHECK(dual_fl.is_zero_at(i));
      }
    }
  }
}

TEST_CASE("fourier preserves invariance") {
  for (unsigned q : {3u, 5u}) {
    auto f = FqField::make(q);
    for (const auto& dims : std::vector<DimVector>{{1, 1}, {2, 1}}) {
      if (q == 5 && dims == DimVector{2, 1}) continue;
      const auto g = rand_inv(f, 2, 1, dims, 17);
      CHECK(is_invariant(g));
      CHECK(is_invariant(fourier(g)));
    }
  }
}

TEST_CASE("support strata are consistent under Frobenius twists") {
  for (const auto& [q, dims] : std::vector<std::pair<unsigned, DimVector>>{{9, {1, 1}}, {3, {2, 1}}, {3, {2, 2}}}) {
    auto f = FqField::make(q);
    const auto s = SpaceDescriptor::quiver(f, 2, 1, dims);
    const auto orbits = enumerate_rational_orbits(f, 2, dims, 1, true, kBudget);
    for (const auto& o : orbits) {
      const auto fh = fourier(orbit_indicator(s, o.orbit));
      const auto st = support_strata(fh);
      CHECK_FALSE(st.labels.empty());
      PointOrbit tw;
      for (auto pt : o.orbit.points) tw.points.push_back(frobenius_index(s, pt));
      std::sort(tw.points.begin(), tw.points.end());
      const auto st2 = support_strata(fourier(orbit_indicator(s, tw)));
      CHECK(st.labels == st2.labels);
      CHECK(st.max_z == st2.max_z);
    }
  }
}

TEST_CASE("eigen-stratum transform is a Kloosterman sum") {
  for (unsigned q : {3u, 5u}) {
    auto f = FqField::make(q);
    for (unsigned m : {2u, 3u}) {
      for (int eps : {1, -1}) {
        for (Elem lam = 1; lam < q; ++lam) {
          const auto r = check_eigen_stratum_transform(f, m, eps, lam, kBudget);
          CHECK(r.passed());
          std::uint64_t expect = 1;
          for (unsigned k = 0; k < m; ++k) expect *= q - 1;
          CHECK(r.points_checked == expect);
        }
      }
    }
  }
  // Naive oracle at one dual point: both the sum over the locus and the
  // Kloosterman sum are written out by hand.
  auto f = FqField::make(3);
  const auto s = SpaceDescriptor::quiver(f, 2, 1, {1, 1});
  const auto d = s.dual();
  const std::vector<Elem> y{1, 2};  // T'^2 = 2
  CycNum lhs(3), rhs(3);
  for (std::uint64_t i = 0; i < s.size(); ++i) {
    const auto x = s.decode(i);
    if (f->mul(x[0], x[1]) == 1) lhs = lhs + f->character(s.pairing(x, y));
  }
  for (Elem a = 1; a < 3; ++a)
    for (Elem b = 1; b < 3; ++b)
      if (f->mul(a, b) == 2) rhs = rhs + f->character(f->add(a, b));
  CHECK(lhs == rhs);
  CHECK(d.encode(y) < d.size());
}
