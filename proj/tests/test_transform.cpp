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

#include <cmath>
#include <cstdlib>
#include <random>

#include "antiorb/errors.hpp"
#include "antiorb/fourier.hpp"
#include "antiorb/quiver.hpp"

using namespace antiorb;

namespace {

SpaceDescriptor plain_space(const FieldPtr& f, std::size_t n) {
  std::vector<std::string> c, d;
  std::vector<std::uint32_t> perm;
  for (std::size_t j = 0; j < n; ++j) {
    c.push_back("x" + std::to_string(j));
    d.push_back("y" + std::to_string(j));
    perm.push_back(static_cast<std::uint32_t>(j));
  }
  return SpaceDescriptor::generic(f, "U", "U*", c, d, perm, std::vector<Elem>(n, 1));
}

FuncTable random_table(const SpaceDescriptor& s, std::mt19937& rng, int lo = -3, int hi = 3) {
  FuncTable t(s);
  std::uniform_int_distribution<int> d(lo, hi);
  for (unsigned c = 0; c + 1 < t.p(); ++c) {
    for (std::uint64_t i = 0; i < t.size(); ++i) t.coeff(c, i) = d(rng);
  }
  return t;
}

// Oracle: the double sum with CycNum arithmetic and the pairing written
// out from the coordinate matching.
CycNum oracle_at(const FuncTable& f, std::uint64_t yi) {
  const auto& s = f.space();
  const FqField& fl = *s.field();
  const auto y = s.dual().decode(yi);
  CycNum acc(fl.p());
  for (std::uint64_t xi = 0; xi < f.size(); ++xi) {
    const auto x = s.decode(xi);
    Elem k = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      k = fl.add(k, fl.mul(s.pairing_coef()[j], fl.mul(x[j], y[s.pairing_perm()[j]])));
    }
    acc += CycNum::zeta_power(fl.p(), fl.trace(k)) * f.value(xi);
  }
  return acc;
}

// tr(T T') from full matrices by explicit loops.
Elem trace_pairing(const QuiverRep& t, const QuiverRep& u) {
  const FqField& f = *t.field();
  const FqMatrix a = t.full_matrix(), b = u.full_matrix();
  Elem s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) s = f.add(s, f.mul(a(i, k), b(k, i)));
  }
  return s;
}

std::uint64_t negate_index(const SpaceDescriptor& s, std::uint64_t i) {
  auto x = s.decode(i);
  for (auto& v : x) v = s.field()->neg(v);
  return s.encode(x);
}

}  // namespace

TEST_CASE("quiver descriptor and its dual") {
  auto f = FqField::make(3);
  const auto e = SpaceDescriptor::quiver(f, 2, 1, {1, 1});
  const auto d = pairing_dual(e);
  REQUIRE(d.quiver_shape());
  CHECK(d.quiver_shape()->eps == -1);
  CHECK(pairing_dual(d) == e);
  // (i, r, s) -> (i + 1, s, r): block 0 of E^+ pairs with block 1 of E^-.
  CHECK(e.pairing_perm() == std::vector<std::uint32_t>{1, 0});
  CHECK(e.coords() == std::vector<std::string>{"T0[0,0]", "T1[0,0]"});

  const auto e2 = SpaceDescriptor::quiver(f, 3, 1, {2, 1, 1});
  CHECK(pairing_dual(pairing_dual(e2)) == e2);
  CHECK(e2.dim() == 2 + 1 + 2);
}

TEST_CASE("descriptor pairing equals tr(T T') exhaustively") {
  auto f = FqField::make(3);
  for (const auto& [m, dims] : std::vector<std::pair<unsigned, DimVector>>{{2, {1, 1}}, {2, {2, 1}}, {3, {1, 0, 1}}}) {
    for (int eps : {1, -1}) {
      const auto s = SpaceDescriptor::quiver(f, m, eps, dims);
      const auto d = s.dual();
      for (std::uint64_t i = 0; i < s.size(); ++i) {
        const auto t = QuiverRep::from_index(s, i);
        for (std::uint64_t j = 0; j < d.size(); ++j) {
          const auto u = QuiverRep::from_index(d, j);
          CHECK(s.pairing(s.decode(i), d.decode(j)) == trace_pairing(t, u));
        }
      }
    }
  }
}

TEST_CASE("generic and product descriptors") {
  auto f = FqField::make(5);
  const auto g = SpaceDescriptor::generic(f, "A", "B", {"a0", "a1"}, {"b0", "b1"}, {1, 0}, {2, 3});
  const auto gd = g.dual();
  CHECK(gd.name() == "B");
  CHECK(gd.dual() == g);
  const std::vector<Elem> x{1, 4}, y{2, 3};
  CHECK(g.pairing(x, y) == gd.pairing(y, x));
  CHECK_THROWS_AS(SpaceDescriptor::generic(f, "A", "B", {"a"}, {"b"}, {0}, {0}), UsageError);
  CHECK_THROWS_AS(SpaceDescriptor::generic(f, "A", "B", {"a", "b"}, {"c", "d"}, {0, 0}, {1, 1}), UsageError);

  const auto q = SpaceDescriptor::quiver(f, 2, 1, {1, 1});
  const auto prod = SpaceDescriptor::product({q, g});
  CHECK(prod.dim() == 4);
  CHECK(prod.dual() == SpaceDescriptor::product({q.dual(), gd}));
  const std::vector<Elem> px{1, 2, 3, 4}, py{4, 3, 2, 1};
  CHECK(prod.pairing(px, py) == f->add(q.pairing(std::vector<Elem>{1, 2}, std::vector<Elem>{4, 3}),
                                       g.pairing(std::vector<Elem>{3, 4}, std::vector<Elem>{2, 1})));
}

TEST_CASE("fourier worked examples") {
  for (unsigned q : {3u, 5u, 9u}) {
    auto f = FqField::make(q);
    const auto s = plain_space(f, 3);
    FuncTable delta(s);
    delta.set_int(0, 1);
    const auto dh = fourier(delta);
    for (std::uint64_t i = 0; i < dh.size(); ++i) CHECK(dh.value(i) == CycNum::from_int(f->p(), 1));
    CHECK(dh.sqrt_q_exponent() == 3);

    FuncTable one(s);
    for (std::uint64_t i = 0; i < one.size(); ++i) one.set_int(i, 1);
    const auto oh = fourier(one);
    CHECK(oh.value(0) == CycNum::from_int(f->p(), static_cast<long>(q * q * q)));
    for (std::uint64_t i = 1; i < oh.size(); ++i) CHECK(oh.is_zero_at(i));
  }
}

TEST_CASE("axis-pass transform equals the naive double sum") {
  std::mt19937 rng(7);
  for (unsigned q : {3u, 5u, 9u}) {
    auto f = FqField::make(q);
    for (std::size_t n = 0; n <= 3; ++n) {
      if (q == 9 && n == 3) continue;
      const auto s = plain_space(f, n);
      const auto t = random_table(s, rng);
      const auto fast = fourier(t, kernels::Variant::scalar);
      const auto slow = fourier_naive(t);
      CHECK(fast.values_equal(slow));
      for (std::uint64_t y = 0; y < fast.size(); y += 1 + fast.size() / 13) CHECK(fast.value(y) == oracle_at(t, y));
    }
  }
  // Non-identity pairings: quiver spaces and a scaled generic pairing.
  auto f3 = FqField::make(3);
  for (const auto& s : {SpaceDescriptor::quiver(f3, 2, 1, {2, 1}), SpaceDescriptor::quiver(f3, 3, -1, {1, 2, 1}),
                        SpaceDescriptor::generic(f3, "A", "B", {"a", "b", "c"}, {"x", "y", "z"}, {2, 0, 1},
                                                 {2, 1, 2})}) {
    const auto t = random_table(s, rng);
    const auto fast = fourier(t);
    CHECK(fast.space() == s.dual());
    CHECK(fast.values_equal(fourier_naive(t)));
    for (std::uint64_t y = 0; y < fast.size(); y += 1 + fast.size() / 11) {
      CHECK(fast.value(y) == oracle_at(t, y));
      CHECK(fourier_at(t, y) == fast.value(y));
    }
  }
}

TEST_CASE("SIMD variants agree with the scalar reference") {
  std::mt19937 rng(99);
  std::vector<kernels::Variant> variants{kernels::Variant::automatic};
  for (auto v : {kernels::Variant::avx2, kernels::Variant::neon}) {
    if (kernels::variant_available(v)) variants.push_back(v);
  }
  MESSAGE("resolved variant: " << std::string(kernels::variant_name(kernels::resolve(kernels::Variant::automatic))));
  for (unsigned q : {3u, 5u, 7u, 9u}) {
    auto f = FqField::make(q);
    for (std::size_t n : {1u, 2u, 3u, 5u}) {
      if (q >= 7 && n == 5) continue;
      const auto s = plain_space(f, n);
      const auto t = random_table(s, rng, -1000, 1000);
      const auto ref = fourier(t, kernels::Variant::scalar);
      for (auto v : variants) CHECK(fourier(t, v).values_equal(ref));
    }
  }
  // Raw kernel on an odd-sized slab count exercises every tail path.
  for (auto v : variants) {
    const unsigned p = 5, q = 5;
    const std::uint64_t inner = 7, outer = 9, size = inner * q * outer;
    std::vector<std::int64_t> in(p * size), out_ref(p * size), out(p * size);
    for (auto& x : in) x = static_cast<std::int64_t>(rng() % 2001) - 1000;
    std::vector<std::uint8_t> shift(q * q);
    for (auto& s : shift) s = static_cast<std::uint8_t>(rng() % p);
    for (std::uint64_t inn : {std::uint64_t{1}, inner}) {
      kernels::AxisPassArgs a{in.data(), out_ref.data(), size, p, q, inn, size / (inn * q), shift.data()};
      kernels::axis_pass_scalar(a);
      a.out = out.data();
      kernels::axis_pass(a, v);
      CHECK(out == out_ref);
    }
  }
  if (!kernels::variant_available(kernels::Variant::neon)) {
    kernels::AxisPassArgs a;
    CHECK_THROWS_AS(kernels::axis_pass_neon(a), UsageError);
  }
  CHECK(kernels::parse_variant("avx2") == kernels::Variant::avx2);
  CHECK_FALSE(kernels::parse_variant("sse9"));
}

TEST_CASE("double transform is q^N f(-x), exhaustive for N <= 4, q = 3") {
  std::mt19937 rng(3);
  auto f = FqField::make(3);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto s = plain_space(f, n);
    const auto t = random_table(s, rng);
    const auto tt = fourier(fourier(t));
    CHECK(tt.space() == s);
    CHECK(tt.sqrt_q_exponent() == static_cast<int>(2 * n));
    const long qn = static_cast<long>(std::pow(3, n));
    for (std::uint64_t i = 0; i < t.size(); ++i) {
      CHECK(tt.value(i) == t.value(negate_index(s, i)) * CycNum::from_int(3, qn));
    }
  }
  const auto s = SpaceDescriptor::quiver(f, 2, 1, {2, 1});
  const auto t = random_table(s, rng);
  const auto tt = fourier(fourier(t));
  for (std::uint64_t i = 0; i < t.size(); ++i) CHECK(tt.value(i) == t.value(negate_index(s, i)) * CycNum::from_int(3, 81));
}

TEST_CASE("Plancherel") {
  std::mt19937 rng(4);
  for (unsigned q : {3u, 5u, 9u}) {
    auto f = FqField::make(q);
    const auto s = plain_space(f, 2);
    const auto t = random_table(s, rng);
    const auto th = fourier(t);
    CycNum lhs(f->p()), rhs(f->p());
    for (std::uint64_t i = 0; i < t.size(); ++i) {
      lhs += th.value(i) * th.value(i).conj();
      rhs += t.value(i) * t.value(i).conj();
    }
    CHECK(lhs == rhs * CycNum::from_int(f->p(), static_cast<long>(q * q)));
  }
}

TEST_CASE("transform is equivariant for the graded group action") {
  std::mt19937 rng(8);
  auto f = FqField::make(3);
  const auto s = SpaceDescriptor::quiver(f, 2, 1, {2, 1});
  const auto d = s.dual();
  const auto t = random_table(s, rng);
  const auto th = fourier(t);
  const auto gens = gl_generators(f, {2, 1});
  for (std::size_t k = 0; k < gens[0].size(); ++k) {
    const std::vector<FqMatrix> g{gens[0][k], gens[1].back()};
    FuncTable moved(s);  // (f o g)(x) = f(g x)
    for (std::uint64_t i = 0; i < s.size(); ++i) {
      moved.set(i, t.value(QuiverRep::from_index(s, i).act(g).index()));
    }
    const auto mh = fourier(moved);
    for (std::uint64_t j = 0; j < d.size(); ++j) {
      CHECK(mh.value(j) == th.value(QuiverRep::from_index(d, j).act(g).index()));
    }
  }
}

TEST_CASE("overflow guard") {
  auto f = FqField::make(3);
  FuncTable t(plain_space(f, 2));
  t.set_int(0, std::int64_t{1} << 60);
  CHECK_THROWS_AS(fourier(t), ArithmeticError);
  FuncTable u(plain_space(f, 1));
  u.set_int(0, INT64_MAX);
  u.set_int(1, INT64_MAX);
  CHECK_THROWS_AS(u.add_value(0, u, 1), ArithmeticError);
}

TEST_CASE("kloosterman examples and bound") {
  auto f3 = FqField::make(3);
  for (Elem l = 1; l < 3; ++l) CHECK(kloosterman(1, f3, l) == f3->character(l));
  CHECK(kloosterman(2, f3, 1) == CycNum::from_int(3, -1));
  CHECK(kloosterman(2, f3, 2) == CycNum::from_int(3, 2));
  CHECK_THROWS_AS(kloosterman(2, f3, 0), UsageError);
  CHECK_THROWS_AS(kloosterman(0, f3, 1), UsageError);

  for (unsigned q : {3u, 5u, 7u, 9u}) {
    auto f = FqField::make(q);
    for (unsigned m = 1; m <= 4; ++m) {
      const double bound = m * std::pow(static_cast<double>(q), (m - 1) / 2.0) + 1e-6;
      for (Elem l = 1; l < q; ++l) {
        const auto k = kloosterman(m, f, l);
        // Oracle: brute force over all m-tuples.
        std::vector<Elem> x(m, 1);
        CycNum s(f->p());
        for (;;) {
          Elem prod = 1, sum = 0;
          for (Elem v : x) {
            prod = f->mul(prod, v);
            sum = f->add(sum, v);
          }
          if (prod == l) s += f->character(sum);
          std::size_t j = 0;
          while (j < m && ++x[j] == q) x[j++] = 1;
          if (j == m) break;
        }
        CHECK(k == s);
        for (unsigned r = 1; r < f->p(); ++r) CHECK(std::abs(embed_complex(k, r)) <= bound);
      }
    }
  }
}

TEST_CASE("colinearity and q powers") {
  auto f = FqField::make(3);
  const auto s = plain_space(f, 2);
  std::mt19937 rng(1);
  const auto a = random_table(s, rng);
  FuncTable b(s);
  const CycNum c = CycNum::from_int(3, 9) * CycNum::zeta_power(3, 1);
  for (std::uint64_t i = 0; i < s.size(); ++i) b.set(i, a.value(i) * c);
  const auto r = colinear(a, b);
  CHECK(r.colinear);
  REQUIRE(r.scalar);
  CHECK(*r.scalar == c);
  CHECK_FALSE(q_power_exponent(c, 3));
  CHECK(q_power_exponent(CycNum::from_int(3, -27), 3) == 3);
  CHECK(q_power_exponent(CycNum::from_rational(3, mpq_class(1, 9)), 3) == -2);
  CHECK(q_power_exponent(CycNum::from_int(3, 1), 3) == 0);
  CHECK_FALSE(q_power_exponent(CycNum::from_int(3, 6), 3));

  b.set_int(0, 12345);
  CHECK_FALSE(colinear(a, b).colinear);
  const FuncTable z(s);
  const auto zz = colinear(z, z);
  CHECK(zz.colinear);
  CHECK(zz.degenerate);
  CHECK_FALSE(zz.scalar);
  CHECK_FALSE(colinear(z, a).colinear);
}

TEST_CASE("budget guard honours ANTIORB_BUDGET") {
  auto f = FqField::make(3);
  CHECK_THROWS_AS(FuncTable(plain_space(f, 5), 100), BudgetExceeded);
  ::setenv("ANTIORB_BUDGET", "50", 1);
  CHECK(default_point_budget() == 50);
  CHECK_THROWS_AS(FuncTable(plain_space(f, 4)), BudgetExceeded);
  ::setenv("ANTIORB_BUDGET", "lots", 1);
  CHECK_THROWS_AS(default_point_budget(), UsageError);
  ::unsetenv("ANTIORB_BUDGET");
  CHECK(default_point_budget() == 20'000'000);
}
