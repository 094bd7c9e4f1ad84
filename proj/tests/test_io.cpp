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

#include <filesystem>
#include <random>
#include <sstream>

#include "antiorb/errors.hpp"
#include "antiorb/fourier.hpp"
#include "antiorb/io.hpp"

using namespace antiorb;

namespace {

FuncTable random_table(const SpaceDescriptor& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FuncTable t(s);
  for (std::uint64_t i = 0; i < t.size(); ++i) {
    std::vector<std::int64_t> c(t.p() - 1);
    for (auto& x : c) x = static_cast<std::int64_t>(rng() % 11) - 5;
    t.set(i, CycNum::from_int_coeffs(t.p(), c));
  }
  return t;
}

std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("antiorb_io_" + name)).string();
}

}  // namespace

TEST_CASE("cyclotomic JSON") {
  const auto z = CycNum::zeta_power(5, 1) + CycNum::from_rational(5, mpq_class(-1, 3));
  const auto j = to_json(z);
  CHECK(j.dump() == R"(["-1/3","1/1","0/1","0/1"])");
  CHECK(cyc_from_json(5, j) == z);
  CHECK(cyc_from_json(3, Json::array({"2/4", "0/1"})) == CycNum::from_rational(3, mpq_class(1, 2)));
  CHECK_THROWS_AS(cyc_from_json(3, Json::array({"x", "1"})), UsageError);
}

TEST_CASE("field and segment JSON") {
  auto f = FqField::make(9);
  const auto j = to_json(*f);
  CHECK(j.at("p") == 3);
  CHECK(j.at("k") == 2);
  const auto g = field_from_json(j);
  CHECK(g->q() == 9);
  CHECK(g->modulus() == f->modulus());
  Multisegment s(3);
  s.add(SegmentClass::make(3, 2, 1), 2);
  s.add(SegmentClass::make(3, 0, 2));
  CHECK(to_json(s).dump() == "[[0,2,1],[2,1,2]]");
  CHECK(multisegment_from_json(3, to_json(s)) == s);
}

TEST_CASE("quiver representation JSON") {
  auto f = FqField::make(5);
  const auto space = SpaceDescriptor::quiver(f, 3, -1, {2, 1, 1});
  std::mt19937_64 rng(1);
  for (int k = 0; k < 20; ++k) {
    const auto t = QuiverRep::from_index(space, rng() % space.size());
    const auto j = to_json(t);
    CHECK(j.at("dims") == Json::array({2, 1, 1}));
    CHECK(quiver_rep_from_json(f, j) == t);
  }
  auto bad = to_json(QuiverRep(f, 3, -1, {2, 1, 1}));
  bad["blocks"][0] = Json::array({1});
  CHECK_THROWS_AS(quiver_rep_from_json(f, bad), UsageError);
  const auto lab = decompose(QuiverRep::from_index(space, 1));
  CHECK(to_json(lab).contains("nilpotent_part"));
}

TEST_CASE("space JSON round trips") {
  auto f = FqField::make(3);
  const auto q = SpaceDescriptor::quiver(f, 2, 1, {2, 1});
  CHECK(space_from_json(to_json(q)) == q);
  const auto g = quadric_space(f, 4);
  CHECK(space_from_json(to_json(g)) == g);
  const auto u = unipotent_space(f);
  CHECK(space_from_json(to_json(u)) == u);
  CHECK(space_from_json(to_json(u.dual())) == u.dual());
  const auto p = SpaceDescriptor::product({q, SpaceDescriptor::quiver(f, 2, 1, {1, 0})});
  CHECK(space_from_json(to_json(p)) == p);
}

TEST_CASE("table formats round trip") {
  auto f = FqField::make(5);
  const auto s = SpaceDescriptor::quiver(f, 2, 1, {1, 2});
  auto t = fourier(random_table(s, 4));
  CHECK(t.sqrt_q_exponent() == 4);

  const auto back = func_table_from_json(to_json(t));
  CHECK(back.values_equal(t));
  CHECK(back.space() == t.space());
  CHECK(back.sqrt_q_exponent() == 4);

  std::stringstream ss;
  write_func_table_binary(ss, t);
  const std::string bytes = ss.str();
  CHECK(bytes.substr(0, 5) == "AORB1");
  // Header (5 + 4 * 5 bytes + metadata) plus q^N records of p-1 int64.
  CHECK(bytes.size() > t.size() * 4 * 8);
  const auto b2 = read_func_table_binary(ss);
  CHECK(b2.values_equal(t));
  CHECK(b2.sqrt_q_exponent() == 4);

  for (const char* name : {"t.json", "t.aorb"}) {
    const auto path = tmp_path(name);
    save_func_table(path, t);
    CHECK(load_func_table(path).values_equal(t));
    std::filesystem::remove(path);
  }
  std::stringstream broken("AORB1xx");
  CHECK_THROWS_AS(read_func_table_binary(broken), UsageError);
}

TEST_CASE("report JSON is deterministic") {
  auto f = FqField::make(3);
  const auto a = to_json(quadric_check(f, 4, std::nullopt, 1'000'000)).dump();
  const auto b = to_json(quadric_check(f, 4, std::nullopt, 1'000'000)).dump();
  CHECK(a == b);
  CHECK(library_version() == ANTIORB_VERSION);
}
