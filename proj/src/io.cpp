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


#include "antiorb/io.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "antiorb/errors.hpp"

namespace antiorb {

namespace {

Json ints(const std::vector<unsigned>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

template <class T>
void put_le(std::ostream& os, T v) {
  using U = std::make_unsigned_t<T>;
  auto u = static_cast<U>(v);
  std::array<char, sizeof(T)> buf;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    buf[i] = static_cast<char>(u & 0xff);
    u = static_cast<U>(u >> 8);
  }
  os.write(buf.data(), buf.size());
}

template <class T>
T get_le(std::istream& is) {
  using U = std::make_unsigned_t<T>;
  std::array<unsigned char, sizeof(T)> buf;
  if (!is.read(reinterpret_cast<char*>(buf.data()), buf.size())) throw UsageError("AORB1: truncated input");
  U u = 0;
  for (std::size_t i = sizeof(T); i-- > 0;) u = static_cast<U>((u << 8) | buf[i]);
  return static_cast<T>(u);
}

constexpr char kMagic[5] = {'A', 'O', 'R', 'B', '1'};

}  // namespace

std::string library_version() { return ANTIORB_VERSION; }

Json to_json(const CycNum& c) {
  Json a = Json::array();
  for (const auto& x : c.coeffs()) a.push_back(x.get_num().get_str() + "/" + x.get_den().get_str());
  return a;
}

CycNum cyc_from_json(unsigned p, const Json& j) {
  if (!j.is_array()) throw UsageError("cyclotomic value must be an array of \"num/den\" strings");
  std::vector<mpq_class> c;
  for (const auto& s : j) {
    mpq_class x;
    if (x.set_str(s.get<std::string>(), 10) != 0) throw UsageError("bad rational " + s.dump());
    x.canonicalize();
    c.push_back(x);
  }
  return CycNum::from_coeffs(p, std::move(c));
}

Json to_json(const FqField& f) { return Json{{"p", f.p()}, {"k", f.k()}, {"modulus", ints(f.modulus())}}; }

FieldPtr field_from_json(const Json& j) {
  return FqField::make(j.at("p").get<unsigned>(), j.at("modulus").get<std::vector<unsigned>>());
}

Json to_json(const SegmentClass& s) { return Json::array({s.start, s.len}); }

Json to_json(const Multisegment& s) {
  Json a = Json::array();
  for (const auto& [cls, mult] : s.entries()) a.push_back(Json::array({cls.start, cls.len, mult}));
  return a;
}

Multisegment multisegment_from_json(unsigned m, const Json& j) {
  Multisegment s(m);
  for (const auto& e : j) {
    s.add(SegmentClass::make(m, e.at(0).get<long>(), e.at(1).get<unsigned>()), e.at(2).get<unsigned>());
  }
  return s;
}

Json to_json(const PartitionMult& rho) {
  Json a = Json::array();
  for (const auto& [part, mult] : rho.entries()) a.push_back(Json::array({part, mult}));
  return a;
}

Json to_json(const QuiverRep& t) {
  Json blocks = Json::array();
  for (unsigned i = 0; i < t.m(); ++i) blocks.push_back(t.block(i).data());
  return Json{{"m", t.m()}, {"eps", t.eps()}, {"dims", ints(t.dims())}, {"blocks", blocks}};
}

QuiverRep quiver_rep_from_json(const FieldPtr& field, const Json& j) {
  const auto m = j.at("m").get<unsigned>();
  const auto eps = j.at("eps").get<int>();
  const auto dims = j.at("dims").get<DimVector>();
  if (dims.size() != m) throw UsageError("QuiverRep JSON: dims length must equal m");
  const auto& bl = j.at("blocks");
  if (!bl.is_array() || bl.size() != m) throw UsageError("QuiverRep JSON: need m blocks");
  std::vector<FqMatrix> blocks;
  const QuiverShape shape{m, eps, dims};
  for (unsigned i = 0; i < m; ++i) {
    auto data = bl.at(i).get<std::vector<Elem>>();
    const std::size_t rows = dims[shape.target(i)], cols = dims[i];
    if (data.size() != rows * cols) throw UsageError("QuiverRep JSON: block " + std::to_string(i) + " has wrong size");
    for (auto x : data) {
      if (x >= field->q()) throw UsageError("QuiverRep JSON: entry out of field range");
    }
    blocks.emplace_back(rows, cols, std::move(data));
  }
  return QuiverRep::from_blocks(field, m, eps, dims, std::move(blocks));
}

Json to_json(const OrbitLabel& l) {
  Json eig = Json::array();
  for (const auto& e : l.eigen_parts) eig.push_back(Json{{"g", e.g}, {"rho", to_json(e.rho)}});
  return Json{{"nilpotent_part", to_json(l.nilpotent_part)}, {"eigen_parts", eig}, {"text", l.to_string()}};
}

Json to_json(const StratumLabel& l) {
  return Json{{"z", l.z}, {"sigma", to_json(l.sigma)}, {"valid", l.valid}};
}

Json to_json(const SpaceDescriptor& s) {
  switch (s.kind()) {
    case SpaceDescriptor::Kind::quiver: {
      const auto& sh = *s.quiver_shape();
      return Json{{"kind", "quiver"}, {"field", to_json(*s.field())}, {"m", sh.m}, {"eps", sh.eps},
                  {"dims", ints(sh.dims)}};
    }
    case SpaceDescriptor::Kind::product: {
      Json f = Json::array();
      for (const auto& x : s.factors()) f.push_back(to_json(x));
      return Json{{"kind", "product"}, {"factors", f}};
    }
    case SpaceDescriptor::Kind::generic:
    default: {
      const auto d = s.dual();
      Json coef = Json::array();
      for (auto c : s.pairing_coef()) coef.push_back(c);
      return Json{{"kind", "generic"}, {"field", to_json(*s.field())}, {"name", s.name()},
                  {"dual_name", d.name()}, {"coords", s.coords()}, {"dual_coords", d.coords()},
                  {"perm", s.pairing_perm()}, {"coef", coef}};
    }
  }
}

SpaceDescriptor space_from_json(const Json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "product") {
    std::vector<SpaceDescriptor> f;
    for (const auto& x : j.at("factors")) f.push_back(space_from_json(x));
    return SpaceDescriptor::product(std::move(f));
  }
  auto field = field_from_json(j.at("field"));
  if (kind == "quiver") {
    const auto m = j.at("m").get<unsigned>();
    const auto dims = j.at("dims").get<DimVector>();
    if (dims.size() != m) throw UsageError("space JSON: dims length must equal m");
    return SpaceDescriptor::quiver(field, m, j.at("eps").get<int>(), dims);
  }
  if (kind == "generic") {
    return SpaceDescriptor::generic(field, j.at("name").get<std::string>(), j.at("dual_name").get<std::string>(),
                                    j.at("coords").get<std::vector<std::string>>(),
                                    j.at("dual_coords").get<std::vector<std::string>>(),
                                    j.at("perm").get<std::vector<std::uint32_t>>(),
                                    j.at("coef").get<std::vector<Elem>>());
  }
  throw UsageError("space JSON: unknown kind " + kind);
}

Json to_json(const FuncTable& t) {
  Json vals = Json::array();
  for (std::uint64_t i = 0; i < t.size(); ++i) vals.push_back(to_json(t.value(i)));
  return Json{{"space", to_json(t.space())}, {"sqrt_q_exponent", t.sqrt_q_exponent()}, {"values", vals}};
}

FuncTable func_table_from_json(const Json& j) {
  FuncTable t(space_from_json(j.at("space")));
  const auto& vals = j.at("values");
  if (!vals.is_array() || vals.size() != t.size()) {
    throw UsageError("table JSON: expected " + std::to_string(t.size()) + " values");
  }
  for (std::uint64_t i = 0; i < t.size(); ++i) t.set(i, cyc_from_json(t.p(), vals[i]));
  t.set_sqrt_q_exponent(j.value("sqrt_q_exponent", 0));
  return t;
}

void write_func_table_binary(std::ostream& os, const FuncTable& t) {
  const auto& f = *t.space().field();
  os.write(kMagic, sizeof kMagic);
  put_le<std::uint32_t>(os, f.p());
  put_le<std::uint32_t>(os, f.k());
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(t.space().dim()));
  put_le<std::int32_t>(os, t.sqrt_q_exponent());
  const std::string meta = to_json(t.space()).dump();
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(meta.size()));
  os.write(meta.data(), static_cast<std::streamsize>(meta.size()));
  for (std::uint64_t i = 0; i < t.size(); ++i)
    for (unsigned c = 0; c + 1 < t.p(); ++c) put_le<std::int64_t>(os, t.coeff(c, i));
  if (!os) throw UsageError("AORB1: write failed");
}

FuncTable read_func_table_binary(std::istream& is) {
  char magic[sizeof kMagic];
  if (!is.read(magic, sizeof magic) || std::memcmp(magic, kMagic, sizeof kMagic) != 0) {
    throw UsageError("AORB1: bad magic");
  }
  const auto p = get_le<std::uint32_t>(is);
  const auto k = get_le<std::uint32_t>(is);
  const auto n = get_le<std::uint32_t>(is);
  const auto e = get_le<std::int32_t>(is);
  const auto len = get_le<std::uint32_t>(is);
  if (len > (1u << 24)) throw UsageError("AORB1: metadata too large");
  std::string meta(len, '\0');
  if (!is.read(meta.data(), len)) throw UsageError("AORB1: truncated metadata");
  FuncTable t(space_from_json(Json::parse(meta)));
  const auto& f = *t.space().field();
  if (f.p() != p || f.k() != k || t.space().dim() != n) throw UsageError("AORB1: header disagrees with metadata");
  for (std::uint64_t i = 0; i < t.size(); ++i)
    for (unsigned c = 0; c + 1 < p; ++c) t.coeff(c, i) = get_le<std::int64_t>(is);
  t.set_sqrt_q_exponent(e);
  return t;
}

void save_func_table(const std::string& path, const FuncTable& t) {
  const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  std::ofstream os(path, std::ios::binary);
  if (!os) throw UsageError("cannot open " + path + " for writing");
  if (json) {
    os << to_json(t).dump() << '\n';
  } else {
    write_func_table_binary(os, t);
  }
}

FuncTable load_func_table(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw UsageError("cannot open " + path);
  char head[sizeof kMagic] = {};
  is.read(head, sizeof head);
  is.clear();
  is.seekg(0);
  if (std::memcmp(head, kMagic, sizeof kMagic) == 0) return read_func_table_binary(is);
  try {
    return func_table_from_json(Json::parse(is));
  } catch (const Json::exception& ex) {
    throw UsageError(path + ": " + ex.what());
  }
}

// --- reports --------------------------------------------------------------------

Json to_json(const ColinearityReport& r) {
  Json j{{"colinear", r.colinear}, {"degenerate", r.degenerate}};
  j["scalar"] = r.scalar ? to_json(*r.scalar) : Json(nullptr);
  j["scalar_text"] = r.scalar ? Json(r.scalar->to_string()) : Json(nullptr);
  return j;
}

Json to_json(const CommutationReport& r) {
  Json j = to_json(r.colinearity);
  j["q_exponent"] = r.q_exponent ? Json(*r.q_exponent) : Json(nullptr);
  j["predicted_exponent"] = r.predicted_exponent;
  j["verdict"] = r.degenerate() ? "degenerate" : (r.passed() ? "pass" : "fail");
  return j;
}

Json to_json(const QuadricReport& r) {
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    levels.push_back(Json{{"lambda", l.lambda}, {"points_checked", l.points_checked}, {"ok", l.ok}});
  }
  return Json{{"case", "quadric"},
              {"q", r.q},
              {"N", r.n_dim},
              {"q0_points", r.q0_points},
              {"q0_expected", r.q0_expected},
              {"q0_count_ok", r.q0_count_ok()},
              {"f0_at_zero", r.f0_at_zero},
              {"self_dual_scalar", r.self_dual_scalar},
              {"self_dual", r.self_dual},
              {"kloosterman_scalar", r.kloosterman_scalar},
              {"kloosterman_levels", levels},
              {"kloosterman_ok", r.kloosterman_ok()},
              {"solution_dim", r.solution_dim},
              {"solution_spanned_by_f0", r.solution_spanned_by_f0},
              {"passed", r.passed()}};
}

Json to_json(const SymplecticReport& r) {
  Json orbits = Json::array();
  for (const auto& o : r.orbits) {
    orbits.push_back(Json{{"name", o.name}, {"size", o.size}, {"representative", o.representative},
                          {"rank_sequence", o.rank_sequence}});
  }
  Json basis = Json::array();
  for (const auto& v : r.adapted_basis) {
    Json row = Json::array();
    for (const auto& c : v) row.push_back(to_json(c));
    basis.push_back(row);
  }
  return Json{{"case", "symplectic"},
              {"q", r.q},
              {"nilpotent_points", r.nilpotent_points},
              {"nilpotent_orbits", orbits},
              {"biorbital_dim", r.biorbital_dim},
              {"biorbital_verified", r.biorbital_verified},
              {"adapted_basis", basis},
              {"closure_supports_ok", r.closure_supports_ok},
              {"passed", r.passed()}};
}

Json to_json(const SymmetricReport& r) {
  return Json{{"case", "symmetric"},
              {"q", r.q},
              {"n", r.n},
              {"space_dim", r.space_dim},
              {"nilpotent_points", r.nilpotent_points},
              {"nilpotent_orbits", r.nilpotent_orbits},
              {"biorbital_dim", r.biorbital_dim},
              {"biorbital_verified", r.biorbital_verified},
              {"verdict", "exploratory"},
              {"matches_expectation", r.matches_expectation()}};
}

Json to_json(const UnipotentReport& r) {
  Json strata = Json::array();
  for (const auto& s : r.strata) {
    strata.push_back(Json{{"stratum", s.index},
                          {"points", s.points},
                          {"orbits", s.orbit_count},
                          {"expected_orbit_dim", s.expected_orbit_dim},
                          {"orbit_sizes_ok", s.orbit_sizes_ok},
                          {"support_ok", s.support_ok},
                          {"form_asserted", s.form_asserted},
                          {"form_ok", s.form_ok},
                          {"passed", s.passed()}});
  }
  return Json{{"case", "unipotent"},
              {"q", r.q},
              {"partition_ok", r.partition_ok},
              {"total_orbit_points", r.total_orbit_points},
              {"strata", strata},
              {"passed", r.passed()}};
}

}  // namespace antiorb
