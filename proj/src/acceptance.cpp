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


#include "antiorb/acceptance.hpp"

#include <cmath>
#include <random>
#include <set>
#include <tuple>

#include "antiorb/casestudies.hpp"
#include "antiorb/errors.hpp"
#include "antiorb/fourier.hpp"
#include "antiorb/invariants.hpp"

namespace antiorb {

namespace {

Json dims_json(const DimVector& d) { return Json(d); }

// Seeded invariant input, skipping identically zero draws so no check is vacuous.
FuncTable nonzero_invariant(const SpaceDescriptor& s, std::uint64_t seed, std::uint64_t budget) {
  for (std::uint64_t k = 0;; ++k) {
    auto t = random_invariant_function(s, seed + 0x9e3779b97f4a7c15ull * k, budget);
    if (!t.is_zero()) return t;
  }
}

std::uint64_t negate_index(const SpaceDescriptor& s, std::uint64_t i) {
  auto x = s.decode(i);
  for (auto& c : x) c = s.field()->neg(c);
  return s.encode(x);
}

CriterionResult quadric_self_duality(const AcceptanceConfig& cfg) {
  CriterionResult r{1, "Quadric self-duality", true};
  for (unsigned q : {3u, 5u}) {
    const auto rep = quadric_check(FqField::make(q), 4, Elem{1}, cfg.budget);
    const bool ok = rep.self_dual && rep.solution_dim == 1 && rep.solution_spanned_by_f0;
    r.passed = r.passed && ok;
    r.details["q=" + std::to_string(q)] = Json{{"f0_at_zero", rep.f0_at_zero},
                                               {"scalar", rep.self_dual_scalar},
                                               {"self_dual", rep.self_dual},
                                               {"solution_dim", rep.solution_dim},
                                               {"spanned_by_f0", rep.solution_spanned_by_f0}};
  }
  return r;
}

CriterionResult quadric_kloosterman(const AcceptanceConfig& cfg) {
  CriterionResult r{2, "Quadric-Kloosterman identity", true};
  for (unsigned q : {3u, 5u}) {
    const auto rep = quadric_check(FqField::make(q), 4, std::nullopt, cfg.budget);
    std::uint64_t pts = 0;
    for (const auto& l : rep.levels) pts += l.points_checked;
    r.passed = r.passed && rep.kloosterman_ok();
    r.details["q=" + std::to_string(q)] = Json{{"points_checked", pts},
                                               {"scalar", rep.kloosterman_scalar},
                                               {"ok", rep.kloosterman_ok()}};
  }
  r.details["note"] = "unnormalized transform: fhat = q^((N-2)/2) K^2(lambda lambda')";
  return r;
}

CriterionResult kloosterman_bound(const AcceptanceConfig&) {
  CriterionResult r{3, "Kloosterman bound", true};
  double worst = 0;
  std::uint64_t checked = 0;
  for (unsigned q : {3u, 5u, 7u, 9u}) {
    auto f = FqField::make(q);
    for (unsigned m = 1; m <= 4; ++m) {
      const double bound = m * std::pow(static_cast<double>(q), (m - 1) / 2.0);
      for (Elem lam = 1; lam < q; ++lam) {
        const auto k = kloosterman(m, f, lam);
        for (unsigned root = 1; root < f->p(); ++root) {
          const double v = std::abs(embed_complex(k, root));
          worst = std::max(worst, v / bound);
          ++checked;
          if (v > bound + 1e-6) r.passed = false;
        }
      }
    }
  }
  r.details = Json{{"evaluations", checked}, {"max_ratio", std::round(worst * 1e6) / 1e6}};
  return r;
}

CriterionResult eigen_stratum(const AcceptanceConfig& cfg) {
  CriterionResult r{4, "Quiver eigen-stratum transform", true};
  std::uint64_t pts = 0, bad = 0;
  for (unsigned q : {3u, 5u}) {
    auto f = FqField::make(q);
    for (unsigned m : {2u, 3u})
      for (int eps : {1, -1})
        for (Elem lam = 1; lam < q; ++lam) {
          const auto rep = check_eigen_stratum_transform(f, m, eps, lam, cfg.budget);
          pts += rep.points_checked;
          bad += rep.mismatches;
          r.passed = r.passed && rep.passed();
        }
  }
  r.details = Json{{"points_checked", pts}, {"mismatches", bad}};
  return r;
}

CriterionResult biorbital_dims(const AcceptanceConfig& cfg) {
  CriterionResult r{5, "Biorbital dimension equals aperiodic count", true};
  Json rows = Json::array();
  // (3, 3, (1,1,1)) has p | m; (5, 3, (1,1,1)) covers m = 3 with m invertible.
  for (const auto& [q, m, nu] : std::vector<std::tuple<unsigned, unsigned, DimVector>>{
           {3, 2, {1, 1}}, {3, 2, {2, 1}}, {3, 2, {2, 2}}, {3, 3, {1, 1, 1}}, {5, 3, {1, 1, 1}}}) {
    const auto b = biorbital_space(FqField::make(q), m, nu, 1, cfg.budget);
    const auto ap = count_multisegments(m, nu).aperiodic;
    const bool ok = b.dimension == ap && b.verified;
    r.passed = r.passed && ok;
    rows.push_back(Json{{"q", q}, {"m", m}, {"dims", dims_json(nu)}, {"dimension", b.dimension}, {"aperiodic", ap},
                        {"nilpotent_orbits", b.orbits.size()}, {"match", ok}});
  }
  r.details["cases"] = rows;
  return r;
}

CriterionResult gl_degeneration(const AcceptanceConfig& cfg) {
  CriterionResult r{6, "gl_n degeneration", true};
  auto f = FqField::make(3);
  Json rows = Json::array();
  for (const auto& nu : std::vector<DimVector>{{1}, {2}}) {
    const auto b = biorbital_space(f, 1, nu, 1, cfg.budget);
    const auto ap = count_multisegments(1, nu).aperiodic;
    r.passed = r.passed && b.dimension == 0 && ap == 0;
    rows.push_back(Json{{"dims", dims_json(nu)}, {"dimension", b.dimension}, {"aperiodic", ap}});
  }
  r.details["cases"] = rows;
  return r;
}

const std::vector<std::vector<DimVector>>& commutation_splits() {
  static const std::vector<std::vector<DimVector>> s{{{1, 1}, {1, 1}}, {{1, 0}, {0, 1}, {1, 1}}};
  return s;
}

Json split_json(const std::vector<DimVector>& parts) {
  Json a = Json::array();
  for (const auto& p : parts) a.push_back(dims_json(p));
  return a;
}

CriterionResult induction_commutes(const AcceptanceConfig& cfg) {
  CriterionResult r{7, "Induction commutes with Fourier", true};
  auto f = FqField::make(3);
  Json rows = Json::array();
  for (int eps : {1, -1}) {
    for (const auto& split : commutation_splits()) {
      for (std::uint64_t k = 0; k < 5; ++k) {
        std::vector<InducePart> parts;
        for (std::size_t j = 0; j < split.size(); ++j) {
          const auto s = SpaceDescriptor::quiver(f, 2, eps, split[j]);
          parts.push_back({split[j], nonzero_invariant(s, cfg.seed * 1000 + k * 10 + j, cfg.budget)});
        }
        const auto rep = check_fourier_induction_commutes(f, 2, eps, parts, cfg.budget);
        const bool ok = rep.passed() && !rep.degenerate();
        r.passed = r.passed && ok;
        Json row = to_json(rep);
        row["eps"] = eps;
        row["split"] = split_json(split);
        row["seed_index"] = k;
        rows.push_back(row);
      }
    }
  }
  r.details["runs"] = rows;
  return r;
}

CriterionResult restriction_commutes(const AcceptanceConfig& cfg) {
  CriterionResult r{8, "Restriction commutes with Fourier", true};
  auto f = FqField::make(3);
  Json rows = Json::array();
  for (int eps : {1, -1}) {
    const auto s = SpaceDescriptor::quiver(f, 2, eps, {2, 2});
    for (const auto& split : commutation_splits()) {
      for (std::uint64_t k = 0; k < 5; ++k) {
        const auto g = nonzero_invariant(s, cfg.seed * 1000 + 500 + k, cfg.budget);
        const auto rep = check_fourier_restriction_commutes(g, split, cfg.budget);
        const bool ok = rep.passed() && !rep.degenerate();
        r.passed = r.passed && ok;
        Json row = to_json(rep);
        row["eps"] = eps;
        row["split"] = split_json(split);
        row["seed_index"] = k;
        rows.push_back(row);
      }
    }
  }
  r.details["runs"] = rows;
  return r;
}

CriterionResult flag_self_duality(const AcceptanceConfig& cfg) {
  CriterionResult r{9, "Flag-count self-duality", true};
  auto f = FqField::make(3);
  Json rows = Json::array();
  for (const auto& dims : std::vector<DimVector>{{1, 1}, {2, 1}}) {
    for (int eps : {1, -1}) {
      const auto s = SpaceDescriptor::quiver(f, 2, eps, dims);
      const auto nil = nilpotent_mask(s, cfg.budget);
      const auto dnil = nilpotent_mask(s.dual(), cfg.budget);
      for (const auto& type : flag_types(dims)) {
        const auto fl = flag_count_function(f, 2, dims, eps, type, cfg.budget);
        const auto fd = flag_count_function(f, 2, dims, -eps, type, cfg.budget);
        const auto c = colinear(fd, fourier(fl));
        bool support = true;
        for (std::uint64_t i = 0; i < s.size(); ++i) {
          if (!nil[i] && !fl.is_zero_at(i)) support = false;
          if (!dnil[i] && !fd.is_zero_at(i)) support = false;
        }
        const bool ok = c.colinear && !c.degenerate && support;
        r.passed = r.passed && ok;
        Json row{{"dims", dims_json(dims)}, {"eps", eps}, {"type", type}, {"colinear", c.colinear},
                 {"supports_nilpotent", support}};
        row["q_exponent"] = c.scalar ? Json(q_power_exponent(*c.scalar, 3).value_or(-999)) : Json(nullptr);
        rows.push_back(row);
      }
    }
  }
  r.details["cases"] = rows;
  return r;
}

CriterionResult point_counts(const AcceptanceConfig& cfg) {
  CriterionResult r{10, "Point-count bijection", true};
  Json rows = Json::array();
  for (unsigned q : {3u, 5u})
    for (unsigned m : {2u, 3u})
      for (unsigned s : {1u, 2u}) {
        std::uint64_t expect_nil = 1;
        for (unsigned k = 0; k < s * s - s; ++k) expect_nil *= q;
        for (const auto& c : eigen_point_counts(FqField::make(q), m, s, cfg.budget)) {
          const bool ok = c.holds() && c.nilpotent == expect_nil;
          r.passed = r.passed && ok;
          rows.push_back(Json{{"q", q}, {"m", m}, {"s", s}, {"lambda", c.lambda}, {"eigen_locus", c.eigen_locus},
                              {"d_count", c.d_count}, {"nilpotent", c.nilpotent}, {"holds", ok}});
        }
      }
  r.details["cases"] = rows;
  return r;
}

CriterionResult unipotent(const AcceptanceConfig& cfg) {
  CriterionResult r{11, "Unipotent example", true};
  for (unsigned q : {3u, 5u}) {
    const auto rep = unipotent_check(FqField::make(q), cfg.budget);
    r.passed = r.passed && rep.passed();
    r.details["q=" + std::to_string(q)] = to_json(rep);
  }
  return r;
}

CriterionResult symplectic(const AcceptanceConfig& cfg) {
  CriterionResult r{12, "Symplectic example", true};
  const auto rep = symplectic_check(FqField::make(3), cfg.budget);
  r.passed = rep.passed();
  r.details = to_json(rep);
  return r;
}

CriterionResult property_suite(const AcceptanceConfig& cfg) {
  CriterionResult r{13, "Property suite", true};
  auto f = FqField::make(3);
  std::mt19937_64 rng(cfg.seed);
  const std::vector<std::pair<unsigned, DimVector>> shapes{{2, {1, 1}}, {2, {2, 1}}, {3, {1, 1, 1}}};

  bool involution = true, plancherel = true, invariance = true;
  for (const auto& [m, nu] : shapes) {
    const auto s = SpaceDescriptor::quiver(f, m, 1, nu);
    FuncTable t(s);
    for (std::uint64_t i = 0; i < t.size(); ++i) {
      t.set(i, CycNum::from_int_coeffs(3, std::vector<std::int64_t>{static_cast<std::int64_t>(rng() % 9) - 4,
                                                                    static_cast<std::int64_t>(rng() % 9) - 4}));
    }
    const auto th = fourier(t);
    const auto tt = fourier(th);
    const auto qn = CycNum::from_int(3, static_cast<long>(s.size()));
    CycNum lhs(3), rhs(3);
    for (std::uint64_t i = 0; i < t.size(); ++i) {
      if (tt.value(i) != t.value(negate_index(s, i)) * qn) involution = false;
      lhs += th.value(i) * th.value(i).conj();
      rhs += t.value(i) * t.value(i).conj();
    }
    if (lhs != rhs * qn) plancherel = false;
    const auto inv = nonzero_invariant(s, cfg.seed + m, cfg.budget);
    if (!is_invariant(inv, inv.size()) || !is_invariant(fourier(inv), inv.size())) invariance = false;
  }

  bool hat = true;
  std::uint64_t hat_cases = 0;
  for (unsigned m = 1; m <= 3; ++m) {
    DimVector nu(m, 0);
    for (;;) {
      for (const auto& sig : enumerate_multisegments(m, nu)) {
        const auto pr = hat_bijection(sig);
        DimVector lhs = pr.sigma.dims();
        lhs.resize(m, 0);
        for (auto& x : lhs) x += pr.rho.underline();
        if (hat_unbijection(pr) != sig || lhs != nu) hat = false;
        ++hat_cases;
      }
      std::size_t j = 0;
      // Next nu with |nu| <= 6.
      for (; j < m; ++j) {
        ++nu[j];
        unsigned total = 0;
        for (auto x : nu) total += x;
        if (total <= 6) break;
        nu[j] = 0;
      }
      if (j == m) break;
    }
  }

  bool labels = true;
  std::uint64_t label_orbits = 0;
  for (const auto& [m, nu] : std::vector<std::pair<unsigned, DimVector>>{
           {2, {1, 1}}, {2, {2, 1}}, {2, {2, 2}}, {3, {1, 1, 1}}}) {
    const auto s = SpaceDescriptor::quiver(f, m, 1, nu);
    std::set<OrbitLabel> seen;
    for (const auto& o : enumerate_rational_orbits(f, m, nu, 1, false, cfg.budget)) {
      ++label_orbits;
      if (!seen.insert(o.label).second) labels = false;
      for (auto pt : o.orbit.points) {
        if (decompose(QuiverRep::from_index(s, pt)) != o.label) labels = false;
      }
    }
  }

  r.passed = involution && plancherel && invariance && hat && labels;
  r.details = Json{{"involution", involution},
                   {"plancherel", plancherel},
                   {"invariance_preserved", invariance},
                   {"hat_round_trip", hat},
                   {"hat_cases", hat_cases},
                   {"labels_constant_and_distinct", labels},
                   {"orbits_checked", label_orbits}};
  return r;
}

}  // namespace

CriterionResult run_criterion(unsigned id, const AcceptanceConfig& cfg) {
  if (cfg.profile != "desk") throw UsageError("unknown acceptance profile '" + cfg.profile + "' (known: desk)");
  switch (id) {
    case 1: return quadric_self_duality(cfg);
    case 2: return quadric_kloosterman(cfg);
    case 3: return kloosterman_bound(cfg);
    case 4: return eigen_stratum(cfg);
    case 5: return biorbital_dims(cfg);
    case 6: return gl_degeneration(cfg);
    case 7: return induction_commutes(cfg);
    case 8: return restriction_commutes(cfg);
    case 9: return flag_self_duality(cfg);
    case 10: return point_counts(cfg);
    case 11: return unipotent(cfg);
    case 12: return symplectic(cfg);
    case 13: return property_suite(cfg);
    default: throw UsageError("criterion id must be 1.." + std::to_string(kCriterionCount));
  }
}

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (unsigned id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, cfg));
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace antiorb
