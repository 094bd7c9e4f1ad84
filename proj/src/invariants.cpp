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


#include "antiorb/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "antiorb/errors.hpp"
#include "antiorb/exact_linalg.hpp"

namespace antiorb {

namespace {

std::uint64_t apply_linear(const SpaceDescriptor& space, const FqMatrix& a, std::uint64_t index) {
  const FqField& f = *space.field();
  const auto x = space.decode(index);
  std::vector<Elem> y(x.size(), 0);
  for (std::size_t r = 0; r < x.size(); ++r) {
    Elem acc = 0;
    for (std::size_t c = 0; c < x.size(); ++c) {
      if (x[c] && a(r, c)) acc = f.add(acc, f.mul(a(r, c), x[c]));
    }
    y[r] = acc;
  }
  return space.encode(y);
}

bool same_value(const FuncTable& f, std::uint64_t i, std::uint64_t j) {
  for (unsigned c = 0; c + 1 < f.p(); ++c) {
    if (f.coeff(c, i) != f.coeff(c, j)) return false;
  }
  return true;
}

const QuiverShape& require_quiver(const SpaceDescriptor& s, const char* what) {
  if (!s.quiver_shape()) throw UsageError(std::string(what) + ": expected a quiver space, got " + s.name());
  return *s.quiver_shape();
}

DimVector sum_dims(const std::vector<DimVector>& parts, unsigned m) {
  DimVector d(m, 0);
  for (const auto& p : parts) {
    if (p.size() != m) throw UsageError("part dims length must equal m");
    for (unsigned i = 0; i < m; ++i) d[i] += p[i];
  }
  return d;
}

void axpy(const FqField& f, Elem s, const std::vector<Elem>& x, std::vector<Elem>& y) {
  if (s == 0) return;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k]) y[k] = f.add(y[k], f.mul(s, x[k]));
  }
}

void add_into(const FqField& f, const std::vector<Elem>& x, std::vector<Elem>& y) {
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k]) y[k] = f.add(y[k], x[k]);
  }
}

std::vector<std::uint64_t> support(const FuncTable& t) {
  std::vector<std::uint64_t> s;
  for (std::uint64_t i = 0; i < t.size(); ++i) {
    if (!t.is_zero_at(i)) s.push_back(i);
  }
  return s;
}

// Two-part induction: part (d1, f1) is the subrepresentation.
FuncTable induce2(const FieldPtr& field, unsigned m, int eps, const InducePart& sub, const InducePart& quot,
                  std::uint64_t budget) {
  const FqField& f = *field;
  const unsigned q = f.q();
  const DimVector& d1 = sub.dims;
  const DimVector& d2 = quot.dims;
  const DimVector nu = sum_dims({d1, d2}, m);
  const SpaceDescriptor space = SpaceDescriptor::quiver(field, m, eps, nu);
  const SpaceDescriptor s1 = SpaceDescriptor::quiver(field, m, eps, d1);
  const SpaceDescriptor s2 = SpaceDescriptor::quiver(field, m, eps, d2);
  if (!(sub.f.space() == s1) || !(quot.f.space() == s2)) throw UsageError("induce: part table lives on the wrong space");
  FuncTable out(space, budget);
  const QuiverShape& sh = *space.quiver_shape();
  const std::size_t n = space.dim();

  const auto supp1 = support(sub.f);
  const auto supp2 = support(quot.f);
  if (supp1.empty() || supp2.empty()) return out;

  std::vector<std::vector<FqMatrix>> grass(m);
  for (unsigned i = 0; i < m; ++i) grass[i] = grassmannian(f, d1[i], nu[i]);

  std::vector<std::size_t> pick(m, 0);
  for (;;) {
    // Adapted bases: W_i first, then the standard complement.
    std::vector<FqMatrix> pm(m), pinv(m);
    for (unsigned i = 0; i < m; ++i) {
      const FqMatrix& w = grass[i][pick[i]];
      FqMatrix pmat(nu[i], nu[i]);
      std::vector<bool> pivot(nu[i], false);
      for (unsigned r = 0; r < d1[i]; ++r) {
        for (unsigned c = 0; c < nu[i]; ++c) pmat(c, r) = w(r, c);
        for (unsigned c = 0; c < nu[i]; ++c) {
          if (w(r, c)) {
            pivot[c] = true;
            break;
          }
        }
      }
      unsigned col = d1[i];
      for (unsigned c = 0; c < nu[i]; ++c) {
        if (!pivot[c]) pmat(c, col++) = 1;
      }
      pm[i] = pmat;
      pinv[i] = inverse(f, pmat);
    }
    // Coordinate vector of T for a unit entry (a, b) of the adapted block i.
    auto unit = [&](unsigned i, unsigned a, unsigned b) {
      std::vector<Elem> v(n, 0);
      const unsigned t = sh.target(i);
      const std::size_t off = sh.block_offset(i);
      for (unsigned r = 0; r < nu[t]; ++r) {
        if (!pm[t](r, a)) continue;
        for (unsigned c = 0; c < nu[i]; ++c) v[off + r * nu[i] + c] = f.mul(pm[t](r, a), pinv[i](b, c));
      }
      return v;
    };
    std::vector<std::vector<Elem>> l1, l2, ln;
    for (unsigned i = 0; i < m; ++i) {
      const unsigned t = sh.target(i);
      for (unsigned r = 0; r < d1[t]; ++r)
        for (unsigned c = 0; c < d1[i]; ++c) l1.push_back(unit(i, r, c));
    }
    for (unsigned i = 0; i < m; ++i) {
      const unsigned t = sh.target(i);
      for (unsigned r = 0; r < d2[t]; ++r)
        for (unsigned c = 0; c < d2[i]; ++c) l2.push_back(unit(i, d1[t] + r, d1[i] + c));
    }
    for (unsigned i = 0; i < m; ++i) {
      const unsigned t = sh.target(i);
      for (unsigned r = 0; r < d1[t]; ++r)
        for (unsigned c = 0; c < d2[i]; ++c) ln.push_back(unit(i, r, d1[i] + c));
    }
    std::vector<std::vector<Elem>> v2(supp2.size(), std::vector<Elem>(n, 0));
    for (std::size_t k = 0; k < supp2.size(); ++k) {
      const auto x = s2.decode(supp2[k]);
      for (std::size_t j = 0; j < x.size(); ++j) axpy(f, x[j], l2[j], v2[k]);
    }
    std::vector<unsigned> digit(ln.size());
    for (auto a : supp1) {
      std::vector<Elem> v1(n, 0);
      const auto x = s1.decode(a);
      for (std::size_t j = 0; j < x.size(); ++j) axpy(f, x[j], l1[j], v1);
      for (std::size_t k = 0; k < supp2.size(); ++k) {
        std::vector<Elem> cur = v1;
        add_into(f, v2[k], cur);
        std::fill(digit.begin(), digit.end(), 0);
        for (;;) {
          out.add_product(space.encode(cur), sub.f, a, quot.f, supp2[k]);
          std::size_t j = 0;
          // q additions of a column sum to zero, so wrapping needs no correction.
          while (j < ln.size()) {
            add_into(f, ln[j], cur);
            if (++digit[j] < q) break;
            digit[j++] = 0;
          }
          if (j == ln.size()) break;
        }
      }
    }
    std::size_t i = 0;
    while (i < m && ++pick[i] == grass[i].size()) pick[i++] = 0;
    if (i == m) break;
  }
  return out;
}

}  // namespace

FuncTable orbit_indicator(const SpaceDescriptor& space, const PointOrbit& orbit) {
  FuncTable t(space, space.size());
  for (auto pt : orbit.points) t.set_int(pt, 1);
  return t;
}

std::vector<FqMatrix> group_generators(const SpaceDescriptor& space) {
  if (space.kind() == SpaceDescriptor::Kind::quiver) return quiver_group_generators(space);
  if (space.kind() != SpaceDescriptor::Kind::product) {
    throw UsageError("no group attached to space " + space.name());
  }
  const std::size_t n = space.dim();
  std::vector<FqMatrix> out;
  std::size_t off = 0;
  for (const auto& fac : space.factors()) {
    for (const auto& g : group_generators(fac)) {
      FqMatrix a = FqMatrix::identity(n);
      for (std::size_t r = 0; r < fac.dim(); ++r)
        for (std::size_t c = 0; c < fac.dim(); ++c) a(off + r, off + c) = g(r, c);
      out.push_back(std::move(a));
    }
    off += fac.dim();
  }
  return out;
}

bool is_invariant(const FuncTable& f, std::uint64_t sample_limit) {
  const auto gens = group_generators(f.space());
  const std::uint64_t step = f.size() <= sample_limit ? 1 : f.size() / sample_limit + 1;
  for (std::uint64_t i = 0; i < f.size(); i += step) {
    for (const auto& g : gens) {
      if (!same_value(f, i, apply_linear(f.space(), g, i))) return false;
    }
  }
  return true;
}

FuncTable random_invariant_function(const SpaceDescriptor& space, std::uint64_t seed, std::uint64_t budget) {
  const auto orbits = enumerate_orbits(space, group_generators(space), [](std::uint64_t) { return true; }, budget);
  std::mt19937_64 rng(seed);
  FuncTable t(space, budget);
  for (const auto& o : orbits) {
    const std::int64_t v = static_cast<std::int64_t>(rng() % 7) - 3;
    for (auto pt : o.points) t.set_int(pt, v);
  }
  return t;
}

BiorbitalSpace biorbital_from_orbits(const SpaceDescriptor& space, std::vector<PointOrbit> orbits,
                                     const std::vector<bool>& dual_locus) {
  const unsigned p = space.field()->p();
  const std::size_t r = orbits.size();
  BiorbitalSpace out;
  std::vector<FuncTable> hats;
  hats.reserve(r);
  for (const auto& o : orbits) hats.push_back(fourier(orbit_indicator(space, o)));
  const std::uint64_t dual_size = space.size();
  if (dual_locus.size() != dual_size) throw UsageError("biorbital: dual locus mask has the wrong size");

  CycRowReducer red(p, r);
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::int64_t> key(r * (p - 1));
  for (std::uint64_t y = 0; y < dual_size && !red.full(); ++y) {
    if (dual_locus[y]) continue;
    for (std::size_t j = 0; j < r; ++j)
      for (unsigned c = 0; c + 1 < p; ++c) key[j * (p - 1) + c] = hats[j].coeff(c, y);
    if (!seen.insert(key).second) continue;
    std::vector<CycNum> row;
    row.reserve(r);
    for (std::size_t j = 0; j < r; ++j) row.push_back(hats[j].value(y));
    red.add_row(std::move(row));
  }
  out.distinct_rows = seen.size();
  for (auto& v : red.nullspace()) out.basis.push_back(clear_denominators(v));
  out.dimension = out.basis.size();

  out.verified = true;
  for (const auto& v : out.basis) {
    FuncTable fn(space, space.size());
    for (std::size_t j = 0; j < r; ++j) {
      for (auto pt : orbits[j].points) fn.set(pt, v[j]);
    }
    const auto fh = fourier(fn);
    for (std::uint64_t y = 0; y < dual_size; ++y) {
      if (!dual_locus[y] && !fh.is_zero_at(y)) {
        out.verified = false;
        break;
      }
    }
    out.functions.push_back(std::move(fn));
  }
  out.orbits = std::move(orbits);
  return out;
}

BiorbitalSpace biorbital_space(const FieldPtr& field, unsigned m, const DimVector& dims, int eps,
                               std::uint64_t budget) {
  const auto space = SpaceDescriptor::quiver(field, m, eps, dims);
  check_budget("biorbital space on " + space.name(), space.size(), budget);
  std::vector<PointOrbit> orbits;
  for (auto& o : enumerate_rational_orbits(field, m, dims, eps, true, budget)) orbits.push_back(std::move(o.orbit));
  return biorbital_from_orbits(space, std::move(orbits), nilpotent_mask(space.dual(), budget));
}

std::vector<FqMatrix> grassmannian(const FqField& f, unsigned k, unsigned n) {
  std::vector<FqMatrix> out;
  if (k > n) return out;
  std::vector<unsigned> piv(k);
  std::iota(piv.begin(), piv.end(), 0u);
  for (;;) {
    std::vector<bool> is_piv(n, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::pair<unsigned, unsigned>> free;
    for (unsigned r = 0; r < k; ++r)
      for (unsigned c = piv[r] + 1; c < n; ++c)
        if (!is_piv[c]) free.emplace_back(r, c);
    std::vector<Elem> val(free.size(), 0);
    for (;;) {
      FqMatrix a(k, n);
      for (unsigned r = 0; r < k; ++r) a(r, piv[r]) = 1;
      for (std::size_t j = 0; j < free.size(); ++j) a(free[j].first, free[j].second) = val[j];
      out.push_back(std::move(a));
      std::size_t j = 0;
      while (j < val.size() && ++val[j] == f.q()) val[j++] = 0;
      if (j == val.size()) break;
    }
    // Next pivot combination in lexicographic order.
    int r = static_cast<int>(k) - 1;
    while (r >= 0 && piv[r] == n - k + static_cast<unsigned>(r)) --r;
    if (r < 0) break;
    ++piv[r];
    for (unsigned s = static_cast<unsigned>(r) + 1; s < k; ++s) piv[s] = piv[s - 1] + 1;
  }
  return out;
}

FuncTable induce(const FieldPtr& field, unsigned m, int eps, const std::vector<InducePart>& parts,
                 std::uint64_t budget) {
  if (parts.empty()) throw UsageError("induce needs at least one part");
  for (const auto& pt : parts) {
    if (!is_invariant(pt.f)) throw UsageError("induce: input function on " + pt.f.space().name() + " is not invariant");
  }
  if (parts.size() == 1) return parts.front().f;
  // Right-nested: Ind(f_1, Ind(f_2, ..., f_s)).
  InducePart rest{parts.back().dims, parts.back().f};
  for (std::size_t k = parts.size() - 1; k-- > 1;) {
    FuncTable t = induce2(field, m, eps, parts[k], rest, budget);
    DimVector d = sum_dims({parts[k].dims, rest.dims}, m);
    rest = InducePart{std::move(d), std::move(t)};
  }
  return induce2(field, m, eps, parts.front(), rest, budget);
}

FuncTable restrict_to_levi(const FuncTable& f, const std::vector<DimVector>& parts, std::uint64_t budget) {
  const QuiverShape& sh = require_quiver(f.space(), "restrict");
  const unsigned m = sh.m;
  if (parts.empty()) throw UsageError("restrict needs at least one part");
  if (sum_dims(parts, m) != sh.dims) throw UsageError("restrict: parts do not add up to the dims of " + f.space().name());
  if (!is_invariant(f)) throw UsageError("restrict: input function is not invariant");
  const FieldPtr& field = f.space().field();
  const unsigned q = field->q();

  std::vector<SpaceDescriptor> factors;
  for (const auto& d : parts) factors.push_back(SpaceDescriptor::quiver(field, m, sh.eps, d));
  const SpaceDescriptor levi = SpaceDescriptor::product(factors);
  FuncTable out(levi, budget);

  // part_of[i][r]: the part owning row r of V_i, and its local index.
  std::vector<std::vector<std::pair<unsigned, unsigned>>> part_of(m);
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned k = 0; k < parts.size(); ++k)
      for (unsigned r = 0; r < parts[k][i]; ++r) part_of[i].emplace_back(k, r);
  }
  std::vector<std::size_t> factor_off(parts.size(), 0);
  for (std::size_t k = 1; k < parts.size(); ++k) factor_off[k] = factor_off[k - 1] + factors[k - 1].dim();

  std::vector<std::uint64_t> pw(f.space().dim() + 1, 1);
  for (std::size_t j = 1; j < pw.size(); ++j) pw[j] = pw[j - 1] * q;
  std::vector<std::uint64_t> pw_levi(levi.dim() + 1, 1);
  for (std::size_t j = 1; j < pw_levi.size(); ++j) pw_levi[j] = pw_levi[j - 1] * q;

  // Free coordinates of the parabolic and their weights in both indexings.
  std::vector<std::uint64_t> w_full, w_levi;
  for (unsigned i = 0; i < m; ++i) {
    const unsigned t = sh.target(i);
    const std::size_t off = sh.block_offset(i);
    for (unsigned r = 0; r < sh.dims[t]; ++r) {
      for (unsigned c = 0; c < sh.dims[i]; ++c) {
        const auto [kr, lr] = part_of[t][r];
        const auto [kc, lc] = part_of[i][c];
        if (kr > kc) continue;
        w_full.push_back(pw[off + r * sh.dims[i] + c]);
        if (kr == kc) {
          const QuiverShape& fs = *factors[kr].quiver_shape();
          w_levi.push_back(pw_levi[factor_off[kr] + fs.block_offset(i) + lr * parts[kr][i] + lc]);
        } else {
          w_levi.push_back(0);
        }
      }
    }
  }
  std::uint64_t count = 1;
  for (std::size_t j = 0; j < w_full.size(); ++j) count *= q;
  check_budget("restriction over the parabolic", count, budget);

  std::vector<unsigned> digit(w_full.size(), 0);
  std::uint64_t i_full = 0, i_levi = 0;
  for (;;) {
    if (!f.is_zero_at(i_full)) out.add_value(i_levi, f, i_full);
    std::size_t j = 0;
    while (j < digit.size()) {
      if (++digit[j] < q) {
        i_full += w_full[j];
        i_levi += w_levi[j];
        break;
      }
      digit[j] = 0;
      i_full -= w_full[j] * (q - 1);
      i_levi -= w_levi[j] * (q - 1);
      ++j;
    }
    if (j == digit.size()) break;
  }
  return out;
}

std::size_t nilradical_dim(unsigned m, int eps, const std::vector<DimVector>& parts) {
  std::size_t n = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (std::size_t l = k + 1; l < parts.size(); ++l) {
      for (unsigned i = 0; i < m; ++i) {
        const unsigned t = static_cast<unsigned>((i + m + eps) % m);
        n += std::size_t{parts[k][t]} * parts[l][i];
      }
    }
  }
  return n;
}

namespace {

CommutationReport finish_report(const FuncTable& lhs, const FuncTable& rhs, int predicted) {
  CommutationReport rep;
  rep.colinearity = colinear(rhs, lhs);
  rep.predicted_exponent = predicted;
  if (rep.colinearity.scalar) rep.q_exponent = q_power_exponent(*rep.colinearity.scalar, lhs.space().field()->q());
  return rep;
}

}  // namespace

CommutationReport check_fourier_induction_commutes(const FieldPtr& field, unsigned m, int eps,
                                                   const std::vector<InducePart>& parts, std::uint64_t budget) {
  const FuncTable lhs = fourier(induce(field, m, eps, parts, budget));
  std::vector<InducePart> hat_parts;
  std::vector<DimVector> dims;
  for (const auto& pt : parts) {
    hat_parts.push_back({pt.dims, fourier(pt.f)});
    dims.push_back(pt.dims);
  }
  const FuncTable rhs = induce(field, m, -eps, hat_parts, budget);
  return finish_report(lhs, rhs, static_cast<int>(nilradical_dim(m, eps, dims)));
}

CommutationReport check_fourier_restriction_commutes(const FuncTable& f, const std::vector<DimVector>& parts,
                                                     std::uint64_t budget) {
  const QuiverShape& sh = require_quiver(f.space(), "restriction check");
  const FuncTable lhs = restrict_to_levi(fourier(f), parts, budget);
  const FuncTable rhs = fourier(restrict_to_levi(f, parts, budget));
  return finish_report(lhs, rhs, static_cast<int>(nilradical_dim(sh.m, -sh.eps, parts)));
}

std::vector<std::vector<unsigned>> flag_types(const DimVector& dims) {
  std::vector<unsigned> seq;
  for (unsigned i = 0; i < dims.size(); ++i) seq.insert(seq.end(), dims[i], i);
  std::vector<std::vector<unsigned>> out;
  do {
    out.push_back(seq);
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

FuncTable flag_count_function(const FieldPtr& field, unsigned m, const DimVector& dims, int eps,
                              const std::vector<unsigned>& flag_type, std::uint64_t budget) {
  DimVector count(m, 0);
  for (unsigned v : flag_type) {
    if (v >= m) throw UsageError("flag type names a vertex outside Z/m");
    ++count[v];
  }
  if (count != dims) throw UsageError("flag type does not match dims");
  if (flag_type.empty()) {
    FuncTable t(SpaceDescriptor::quiver(field, m, eps, dims), budget);
    t.set_int(0, 1);
    return t;
  }
  std::vector<InducePart> parts;
  for (unsigned v : flag_type) {
    DimVector e(m, 0);
    e[v] = 1;
    FuncTable delta(SpaceDescriptor::quiver(field, m, eps, e), budget);
    delta.set_int(0, 1);
    parts.push_back({e, std::move(delta)});
  }
  return induce(field, m, eps, parts, budget);
}

SupportStrata support_strata(const FuncTable& g) {
  require_quiver(g.space(), "support_strata");
  SupportStrata s;
  for (std::uint64_t y = 0; y < g.size(); ++y) {
    if (g.is_zero_at(y)) continue;
    s.labels.insert(stratum_label(QuiverRep::from_index(g.space(), y)));
  }
  for (const auto& l : s.labels) s.max_z = std::max(s.max_z, l.z);
  for (const auto& l : s.labels) {
    if (l.z == s.max_z) s.sigma_at_max_z.insert(l.sigma);
  }
  return s;
}

std::uint64_t frobenius_index(const SpaceDescriptor& space, std::uint64_t index) {
  auto x = space.decode(index);
  const FqField& f = *space.field();
  for (auto& v : x) v = f.pow(v, f.p());
  return space.encode(x);
}

EigenStratumReport check_eigen_stratum_transform(const FieldPtr& field, unsigned m, int eps, Elem lambda,
                                                 std::uint64_t budget) {
  if (lambda == 0) throw UsageError("eigen stratum needs lambda != 0");
  const auto space = SpaceDescriptor::quiver(field, m, eps, DimVector(m, 1));
  check_budget("eigen stratum space", space.size(), budget);
  // With all blocks 1 x 1, T^m is the scalar given by the 1 x 1 composite.
  auto scalar = [](const SpaceDescriptor& s, std::uint64_t i) {
    const auto t = QuiverRep::from_index(s, i);
    return t.composite(0, t.m())(0, 0);
  };
  FuncTable ind(space);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    if (in_eigen_locus(QuiverRep::from_index(space, i), lambda)) ind.set_int(i, 1);
  }
  const auto hat = fourier(ind);
  const auto& dual = hat.space();
  std::map<Elem, CycNum> km;
  EigenStratumReport rep;
  for (std::uint64_t y = 0; y < dual.size(); ++y) {
    const Elem mu = scalar(dual, y);
    if (mu == 0) continue;
    const Elem arg = field->mul(lambda, mu);
    auto it = km.find(arg);
    if (it == km.end()) it = km.emplace(arg, kloosterman(m, field, arg)).first;
    ++rep.points_checked;
    if (hat.value(y) != it->second) ++rep.mismatches;
  }
  return rep;
}

}  // namespace antiorb
