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


#include "antiorb/casestudies.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "antiorb/errors.hpp"
#include "antiorb/exact_linalg.hpp"
#include "antiorb/fourier.hpp"
#include "antiorb/invariants.hpp"

namespace antiorb {

namespace {

Elem trace_of(const FqField& f, const FqMatrix& a) {
  Elem t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) t = f.add(t, a(i, i));
  return t;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Gram matrix of the trace form tr(T T') in the given coordinates.
FqMatrix trace_gram(const FqField& f, std::size_t n, const std::function<FqMatrix(const std::vector<Elem>&)>& full) {
  std::vector<FqMatrix> units;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Elem> e(n, 0);
    e[j] = 1;
    units.push_back(full(e));
  }
  FqMatrix g(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) g(j, k) = trace_of(f, mat_mul(f, units[j], units[k]));
  return g;
}

// t[i] == c * zeta^tr exactly, read off the canonical coefficient planes.
bool equals_scaled_char(const FuncTable& t, std::uint64_t i, std::int64_t c, unsigned tr) {
  const unsigned planes = t.p() - 1;
  for (unsigned j = 0; j < planes; ++j) {
    const std::int64_t want = tr == planes ? -c : (j == tr ? c : 0);
    if (t.coeff(j, i) != want) return false;
  }
  return true;
}

std::vector<bool> point_mask(const SpaceDescriptor& space, const std::function<bool(const std::vector<Elem>&)>& pred) {
  std::vector<bool> out(space.size());
  for (std::uint64_t i = 0; i < out.size(); ++i) out[i] = pred(space.decode(i));
  return out;
}

std::vector<std::string> names(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < n; ++j) out.push_back(stem + std::to_string(j));
  return out;
}

}  // namespace

// --- shared helpers -----------------------------------------------------------

SpaceDescriptor monomial_space(FieldPtr field, std::string name, std::string dual_name,
                               std::vector<std::string> coords, std::vector<std::string> dual_coords,
                               const FqMatrix& gram) {
  const std::size_t n = gram.rows();
  if (gram.cols() != n || coords.size() != n) throw UsageError("monomial_space: shape mismatch");
  std::vector<std::uint32_t> perm(n);
  std::vector<Elem> coef(n);
  for (std::size_t j = 0; j < n; ++j) {
    int hits = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (gram(j, k) != 0) {
        ++hits;
        perm[j] = static_cast<std::uint32_t>(k);
        coef[j] = gram(j, k);
      }
    }
    if (hits != 1) throw UsageError("monomial_space: pairing of " + name + " is not monomial");
  }
  return SpaceDescriptor::generic(std::move(field), std::move(name), std::move(dual_name), std::move(coords),
                                  std::move(dual_coords), std::move(perm), std::move(coef));
}

FqMatrix coordinate_map(std::size_t n, const std::function<std::vector<Elem>(const std::vector<Elem>&)>& fn) {
  FqMatrix a(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Elem> e(n, 0);
    e[j] = 1;
    const auto col = fn(e);
    for (std::size_t r = 0; r < n; ++r) a(r, j) = col[r];
  }
  return a;
}

FqMatrix symplectic_gram(const FqField& f, std::size_t n) {
  FqMatrix g(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    g(2 * k, 2 * k + 1) = f.one();
    g(2 * k + 1, 2 * k) = f.neg(f.one());
  }
  return g;
}

std::vector<FqMatrix> symplectic_generators(const FqField& f, const FqMatrix& gram) {
  const std::size_t n = gram.rows();
  std::vector<std::vector<Elem>> vs;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Elem> v(n, 0);
    v[i] = 1;
    vs.push_back(v);
    for (std::size_t j = i + 1; j < n; ++j) {
      auto w = v;
      w[j] = 1;
      vs.push_back(w);
    }
  }
  std::vector<FqMatrix> out;
  for (const auto& v : vs) {
    // Row vector v^T G, so <v, x> = (v^T G) x.
    std::vector<Elem> vg(n, 0);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r) vg[c] = f.add(vg[c], f.mul(v[r], gram(r, c)));
    for (Elem c = 1; c < f.q(); ++c) {
      FqMatrix m = FqMatrix::identity(n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) m(r, k) = f.add(m(r, k), f.mul(c, f.mul(v[r], vg[k])));
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::uint64_t matrix_group_order(const FqField& f, const std::vector<FqMatrix>& gens, std::uint64_t cap) {
  if (gens.empty()) return 1;
  const std::size_t n = gens.front().rows();
  std::set<std::vector<Elem>> seen;
  std::vector<FqMatrix> frontier{FqMatrix::identity(n)};
  seen.insert(frontier.front().data());
  while (!frontier.empty()) {
    std::vector<FqMatrix> next;
    for (const auto& m : frontier) {
      for (const auto& g : gens) {
        auto h = mat_mul(f, g, m);
        if (seen.insert(h.data()).second) {
          if (seen.size() > cap) return seen.size();
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

// --- quadric --------------------------------------------------------------------

bool QuadricReport::kloosterman_ok() const {
  return std::all_of(levels.begin(), levels.end(), [](const QuadricLevelCheck& l) { return l.ok; });
}

bool QuadricReport::passed() const {
  return q0_count_ok() && self_dual && kloosterman_ok() && solution_dim == 1 && solution_spanned_by_f0;
}

SpaceDescriptor quadric_space(const FieldPtr& field, unsigned n_dim) {
  if (field->p() == 2) throw UsageError("quadric needs odd q");
  if (n_dim < 4 || n_dim % 2) throw UsageError("quadric needs even N >= 4");
  FqMatrix g(n_dim, n_dim);
  for (unsigned k = 0; k < n_dim / 2; ++k) {
    g(2 * k, 2 * k + 1) = 1;
    g(2 * k + 1, 2 * k) = 1;
  }
  return monomial_space(field, "V", "V", names("x", n_dim), names("x", n_dim), g);
}

Elem quadric_value(const FqField& f, const std::vector<Elem>& x) {
  Elem v = 0;
  for (std::size_t k = 0; k + 1 < x.size(); k += 2) v = f.add(v, f.mul(x[k], x[k + 1]));
  return v;
}

FuncTable quadric_f0(const SpaceDescriptor& space) {
  const FqField& f = *space.field();
  FuncTable t(space);
  for (std::uint64_t i = 1; i < t.size(); ++i) {
    if (quadric_value(f, space.decode(i)) == 0) t.set_int(i, 1);
  }
  t.set_int(0, 1 + static_cast<std::int64_t>(ipow(f.q(), static_cast<unsigned>(space.dim() - 2) / 2)));
  return t;
}

QuadricReport quadric_check(const FieldPtr& field, unsigned n_dim, std::optional<Elem> lambda, std::uint64_t budget) {
  const auto space = quadric_space(field, n_dim);
  check_budget("quadric space", space.size(), budget);
  const FqField& f = *field;
  const unsigned q = f.q();
  const unsigned p = f.p();
  QuadricReport rep;
  rep.q = q;
  rep.n_dim = n_dim;

  std::vector<Elem> qv(space.size());
  for (std::uint64_t i = 0; i < qv.size(); ++i) {
    qv[i] = quadric_value(f, space.decode(i));
    rep.q0_points += qv[i] == 0;
  }
  rep.q0_expected = ipow(q, n_dim - 1) + ipow(q, n_dim / 2) - ipow(q, n_dim / 2 - 1);

  const auto f0 = quadric_f0(space);
  rep.f0_at_zero = f0.coeff(0, 0);
  rep.self_dual_scalar = static_cast<std::int64_t>(ipow(q, n_dim / 2));
  FuncTable scaled(space);
  for (std::uint64_t i = 0; i < f0.size(); ++i) scaled.set_int(i, rep.self_dual_scalar * f0.coeff(0, i));
  rep.self_dual = fourier(f0).values_equal(scaled);

  rep.kloosterman_scalar = static_cast<std::int64_t>(ipow(q, (n_dim - 2) / 2));
  std::vector<Elem> lams;
  if (lambda) {
    if (*lambda == 0 || *lambda >= q) throw UsageError("quadric lambda must be a nonzero field element");
    lams.push_back(*lambda);
  } else {
    for (Elem l = 1; l < q; ++l) lams.push_back(l);
  }
  std::map<Elem, CycNum> k2;
  for (Elem l : lams) {
    FuncTable ind(space);
    for (std::uint64_t i = 0; i < qv.size(); ++i) {
      if (qv[i] == l) ind.set_int(i, 1);
    }
    const auto hat = fourier(ind);
    QuadricLevelCheck lc;
    lc.lambda = l;
    for (std::uint64_t x = 0; x < qv.size(); ++x) {
      if (qv[x] == 0) continue;
      const Elem mu = f.mul(l, qv[x]);
      auto it = k2.find(mu);
      if (it == k2.end()) it = k2.emplace(mu, kloosterman(2, field, mu)).first;
      ++lc.points_checked;
      if (hat.value(x) != CycNum::from_int(p, rep.kloosterman_scalar) * it->second) lc.ok = false;
    }
    rep.levels.push_back(lc);
  }

  // Level-set functions supported on Q_0 with transform supported on Q_0.
  std::vector<PointOrbit> pieces(2);
  pieces[0].points.push_back(0);
  for (std::uint64_t i = 1; i < qv.size(); ++i) {
    if (qv[i] == 0) pieces[1].points.push_back(i);
  }
  std::vector<bool> q0(qv.size());
  for (std::uint64_t i = 0; i < qv.size(); ++i) q0[i] = qv[i] == 0;
  const auto bio = biorbital_from_orbits(space, pieces, q0);
  rep.solution_dim = bio.dimension;
  if (bio.dimension == 1 && bio.verified) {
    const auto c = colinear(f0, bio.functions.front());
    rep.solution_spanned_by_f0 = c.colinear && !c.degenerate;
  }
  return rep;
}

// --- symplectic pair ------------------------------------------------------------

bool SymplecticReport::passed() const {
  std::set<std::string> seen;
  for (const auto& o : orbits) seen.insert(o.name);
  return orbits.size() == 3 && seen.size() == 3 && biorbital_dim == 2 && biorbital_verified && closure_supports_ok;
}

FqMatrix symplectic_full_matrix(const FqField& f, const std::vector<Elem>& a) {
  // Basis e1, f1 | e2, f2, e3, f3. T = [[0, B], [A, 0]] with B = -J0^{-1} A^T J1.
  FqMatrix am(4, 2, a);
  const auto j0 = symplectic_gram(f, 1);
  const auto j1 = symplectic_gram(f, 2);
  const auto b = mat_scale(f, f.neg(f.one()), mat_mul(f, inverse(f, j0), mat_mul(f, transpose(am), j1)));
  FqMatrix t(6, 6);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      t(2 + r, c) = am(r, c);
      t(c, 2 + r) = b(c, r);
    }
  return t;
}

SpaceDescriptor symplectic_space(const FieldPtr& field) {
  const FqField& f = *field;
  if (f.p() == 2) throw UsageError("symplectic case needs odd q");
  std::vector<std::string> coords;
  for (const char* r : {"e2", "f2", "e3", "f3"})
    for (const char* c : {"e1", "f1"}) coords.push_back(std::string("A(") + r + "," + c + ")");
  const auto gram = trace_gram(f, 8, [&](const std::vector<Elem>& a) { return symplectic_full_matrix(f, a); });
  return monomial_space(field, "E", "E", coords, coords, gram);
}

std::vector<FqMatrix> symplectic_group_generators(const FqField& f) {
  std::vector<FqMatrix> out;
  for (const auto& k0 : symplectic_generators(f, symplectic_gram(f, 1))) {
    const auto k0i = inverse(f, k0);
    out.push_back(coordinate_map(8, [&](const std::vector<Elem>& a) {
      return mat_mul(f, FqMatrix(4, 2, a), k0i).data();
    }));
  }
  for (const auto& k1 : symplectic_generators(f, symplectic_gram(f, 2))) {
    out.push_back(coordinate_map(8, [&](const std::vector<Elem>& a) {
      return mat_mul(f, k1, FqMatrix(4, 2, a)).data();
    }));
  }
  return out;
}

SymplecticReport symplectic_check(const FieldPtr& field, std::uint64_t budget) {
  const FqField& f = *field;
  const auto space = symplectic_space(field);
  check_budget("symplectic space", space.size(), budget);
  SymplecticReport rep;
  rep.q = f.q();
  const auto nil = point_mask(space, [&](const std::vector<Elem>& a) {
    return is_nilpotent(f, symplectic_full_matrix(f, a));
  });
  rep.nilpotent_points = static_cast<std::size_t>(std::count(nil.begin(), nil.end(), true));
  const auto orbits =
      enumerate_orbits(space, symplectic_group_generators(f), [&](std::uint64_t i) { return nil[i]; }, budget);
  for (const auto& o : orbits) {
    SymplecticOrbitInfo info;
    info.size = o.points.size();
    info.representative = o.representative();
    const auto t = symplectic_full_matrix(f, space.decode(o.representative()));
    auto power = t;
    for (int k = 0; k < 3; ++k) {
      info.rank_sequence.push_back(rank(f, power));
      power = mat_mul(f, power, t);
    }
    info.name = info.rank_sequence[0] == 0 ? "0" : info.rank_sequence[1] == 0 ? "O'" : "O";
    rep.orbits.push_back(info);
  }

  const auto bio = biorbital_from_orbits(space, orbits, nil);
  rep.biorbital_dim = bio.dimension;
  rep.biorbital_verified = bio.verified;

  std::optional<std::size_t> io, iop;
  for (std::size_t k = 0; k < rep.orbits.size(); ++k) {
    if (rep.orbits[k].name == "O") io = k;
    if (rep.orbits[k].name == "O'") iop = k;
  }
  if (bio.dimension == 2 && io && iop) {
    auto b = bio.basis[0];
    auto v = bio.basis[1];
    if (b[*io].is_zero()) std::swap(b, v);
    if (!b[*io].is_zero()) {
      // v' = b_O v - v_O b has no O component.
      std::vector<CycNum> w(v.size(), CycNum(f.p()));
      for (std::size_t k = 0; k < v.size(); ++k) w[k] = b[*io] * v[k] - v[*io] * b[k];
      rep.closure_supports_ok = w[*io].is_zero() && !w[*iop].is_zero();
      rep.adapted_basis = {clear_denominators(b), clear_denominators(w)};
    }
  }
  return rep;
}

// --- symmetric-square piece -----------------------------------------------------

FqMatrix symmetric_full_matrix(const FqField& f, unsigned n, const std::vector<Elem>& s) {
  const std::size_t d = 2 * n;
  FqMatrix sk(d, d);
  std::size_t k = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j, ++k) {
      sk(i, j) = s[k];
      sk(j, i) = f.neg(s[k]);
    }
  return mat_mul(f, inverse(f, symplectic_gram(f, n)), sk);
}

SpaceDescriptor symmetric_space(const FieldPtr& field, unsigned n) {
  const FqField& f = *field;
  if (f.p() == 2) throw UsageError("symmetric case needs odd q");
  if (n == 0) throw UsageError("symmetric case needs n >= 1");
  const std::size_t d = 2 * n;
  std::vector<std::string> coords;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) coords.push_back("S" + std::to_string(i) + std::to_string(j));
  const auto gram = trace_gram(f, coords.size(), [&](const std::vector<Elem>& s) {
    return symmetric_full_matrix(f, n, s);
  });
  return monomial_space(field, "E", "E", coords, coords, gram);
}

std::vector<FqMatrix> symmetric_group_generators(const FqField& f, unsigned n) {
  const std::size_t d = 2 * n;
  const std::size_t dim = d * (d - 1) / 2;
  const auto j = symplectic_gram(f, n);
  std::vector<FqMatrix> out;
  for (const auto& g : symplectic_generators(f, j)) {
    const auto gi = inverse(f, g);
    out.push_back(coordinate_map(dim, [&](const std::vector<Elem>& s) {
      const auto t = mat_mul(f, g, mat_mul(f, symmetric_full_matrix(f, n, s), gi));
      const auto sk = mat_mul(f, j, t);
      std::vector<Elem> out_s;
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) out_s.push_back(sk(a, b));
      return out_s;
    }));
  }
  return out;
}

SymmetricReport symmetric_case_check(const FieldPtr& field, unsigned n, std::uint64_t budget) {
  const FqField& f = *field;
  const auto space = symmetric_space(field, n);
  check_budget("symmetric space", space.size(), budget);
  SymmetricReport rep;
  rep.q = f.q();
  rep.n = n;
  rep.space_dim = space.dim();
  const auto nil = point_mask(space, [&](const std::vector<Elem>& s) {
    return is_nilpotent(f, symmetric_full_matrix(f, n, s));
  });
  rep.nilpotent_points = static_cast<std::uint64_t>(std::count(nil.begin(), nil.end(), true));
  const auto orbits =
      enumerate_orbits(space, symmetric_group_generators(f, n), [&](std::uint64_t i) { return nil[i]; }, budget);
  rep.nilpotent_orbits = orbits.size();
  const auto bio = biorbital_from_orbits(space, orbits, nil);
  rep.biorbital_dim = bio.dimension;
  rep.biorbital_verified = bio.verified;
  return rep;
}

// --- unipotent coadjoint example ------------------------------------------------

namespace {

// Coordinate k of h is b(row, col), of g is a(col, row).
constexpr std::size_t kRow[6] = {1, 2, 2, 3, 3, 3};
constexpr std::size_t kCol[6] = {0, 0, 1, 0, 1, 2};
enum : std::size_t { b21, b31, b32, b41, b42, b43 };
enum : std::size_t { a12, a13, a23, a14, a24, a34 };

}  // namespace

bool UnipotentStratum::passed() const {
  return orbit_sizes_ok && support_ok == orbit_count && (!form_asserted || form_ok == orbit_count);
}

bool UnipotentReport::passed() const {
  if (!partition_ok || strata.size() != 5) return false;
  return std::all_of(strata.begin(), strata.end(), [](const UnipotentStratum& s) { return s.passed(); });
}

SpaceDescriptor unipotent_space(const FieldPtr& field) {
  std::vector<std::string> h, g;
  for (std::size_t k = 0; k < 6; ++k) {
    h.push_back("b" + std::to_string(kRow[k] + 1) + std::to_string(kCol[k] + 1));
    g.push_back("a" + std::to_string(kCol[k] + 1) + std::to_string(kRow[k] + 1));
  }
  return monomial_space(field, "h", "g", h, g, FqMatrix::identity(6));
}

unsigned unipotent_stratum(const std::vector<Elem>& b) {
  if (b[b41] != 0) return 4;
  if (b[b31] == 0) return b[b42] == 0 ? 1 : 2;
  return b[b42] == 0 ? 3 : 5;
}

std::vector<FqMatrix> unipotent_group_generators(const FqField& f) {
  std::vector<FqMatrix> out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (Elem c = 1; c < f.q(); ++c) {
        FqMatrix g = FqMatrix::identity(4), gi = FqMatrix::identity(4);
        g(i, j) = c;
        gi(i, j) = f.neg(c);
        out.push_back(coordinate_map(6, [&](const std::vector<Elem>& b) {
          FqMatrix m(4, 4);
          for (std::size_t k = 0; k < 6; ++k) m(kRow[k], kCol[k]) = b[k];
          const auto c2 = mat_mul(f, g, mat_mul(f, m, gi));
          std::vector<Elem> r(6);
          for (std::size_t k = 0; k < 6; ++k) r[k] = c2(kRow[k], kCol[k]);
          return r;
        }));
      }
  return out;
}

UnipotentReport unipotent_check(const FieldPtr& field, std::uint64_t budget) {
  const FqField& f = *field;
  const unsigned q = f.q();
  const auto space = unipotent_space(field);
  const auto dual = space.dual();
  check_budget("unipotent space", space.size(), budget);
  UnipotentReport rep;
  rep.q = q;

  // The defining equations, written out independently of unipotent_stratum.
  rep.partition_ok = true;
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    const auto b = space.decode(i);
    const bool u[5] = {
        b[b31] == 0 && b[b41] == 0 && b[b42] == 0, b[b31] == 0 && b[b41] == 0 && b[b42] != 0,
        b[b41] == 0 && b[b42] == 0 && b[b31] != 0, b[b41] != 0,
        b[b41] == 0 && b[b31] != 0 && b[b42] != 0};
    const int hits = u[0] + u[1] + u[2] + u[3] + u[4];
    if (hits != 1 || !u[unipotent_stratum(b) - 1]) rep.partition_ok = false;
  }

  static constexpr unsigned kDims[5] = {0, 2, 2, 4, 2};
  for (unsigned s = 1; s <= 5; ++s) {
    UnipotentStratum st;
    st.index = s;
    st.expected_orbit_dim = kDims[s - 1];
    st.form_asserted = s != 4;
    rep.strata.push_back(st);
  }

  // Dual points, decoded once.
  std::vector<std::vector<Elem>> apts(dual.size());
  for (std::uint64_t i = 0; i < dual.size(); ++i) apts[i] = dual.decode(i);
  auto locus = [&](unsigned s, Elem c, Elem d) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < apts.size(); ++i) {
      const auto& a = apts[i];
      bool in = true;
      switch (s) {
        case 2: in = a[a23] == 0 && a[a34] == 0; break;
        case 3: in = a[a12] == 0 && a[a23] == 0; break;
        case 4: in = a[a12] == 0 && a[a34] == 0; break;
        case 5: in = a[a23] == 0 && f.sub(f.mul(c, a[a12]), f.mul(d, a[a34])) == 0; break;
        default: break;
      }
      if (in) out.push_back(i);
    }
    return out;
  };
  std::map<std::pair<Elem, Elem>, std::vector<std::uint64_t>> v5;
  for (Elem c = 1; c < q; ++c)
    for (Elem d = 1; d < q; ++d) v5[{c, d}] = locus(5, c, d);
  const std::vector<std::uint64_t> vs[5] = {locus(1, 0, 0), locus(2, 0, 0), locus(3, 0, 0), locus(4, 0, 0), {}};

  const auto orbits = enumerate_orbits(space, unipotent_group_generators(f), [](std::uint64_t) { return true; },
                                       budget);
  for (const auto& o : orbits) {
    rep.total_orbit_points += o.points.size();
    const unsigned s = unipotent_stratum(space.decode(o.representative()));
    auto& st = rep.strata[s - 1];
    ++st.orbit_count;
    st.points += o.points.size();
    for (auto pt : o.points) {
      if (unipotent_stratum(space.decode(pt)) != s) rep.partition_ok = false;
    }
    if (o.points.size() != ipow(q, st.expected_orbit_dim)) st.orbit_sizes_ok = false;

    const auto hat = fourier(orbit_indicator(space, o));
    std::vector<std::uint64_t> support;
    for (std::uint64_t i = 0; i < hat.size(); ++i) {
      if (!hat.is_zero_at(i)) support.push_back(i);
    }
    auto contains = [&](const std::vector<std::uint64_t>& v) {
      return std::includes(v.begin(), v.end(), support.begin(), support.end());
    };
    const std::vector<std::uint64_t>* locus_pts = nullptr;
    if (s != 5) {
      if (contains(vs[s - 1])) locus_pts = &vs[s - 1];
    } else {
      for (const auto& [cd, pts] : v5) {
        if (contains(pts)) {
          locus_pts = &pts;
          break;
        }
      }
    }
    if (!locus_pts) continue;
    ++st.support_ok;
    if (!st.form_asserted) continue;

    const auto size = static_cast<std::int64_t>(o.points.size());
    auto form_holds = [&](const std::function<Elem(const std::vector<Elem>&)>& form) {
      for (auto i : *locus_pts) {
        if (!equals_scaled_char(hat, i, size, f.trace(form(apts[i])))) return false;
      }
      return true;
    };
    bool found = false;
    for (Elem x = 0; x < q && !found; ++x)
      for (Elem y = 0; y < q && !found; ++y)
        for (Elem z = 0; z < q && !found; ++z) {
          switch (s) {
            case 1:
              found = form_holds([&](const std::vector<Elem>& a) {
                return f.add(f.add(f.mul(x, a[a12]), f.mul(y, a[a23])), f.mul(z, a[a34]));
              });
              break;
            case 2:
              if (y != 0 && z == 0)
                found = form_holds([&](const std::vector<Elem>& a) { return f.add(f.mul(x, a[a12]), f.mul(y, a[a24])); });
              break;
            case 3:
              if (x != 0 && z == 0)
                found = form_holds([&](const std::vector<Elem>& a) { return f.add(f.mul(x, a[a13]), f.mul(y, a[a34])); });
              break;
            case 5:
              if (x != 0 && y != 0)
                found = form_holds([&](const std::vector<Elem>& a) {
                  return f.add(f.add(f.mul(x, a[a13]), f.mul(y, a[a24])), f.mul(f.mul(z, f.inv(x)), a[a34]));
                });
              break;
            default: break;
          }
        }
    if (found) ++st.form_ok;
  }
  if (rep.total_orbit_points != space.size()) rep.partition_ok = false;
  return rep;
}

}  // namespace antiorb
