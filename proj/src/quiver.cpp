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


#include "antiorb/quiver.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "antiorb/errors.hpp"

namespace antiorb {

namespace {

FqMatrix mat_pow(const FqField& f, const FqMatrix& a, unsigned e) {
  FqMatrix r = FqMatrix::identity(a.rows());
  for (unsigned k = 0; k < e; ++k) r = mat_mul(f, r, a);
  return r;
}

unsigned min_vertex(const DimVector& dims) {
  return static_cast<unsigned>(std::min_element(dims.begin(), dims.end()) - dims.begin());
}

bool is_x(const FqPoly& g) { return g.size() == 2 && g[0] == 0 && g[1] == 1; }

FqPoly poly_pow(const FqField& f, const FqPoly& g, unsigned n) {
  FqPoly r{1};
  for (unsigned k = 0; k < n; ++k) r = poly_mul(f, r, g);
  return r;
}

std::string poly_string(const FqPoly& g) {
  std::string s = "[";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g[i]);
  }
  return s + "]";
}

std::string multiseg_string(const Multisegment& ms) {
  if (ms.is_zero()) return "0";
  std::string s;
  for (const auto& [cls, k] : ms.entries()) {
    if (!s.empty()) s += " + ";
    if (k != 1) s += std::to_string(k) + "*";
    s += "ov{" + std::to_string(cls.start) + "," + std::to_string(cls.start + cls.len - 1) + "}";
  }
  return s;
}

}  // namespace

unsigned GradedDims::total() const { return std::accumulate(nu.begin(), nu.end(), 0u); }

std::size_t GradedDims::space_dim() const {
  std::size_t n = 0;
  for (unsigned i = 0; i < m; ++i) n += std::size_t{nu[i]} * nu[(i + 1) % m];
  return n;
}

QuiverRep::QuiverRep(FieldPtr field, unsigned m, int eps, DimVector dims) : field_(std::move(field)) {
  if (!field_) throw UsageError("QuiverRep needs a field");
  if (m == 0 || dims.size() != m) throw UsageError("QuiverRep: dims length must equal m >= 1");
  if (eps != 1 && eps != -1) throw UsageError("QuiverRep: eps must be +1 or -1");
  shape_ = QuiverShape{m, eps, std::move(dims)};
  for (unsigned i = 0; i < m; ++i) blocks_.emplace_back(shape_.dims[target(i)], shape_.dims[i]);
}

QuiverRep QuiverRep::from_blocks(FieldPtr field, unsigned m, int eps, DimVector dims, std::vector<FqMatrix> blocks) {
  QuiverRep t(std::move(field), m, eps, std::move(dims));
  if (blocks.size() != m) throw UsageError("QuiverRep: expected " + std::to_string(m) + " blocks");
  for (unsigned i = 0; i < m; ++i) {
    if (blocks[i].rows() != t.blocks_[i].rows() || blocks[i].cols() != t.blocks_[i].cols()) {
      throw UsageError("QuiverRep: block " + std::to_string(i) + " has shape " + std::to_string(blocks[i].rows()) +
                       "x" + std::to_string(blocks[i].cols()) + ", expected " +
                       std::to_string(t.blocks_[i].rows()) + "x" + std::to_string(t.blocks_[i].cols()));
    }
    for (Elem v : blocks[i].data()) {
      if (v >= t.field_->q()) throw UsageError("QuiverRep: entry outside the field");
    }
  }
  t.blocks_ = std::move(blocks);
  return t;
}

QuiverRep QuiverRep::from_coords(const SpaceDescriptor& space, std::span<const Elem> coords) {
  if (!space.quiver_shape()) throw UsageError("QuiverRep::from_coords needs a quiver space");
  const QuiverShape& sh = *space.quiver_shape();
  QuiverRep t(space.field(), sh.m, sh.eps, sh.dims);
  std::size_t pos = 0;
  for (unsigned i = 0; i < sh.m; ++i) {
    FqMatrix& b = t.blocks_[i];
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = coords[pos++];
    }
  }
  return t;
}

QuiverRep QuiverRep::from_index(const SpaceDescriptor& space, std::uint64_t index) {
  const auto c = space.decode(index);
  return from_coords(space, c);
}

std::vector<Elem> QuiverRep::coords() const {
  std::vector<Elem> out;
  for (const auto& b : blocks_) out.insert(out.end(), b.data().begin(), b.data().end());
  return out;
}

SpaceDescriptor QuiverRep::space() const { return SpaceDescriptor::quiver(field_, shape_.m, shape_.eps, shape_.dims); }

std::uint64_t QuiverRep::index() const {
  const auto c = coords();
  const unsigned q = field_->q();
  std::uint64_t idx = 0;
  for (std::size_t j = c.size(); j-- > 0;) idx = idx * q + c[j];
  return idx;
}

FqMatrix QuiverRep::full_matrix() const {
  const DimVector& d = shape_.dims;
  std::vector<std::size_t> off(shape_.m + 1, 0);
  for (unsigned i = 0; i < shape_.m; ++i) off[i + 1] = off[i] + d[i];
  FqMatrix a(off.back(), off.back());
  for (unsigned i = 0; i < shape_.m; ++i) {
    const unsigned t = target(i);
    for (std::size_t r = 0; r < d[t]; ++r) {
      for (std::size_t c = 0; c < d[i]; ++c) a(off[t] + r, off[i] + c) = blocks_[i](r, c);
    }
  }
  return a;
}

FqMatrix QuiverRep::composite(unsigned a, unsigned j) const {
  FqMatrix r = FqMatrix::identity(shape_.dims[a]);
  unsigned v = a;
  for (unsigned k = 0; k < j; ++k) {
    r = mat_mul(*field_, blocks_[v], r);
    v = target(v);
  }
  return r;
}

QuiverRep QuiverRep::act(const std::vector<FqMatrix>& g) const {
  if (g.size() != shape_.m) throw UsageError("QuiverRep::act: need one matrix per vertex");
  QuiverRep out = *this;
  for (unsigned i = 0; i < shape_.m; ++i) {
    const FqMatrix gi_inv = inverse(*field_, g[i]);
    out.blocks_[i] = mat_mul(*field_, g[target(i)], mat_mul(*field_, blocks_[i], gi_inv));
  }
  return out;
}

bool OrbitLabel::degree_identity_holds() const {
  DimVector d = nilpotent_part.dims();
  if (d.size() != m) d.assign(m, 0);
  for (const auto& e : eigen_parts) {
    const unsigned add = static_cast<unsigned>(poly_degree(e.g)) * e.rho.underline();
    for (auto& v : d) v += add;
  }
  return d == dims;
}

std::string OrbitLabel::to_string() const {
  std::string s = "nil=" + multiseg_string(nilpotent_part);
  for (const auto& e : eigen_parts) {
    s += "; g=" + poly_string(e.g) + ":(";
    const auto parts = e.rho.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts[i]);
    }
    s += ")";
  }
  return s;
}

std::string StratumLabel::to_string() const {
  return "z=" + std::to_string(z) + "; sigma=" + multiseg_string(sigma) + "; valid=" + (valid ? "true" : "false");
}

bool is_nilpotent(const QuiverRep& t) {
  // Any nonzero eigenvalue of T^m lives at every vertex, so one vertex decides.
  const unsigned i0 = min_vertex(t.dims());
  const unsigned n = t.dims()[i0];
  if (n == 0) return true;
  return mat_pow(*t.field(), t.composite(i0, t.m()), n).is_zero();
}

Multisegment nilpotent_part(const QuiverRep& t) {
  const FqField& f = *t.field();
  const unsigned m = t.m();
  const DimVector& nu = t.dims();
  const unsigned total = std::accumulate(nu.begin(), nu.end(), 0u);

  // rn[a][j]: rank of the j-fold composite from V_a on the nilpotent summand.
  std::vector<std::vector<long>> rn(m, std::vector<long>(total + 2, 0));
  for (unsigned a = 0; a < m; ++a) {
    long invertible = 0;
    if (nu[a] > 0) {
      const FqMatrix ma = mat_pow(f, t.composite(a, m), nu[a]);
      invertible = static_cast<long>(rank(f, ma));
    }
    FqMatrix c = FqMatrix::identity(nu[a]);
    unsigned v = a;
    for (unsigned j = 0; j <= total + 1; ++j) {
      rn[a][j] = static_cast<long>(rank(f, c)) - invertible;
      c = mat_mul(f, t.block(v), c);
      v = t.target(v);
    }
  }
  Multisegment ms(m);
  const int eps = t.eps();
  for (unsigned a = 0; a < m; ++a) {
    const unsigned prev = static_cast<unsigned>((a + m - (eps > 0 ? 1 : m - 1)) % m);  // a - eps
    for (unsigned len = 1; len <= total; ++len) {
      const long starting_ge = rn[a][len - 1] - rn[prev][len];
      const long starting_gt = rn[a][len] - rn[prev][len + 1];
      const long mult = starting_ge - starting_gt;
      if (mult < 0) throw ArithmeticError("segment multiplicity negative; rank data inconsistent");
      if (mult == 0) continue;
      const long start = eps > 0 ? static_cast<long>(a) : static_cast<long>(a) - static_cast<long>(len) + 1;
      ms.add(SegmentClass::make(m, start, len), static_cast<unsigned>(mult));
    }
  }
  return ms;
}

Multisegment segment_multiplicities(const QuiverRep& t) {
  if (!is_nilpotent(t)) throw UsageError("segment_multiplicities: representation is not nilpotent");
  return nilpotent_part(t);
}

DimVector primary_dims(const QuiverRep& t, const FqPoly& g) {
  const FqField& f = *t.field();
  DimVector out(t.m(), 0);
  for (unsigned i = 0; i < t.m(); ++i) {
    const unsigned n = t.dims()[i];
    if (n == 0) continue;
    const FqMatrix gm = poly_eval(f, g, t.composite(i, t.m()));
    out[i] = n - static_cast<unsigned>(rank(f, mat_pow(f, gm, n)));
  }
  return out;
}

namespace {

std::vector<FqPoly> eigen_factors(const QuiverRep& t, unsigned i0) {
  const FqField& f = *t.field();
  std::vector<FqPoly> out;
  if (t.dims()[i0] == 0) return out;
  for (auto& g : distinct_irreducible_factors(f, charpoly(f, t.composite(i0, t.m())))) {
    if (!is_x(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

OrbitLabel decompose(const QuiverRep& t) {
  const FqField& f = *t.field();
  OrbitLabel label;
  label.m = t.m();
  label.dims = t.dims();
  label.nilpotent_part = nilpotent_part(t);
  const unsigned i0 = min_vertex(t.dims());
  const unsigned n = t.dims()[i0];
  const FqMatrix mi = n ? t.composite(i0, t.m()) : FqMatrix();
  for (auto& g : eigen_factors(t, i0)) {
    const unsigned deg = static_cast<unsigned>(poly_degree(g));
    const FqMatrix gm = poly_eval(f, g, mi);
    // ker_dims[k] = dim ker g(M)^k; blocks of size >= k number (ker_k - ker_{k-1}) / deg.
    std::vector<unsigned> ge(1, 0);
    FqMatrix pw = FqMatrix::identity(n);
    unsigned prev = 0;
    for (unsigned k = 1; k <= n; ++k) {
      pw = mat_mul(f, gm, pw);
      const unsigned kd = n - static_cast<unsigned>(rank(f, pw));
      if (kd == prev) break;
      ge.push_back((kd - prev) / deg);
      prev = kd;
    }
    ge.push_back(0);
    PartitionMult rho;
    for (unsigned k = 1; k + 1 < ge.size(); ++k) {
      if (ge[k] > ge[k + 1]) rho.set(k, ge[k] - ge[k + 1]);
    }
    label.eigen_parts.push_back({std::move(g), rho});
  }
  std::sort(label.eigen_parts.begin(), label.eigen_parts.end(), [](const EigenPart& a, const EigenPart& b) {
    if (a.g.size() != b.g.size()) return a.g.size() < b.g.size();
    return a < b;
  });
  return label;
}

StratumLabel stratum_label(const QuiverRep& t) {
  StratumLabel s;
  s.sigma = nilpotent_part(t);
  const unsigned i0 = min_vertex(t.dims());
  for (const auto& g : eigen_factors(t, i0)) {
    const unsigned deg = static_cast<unsigned>(poly_degree(g));
    s.z += deg;
    const DimVector pd = primary_dims(t, g);
    if (std::any_of(pd.begin(), pd.end(), [deg](unsigned v) { return v != deg; })) s.valid = false;
  }
  return s;
}

QuiverRep representative(const FieldPtr& field, int eps, const OrbitLabel& label) {
  const FqField& f = *field;
  const unsigned m = label.m;
  QuiverRep t(field, m, eps, label.dims);
  DimVector next(m, 0);
  auto wrap = [m](long v) { return static_cast<unsigned>(((v % static_cast<long>(m)) + m) % m); };

  for (const auto& [cls, mult] : label.nilpotent_part.entries()) {
    for (unsigned copy = 0; copy < mult; ++copy) {
      const long head = eps > 0 ? static_cast<long>(cls.start) : static_cast<long>(cls.start + cls.len - 1);
      unsigned prev_v = 0;
      unsigned prev_idx = 0;
      for (unsigned k = 0; k < cls.len; ++k) {
        const unsigned v = wrap(head + eps * static_cast<long>(k));
        if (next[v] >= label.dims[v]) throw UsageError("representative: label exceeds dims");
        const unsigned idx = next[v]++;
        if (k > 0) t.block(prev_v)(idx, prev_idx) = 1;
        prev_v = v;
        prev_idx = idx;
      }
    }
  }
  for (const auto& e : label.eigen_parts) {
    for (unsigned part : e.rho.parts()) {
      const FqMatrix c = companion(f, poly_pow(f, e.g, part));
      const unsigned d = static_cast<unsigned>(c.rows());
      DimVector base(m);
      for (unsigned v = 0; v < m; ++v) {
        if (next[v] + d > label.dims[v]) throw UsageError("representative: label exceeds dims");
        base[v] = next[v];
        next[v] += d;
      }
      for (unsigned v = 0; v < m; ++v) {
        const unsigned w = t.target(v);
        for (unsigned r = 0; r < d; ++r) {
          for (unsigned s = 0; s < d; ++s) {
            const Elem val = v == 0 ? c(r, s) : (r == s ? 1u : 0u);
            t.block(v)(base[w] + r, base[v] + s) = val;
          }
        }
      }
    }
  }
  if (next != label.dims) throw UsageError("representative: label does not fill dims");
  return t;
}

std::vector<PointOrbit> enumerate_orbits(const SpaceDescriptor& space, const std::vector<FqMatrix>& generators,
                                         const std::function<bool(std::uint64_t)>& in_locus, std::uint64_t budget) {
  const std::uint64_t size = space.size();
  check_budget("orbit enumeration on " + space.name(), size, budget);
  const FqField& f = *space.field();
  const std::size_t n = space.dim();

  // Sparse columns: y = sum_j x_j * A[:, j].
  struct Entry {
    std::uint32_t row;
    Elem val;
  };
  std::vector<std::vector<std::vector<Entry>>> cols(generators.size(), std::vector<std::vector<Entry>>(n));
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].rows() != n || generators[g].cols() != n) throw UsageError("orbit generator has wrong shape");
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0; r < n; ++r) {
        if (generators[g](r, j) != 0) cols[g][j].push_back({static_cast<std::uint32_t>(r), generators[g](r, j)});
      }
    }
  }

  std::vector<std::uint64_t> visited((size + 63) / 64, 0);
  auto test_and_set = [&visited](std::uint64_t i) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    const bool was = visited[i >> 6] & bit;
    visited[i >> 6] |= bit;
    return was;
  };

  std::vector<PointOrbit> orbits;
  std::vector<Elem> x(n);
  std::vector<Elem> y(n);
  std::deque<std::uint64_t> queue;
  for (std::uint64_t seed = 0; seed < size; ++seed) {
    if (visited[seed >> 6] & (std::uint64_t{1} << (seed & 63))) continue;
    if (!in_locus(seed)) continue;
    test_and_set(seed);
    PointOrbit orb;
    queue.push_back(seed);
    while (!queue.empty()) {
      const std::uint64_t cur = queue.front();
      queue.pop_front();
      orb.points.push_back(cur);
      space.decode(cur, x);
      for (std::size_t g = 0; g < generators.size(); ++g) {
        std::fill(y.begin(), y.end(), 0);
        for (std::size_t j = 0; j < n; ++j) {
          if (x[j] == 0) continue;
          for (const Entry& e : cols[g][j]) y[e.row] = f.add(y[e.row], f.mul(e.val, x[j]));
        }
        const std::uint64_t nb = space.encode(y);
        if (!test_and_set(nb)) queue.push_back(nb);
      }
    }
    std::sort(orb.points.begin(), orb.points.end());
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

std::vector<std::vector<FqMatrix>> gl_generators(const FieldPtr& field, const DimVector& dims) {
  const FqField& f = *field;
  std::vector<std::vector<FqMatrix>> out(dims.size());
  for (std::size_t v = 0; v < dims.size(); ++v) {
    const unsigned d = dims[v];
    if (d == 0) continue;
    for (unsigned r = 0; r < d; ++r) {
      for (unsigned s = 0; s < d; ++s) {
        if (r == s) continue;
        for (Elem c = 1; c < f.q(); ++c) {
          FqMatrix g = FqMatrix::identity(d);
          g(r, s) = c;
          out[v].push_back(std::move(g));
        }
      }
    }
    FqMatrix g = FqMatrix::identity(d);
    g(0, 0) = f.primitive_root();
    out[v].push_back(std::move(g));
  }
  return out;
}

std::vector<FqMatrix> quiver_group_generators(const SpaceDescriptor& space) {
  if (!space.quiver_shape()) throw UsageError("quiver_group_generators needs a quiver space");
  const QuiverShape& sh = *space.quiver_shape();
  const std::size_t n = space.dim();
  const auto per_vertex = gl_generators(space.field(), sh.dims);
  std::vector<FqMatrix> out;
  for (unsigned v = 0; v < sh.m; ++v) {
    for (const auto& gv : per_vertex[v]) {
      std::vector<FqMatrix> g;
      for (unsigned w = 0; w < sh.m; ++w) g.push_back(w == v ? gv : FqMatrix::identity(sh.dims[w]));
      FqMatrix a(n, n);
      std::vector<Elem> e(n, 0);
      for (std::size_t j = 0; j < n; ++j) {
        e[j] = 1;
        const auto img = QuiverRep::from_coords(space, e).act(g).coords();
        for (std::size_t r = 0; r < n; ++r) a(r, j) = img[r];
        e[j] = 0;
      }
      out.push_back(std::move(a));
    }
  }
  return out;
}

std::vector<bool> nilpotent_mask(const SpaceDescriptor& space, std::uint64_t budget) {
  const std::uint64_t size = space.size();
  check_budget("nilpotent scan on " + space.name(), size, budget);
  std::vector<bool> mask(size);
  for (std::uint64_t i = 0; i < size; ++i) mask[i] = is_nilpotent(QuiverRep::from_index(space, i));
  return mask;
}

std::vector<RationalOrbit> enumerate_rational_orbits(const FieldPtr& field, unsigned m, const DimVector& dims,
                                                     int eps, bool nilpotent_only, std::uint64_t budget) {
  const SpaceDescriptor space = SpaceDescriptor::quiver(field, m, eps, dims);
  check_budget("rational orbits on " + space.name(), space.size(), budget);
  std::vector<bool> mask;
  if (nilpotent_only) mask = nilpotent_mask(space, budget);
  auto locus = [&](std::uint64_t i) { return !nilpotent_only || mask[i]; };
  auto orbits = enumerate_orbits(space, quiver_group_generators(space), locus, budget);
  std::vector<RationalOrbit> out;
  out.reserve(orbits.size());
  for (auto& o : orbits) {
    OrbitLabel label = decompose(QuiverRep::from_index(space, o.representative()));
    out.push_back({std::move(o), std::move(label)});
  }
  return out;
}

bool in_eigen_locus(const QuiverRep& t, Elem lambda) {
  const FqField& f = *t.field();
  for (unsigned a = 0; a < t.m(); ++a) {
    const unsigned n = t.dims()[a];
    if (n == 0) continue;
    auto c = t.composite(a, t.m());
    for (unsigned r = 0; r < n; ++r) c(r, r) = f.sub(c(r, r), lambda);
    if (!is_nilpotent(f, c)) return false;
  }
  return true;
}

std::vector<EigenPointCount> eigen_point_counts(const FieldPtr& field, unsigned m, unsigned s, std::uint64_t budget) {
  const FqField& f = *field;
  if (m == 0 || s == 0) throw UsageError("eigen_point_counts needs m, s >= 1");
  std::uint64_t cells = 1;
  for (unsigned i = 0; i < s * s; ++i) cells *= f.q();
  check_budget("block product table", cells * cells, budget);

  std::vector<FqMatrix> mats;
  mats.reserve(cells);
  for (std::uint64_t i = 0; i < cells; ++i) {
    FqMatrix a(s, s);
    std::uint64_t x = i;
    for (std::size_t k = 0; k < s * s; ++k, x /= f.q()) a(k / s, k % s) = static_cast<Elem>(x % f.q());
    mats.push_back(std::move(a));
  }
  auto index_of = [&](const FqMatrix& a) {
    std::uint64_t x = 0;
    for (std::size_t k = s * s; k-- > 0;) x = x * f.q() + a(k / s, k % s);
    return x;
  };
  std::vector<std::uint32_t> prod(cells * cells);
  for (std::uint64_t a = 0; a < cells; ++a)
    for (std::uint64_t b = 0; b < cells; ++b) prod[a * cells + b] = static_cast<std::uint32_t>(index_of(mat_mul(f, mats[a], mats[b])));

  // hist[P] = number of (T_0, ..., T_{k-1}) with T_{k-1} ... T_0 = P.
  std::vector<std::uint64_t> hist(cells, 1);
  for (unsigned k = 1; k < m; ++k) {
    std::vector<std::uint64_t> next(cells, 0);
    for (std::uint64_t t = 0; t < cells; ++t)
      for (std::uint64_t p = 0; p < cells; ++p) next[prod[t * cells + p]] += hist[p];
    hist = std::move(next);
  }

  std::uint64_t nil = 0;
  for (const auto& a : mats) nil += is_nilpotent(f, a);
  std::vector<EigenPointCount> out;
  for (Elem lam = 1; lam < f.q(); ++lam) {
    EigenPointCount c;
    c.lambda = lam;
    c.nilpotent = nil;
    for (std::uint64_t p = 0; p < cells; ++p) {
      FqMatrix shifted = mats[p];
      for (unsigned r = 0; r < s; ++r) shifted(r, r) = f.sub(shifted(r, r), lam);
      if (is_nilpotent(f, shifted)) c.eigen_locus += hist[p];
    }
    c.d_count = hist[index_of(mat_scale(f, lam, FqMatrix::identity(s)))];
    out.push_back(c);
  }
  return out;
}

}  // namespace antiorb
