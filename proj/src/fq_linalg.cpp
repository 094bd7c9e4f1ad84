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

#include "antiorb/fq_linalg.hpp"

#include <algorithm>
#include <random>

#include "antiorb/errors.hpp"

namespace antiorb {

FqMatrix::FqMatrix(std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw UsageError("matrix data does not match its shape");
}

FqMatrix FqMatrix::identity(std::size_t n) {
  FqMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool FqMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

FqMatrix mat_mul(const FqField& f, const FqMatrix& a, const FqMatrix& b) {
  if (a.cols() != b.rows()) throw UsageError("matrix product shape mismatch");
  FqMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
    }
  }
  return c;
}

FqMatrix mat_add(const FqField& f, const FqMatrix& a, const FqMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw UsageError("matrix sum shape mismatch");
  FqMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
  }
  return c;
}

FqMatrix mat_scale(const FqField& f, Elem s, const FqMatrix& a) {
  FqMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.mul(s, a(i, j));
  }
  return c;
}

FqMatrix transpose(const FqMatrix& a) {
  FqMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

std::vector<std::size_t> rref(const FqField& f, FqMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    }
    const Elem inv = f.inv(a(row, col));
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) = f.mul(inv, a(row, j));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Elem factor = a(r, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = f.sub(a(r, j), f.mul(factor, a(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const FqField& f, FqMatrix a) { return rref(f, a).size(); }

FqMatrix kernel(const FqField& f, const FqMatrix& a) {
  FqMatrix r = a;
  const auto pivots = rref(f, r);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  FqMatrix basis(a.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t fc = free_cols[k];
    basis(fc, k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = f.neg(r(i, fc));
  }
  return basis;
}

FqMatrix inverse(const FqField& f, const FqMatrix& a) {
  if (a.rows() != a.cols()) throw UsageError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  FqMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(f, aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw ArithmeticError("singular matrix");
  FqMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

bool is_nilpotent(const FqField& f, const FqMatrix& a) {
  if (a.rows() == 0) return true;
  FqMatrix power = a;
  for (std::size_t k = 1; k < a.rows(); ++k) power = mat_mul(f, power, a);
  return power.is_zero();
}

void poly_trim(FqPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int poly_degree(const FqPoly& a) { return static_cast<int>(a.size()) - 1; }

FqPoly poly_mul(const FqField& f, const FqPoly& a, const FqPoly& b) {
  if (a.empty() || b.empty()) return {};
  FqPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  }
  poly_trim(c);
  return c;
}

FqPoly poly_sub(const FqField& f, const FqPoly& a, const FqPoly& b) {
  FqPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Elem x = i < a.size() ? a[i] : 0;
    const Elem y = i < b.size() ? b[i] : 0;
    c[i] = f.sub(x, y);
  }
  poly_trim(c);
  return c;
}

std::pair<FqPoly, FqPoly> poly_divmod(const FqField& f, FqPoly a, const FqPoly& b) {
  if (b.empty()) throw ArithmeticError("polynomial division by zero");
  poly_trim(a);
  const Elem lead_inv = f.inv(b.back());
  const std::size_t db = b.size() - 1;
  FqPoly quot(a.size() >= b.size() ? a.size() - db : 0, 0);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - 1 - db;
    const Elem factor = f.mul(a.back(), lead_inv);
    quot[shift] = factor;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(factor, b[i]));
    poly_trim(a);
  }
  poly_trim(quot);
  return {quot, a};
}

FqPoly poly_make_monic(const FqField& f, FqPoly a) {
  poly_trim(a);
  if (a.empty()) return a;
  const Elem inv = f.inv(a.back());
  for (auto& c : a) c = f.mul(inv, c);
  return a;
}

FqPoly poly_gcd(const FqField& f, FqPoly a, FqPoly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    FqPoly r = poly_divmod(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_make_monic(f, a);
}

FqPoly poly_powmod(const FqField& f, FqPoly base, std::uint64_t e, const FqPoly& mod) {
  FqPoly result{1};
  base = poly_divmod(f, base, mod).second;
  while (e > 0) {
    if (e & 1U) result = poly_divmod(f, poly_mul(f, result, base), mod).second;
    base = poly_divmod(f, poly_mul(f, base, base), mod).second;
    e >>= 1U;
  }
  return poly_divmod(f, result, mod).second;
}

FqPoly charpoly(const FqField& f, const FqMatrix& a) {
  if (a.rows() != a.cols()) throw UsageError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  FqMatrix h = a;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    const Elem inv = f.inv(h(j + 1, j));
    for (std::size_t r = j + 2; r < n; ++r) {
      const Elem u = f.mul(h(r, j), inv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h(r, c) = f.sub(h(r, c), f.mul(u, h(j + 1, c)));
      for (std::size_t rr = 0; rr < n; ++rr) h(rr, j + 1) = f.add(h(rr, j + 1), f.mul(u, h(rr, r)));
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1}^{k} h_{j,j-1}) p_{i-1}
  std::vector<FqPoly> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    FqPoly next = poly_mul(f, FqPoly{f.neg(h(k - 1, k - 1)), 1}, p[k - 1]);
    Elem prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = f.mul(prod, h(i + 1, i));
      if (prod == 0) break;
      const Elem coef = f.mul(h(i, k - 1), prod);
      if (coef == 0) continue;
      next = poly_sub(f, next, poly_mul(f, FqPoly{coef}, p[i]));
    }
    poly_trim(next);
    p[k] = next;
  }
  return p[n];
}

FqMatrix poly_eval(const FqField& f, const FqPoly& g, const FqMatrix& a) {
  const std::size_t n = a.rows();
  FqMatrix acc(n, n);
  for (std::size_t i = g.size(); i-- > 0;) {
    acc = mat_mul(f, acc, a);
    for (std::size_t d = 0; d < n; ++d) acc(d, d) = f.add(acc(d, d), g[i]);
  }
  return acc;
}

FqMatrix companion(const FqField& f, const FqPoly& g) {
  const int d = poly_degree(g);
  if (d < 1 || g.back() != 1) throw UsageError("companion matrix needs a monic polynomial of degree >= 1");
  FqMatrix c(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int i = 1; i < d; ++i) c(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1)) = 1;
  for (int i = 0; i < d; ++i) c(static_cast<std::size_t>(i), static_cast<std::size_t>(d - 1)) = f.neg(g[static_cast<std::size_t>(i)]);
  return c;
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, unsigned e) {
  unsigned __int128 acc = 1;
  for (unsigned i = 0; i < e; ++i) {
    acc *= base;
    if (acc > static_cast<unsigned __int128>(UINT64_MAX)) {
      throw UsageError("polynomial factorization degree too large for this field");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

// Splits a squarefree product of distinct monic irreducibles of degree d.
void equal_degree_split(const FqField& f, const FqPoly& g, int d, std::mt19937_64& rng,
                        std::vector<FqPoly>& out) {
  const int n = poly_degree(g);
  if (n == d) {
    out.push_back(g);
    return;
  }
  const std::uint64_t exponent = (checked_pow(f.q(), static_cast<unsigned>(d)) - 1) / 2;
  std::uniform_int_distribution<Elem> coin(0, f.q() - 1);
  for (;;) {
    FqPoly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coin(rng);
    poly_trim(a);
    if (poly_degree(a) < 1) continue;
    FqPoly b = poly_powmod(f, a, exponent, g);
    b = poly_sub(f, b, FqPoly{1});
    FqPoly h = poly_gcd(f, g, b);
    const int dh = poly_degree(h);
    if (dh > 0 && dh < n) {
      equal_degree_split(f, h, d, rng, out);
      equal_degree_split(f, poly_divmod(f, g, h).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<FqPoly> distinct_irreducible_factors(const FqField& f, const FqPoly& input) {
  FqPoly rem = poly_make_monic(f, input);
  if (rem.empty()) throw ArithmeticError("factorization of the zero polynomial");
  std::vector<FqPoly> factors;
  std::mt19937_64 rng(0x5eedf00dULL);
  FqPoly xq = {0, 1};  // x^{q^d} mod rem, built up one Frobenius step at a time
  for (int d = 1; poly_degree(rem) >= d; ++d) {
    xq = poly_powmod(f, xq, f.q(), rem);
    FqPoly g = poly_gcd(f, rem, poly_sub(f, xq, FqPoly{0, 1}));
    if (poly_degree(g) >= 1) {
      // strip every power of these factors from rem
      for (;;) {
        FqPoly common = poly_gcd(f, rem, g);
        if (poly_degree(common) < 1) break;
        rem = poly_divmod(f, rem, common).first;
      }
      equal_degree_split(f, g, d, rng, factors);
      if (poly_degree(rem) >= 1) xq = poly_divmod(f, xq, rem).second;
    }
  }
  std::sort(factors.begin(), factors.end(), [](const FqPoly& a, const FqPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return factors;
}

}  // namespace antiorb
