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


#include "antiorb/fourier.hpp"

#include <vector>

#include "antiorb/errors.hpp"

namespace antiorb {

namespace {

// Adds psi(t) * f(i) into a p-plane accumulator.
void accumulate_rotated(const FuncTable& f, std::uint64_t i, unsigned t, std::vector<__int128>& acc) {
  const unsigned p = f.p();
  for (unsigned c = 0; c + 1 < p; ++c) acc[(c + t) % p] += f.coeff(c, i);
}

}  // namespace

SpaceDescriptor pairing_dual(const SpaceDescriptor& space) { return space.dual(); }

FuncTable fourier(const FuncTable& f, kernels::Variant variant) {
  const SpaceDescriptor& space = f.space();
  const FqField& field = *space.field();
  const unsigned p = field.p();
  const unsigned q = field.q();
  const std::size_t n = space.dim();
  const std::uint64_t size = f.size();

  // Each pass grows magnitudes by at most q; the final reduction doubles.
  const __int128 bound = static_cast<__int128>(f.max_abs()) * size * 2;
  if (bound >= (static_cast<__int128>(1) << 62)) {
    throw ArithmeticError("fourier: coefficient bound exceeds int64 range for " + space.name());
  }

  FuncTable out(space.dual(), size);
  out.set_sqrt_q_exponent(f.sqrt_q_exponent() + static_cast<int>(n));

  std::vector<std::int64_t> a(std::size_t{p} * size, 0);
  std::vector<std::int64_t> b(std::size_t{p} * size, 0);
  std::copy(f.raw().begin(), f.raw().end(), a.begin());

  std::vector<std::uint8_t> shift(std::size_t{q} * q);
  std::uint64_t inner = 1;
  for (std::size_t j = 0; j < n; ++j) {
    const Elem cj = space.pairing_coef()[j];
    for (unsigned x = 0; x < q; ++x) {
      for (unsigned y = 0; y < q; ++y) {
        shift[x * q + y] = static_cast<std::uint8_t>(field.trace(field.mul(cj, field.mul(x, y))));
      }
    }
    kernels::AxisPassArgs args;
    args.in = a.data();
    args.out = b.data();
    args.plane_stride = size;
    args.p = p;
    args.q = q;
    args.inner = inner;
    args.outer = size / (inner * q);
    args.shift = shift.data();
    kernels::axis_pass(args, variant);
    a.swap(b);
    inner *= q;
  }

  // Digit j of the result is the value of dual coordinate perm[j].
  std::vector<std::uint64_t> weight(n);
  {
    std::vector<std::uint64_t> pw(n, 1);
    for (std::size_t j = 1; j < n; ++j) pw[j] = pw[j - 1] * q;
    for (std::size_t j = 0; j < n; ++j) weight[j] = pw[space.pairing_perm()[j]];
  }
  std::vector<unsigned> digit(n, 0);
  std::uint64_t dst = 0;
  const std::int64_t* top = a.data() + std::size_t{p - 1} * size;
  for (std::uint64_t w = 0; w < size; ++w) {
    for (unsigned c = 0; c + 1 < p; ++c) out.coeff(c, dst) = a[c * size + w] - top[w];
    for (std::size_t j = 0; j < n; ++j) {
      if (++digit[j] < q) {
        dst += weight[j];
        break;
      }
      digit[j] = 0;
      dst -= weight[j] * (q - 1);
    }
  }
  return out;
}

FuncTable fourier_naive(const FuncTable& f) {
  const SpaceDescriptor& space = f.space();
  const SpaceDescriptor dual = space.dual();
  const FqField& field = *space.field();
  const unsigned p = field.p();
  FuncTable out(dual, f.size());
  out.set_sqrt_q_exponent(f.sqrt_q_exponent() + static_cast<int>(space.dim()));

  std::vector<std::uint64_t> support;
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    if (!f.is_zero_at(i)) support.push_back(i);
  }
  std::vector<std::vector<Elem>> xs;
  xs.reserve(support.size());
  for (auto i : support) xs.push_back(space.decode(i));

  std::vector<Elem> y(space.dim());
  std::vector<__int128> acc(p);
  for (std::uint64_t yi = 0; yi < out.size(); ++yi) {
    dual.decode(yi, y);
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t s = 0; s < support.size(); ++s) {
      accumulate_rotated(f, support[s], field.trace(space.pairing(xs[s], y)), acc);
    }
    for (unsigned c = 0; c + 1 < p; ++c) {
      const __int128 v = acc[c] - acc[p - 1];
      if (v > INT64_MAX || v < INT64_MIN) throw ArithmeticError("fourier_naive: coefficient overflow");
      out.coeff(c, yi) = static_cast<std::int64_t>(v);
    }
  }
  return out;
}

CycNum fourier_at(const FuncTable& f, std::uint64_t dual_index) {
  const SpaceDescriptor& space = f.space();
  const FqField& field = *space.field();
  const unsigned p = field.p();
  const std::vector<Elem> y = space.dual().decode(dual_index);
  std::vector<Elem> x(space.dim());
  std::vector<__int128> acc(p, 0);
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    if (f.is_zero_at(i)) continue;
    space.decode(i, x);
    accumulate_rotated(f, i, field.trace(space.pairing(x, y)), acc);
  }
  std::vector<mpq_class> c(p);
  for (unsigned k = 0; k < p; ++k) {
    mpz_class v(static_cast<long>(acc[k] >> 32));
    v <<= 32;
    v += static_cast<unsigned long>(static_cast<std::uint64_t>(acc[k]) & 0xffffffffu);
    c[k] = v;
  }
  return CycNum::from_coeffs(p, std::move(c));
}

CycNum kloosterman(unsigned m, const FieldPtr& field, Elem lambda) {
  if (m == 0) throw UsageError("kloosterman: m must be >= 1");
  if (lambda == 0 || lambda >= field->q()) throw UsageError("kloosterman: lambda must be a nonzero field element");
  const FqField& f = *field;
  const unsigned q = f.q();
  const unsigned p = f.p();
  std::vector<std::int64_t> count(p, 0);
  // Free variables x_1..x_{m-1}; x_m is forced.
  std::vector<Elem> x(m - 1, 1);
  for (;;) {
    Elem prod = 1;
    Elem sum = 0;
    for (Elem v : x) {
      prod = f.mul(prod, v);
      sum = f.add(sum, v);
    }
    sum = f.add(sum, f.div(lambda, prod));
    ++count[f.trace(sum)];
    std::size_t j = 0;
    while (j < x.size() && ++x[j] == q) x[j++] = 1;
    if (j == x.size()) break;
  }
  std::vector<mpq_class> c(p);
  for (unsigned k = 0; k < p; ++k) c[k] = static_cast<long>(count[k]);
  return CycNum::from_coeffs(p, std::move(c));
}

}  // namespace antiorb
