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


#include <vector>

#include "antiorb/errors.hpp"
#include "antiorb/kernels/axis_pass.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define ANTIORB_HAVE_AVX2_PATH 1
#endif

namespace antiorb::kernels {

#ifdef ANTIORB_HAVE_AVX2_PATH

namespace {

// Sums q source rows of length n into dst, four int64 lanes at a time.
// Two accumulators hide the add latency on the long axis.
__attribute__((target("avx2"))) void sum_rows(std::int64_t* dst, const std::int64_t* const* src, unsigned q,
                                              std::uint64_t n) {
  std::uint64_t k = 0;
  for (; k + 8 <= n; k += 8) {
    __m256i acc0 = _mm256_setzero_si256();
    __m256i acc1 = _mm256_setzero_si256();
    for (unsigned x = 0; x < q; ++x) {
      acc0 = _mm256_add_epi64(acc0, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src[x] + k)));
      acc1 = _mm256_add_epi64(acc1, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src[x] + k + 4)));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), acc0);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k + 4), acc1);
  }
  for (; k + 4 <= n; k += 4) {
    __m256i acc = _mm256_setzero_si256();
    for (unsigned x = 0; x < q; ++x) {
      acc = _mm256_add_epi64(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src[x] + k)));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), acc);
  }
  for (; k < n; ++k) {
    std::int64_t acc = 0;
    for (unsigned x = 0; x < q; ++x) acc += src[x][k];
    dst[k] = acc;
  }
}

// inner == 1: the q inputs of a line are contiguous, so vectorize across
// outer slabs instead, gathering with a stride of q.
__attribute__((target("avx2"))) void first_axis(const AxisPassArgs& a) {
  const unsigned q = a.q;
  const __m256i vindex = _mm256_set_epi64x(3LL * q, 2LL * q, 1LL * q, 0);
  std::vector<unsigned> plane(static_cast<std::size_t>(a.p) * q * q);
  for (unsigned y = 0; y < q; ++y) {
    for (unsigned c = 0; c < a.p; ++c) {
      for (unsigned x = 0; x < q; ++x) plane[(y * a.p + c) * q + x] = (c + a.p - a.shift[x * q + y]) % a.p;
    }
  }
  std::uint64_t o = 0;
  alignas(32) std::int64_t tmp[4];
  for (; o + 4 <= a.outer; o += 4) {
    const std::uint64_t base = o * q;
    for (unsigned y = 0; y < q; ++y) {
      for (unsigned c = 0; c < a.p; ++c) {
        __m256i acc = _mm256_setzero_si256();
        const unsigned* pl = &plane[(y * a.p + c) * q];
        for (unsigned x = 0; x < q; ++x) {
          const std::int64_t* s = a.in + pl[x] * a.plane_stride + base + x;
          acc = _mm256_add_epi64(acc, _mm256_i64gather_epi64(reinterpret_cast<const long long*>(s), vindex, 8));
        }
        _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), acc);
        std::int64_t* d = a.out + c * a.plane_stride + base + y;
        d[0] = tmp[0];
        d[q] = tmp[1];
        d[2 * q] = tmp[2];
        d[3 * q] = tmp[3];
      }
    }
  }
  for (; o < a.outer; ++o) {
    const std::uint64_t base = o * q;
    for (unsigned y = 0; y < q; ++y) {
      for (unsigned c = 0; c < a.p; ++c) {
        const unsigned* pl = &plane[(y * a.p + c) * q];
        std::int64_t acc = 0;
        for (unsigned x = 0; x < q; ++x) acc += a.in[pl[x] * a.plane_stride + base + x];
        a.out[c * a.plane_stride + base + y] = acc;
      }
    }
  }
}

}  // namespace

void axis_pass_avx2(const AxisPassArgs& a) {
  if (!variant_available(Variant::avx2)) throw UsageError("AVX2 kernel requested on a CPU without AVX2");
  if (a.inner == 1) {
    first_axis(a);
    return;
  }
  const std::uint64_t line = a.inner * a.q;
  std::vector<const std::int64_t*> src(a.q);
  for (std::uint64_t o = 0; o < a.outer; ++o) {
    const std::uint64_t base = o * line;
    for (unsigned y = 0; y < a.q; ++y) {
      for (unsigned c = 0; c < a.p; ++c) {
        for (unsigned x = 0; x < a.q; ++x) {
          const unsigned plane = (c + a.p - a.shift[x * a.q + y]) % a.p;
          src[x] = a.in + plane * a.plane_stride + base + x * a.inner;
        }
        sum_rows(a.out + c * a.plane_stride + base + y * a.inner, src.data(), a.q, a.inner);
      }
    }
  }
}

#else

void axis_pass_avx2(const AxisPassArgs&) { throw UsageError("AVX2 kernel not built for this architecture"); }

#endif

}  // namespace antiorb::kernels
