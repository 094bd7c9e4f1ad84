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

#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace antiorb::kernels {

#if defined(__aarch64__)

namespace {

void sum_rows(std::int64_t* dst, const std::int64_t* const* src, unsigned q, std::uint64_t n) {
  std::uint64_t k = 0;
  for (; k + 4 <= n; k += 4) {
    int64x2_t acc0 = vdupq_n_s64(0);
    int64x2_t acc1 = vdupq_n_s64(0);
    for (unsigned x = 0; x < q; ++x) {
      acc0 = vaddq_s64(acc0, vld1q_s64(src[x] + k));
      acc1 = vaddq_s64(acc1, vld1q_s64(src[x] + k + 2));
    }
    vst1q_s64(dst + k, acc0);
    vst1q_s64(dst + k + 2, acc1);
  }
  for (; k < n; ++k) {
    std::int64_t acc = 0;
    for (unsigned x = 0; x < q; ++x) acc += src[x][k];
    dst[k] = acc;
  }
}

}  // namespace

void axis_pass_neon(const AxisPassArgs& a) {
  if (a.inner == 1) {
    axis_pass_scalar(a);
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

void axis_pass_neon(const AxisPassArgs&) { throw UsageError("NEON kernel not built for this architecture"); }

#endif

}  // namespace antiorb::kernels
