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

#include "antiorb/kernels/axis_pass.hpp"

namespace antiorb::kernels {

void axis_pass_scalar(const AxisPassArgs& a) {
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
        std::int64_t* dst = a.out + c * a.plane_stride + base + y * a.inner;
        for (std::uint64_t k = 0; k < a.inner; ++k) {
          std::int64_t acc = 0;
          for (unsigned x = 0; x < a.q; ++x) acc += src[x][k];
          dst[k] = acc;
        }
      }
    }
  }
}

}  // namespace antiorb::kernels
