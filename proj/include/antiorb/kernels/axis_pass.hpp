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


#pragma once

// One axis pass of the q-ary character-sum transform on planar Z[zeta_p]
// data. The input holds p coefficient planes (plane c is the coefficient of
// zeta^c, with no canonical reduction), each laid out as outer x q x inner.
// For every outer slab, output value y and plane c:
//
//   out[c][o][y][k] = sum_x in[(c - shift[x*q + y]) mod p][o][x][k]
//
// i.e. multiplication by zeta^shift is a rotation of the planes.

#include <cstdint>
#include <optional>
#include <string_view>

namespace antiorb::kernels {

enum class Variant { automatic, scalar, avx2, neon };

struct AxisPassArgs {
  const std::int64_t* in = nullptr;
  std::int64_t* out = nullptr;
  std::uint64_t plane_stride = 0;
  unsigned p = 0;
  unsigned q = 0;
  std::uint64_t inner = 1;
  std::uint64_t outer = 1;
  const std::uint8_t* shift = nullptr;  // q*q table of exponents mod p
};

void axis_pass_scalar(const AxisPassArgs& a);
void axis_pass_avx2(const AxisPassArgs& a);
void axis_pass_neon(const AxisPassArgs& a);

bool variant_available(Variant v);
// Maps automatic to the best variant the running CPU supports.
Variant resolve(Variant v);
const char* variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view s);

void axis_pass(const AxisPassArgs& a, Variant v = Variant::automatic);

}  // namespace antiorb::kernels
