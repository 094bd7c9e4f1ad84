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


#include "antiorb/errors.hpp"
#include "antiorb/kernels/axis_pass.hpp"

namespace antiorb::kernels {

bool variant_available(Variant v) {
  switch (v) {
    case Variant::automatic:
    case Variant::scalar:
      return true;
    case Variant::avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Variant::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Variant resolve(Variant v) {
  if (v != Variant::automatic) return v;
  if (variant_available(Variant::avx2)) return Variant::avx2;
  if (variant_available(Variant::neon)) return Variant::neon;
  return Variant::scalar;
}

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::automatic: return "auto";
    case Variant::scalar: return "scalar";
    case Variant::avx2: return "avx2";
    case Variant::neon: return "neon";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view s) {
  for (Variant v : {Variant::automatic, Variant::scalar, Variant::avx2, Variant::neon}) {
    if (s == variant_name(v)) return v;
  }
  return std::nullopt;
}

void axis_pass(const AxisPassArgs& a, Variant v) {
  switch (resolve(v)) {
    case Variant::avx2:
      axis_pass_avx2(a);
      return;
    case Variant::neon:
      axis_pass_neon(a);
      return;
    default:
      axis_pass_scalar(a);
      return;
  }
}

}  // namespace antiorb::kernels
