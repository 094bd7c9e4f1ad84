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

// Unnormalized finite Fourier transform f^(y) = sum_x psi(kappa(x, y)) f(x)
// and generalized Kloosterman sums.

#include <cstdint>

#include "antiorb/kernels/axis_pass.hpp"
#include "antiorb/space.hpp"

namespace antiorb {

/// Axis-pass transform onto the dual space. Throws ArithmeticError if the
/// coefficient bound could overflow int64.
FuncTable fourier(const FuncTable& f, kernels::Variant variant = kernels::Variant::automatic);

/// Reference double sum, iterating only over the support of f.
FuncTable fourier_naive(const FuncTable& f);

/// Single value f^(y) at a dual point, by the double sum.
CycNum fourier_at(const FuncTable& f, std::uint64_t dual_index);

SpaceDescriptor pairing_dual(const SpaceDescriptor& space);

/// K^m(lambda) = sum over x_1...x_m = lambda in (F_q^*)^m of psi(x_1 + ... + x_m).
CycNum kloosterman(unsigned m, const FieldPtr& field, Elem lambda);

}  // namespace antiorb
