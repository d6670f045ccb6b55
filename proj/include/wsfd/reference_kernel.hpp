/*
 * Copyright 2026 The wsfd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "wsfd/coefficients.hpp"
#include "wsfd/grid.hpp"

namespace wsfd {

// Sequential solver for the acoustic isotropic kernel:
//   u_next = 2*u + dt^2 * V^2 * lap(u) - u_prev, then the source cell gets
//   dt^2 * V(src)^2 * f_n added.
// All field arithmetic is 32-bit to stay comparable with the distributed
// engine; out-of-grid neighbors read as zero.

/// One 25-point operator application at (i,j,k). 32-bit accumulation:
/// center term once, then x, y, z distance pairs in order m = 1..4.
float laplacian(const Field3D<float>& u, const StencilCoefficients& coeffs,
                int i, int j, int k);

/// Advance one time step, n is 1-based. Throws instability_error when the
/// updated field contains non-finite values.
void step(Wavefield& wf, const SimConfig& cfg, const StencilCoefficients& coeffs, int n);

/// Run from u^0 = u^-1 = 0 for cfg.steps steps. Deterministic: identical
/// inputs give bit-identical outputs.
Wavefield run(const SimConfig& cfg, const StencilCoefficients& coeffs);

/// Same, with the order-8 weights for cfg.grid.
Wavefield run(const SimConfig& cfg);

}  // namespace wsfd
