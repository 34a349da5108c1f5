// Copyright 2026 The qreflect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QREFLECT_KERNELS_H
#define QREFLECT_KERNELS_H

#include <complex>
#include <span>
#include <string_view>
#include <vector>

namespace qreflect::kernels {

using cplx = std::complex<double>;

/// Inner loops over interleaved complex<double> arrays.
///
/// Every backend computes the same mathematical quantity; only the summation
/// order differs, so reductions agree to rounding (not bitwise) across
/// backends. A given backend is deterministic for a given input.
struct KernelTable {
    std::string_view name;

    /// sum_x conj(a[x]) * b[x]. Spans must have equal length.
    cplx (*cdot)(std::span<const cplx> a, std::span<const cplx> b);

    /// sum_x |a[x]|^2
    double (*norm_sq)(std::span<const cplx> a);

    /// sum_x a[x]
    cplx (*sum)(std::span<const cplx> a);

    /// sum_x |a[x] - center|^2
    double (*dev_sq)(std::span<const cplx> a, cplx center);

    /// out[x] = coeff * axis[x] - target[x]. `out` may alias `target`.
    void (*scaled_sub)(cplx coeff, std::span<const cplx> axis, std::span<const cplx> target, std::span<cplx> out);

    /// out[x] = wa * a[x] + wb * b[x] with real weights. `out` may alias either input.
    void (*real_combine)(double wa, std::span<const cplx> a, double wb, std::span<const cplx> b, std::span<cplx> out);

    /// a[x] *= s
    void (*scale)(std::span<cplx> a, double s);
};

const KernelTable &scalar_kernels();

/// Returns nullptr when the backend was not compiled in or the CPU lacks it.
const KernelTable *avx2_kernels();
const KernelTable *neon_kernels();

/// The table used by the library. Chosen on first use: the widest supported
/// backend, unless the QREFLECT_SIMD environment variable names one of
/// "scalar", "avx2", "neon".
const KernelTable &active();

/// Overrides the active backend by name. Returns false (and leaves the active
/// table unchanged) when the backend is unavailable on this machine.
bool select_backend(std::string_view name);

/// Names of the backends usable on this machine, scalar first.
std::vector<std::string_view> available_backends();

}  // namespace qreflect::kernels

#endif
