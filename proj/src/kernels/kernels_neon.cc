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

// AArch64 only. A float64x2_t holds one complex value: [re, im].

#include <arm_neon.h>

#include "qreflect/kernels.h"

namespace qreflect::kernels {
namespace {

inline float64x2_t load1(const cplx *p) {
    return vld1q_f64(reinterpret_cast<const double *>(p));
}

inline void store1(cplx *p, float64x2_t v) {
    vst1q_f64(reinterpret_cast<double *>(p), v);
}

inline float64x2_t swap_halves(float64x2_t v) {
    return vextq_f64(v, v, 1);
}

cplx cdot_neon(std::span<const cplx> a, std::span<const cplx> b) {
    float64x2_t re0 = vdupq_n_f64(0), re1 = vdupq_n_f64(0);
    float64x2_t im0 = vdupq_n_f64(0), im1 = vdupq_n_f64(0);
    size_t k = 0;
    const size_t n = a.size();
    for (; k + 2 <= n; k += 2) {
        float64x2_t a0 = load1(&a[k]), b0 = load1(&b[k]);
        float64x2_t a1 = load1(&a[k + 1]), b1 = load1(&b[k + 1]);
        re0 = vfmaq_f64(re0, a0, b0);
        re1 = vfmaq_f64(re1, a1, b1);
        im0 = vfmaq_f64(im0, a0, swap_halves(b0));
        im1 = vfmaq_f64(im1, a1, swap_halves(b1));
    }
    float64x2_t re = vaddq_f64(re0, re1);
    float64x2_t im = vaddq_f64(im0, im1);
    double r = vgetq_lane_f64(re, 0) + vgetq_lane_f64(re, 1);
    double i = vgetq_lane_f64(im, 0) - vgetq_lane_f64(im, 1);
    for (; k < n; k++) {
        r += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
        i += a[k].real() * b[k].imag() - a[k].imag() * b[k].real();
    }
    return {r, i};
}

double norm_sq_neon(std::span<const cplx> a) {
    float64x2_t acc0 = vdupq_n_f64(0), acc1 = vdupq_n_f64(0);
    size_t k = 0;
    const size_t n = a.size();
    for (; k + 2 <= n; k += 2) {
        float64x2_t v0 = load1(&a[k]), v1 = load1(&a[k + 1]);
        acc0 = vfmaq_f64(acc0, v0, v0);
        acc1 = vfmaq_f64(acc1, v1, v1);
    }
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; k < n; k++) {
        acc += a[k].real() * a[k].real() + a[k].imag() * a[k].imag();
    }
    return acc;
}

cplx sum_neon(std::span<const cplx> a) {
    float64x2_t acc0 = vdupq_n_f64(0), acc1 = vdupq_n_f64(0);
    size_t k = 0;
    const size_t n = a.size();
    for (; k + 2 <= n; k += 2) {
        acc0 = vaddq_f64(acc0, load1(&a[k]));
        acc1 = vaddq_f64(acc1, load1(&a[k + 1]));
    }
    float64x2_t acc = vaddq_f64(acc0, acc1);
    double re = vgetq_lane_f64(acc, 0), im = vgetq_lane_f64(acc, 1);
    for (; k < n; k++) {
        re += a[k].real();
        im += a[k].imag();
    }
    return {re, im};
}

double dev_sq_neon(std::span<const cplx> a, cplx center) {
    const float64x2_t c = load1(&center);
    float64x2_t acc = vdupq_n_f64(0);
    for (size_t k = 0; k < a.size(); k++) {
        float64x2_t d = vsubq_f64(load1(&a[k]), c);
        acc = vfmaq_f64(acc, d, d);
    }
    return vaddvq_f64(acc);
}

void scaled_sub_neon(cplx coeff, std::span<const cplx> axis, std::span<const cplx> target, std::span<cplx> out) {
    // coeff * x = [cr*xr - ci*xi, cr*xi + ci*xr]
    const float64x2_t cr = vdupq_n_f64(coeff.real());
    const float64x2_t ci_signed = {-coeff.imag(), coeff.imag()};
    for (size_t k = 0; k < out.size(); k++) {
        float64x2_t x = load1(&axis[k]);
        float64x2_t prod = vfmaq_f64(vmulq_f64(cr, x), ci_signed, swap_halves(x));
        store1(&out[k], vsubq_f64(prod, load1(&target[k])));
    }
}

void real_combine_neon(double wa, std::span<const cplx> a, double wb, std::span<const cplx> b, std::span<cplx> out) {
    const float64x2_t va = vdupq_n_f64(wa);
    const float64x2_t vb = vdupq_n_f64(wb);
    for (size_t k = 0; k < out.size(); k++) {
        store1(&out[k], vfmaq_f64(vmulq_f64(vb, load1(&b[k])), va, load1(&a[k])));
    }
}

void scale_neon(std::span<cplx> a, double s) {
    const float64x2_t vs = vdupq_n_f64(s);
    for (size_t k = 0; k < a.size(); k++) {
        store1(&a[k], vmulq_f64(load1(&a[k]), vs));
    }
}

}  // namespace

const KernelTable &neon_kernel_table() {
    static const KernelTable table{
        "neon",
        cdot_neon,
        norm_sq_neon,
        sum_neon,
        dev_sq_neon,
        scaled_sub_neon,
        real_combine_neon,
        scale_neon,
    };
    return table;
}

}  // namespace qreflect::kernels
