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

// Compiled with -mavx2 -mfma. Only reached after a runtime CPU check.

#include <immintrin.h>

#include "qreflect/kernels.h"

namespace qreflect::kernels {
namespace {

// A __m256d holds two interleaved complex values: [re0, im0, re1, im1].
inline __m256d load2(const cplx *p) {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

inline void store2(cplx *p, __m256d v) {
    _mm256_storeu_pd(reinterpret_cast<double *>(p), v);
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// Returns (v[0] + v[2], v[1] + v[3]) as a complex.
inline cplx fold_complex(__m256d v) {
    __m128d s = _mm_add_pd(_mm256_castpd256_pd128(v), _mm256_extractf128_pd(v, 1));
    alignas(16) double out[2];
    _mm_store_pd(out, s);
    return {out[0], out[1]};
}

cplx cdot_avx2(std::span<const cplx> a, std::span<const cplx> b) {
    const size_t n = a.size();
    __m256d re0 = _mm256_setzero_pd(), re1 = _mm256_setzero_pd();
    __m256d im0 = _mm256_setzero_pd(), im1 = _mm256_setzero_pd();
    size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d a0 = load2(&a[k]), b0 = load2(&b[k]);
        __m256d a1 = load2(&a[k + 2]), b1 = load2(&b[k + 2]);
        re0 = _mm256_fmadd_pd(a0, b0, re0);
        re1 = _mm256_fmadd_pd(a1, b1, re1);
        im0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0b0101), im0);
        im1 = _mm256_fmadd_pd(a1, _mm256_permute_pd(b1, 0b0101), im1);
    }
    for (; k + 2 <= n; k += 2) {
        __m256d a0 = load2(&a[k]), b0 = load2(&b[k]);
        re0 = _mm256_fmadd_pd(a0, b0, re0);
        im0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0b0101), im0);
    }
    // im lanes hold [ar*bi, ai*br, ...]; the imaginary part is the alternating sum.
    __m256d im = _mm256_add_pd(im0, im1);
    cplx im_pair = fold_complex(im);
    double re = hsum(_mm256_add_pd(re0, re1));
    double imag = im_pair.real() - im_pair.imag();
    for (; k < n; k++) {
        re += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
        imag += a[k].real() * b[k].imag() - a[k].imag() * b[k].real();
    }
    return {re, imag};
}

double norm_sq_avx2(std::span<const cplx> a) {
    const size_t n = a.size();
    __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
    size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d v0 = load2(&a[k]), v1 = load2(&a[k + 2]);
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
        acc1 = _mm256_fmadd_pd(v1, v1, acc1);
    }
    for (; k + 2 <= n; k += 2) {
        __m256d v0 = load2(&a[k]);
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; k < n; k++) {
        acc += a[k].real() * a[k].real() + a[k].imag() * a[k].imag();
    }
    return acc;
}

cplx sum_avx2(std::span<const cplx> a) {
    const size_t n = a.size();
    __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
    size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        acc0 = _mm256_add_pd(acc0, load2(&a[k]));
        acc1 = _mm256_add_pd(acc1, load2(&a[k + 2]));
    }
    for (; k + 2 <= n; k += 2) {
        acc0 = _mm256_add_pd(acc0, load2(&a[k]));
    }
    cplx acc = fold_complex(_mm256_add_pd(acc0, acc1));
    double re = acc.real(), im = acc.imag();
    for (; k < n; k++) {
        re += a[k].real();
        im += a[k].imag();
    }
    return {re, im};
}

double dev_sq_avx2(std::span<const cplx> a, cplx center) {
    const size_t n = a.size();
    const __m256d c = _mm256_setr_pd(center.real(), center.imag(), center.real(), center.imag());
    __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
    size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d d0 = _mm256_sub_pd(load2(&a[k]), c);
        __m256d d1 = _mm256_sub_pd(load2(&a[k + 2]), c);
        acc0 = _mm256_fmadd_pd(d0, d0, acc0);
        acc1 = _mm256_fmadd_pd(d1, d1, acc1);
    }
    for (; k + 2 <= n; k += 2) {
        __m256d d0 = _mm256_sub_pd(load2(&a[k]), c);
        acc0 = _mm256_fmadd_pd(d0, d0, acc0);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; k < n; k++) {
        double dr = a[k].real() - center.real();
        double di = a[k].imag() - center.imag();
        acc += dr * dr + di * di;
    }
    return acc;
}

void scaled_sub_avx2(cplx coeff, std::span<const cplx> axis, std::span<const cplx> target, std::span<cplx> out) {
    const size_t n = out.size();
    const __m256d cr = _mm256_set1_pd(coeff.real());
    const __m256d ci = _mm256_set1_pd(coeff.imag());
    size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        __m256d x = load2(&axis[k]);
        __m256d t = load2(&target[k]);
        __m256d cross = _mm256_mul_pd(ci, _mm256_permute_pd(x, 0b0101));
        // [cr*xr - ci*xi, cr*xi + ci*xr]
        __m256d prod = _mm256_fmaddsub_pd(cr, x, cross);
        store2(&out[k], _mm256_sub_pd(prod, t));
    }
    for (; k < n; k++) {
        double xr = axis[k].real(), xi = axis[k].imag();
        out[k] = {coeff.real() * xr - coeff.imag() * xi - target[k].real(),
                  coeff.real() * xi + coeff.imag() * xr - target[k].imag()};
    }
}

void real_combine_avx2(double wa, std::span<const cplx> a, double wb, std::span<const cplx> b, std::span<cplx> out) {
    const size_t n = out.size();
    const __m256d va = _mm256_set1_pd(wa);
    const __m256d vb = _mm256_set1_pd(wb);
    size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        store2(&out[k], _mm256_fmadd_pd(va, load2(&a[k]), _mm256_mul_pd(vb, load2(&b[k]))));
    }
    for (; k < n; k++) {
        out[k] = {wa * a[k].real() + wb * b[k].real(), wa * a[k].imag() + wb * b[k].imag()};
    }
}

void scale_avx2(std::span<cplx> a, double s) {
    const size_t n = a.size();
    const __m256d vs = _mm256_set1_pd(s);
    size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        store2(&a[k], _mm256_mul_pd(load2(&a[k]), vs));
    }
    for (; k < n; k++) {
        a[k] = {a[k].real() * s, a[k].imag() * s};
    }
}

}  // namespace

const KernelTable &avx2_kernel_table() {
    static const KernelTable table{
        "avx2",
        cdot_avx2,
        norm_sq_avx2,
        sum_avx2,
        dev_sq_avx2,
        scaled_sub_avx2,
        real_combine_avx2,
        scale_avx2,
    };
    return table;
}

}  // namespace qreflect::kernels
