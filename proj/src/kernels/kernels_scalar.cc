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

#include "qreflect/kernels.h"

namespace qreflect::kernels {
namespace {

cplx cdot_scalar(std::span<const cplx> a, std::span<const cplx> b) {
    double re = 0;
    double im = 0;
    for (size_t k = 0; k < a.size(); k++) {
        double ar = a[k].real(), ai = a[k].imag();
        double br = b[k].real(), bi = b[k].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

double norm_sq_scalar(std::span<const cplx> a) {
    double acc = 0;
    for (const cplx &v : a) {
        acc += v.real() * v.real() + v.imag() * v.imag();
    }
    return acc;
}

cplx sum_scalar(std::span<const cplx> a) {
    double re = 0;
    double im = 0;
    for (const cplx &v : a) {
        re += v.real();
        im += v.imag();
    }
    return {re, im};
}

double dev_sq_scalar(std::span<const cplx> a, cplx center) {
    double acc = 0;
    for (const cplx &v : a) {
        double dr = v.real() - center.real();
        double di = v.imag() - center.imag();
        acc += dr * dr + di * di;
    }
    return acc;
}

void scaled_sub_scalar(cplx coeff, std::span<const cplx> axis, std::span<const cplx> target, std::span<cplx> out) {
    double cr = coeff.real(), ci = coeff.imag();
    for (size_t k = 0; k < out.size(); k++) {
        double xr = axis[k].real(), xi = axis[k].imag();
        double tr = target[k].real(), ti = target[k].imag();
        out[k] = {cr * xr - ci * xi - tr, cr * xi + ci * xr - ti};
    }
}

void real_combine_scalar(double wa, std::span<const cplx> a, double wb, std::span<const cplx> b, std::span<cplx> out) {
    for (size_t k = 0; k < out.size(); k++) {
        out[k] = {wa * a[k].real() + wb * b[k].real(), wa * a[k].imag() + wb * b[k].imag()};
    }
}

void scale_scalar(std::span<cplx> a, double s) {
    for (cplx &v : a) {
        v = {v.real() * s, v.imag() * s};
    }
}

}  // namespace

const KernelTable &scalar_kernels() {
    static const KernelTable table{
        "scalar",
        cdot_scalar,
        norm_sq_scalar,
        sum_scalar,
        dev_sq_scalar,
        scaled_sub_scalar,
        real_combine_scalar,
        scale_scalar,
    };
    return table;
}

}  // namespace qreflect::kernels
