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

#include <atomic>
#include <cstdlib>

#include "qreflect/kernels.h"

namespace qreflect::kernels {

#if defined(QREFLECT_HAVE_AVX2)
const KernelTable &avx2_kernel_table();
#endif
#if defined(QREFLECT_HAVE_NEON)
const KernelTable &neon_kernel_table();
#endif

const KernelTable *avx2_kernels() {
#if defined(QREFLECT_HAVE_AVX2)
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    if (supported) {
        return &avx2_kernel_table();
    }
#endif
    return nullptr;
}

const KernelTable *neon_kernels() {
#if defined(QREFLECT_HAVE_NEON)
    // Advanced SIMD is mandatory on AArch64.
    return &neon_kernel_table();
#else
    return nullptr;
#endif
}

namespace {

const KernelTable *lookup(std::string_view name) {
    if (name == "scalar") {
        return &scalar_kernels();
    }
    if (name == "avx2") {
        return avx2_kernels();
    }
    if (name == "neon") {
        return neon_kernels();
    }
    return nullptr;
}

const KernelTable *pick_default() {
    if (const char *env = std::getenv("QREFLECT_SIMD")) {
        if (const KernelTable *t = lookup(env)) {
            return t;
        }
    }
    if (const KernelTable *t = avx2_kernels()) {
        return t;
    }
    if (const KernelTable *t = neon_kernels()) {
        return t;
    }
    return &scalar_kernels();
}

std::atomic<const KernelTable *> &active_slot() {
    static std::atomic<const KernelTable *> slot{pick_default()};
    return slot;
}

}  // namespace

const KernelTable &active() {
    return *active_slot().load(std::memory_order_acquire);
}

bool select_backend(std::string_view name) {
    const KernelTable *t = lookup(name);
    if (t == nullptr) {
        return false;
    }
    active_slot().store(t, std::memory_order_release);
    return true;
}

std::vector<std::string_view> available_backends() {
    std::vector<std::string_view> out{"scalar"};
    if (avx2_kernels() != nullptr) {
        out.push_back("avx2");
    }
    if (neon_kernels() != nullptr) {
        out.push_back("neon");
    }
    return out;
}

}  // namespace qreflect::kernels
