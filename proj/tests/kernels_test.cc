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

#include <gtest/gtest.h>
#include <random>

#include "dense_oracle.h"

using namespace qreflect;
using namespace qreflect::kernels;

namespace {

// Sizes around the vector widths exercise every tail path.
constexpr size_t kSizes[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 63, 64, 65, 1000, 4099};

std::vector<cplx> random_vec(size_t n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<cplx> v(n);
    for (auto &x : v) {
        double re = u(rng);
        double im = u(rng);
        x = {re, im};
    }
    return v;
}

class BackendTest : public ::testing::TestWithParam<std::string_view> {
   protected:
    const KernelTable &simd() {
        std::string_view name = GetParam();
        if (name == "avx2" && avx2_kernels() != nullptr) {
            return *avx2_kernels();
        }
        if (name == "neon" && neon_kernels() != nullptr) {
            return *neon_kernels();
        }
        return scalar_kernels();
    }
    void SetUp() override {
        std::string_view name = GetParam();
        if ((name == "avx2" && avx2_kernels() == nullptr) || (name == "neon" && neon_kernels() == nullptr)) {
            GTEST_SKIP() << name << " not available on this machine";
        }
    }
};

TEST_P(BackendTest, reductions_match_scalar) {
    const auto &ref = scalar_kernels();
    const auto &k = simd();
    std::mt19937_64 rng(1);
    for (size_t n : kSizes) {
        auto a = random_vec(n, rng);
        auto b = random_vec(n, rng);
        const double tol = 1e-14 * (1.0 + static_cast<double>(n));
        EXPECT_LT(std::abs(k.cdot(a, b) - ref.cdot(a, b)), tol) << n;
        EXPECT_NEAR(k.norm_sq(a), ref.norm_sq(a), tol) << n;
        EXPECT_LT(std::abs(k.sum(a) - ref.sum(a)), tol) << n;
        cplx center{0.25, -0.5};
        EXPECT_NEAR(k.dev_sq(a, center), ref.dev_sq(a, center), tol) << n;
    }
}

TEST_P(BackendTest, elementwise_ops_match_scalar) {
    const auto &ref = scalar_kernels();
    const auto &k = simd();
    std::mt19937_64 rng(2);
    for (size_t n : kSizes) {
        auto a = random_vec(n, rng);
        auto b = random_vec(n, rng);
        std::vector<cplx> out_ref(n), out(n);
        cplx coeff{0.7, -1.3};
        ref.scaled_sub(coeff, a, b, out_ref);
        k.scaled_sub(coeff, a, b, out);
        EXPECT_LT(oracle::max_abs_diff(out, out_ref), 1e-15) << n;

        ref.real_combine(0.6, a, -0.8, b, out_ref);
        k.real_combine(0.6, a, -0.8, b, out);
        EXPECT_LT(oracle::max_abs_diff(out, out_ref), 1e-15) << n;

        auto sa = a;
        auto sb = a;
        ref.scale(sa, 0.37);
        k.scale(sb, 0.37);
        EXPECT_EQ(sa, sb) << n;
    }
}

TEST_P(BackendTest, scaled_sub_allows_aliasing_target) {
    const auto &k = simd();
    std::mt19937_64 rng(3);
    auto a = random_vec(37, rng);
    auto b = random_vec(37, rng);
    std::vector<cplx> expected(37);
    scalar_kernels().scaled_sub({2, 1}, a, b, expected);
    k.scaled_sub({2, 1}, a, b, b);
    EXPECT_LT(oracle::max_abs_diff(b, expected), 1e-15);
}

TEST_P(BackendTest, cdot_is_conjugate_symmetric) {
    const auto &k = simd();
    std::mt19937_64 rng(4);
    auto a = random_vec(33, rng);
    auto b = random_vec(33, rng);
    EXPECT_LT(std::abs(k.cdot(a, b) - std::conj(k.cdot(b, a))), 1e-14);
}

INSTANTIATE_TEST_SUITE_P(Kernels, BackendTest, ::testing::Values("scalar", "avx2", "neon"),
                         [](const auto &info) { return std::string(info.param); });

TEST(Dispatch, select_backend) {
    const KernelTable &before = active();
    EXPECT_TRUE(select_backend("scalar"));
    EXPECT_EQ(active().name, "scalar");
    EXPECT_FALSE(select_backend("no-such-backend"));
    EXPECT_EQ(active().name, "scalar");
    EXPECT_TRUE(select_backend(before.name));
    EXPECT_EQ(available_backends().front(), "scalar");
}

TEST(Dispatch, grover_run_agrees_across_backends) {
    // A whole simulated search, not just the kernels, must agree to rounding.
    const std::string_view original = active().name;
    std::vector<std::vector<cplx>> finals;
    for (auto name : available_backends()) {
        ASSERT_TRUE(select_backend(name));
        SearchProblem problem(11, {5, 1000});
        StateVector s = uniform_superposition(11);
        const StateVector init = s;
        for (int i = 0; i < 20; i++) {
            s = reflect_about(init, apply_oracle(problem, s));
        }
        finals.push_back(std::move(s).take());
    }
    select_backend(original);
    for (size_t k = 1; k < finals.size(); k++) {
        EXPECT_LT(oracle::max_abs_diff(finals[0], finals[k]), 1e-13);
    }
}

}  // namespace
