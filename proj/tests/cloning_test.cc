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

#include "qreflect/cloning.h"

#include <gtest/gtest.h>
#include <cmath>
#include <numbers>

#include "qreflect/search_modified.h"
#include "qreflect/search_standard.h"

using namespace qreflect;

namespace {

double log_gap(const SignedLogDet &a, const SignedLogDet &b) {
    return std::abs(a.log_abs - b.log_abs);
}

TEST(FamilyMatrix, layout) {
    auto m = family_matrix({4, 0.3});
    ASSERT_EQ(m.size(), 16u);
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            const double expected = i == j ? std::sin(0.3) : std::cos(0.3) / std::sqrt(3.0);
            EXPECT_NEAR(m[i * 4 + j], expected, 1e-16);
        }
    }
    // Every column is a unit vector.
    for (int j = 0; j < 4; j++) {
        double s = 0;
        for (int i = 0; i < 4; i++) s += m[i * 4 + j] * m[i * 4 + j];
        EXPECT_NEAR(s, 1.0, 1e-15);
    }
}

TEST(FamilyMatrix, limits) {
    EXPECT_THROW(family_matrix({1, 0.3}), PreconditionError);
    Limits small;
    small.max_dense_dim = 8;
    EXPECT_THROW(family_matrix({16, 0.3}, small), CapacityError);
    EXPECT_THROW(family_log_determinant_numeric({16, 0.3}, small), CapacityError);
    EXPECT_NO_THROW(family_log_determinant_closed({1u << 20, 0.3}));
}

TEST(Determinant, small_cases_by_cofactors) {
    for (double phi = 0.0; phi <= 1.6; phi += 0.1) {
        const double a = std::sin(phi), b2 = std::cos(phi);
        EXPECT_NEAR(family_determinant_numeric({2, phi}), a * a - b2 * b2, 1e-15);
        const double b = std::cos(phi) / std::sqrt(2.0);
        const double det3 = a * (a * a - b * b) - b * (b * a - b * b) + b * (b * b - a * b);
        EXPECT_NEAR(family_determinant_numeric({3, phi}), det3, 1e-15);
        EXPECT_NEAR(family_determinant_closed({3, phi}), det3, 1e-15);
    }
}

TEST(Determinant, reference_values) {
    EXPECT_NEAR(family_determinant_numeric({32, 1.0}), 0.00040923134907912107, 1e-15);
    EXPECT_NEAR(family_determinant_closed({32, 1.0}) / 0.00040923134907912107, 1.0, 1e-12);
    auto d = family_log_determinant_closed({512, 0.5});
    EXPECT_EQ(d.sign, 1);
    EXPECT_NEAR(d.log_abs, std::log(2.6085793908535181e-181), 1e-10);
    EXPECT_NEAR(family_determinant_closed({512, 1.0}) / 2.605388793095124e-44, 1.0, 1e-10);
}

TEST(Determinant, lu_matches_closed_form) {
    for (int n = 2; n <= 9; n++) {
        const uint64_t N = uint64_t{1} << n;
        for (int i = 0; i < 200; i++) {
            const double phi = std::numbers::pi / 2 * i / 199;
            auto lu = family_log_determinant_numeric({N, phi});
            auto cf = family_log_determinant_closed({N, phi});
            ASSERT_EQ(lu.sign, cf.sign) << n << " " << i;
            EXPECT_LT(log_gap(lu, cf), 1e-10) << n << " " << phi;
        }
    }
}

TEST(Determinant, endpoint_is_identity) {
    for (uint64_t N : {2, 32, 512, 4096}) {
        EXPECT_EQ(family_determinant_closed({N, std::numbers::pi / 2}), 1.0);
    }
    EXPECT_EQ(family_determinant_numeric({512, std::numbers::pi / 2}), 1.0);
}

TEST(Determinant, zero_at_starting_angle) {
    for (int n = 1; n <= 12; n++) {
        const uint64_t N = uint64_t{1} << n;
        const double z = family_zero_angle(N);
        EXPECT_NEAR(std::sin(z), 1 / std::sqrt(double(N)), 1e-15);
        EXPECT_NEAR(z, theta(SearchProblem(n, {0})) / 2, 1e-14);
        if (N > 2) {
            // Sign of a - b flips across the root; det changes sign there (N - 1 is odd).
            auto lo = family_log_determinant_closed({N, z - 1e-6});
            auto hi = family_log_determinant_closed({N, z + 1e-6});
            EXPECT_NE(lo.sign, hi.sign) << n;
        }
    }
}

TEST(DeterminantCurve, shape) {
    auto rows = determinant_curve({5, 7, 9}, 200);
    ASSERT_EQ(rows.size(), 600u);
    for (int n : {5, 7, 9}) {
        std::vector<DeterminantRow> c;
        for (auto &r : rows)
            if (r.n == n) c.push_back(r);
        ASSERT_EQ(c.size(), 200u);
        EXPECT_EQ(c.front().phi, 0.0);
        EXPECT_EQ(c.back().phi, std::numbers::pi / 2);
        EXPECT_EQ(c.back().det, 1.0);
        const double z = family_zero_angle(uint64_t{1} << n);
        int sign_changes = 0;
        for (size_t i = 1; i < c.size(); i++) {
            const uint64_t N = uint64_t{1} << n;
            if (family_log_determinant_closed({N, c[i - 1].phi}).sign !=
                family_log_determinant_closed({N, c[i].phi}).sign) {
                sign_changes++;
            }
            if (c[i - 1].phi > z) {
                // Compared as logs: the n = 9 curve underflows a double right after the root.
                const uint64_t N = uint64_t{1} << n;
                auto prev = family_log_determinant_closed({N, c[i - 1].phi});
                auto cur = family_log_determinant_closed({N, c[i].phi});
                EXPECT_EQ(cur.sign, 1);
                EXPECT_GT(cur.log_abs, prev.log_abs) << n << " " << c[i].phi;
            }
        }
        EXPECT_EQ(sign_changes, 1) << n;
        for (auto &r : c) {
            if (n == 9 && r.phi < 1.0) EXPECT_LT(std::abs(r.det), 0.01) << r.phi;
        }
    }
    EXPECT_LT(std::abs(family_determinant_closed({512, 0.5})), 1e-3);
}

TEST(DeterminantCurve, methods_agree_and_validate) {
    auto a = determinant_curve({5, 7}, 60, DeterminantMethod::Closed);
    auto b = determinant_curve({5, 7}, 60, DeterminantMethod::LU);
    ASSERT_EQ(a.size(), b.size());
    for (size_t i = 0; i < a.size(); i++) {
        EXPECT_NEAR(a[i].det, b[i].det, 1e-10 * std::max(1.0, std::abs(a[i].det)));
    }
    EXPECT_THROW(determinant_curve({5}, 49), PreconditionError);
    EXPECT_THROW(determinant_curve({1}, 60), CapacityError);
    Limits small;
    small.max_dense_dim = 64;
    EXPECT_THROW(determinant_curve({9}, 60, DeterminantMethod::LU, small), CapacityError);
}

TEST(CloneQuality, formulas) {
    auto q2 = clone_quality(2);
    EXPECT_NEAR(q2.s, 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(q2.F, 5.0 / 6.0, 1e-15);
    auto big = clone_quality(1000000);
    EXPECT_LT(big.F - 0.5, 1e-6);
    EXPECT_GT(big.F, 0.5);
    double prev = 1.0;
    for (uint64_t N = 2; N <= 1000000; N = N * 3 / 2 + 1) {
        auto q = clone_quality(N);
        EXPECT_NEAR(q.F - 0.5, 1.0 / (N + 1), 1e-15);
        EXPECT_NEAR(q.F, (1 - q.s) / N + q.s, 1e-15);
        EXPECT_LT(q.F, prev);
        prev = q.F;
    }
    EXPECT_THROW(clone_quality(1), PreconditionError);
}

TEST(Degraded, perfect_copy_is_ideal_run) {
    for (int n : {3, 5, 8}) {
        SearchProblem p(n, {1});
        DegradedOptions opt;
        opt.fidelity = 1.0;
        opt.max_steps = modified_diagnostic_horizon(p);
        auto d = run_degraded_modified(p, 7, 42, opt);
        auto m = run_modified(p, *opt.max_steps);
        ASSERT_EQ(d.entries.size(), m.entries.size());
        for (size_t i = 0; i < d.entries.size(); i++) {
            EXPECT_EQ(d.entries[i].success_prob, m.entries[i].success_prob);
            EXPECT_EQ(d.entries[i].measured_angle, m.entries[i].measured_angle);
            EXPECT_EQ(d.entries[i].success_prob_std, 0.0);
        }
        EXPECT_EQ(d.algorithm, Algorithm::Degraded);
    }
}

TEST(Degraded, cloner_fidelity_hurts) {
    SearchProblem p(5, {0});
    auto d = run_degraded_modified(p, 200, 20240917);
    auto ideal = run_modified(p);
    ASSERT_EQ(d.entries.size(), ideal.entries.size());
    EXPECT_LT(d.entries.back().success_prob, ideal.entries.back().success_prob);
    EXPECT_NEAR(*d.clone_fidelity, clone_quality(32).F, 1e-15);
    EXPECT_EQ(*d.trials, 200);
    for (auto &e : d.entries) {
        EXPECT_GE(e.success_prob, 0.0);
        EXPECT_LE(e.success_prob, 1.0);
        EXPECT_GE(e.success_prob_std, 0.0);
    }
}

TEST(Degraded, deterministic_per_seed) {
    SearchProblem p(6, {3});
    auto a = run_degraded_modified(p, 20, 7);
    auto b = run_degraded_modified(p, 20, 7);
    auto c = run_degraded_modified(p, 20, 8);
    for (size_t i = 0; i < a.entries.size(); i++) {
        EXPECT_EQ(a.entries[i].success_prob, b.entries[i].success_prob);
    }
    EXPECT_NE(a.entries.back().success_prob, c.entries.back().success_prob);
}

TEST(Degraded, rejects_bad_options) {
    SearchProblem p(4, {0});
    EXPECT_THROW(run_degraded_modified(p, 0, 1), PreconditionError);
    DegradedOptions opt;
    opt.fidelity = 1.5;
    EXPECT_THROW(run_degraded_modified(p, 5, 1, opt), PreconditionError);
}

}  // namespace
