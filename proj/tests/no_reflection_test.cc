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

#include "qreflect/no_reflection.h"

#include <gtest/gtest.h>
#include <cmath>
#include <complex>
#include <random>

#include "dense_oracle.h"

using namespace qreflect;

namespace {

TEST(ImpliedOverlaps, closed_form_at_point_nine) {
    auto r = implied_control_overlaps(cplx{0.9, 0});
    ASSERT_TRUE(r.t1 && r.t2 && r.discrepancy);
    EXPECT_NEAR(r.t1->real(), 0.9 / 0.62, 1e-15);
    EXPECT_NEAR(r.t2->real(), 0.9 / 0.24, 1e-14);
    EXPECT_NEAR(*r.discrepancy, 2.2983870967741935, 1e-12);
}

TEST(ImpliedOverlaps, endpoints_are_consistent) {
    auto zero = implied_control_overlaps(cplx{0, 0});
    EXPECT_EQ(*zero.discrepancy, 0.0);
    for (double phase : {0.0, 0.7, 2.5}) {
        auto one = implied_control_overlaps(std::polar(1.0, phase));
        EXPECT_LT(*one.discrepancy, 1e-15);
        // t = c on the unit circle: the machine preserves the overlap.
        EXPECT_LT(std::abs(*one.t1 - std::polar(1.0, phase)), 1e-15);
    }
}

TEST(ImpliedOverlaps, poles_are_flagged) {
    auto a = implied_control_overlaps(cplx{1 / std::sqrt(2.0), 0});
    EXPECT_FALSE(a.t1.has_value());
    EXPECT_TRUE(a.t2.has_value());
    EXPECT_FALSE(a.discrepancy.has_value());
    auto b = implied_control_overlaps(std::polar(std::sqrt(3.0) / 2, 1.1));
    EXPECT_TRUE(b.t1.has_value());
    EXPECT_FALSE(b.t2.has_value());
}

TEST(ImpliedOverlaps, rejects_super_unit) {
    EXPECT_THROW(implied_control_overlaps(cplx{1.01, 0}), PreconditionError);
}

TEST(ImpliedOverlaps, discrepancy_only_depends_on_modulus) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 200; i++) {
        const double m = u(rng), p = 6.28 * u(rng);
        auto a = implied_control_overlaps(cplx{m, 0});
        auto b = implied_control_overlaps(std::polar(m, p));
        if (a.discrepancy) {
            EXPECT_NEAR(*a.discrepancy, *b.discrepancy, 1e-9 * (1 + *a.discrepancy));
        }
    }
}

TEST(ConsistencyScan, zero_set_is_endpoints) {
    auto scan = consistency_scan(10000);
    EXPECT_EQ(scan.size(), 10003u);
    auto zeros = consistency_zero_set(scan);
    ASSERT_EQ(zeros.size(), 2u);
    EXPECT_EQ(zeros[0], 0.0);
    EXPECT_EQ(zeros[1], 1.0);

    int singular = 0;
    for (size_t i = 0; i < scan.size(); i++) {
        if (i > 0) {
            EXPECT_LE(scan[i - 1].abs_c, scan[i].abs_c);
        }
        if (!scan[i].constraint.discrepancy) {
            singular++;
            const double a2 = scan[i].abs_c * scan[i].abs_c;
            EXPECT_TRUE(std::abs(a2 - 0.5) < 1e-12 || std::abs(a2 - 0.75) < 1e-12) << a2;
        }
    }
    EXPECT_EQ(singular, 2);
}

TEST(ConsistencyScan, rejects_coarse_grid) {
    EXPECT_THROW(consistency_scan(5), PreconditionError);
}

// Residual of the do-nothing machine for control e0 and the spanning targets in
// d = 2: fidelities |2|c|^2 - 1|^2 are 1, 1, 0, 0, so the mean infidelity is 1/2.
TEST(ReflectionResidual, identity_machine_closed_form) {
    auto samples = make_samples({basis_state(2, 0)}, spanning_targets(2));
    EXPECT_NEAR(reflection_residual(Matrix::Identity(4, 4), samples), 0.5, 1e-14);
}

TEST(ReflectionResidual, exact_machines_vanish) {
    std::mt19937_64 rng(11);
    for (size_t d : {2, 3, 4}) {
        std::vector<StateVector> targets = spanning_targets(d);
        for (int i = 0; i < 5; i++) {
            targets.push_back(oracle::random_state(d, rng));
        }
        auto chi = oracle::random_state(d, rng);
        EXPECT_LT(reflection_residual(single_control_machine(chi), make_samples({chi}, targets)), 1e-14);

        std::vector<StateVector> basis;
        for (size_t j = 0; j < d; j++) {
            basis.push_back(basis_state(d, j));
        }
        EXPECT_LT(reflection_residual(controlled_reflection_machine(basis), make_samples(basis, targets)), 1e-14);
    }
}

TEST(ReflectionResidual, random_unitaries_are_bounded) {
    auto samples = make_samples(controls_with_overlap(2, 0.9), spanning_targets(2));
    for (uint64_t s = 0; s < 20; s++) {
        auto u = random_unitary(4, 3, s);
        EXPECT_LT(unitarity_defect(u), 1e-12);
        const double r = reflection_residual(u, samples);
        EXPECT_GT(r, 0.0);
        EXPECT_LE(r, 1.0 + 1e-12);
    }
}

TEST(ReflectionResidual, global_phase_invariance) {
    auto samples = make_samples(controls_with_overlap(3, 0.6), spanning_targets(3));
    for (uint64_t s = 0; s < 5; s++) {
        auto u = random_unitary(9, 8, s);
        const Matrix v = u * std::polar(1.0, 0.3 + s);
        EXPECT_NEAR(reflection_residual(u, samples), reflection_residual(v, samples), 1e-14);
    }
    // Rephasing a control or target changes neither the reflected state's ray nor the fidelity.
    auto u = random_unitary(4, 1, 1);
    auto base = make_samples(controls_with_overlap(2, 0.5), spanning_targets(2));
    auto rephased = base;
    for (auto &s : rephased) {
        std::vector<cplx> c(s.control.amplitudes().begin(), s.control.amplitudes().end());
        std::vector<cplx> t(s.target.amplitudes().begin(), s.target.amplitudes().end());
        for (auto &x : c) x *= std::polar(1.0, 1.3);
        for (auto &x : t) x *= std::polar(1.0, -0.4);
        s = ReflectionSample{StateVector(c), StateVector(t)};
    }
    EXPECT_NEAR(reflection_residual(u, base), reflection_residual(u, rephased), 1e-14);
}

TEST(ReflectionResidual, rejects_bad_input) {
    auto samples = make_samples({basis_state(2, 0)}, spanning_targets(2));
    Matrix m = Matrix::Identity(4, 4);
    m(0, 0) = 2;
    EXPECT_THROW(reflection_residual(m, samples), PreconditionError);
    EXPECT_THROW(reflection_residual(Matrix::Identity(9, 9), samples), PreconditionError);
    EXPECT_THROW(make_samples({basis_state(2, 0)}, {basis_state(3, 0)}), ShapeError);
    EXPECT_THROW(controlled_reflection_machine(controls_with_overlap(2, 0.5)), PreconditionError);
}

TEST(ResidualGradient, matches_directional_derivative) {
    auto samples = make_samples(controls_with_overlap(2, 0.9), spanning_targets(2));
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    for (uint64_t s = 0; s < 5; s++) {
        auto u = random_unitary(4, 17, s);
        Matrix grad = residual_gradient(u, samples);
        EXPECT_LT((grad + grad.adjoint()).cwiseAbs().maxCoeff(), 1e-12);

        Matrix h(4, 4);
        for (int i = 0; i < 4; i++)
            for (int j = 0; j < 4; j++) h(i, j) = cplx{g(rng), g(rng)};
        Matrix x = (h - h.adjoint()) / 2.0;
        const double t = 1e-5;
        const double fd = (reflection_residual(expm_antihermitian(t * x) * u, samples) -
                           reflection_residual(expm_antihermitian(-t * x) * u, samples)) / (2 * t);
        const double an = (grad.adjoint() * x).trace().real();
        EXPECT_NEAR(an, fd, 1e-7 * (1 + std::abs(fd)));

        Matrix num = residual_gradient_numeric(u, samples);
        EXPECT_LT((grad - num).cwiseAbs().maxCoeff(), 1e-7);
    }
}

TEST(MatrixHelpers, exponential_and_projection_are_unitary) {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> g;
    Matrix h(5, 5);
    for (int i = 0; i < 5; i++)
        for (int j = 0; j < 5; j++) h(i, j) = cplx{g(rng), g(rng)};
    Matrix x = h - h.adjoint();
    EXPECT_LT(unitarity_defect(expm_antihermitian(x)), 1e-12);
    EXPECT_LT(unitarity_defect(project_to_unitary(h)), 1e-12);
    auto u = random_unitary(5, 1, 2);
    EXPECT_LT((project_to_unitary(u) - u).cwiseAbs().maxCoeff(), 1e-12);
    // Small exponent agrees with the second-order Taylor series up to the cubic term.
    Matrix small = 1e-4 * x;
    Matrix taylor = Matrix::Identity(5, 5) + small + small * small / 2.0;
    EXPECT_LT((expm_antihermitian(small) - taylor).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Optimizer, reaches_exact_machines) {
    for (bool orthogonal : {false, true}) {
        std::vector<StateVector> controls =
            orthogonal ? controls_with_overlap(2, 0.0) : std::vector<StateVector>{basis_state(2, 0)};
        auto r = optimize_reflection_machine(2, controls, spanning_targets(2));
        EXPECT_LT(r.best_residual, 1e-6) << orthogonal;
        EXPECT_TRUE(r.converged);
        EXPECT_LT(unitarity_defect(r.unitary), kUnitarityTolerance);
        EXPECT_NEAR(reflection_residual(r.unitary, make_samples(controls, spanning_targets(2))), r.best_residual,
                    1e-12);
    }
}

TEST(Optimizer, overlapping_controls_stay_away_from_zero) {
    OptimizerOptions opt;
    opt.starts = 10;
    auto r = optimize_reflection_machine(2, controls_with_overlap(2, 0.9), spanning_targets(2), opt);
    EXPECT_GT(r.best_residual, 0.05);
    ASSERT_EQ(r.control_overlaps.size(), 1u);
    EXPECT_NEAR(r.control_overlaps[0], 0.9, 1e-12);
}

TEST(Optimizer, record_is_monotone_and_deterministic) {
    OptimizerOptions opt;
    opt.starts = 6;
    opt.max_iterations = 40;
    auto a = optimize_reflection_machine(2, controls_with_overlap(2, 0.5), spanning_targets(2), opt);
    auto b = optimize_reflection_machine(2, controls_with_overlap(2, 0.5), spanning_targets(2), opt);
    ASSERT_EQ(a.record.size(), 6u);
    for (size_t i = 1; i < a.record.size(); i++) {
        EXPECT_LE(a.record[i], a.record[i - 1]);
    }
    EXPECT_EQ(a.record, b.record);
    EXPECT_EQ(a.best_residual, b.best_residual);
    EXPECT_EQ(a.unitary, b.unitary);
    EXPECT_EQ(a.best_residual, a.per_start[a.best_start].residual);

    opt.seed++;
    auto c = optimize_reflection_machine(2, controls_with_overlap(2, 0.5), spanning_targets(2), opt);
    EXPECT_NE(a.record.front(), c.record.front());
}

TEST(Optimizer, finite_difference_mode_agrees) {
    OptimizerOptions opt;
    opt.starts = 2;
    opt.gradient = GradientMode::FiniteDifference;
    auto r = optimize_reflection_machine(2, {basis_state(2, 1)}, spanning_targets(2), opt);
    EXPECT_LT(r.best_residual, 1e-6);
}

TEST(ControlsWithOverlap, geometry) {
    for (double c : {0.0, 0.3, 0.9, 1.0}) {
        auto v = controls_with_overlap(3, c);
        ASSERT_EQ(v.size(), 2u);
        EXPECT_NEAR(std::abs(inner_product(v[1], v[0]) - c), 0.0, 1e-15);
    }
    EXPECT_THROW(controls_with_overlap(2, 1.5), PreconditionError);
}

}  // namespace
