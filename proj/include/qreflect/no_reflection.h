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

#ifndef QREFLECT_NO_REFLECTION_H
#define QREFLECT_NO_REFLECTION_H

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "qreflect/state.h"

namespace qreflect {

// ---------------------------------------------------------------------------
// Scalar consistency constraints.
//
// A machine U|chi>|phi> = |chi~>(2<chi|phi>|chi> - |phi>) applied to two
// control states chi, chi' with c = <chi'|chi> forces two expressions for the
// output-control overlap <chi~'|chi~>:
//     t1 = c / (2|c|^2 - 1)      and      t2 = c / (4|c|^2 - 3).
// A consistent machine needs t1 = t2, which holds only for |c| in {0, 1}.
// ---------------------------------------------------------------------------

/// Distance of |c|^2 from a pole below which the implied overlap is reported as singular.
inline constexpr double kSingularTolerance = 1e-12;

struct OverlapConstraint {
    cplx c;
    /// nullopt marks a singular denominator (|c|^2 = 1/2 for t1, 3/4 for t2).
    std::optional<cplx> t1;
    std::optional<cplx> t2;
    /// |t1 - t2| when both are finite.
    std::optional<double> discrepancy;
};

/// Throws PreconditionError when |c| > 1 + 1e-12.
OverlapConstraint implied_control_overlaps(cplx c);

struct ScanPoint {
    double abs_c;
    OverlapConstraint constraint;
};

/// Evaluates the constraint at |c| = i / resolution for i = 0..resolution,
/// plus the two poles 1/sqrt(2) and sqrt(3)/2 as flagged rows, sorted by |c|.
/// Throws PreconditionError for resolution < 10.
std::vector<ScanPoint> consistency_scan(int resolution);

/// |c| values whose discrepancy is below `tolerance`, excluding singular rows.
std::vector<double> consistency_zero_set(const std::vector<ScanPoint> &scan, double tolerance = 1e-9);

// ---------------------------------------------------------------------------
// Search over reflection machines.
// ---------------------------------------------------------------------------

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Max-entry deviation of U^dagger U from I tolerated by the residual and
/// maintained by the optimizer.
inline constexpr double kUnitarityTolerance = 1e-8;

struct ReflectionSample {
    StateVector control;
    StateVector target;
};

/// Every (control, target) pair. Throws ShapeError if dimensions differ.
std::vector<ReflectionSample> make_samples(const std::vector<StateVector> &controls,
                                           const std::vector<StateVector> &targets);

/// All e_j, then (e_0 + e_j)/sqrt2 and (e_0 + i e_j)/sqrt2 for j >= 1. Enough directions
/// that linearity pins down the target map.
std::vector<StateVector> spanning_targets(size_t d);

/// Max-entry norm of U^dagger U - I.
double unitarity_defect(const Matrix &u);

/// One minus the mean target fidelity.
///
/// For each sample, U acts on control (x) target (control is the leading
/// factor, index = c*d + t), the control is traced out, and the fidelity of
/// the reduced target with 2<chi|phi>chi - phi is taken. Discarding the
/// control puts no requirement on what the control register ends up in.
///
/// Throws PreconditionError if U is not d^2 x d^2 or not unitary within
/// kUnitarityTolerance, ShapeError on inconsistent sample dimensions.
double reflection_residual(const Matrix &u, const std::vector<ReflectionSample> &samples);

/// I (x) (2|chi><chi| - I). Exact for any target when chi is the only control.
Matrix single_control_machine(const StateVector &chi);

/// sum_i |e_i><e_i| (x) (2|e_i><e_i| - I) + (I - sum_i |e_i><e_i|) (x) I.
/// Exact for orthonormal controls. Throws PreconditionError if they are not.
Matrix controlled_reflection_machine(const std::vector<StateVector> &orthonormal_controls);

/// Riemannian gradient of the residual at U, as an anti-Hermitian matrix
/// G such that d/dt residual(exp(tX) U) at t=0 equals Re tr(G^dagger X).
Matrix residual_gradient(const Matrix &u, const std::vector<ReflectionSample> &samples);

/// Same quantity by central differences along an anti-Hermitian basis.
Matrix residual_gradient_numeric(const Matrix &u, const std::vector<ReflectionSample> &samples,
                                 double step = 1e-6);

/// Haar-random unitary drawn from a stream keyed by (seed, stream).
Matrix random_unitary(size_t dim, uint64_t seed, uint64_t stream);

/// exp(X) for anti-Hermitian X, via the eigendecomposition of -iX.
Matrix expm_antihermitian(const Matrix &x);

/// Nearest unitary (polar factor).
Matrix project_to_unitary(const Matrix &m);

enum class GradientMode { Analytic, FiniteDifference };

struct OptimizerOptions {
    int starts = 20;
    uint64_t seed = 20240917;
    int max_iterations = 3000;
    /// Stop when the Frobenius norm of the Riemannian gradient drops below this.
    double gradient_tolerance = 1e-9;
    /// Stop early when the residual drops below this.
    double residual_target = 1e-13;
    GradientMode gradient = GradientMode::Analytic;
};

struct StartOutcome {
    double residual;
    int iterations;
    bool converged;
};

struct ReflectionMachineResult {
    size_t d = 0;
    /// |<chi_i|chi_j>| for i < j.
    std::vector<double> control_overlaps;
    double best_residual = 1.0;
    Matrix unitary;
    int best_start = -1;
    bool converged = false;
    int starts = 0;
    uint64_t seed = 0;
    int total_iterations = 0;
    std::vector<StartOutcome> per_start;
    /// Best residual after each start; non-increasing.
    std::vector<double> record;
};

/// Multi-start Riemannian conjugate-gradient minimization of
/// reflection_residual over U(d^2). Deterministic for a given seed. Never
/// throws on non-convergence; `converged` reports whether the best start met
/// the gradient or residual tolerance.
ReflectionMachineResult optimize_reflection_machine(size_t d, const std::vector<StateVector> &controls,
                                                    const std::vector<StateVector> &targets,
                                                    const OptimizerOptions &options = {});

/// Two unit control states in dimension d with <chi'|chi> = overlap (real, >= 0).
std::vector<StateVector> controls_with_overlap(size_t d, double overlap);

}  // namespace qreflect

#endif
