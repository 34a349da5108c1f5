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

#ifndef QREFLECT_CLONING_H
#define QREFLECT_CLONING_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qreflect/state.h"
#include "qreflect/trace.h"

namespace qreflect {

/// The single-solution search state sin(phi)|beta> + cos(phi)|alpha>, taken
/// for every possible location of the solution. Stacking those N states as
/// columns gives a matrix with sin(phi) on the diagonal and
/// cos(phi)/sqrt(N-1) elsewhere; the family is linearly independent (and so
/// probabilistically clonable) iff its determinant is nonzero.
struct StateFamilySpec {
    uint64_t N;
    double phi;
};

/// Determinant as sign and log-magnitude. The determinant of an N=512 family
/// underflows a double for most angles, so comparisons are done in this form.
struct SignedLogDet {
    int sign;  // -1, 0 or +1
    double log_abs;

    double value() const;
};

/// Row-major N x N family matrix. Throws CapacityError above limits.max_dense_dim
/// and PreconditionError for N < 2.
std::vector<double> family_matrix(const StateFamilySpec &spec, const Limits &limits = {});

/// LU factorization with partial pivoting of a row-major n x n matrix
/// (consumed in place); the determinant is the signed pivot product.
SignedLogDet lu_log_determinant(std::span<double> a, size_t n);

/// Determinant of the family matrix via LU.
SignedLogDet family_log_determinant_numeric(const StateFamilySpec &spec, const Limits &limits = {});
double family_determinant_numeric(const StateFamilySpec &spec, const Limits &limits = {});

/// The matrix is a I + b (J - I) with a = sin(phi), b = cos(phi)/sqrt(N-1), so
///     det = (a - b)^(N-1) (a + (N-1) b).
SignedLogDet family_log_determinant_closed(const StateFamilySpec &spec);
double family_determinant_closed(const StateFamilySpec &spec);

/// Root of a - b: tan(phi) = 1/sqrt(N-1), equivalently sin(phi) = 1/sqrt(N),
/// which is the angle of the uniform starting state.
double family_zero_angle(uint64_t N);

enum class DeterminantMethod { Closed, LU };

struct DeterminantRow {
    int n;
    double phi;
    double det;
};

/// det over `grid` equally spaced angles in [0, pi/2] (endpoints included)
/// for each register size in `n_list`. Throws PreconditionError for grid < 50
/// and CapacityError for n outside [2, limits.max_qubits]; the LU method
/// additionally checks the dense-matrix cap.
std::vector<DeterminantRow> determinant_curve(const std::vector<int> &n_list, int grid,
                                              DeterminantMethod method = DeterminantMethod::Closed,
                                              const Limits &limits = {});

/// Symmetric universal 1 -> 2 cloner for an N-dimensional register.
struct CloneQuality {
    uint64_t N;
    /// Scaling factor (N + 2) / (2 (N + 1)).
    double s;
    /// Fidelity of each copy, (1 - s)/N + s = (N + 3) / (2 (N + 1)).
    double F;
};

/// Throws PreconditionError for N < 2.
CloneQuality clone_quality(uint64_t N);

struct DegradedOptions {
    /// Squared overlap between the reflection axis and the true state.
    /// Defaults to clone_quality(N).F.
    std::optional<double> fidelity;
    /// Defaults to modified_best_step(problem).
    std::optional<int> max_steps;
};

/// Modified search where each reflection axis is an imperfect copy of the
/// current state: sqrt(F) psi + sqrt(1-F) xi, with xi a unit vector drawn
/// uniformly from the orthogonal complement of psi, fresh for every step and
/// trial. This is a pure-state surrogate for a mixed approximate clone.
///
/// Entries hold the per-step mean over trials of the success probability
/// (with its sample standard deviation) and of the in-plane angle. Trial t
/// draws from a stream keyed by (seed, t). With F = 1 no randomness is drawn
/// and the entries equal run_modified's bit for bit.
RunTrace run_degraded_modified(const SearchProblem &problem, int trials, uint64_t seed,
                               const DegradedOptions &options = {}, const Limits &limits = {});

}  // namespace qreflect

#endif
