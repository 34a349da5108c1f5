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

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "qreflect/kernels.h"
#include "qreflect/search_modified.h"
#include "qreflect/search_standard.h"

namespace qreflect {

double SignedLogDet::value() const {
    if (sign == 0) {
        return 0.0;
    }
    return sign * std::exp(log_abs);
}

namespace {

void require_family_dim(uint64_t N) {
    if (N < 2) {
        throw PreconditionError("state family needs N >= 2");
    }
}

// cos(phi) written as sin(pi/2 - phi) so that phi = pi/2 gives exactly 0.
struct FamilyEntries {
    double diag;
    double off;
};

FamilyEntries family_entries(const StateFamilySpec &spec) {
    const double c = std::sin(std::numbers::pi / 2 - spec.phi);
    return {std::sin(spec.phi), c / std::sqrt(static_cast<double>(spec.N - 1))};
}

}  // namespace

std::vector<double> family_matrix(const StateFamilySpec &spec, const Limits &limits) {
    require_family_dim(spec.N);
    if (spec.N > limits.max_dense_dim) {
        throw CapacityError("dense family matrix of side " + std::to_string(spec.N) + " exceeds cap " +
                            std::to_string(limits.max_dense_dim));
    }
    const auto [diag, off] = family_entries(spec);
    const size_t n = spec.N;
    std::vector<double> m(n * n, off);
    for (size_t k = 0; k < n; k++) {
        m[k * n + k] = diag;
    }
    return m;
}

SignedLogDet lu_log_determinant(std::span<double> a, size_t n) {
    if (a.size() != n * n) {
        throw ShapeError("matrix storage does not match n x n");
    }
    int sign = 1;
    double log_abs = 0;
    for (size_t k = 0; k < n; k++) {
        size_t pivot = k;
        double best = std::abs(a[k * n + k]);
        for (size_t i = k + 1; i < n; i++) {
            double v = std::abs(a[i * n + k]);
            if (v > best) {
                best = v;
                pivot = i;
            }
        }
        if (best == 0.0) {
            return {0, -std::numeric_limits<double>::infinity()};
        }
        if (pivot != k) {
            for (size_t j = k; j < n; j++) {
                std::swap(a[k * n + j], a[pivot * n + j]);
            }
            sign = -sign;
        }
        const double p = a[k * n + k];
        if (p < 0) {
            sign = -sign;
        }
        log_abs += std::log(std::abs(p));
        const double *row_k = &a[k * n];
        for (size_t i = k + 1; i < n; i++) {
            double *row_i = &a[i * n];
            const double l = row_i[k] / p;
            for (size_t j = k + 1; j < n; j++) {
                row_i[j] -= l * row_k[j];
            }
        }
    }
    return {sign, log_abs};
}

SignedLogDet family_log_determinant_numeric(const StateFamilySpec &spec, const Limits &limits) {
    std::vector<double> m = family_matrix(spec, limits);
    return lu_log_determinant(m, spec.N);
}

double family_determinant_numeric(const StateFamilySpec &spec, const Limits &limits) {
    std::vector<double> m = family_matrix(spec, limits);
    const size_t n = spec.N;
    SignedLogDet ld = lu_log_determinant(m, n);
    if (ld.sign == 0) {
        return 0.0;
    }
    // Pivot product in order, so tiny determinants underflow the same way a
    // direct product would rather than through exp(log).
    double det = ld.sign;
    for (size_t k = 0; k < n; k++) {
        det *= std::abs(m[k * n + k]);
    }
    return det;
}

SignedLogDet family_log_determinant_closed(const StateFamilySpec &spec) {
    require_family_dim(spec.N);
    const auto [a, b] = family_entries(spec);
    const double gap = a - b;
    const double tail = a + static_cast<double>(spec.N - 1) * b;
    if (gap == 0.0 || tail == 0.0) {
        return {0, -std::numeric_limits<double>::infinity()};
    }
    int sign = tail > 0 ? 1 : -1;
    if (gap < 0 && (spec.N - 1) % 2 == 1) {
        sign = -sign;
    }
    return {sign, static_cast<double>(spec.N - 1) * std::log(std::abs(gap)) + std::log(std::abs(tail))};
}

double family_determinant_closed(const StateFamilySpec &spec) {
    require_family_dim(spec.N);
    const auto [a, b] = family_entries(spec);
    return std::pow(a - b, static_cast<double>(spec.N - 1)) * (a + static_cast<double>(spec.N - 1) * b);
}

double family_zero_angle(uint64_t N) {
    require_family_dim(N);
    return std::atan(1.0 / std::sqrt(static_cast<double>(N - 1)));
}

std::vector<DeterminantRow> determinant_curve(const std::vector<int> &n_list, int grid, DeterminantMethod method,
                                              const Limits &limits) {
    if (grid < 50) {
        throw PreconditionError("determinant grid needs at least 50 points");
    }
    std::vector<DeterminantRow> rows;
    rows.reserve(n_list.size() * grid);
    for (int n : n_list) {
        if (n < 2 || n > limits.max_qubits) {
            throw CapacityError("register size n=" + std::to_string(n) + " outside [2, " +
                                std::to_string(limits.max_qubits) + "]");
        }
        const uint64_t N = uint64_t{1} << n;
        if (method == DeterminantMethod::LU && N > limits.max_dense_dim) {
            throw CapacityError("dense family matrix of side " + std::to_string(N) + " exceeds cap " +
                                std::to_string(limits.max_dense_dim));
        }
        for (int i = 0; i < grid; i++) {
            // Last point is exactly pi/2.
            const double phi = i == grid - 1 ? std::numbers::pi / 2 : (std::numbers::pi / 2) * i / (grid - 1);
            const StateFamilySpec spec{N, phi};
            const double det = method == DeterminantMethod::Closed ? family_determinant_closed(spec)
                                                                   : family_determinant_numeric(spec, limits);
            rows.push_back(DeterminantRow{n, phi, det});
        }
    }
    return rows;
}

CloneQuality clone_quality(uint64_t N) {
    if (N < 2) {
        throw PreconditionError("cloner dimension must be at least 2");
    }
    const auto n = static_cast<double>(N);
    return CloneQuality{N, (n + 2) / (2 * (n + 1)), (n + 3) / (2 * (n + 1))};
}

namespace {

/// Running mean and variance (Welford). Identical samples give that exact
/// value as the mean and a zero variance.
struct RunningStats {
    int count = 0;
    double mean = 0;
    double m2 = 0;

    void add(double x) {
        count++;
        double delta = x - mean;
        mean += delta / count;
        m2 += delta * (x - mean);
    }
    double sample_std() const {
        return count > 1 ? std::sqrt(std::max(0.0, m2 / (count - 1))) : 0.0;
    }
};

StateVector perturbed_axis(const StateVector &state, double fidelity, std::mt19937_64 &rng) {
    const auto &k = kernels::active();
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<cplx> g(state.dim());
    for (auto &v : g) {
        double re = normal(rng);
        double im = normal(rng);
        v = {re, im};
    }
    // Remove the component along the state; what is left is uniform on the complement.
    const cplx along = k.cdot(state.amplitudes(), g);
    k.scaled_sub(along, state.amplitudes(), g, g);
    StateVector xi = StateVector::normalized(std::move(g));
    std::vector<cplx> axis(state.dim());
    k.real_combine(std::sqrt(fidelity), state.amplitudes(), std::sqrt(1.0 - fidelity), xi.amplitudes(), axis);
    return StateVector::normalized(std::move(axis));
}

}  // namespace

RunTrace run_degraded_modified(const SearchProblem &problem, int trials, uint64_t seed,
                               const DegradedOptions &options, const Limits &limits) {
    if (trials < 1) {
        throw PreconditionError("need at least one trial");
    }
    if (options.max_steps && *options.max_steps < 0) {
        throw PreconditionError("max_steps must be nonnegative");
    }
    const double fidelity = options.fidelity ? *options.fidelity : clone_quality(problem.N()).F;
    if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
        throw PreconditionError("clone fidelity must lie in [0, 1]");
    }
    const int last = options.max_steps ? *options.max_steps : modified_best_step(problem);
    const double half = theta(problem) / 2.0;
    const StateVector initial = uniform_superposition(problem.n(), limits);

    std::vector<RunningStats> prob(last + 1), angle(last + 1);
    for (int t = 0; t < trials; t++) {
        std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(t)};
        std::mt19937_64 rng(seq);
        StateVector state = initial;
        for (int l = 0; l <= last; l++) {
            if (l > 0) {
                if (fidelity >= 1.0) {
                    state = modified_step(state, problem);
                } else {
                    state = reflect_about(perturbed_axis(state, fidelity, rng), apply_oracle(problem, state));
                }
            }
            prob[l].add(success_probability(problem, state));
            angle[l].add(measured_angle(problem, state));
        }
    }

    RunTrace trace;
    trace.algorithm = Algorithm::Degraded;
    trace.n = problem.n();
    trace.N = problem.N();
    trace.M = problem.M();
    trace.marked.assign(problem.marked().begin(), problem.marked().end());
    trace.axis_copied_from_state = true;
    trace.seed = seed;
    trace.trials = trials;
    trace.clone_fidelity = fidelity;
    for (int l = 0; l <= last; l++) {
        trace.entries.push_back(TraceEntry{
            .step = l,
            .predicted_angle = std::pow(3.0, l) * half,
            .measured_angle = angle[l].mean,
            .success_prob = prob[l].mean,
            .success_prob_std = prob[l].sample_std(),
        });
    }
    return trace;
}

}  // namespace qreflect
