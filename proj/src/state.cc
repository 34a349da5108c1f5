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

#include "qreflect/state.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qreflect/kernels.h"

namespace qreflect {

StateVector::StateVector(std::vector<cplx> amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.empty()) {
        throw PreconditionError("state vector must have at least one amplitude");
    }
    double n2 = norm_sq();
    if (!(std::abs(n2 - 1.0) <= kNormTolerance)) {
        throw PreconditionError("state vector is not normalized (norm^2 = " + std::to_string(n2) + ")");
    }
}

StateVector StateVector::normalized(std::vector<cplx> amplitudes) {
    if (amplitudes.empty()) {
        throw PreconditionError("state vector must have at least one amplitude");
    }
    double n2 = kernels::active().norm_sq(amplitudes);
    if (!(n2 > 0) || !std::isfinite(n2)) {
        throw PreconditionError("cannot normalize a zero or non-finite vector");
    }
    kernels::active().scale(amplitudes, 1.0 / std::sqrt(n2));
    return StateVector(Unchecked{}, std::move(amplitudes));
}

StateVector StateVector::adopt(std::vector<cplx> amplitudes) {
    return StateVector(Unchecked{}, std::move(amplitudes));
}

double StateVector::norm_sq() const {
    return kernels::active().norm_sq(amps_);
}

SearchProblem::SearchProblem(int n, std::vector<uint64_t> marked, const Limits &limits)
    : n_(n), marked_(std::move(marked)) {
    if (n < 1 || n > limits.max_qubits || n > 62) {
        throw CapacityError(
            "register size n=" + std::to_string(n) + " outside [1, " + std::to_string(limits.max_qubits) + "]");
    }
    if (marked_.empty()) {
        throw PreconditionError("search problem needs at least one marked index");
    }
    std::sort(marked_.begin(), marked_.end());
    if (std::adjacent_find(marked_.begin(), marked_.end()) != marked_.end()) {
        throw PreconditionError("marked indices must be distinct");
    }
    if (marked_.back() >= N()) {
        throw PreconditionError("marked index " + std::to_string(marked_.back()) + " out of range for N=" +
                                std::to_string(N()));
    }
}

bool SearchProblem::is_marked(uint64_t x) const {
    return std::binary_search(marked_.begin(), marked_.end(), x);
}

StateVector uniform_superposition(int n, const Limits &limits) {
    if (n < 1 || n > limits.max_qubits || n > 62) {
        throw CapacityError(
            "register size n=" + std::to_string(n) + " outside [1, " + std::to_string(limits.max_qubits) + "]");
    }
    size_t dim = size_t{1} << n;
    return StateVector::adopt(std::vector<cplx>(dim, cplx{1.0 / std::sqrt(static_cast<double>(dim)), 0.0}));
}

StateVector basis_state(size_t dim, size_t index) {
    if (index >= dim) {
        throw ShapeError("basis index " + std::to_string(index) + " out of range for dim " + std::to_string(dim));
    }
    std::vector<cplx> amps(dim);
    amps[index] = 1.0;
    return StateVector::adopt(std::move(amps));
}

namespace {

void require_same_dim(size_t a, size_t b, const char *what) {
    if (a != b) {
        throw ShapeError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                         std::to_string(b) + ")");
    }
}

}  // namespace

cplx inner_product(const StateVector &a, const StateVector &b) {
    require_same_dim(a.dim(), b.dim(), "inner_product");
    return kernels::active().cdot(a.amplitudes(), b.amplitudes());
}

StateVector reflect_about(const StateVector &axis, const StateVector &target) {
    require_same_dim(axis.dim(), target.dim(), "reflect_about");
    const auto &k = kernels::active();
    double axis_norm = std::sqrt(k.norm_sq(axis.amplitudes()));
    if (!(std::abs(axis_norm - 1.0) <= kAxisNormTolerance)) {
        throw PreconditionError("reflection axis is not normalized (norm = " + std::to_string(axis_norm) + ")");
    }
    cplx coeff = 2.0 * k.cdot(axis.amplitudes(), target.amplitudes());
    std::vector<cplx> out(target.dim());
    k.scaled_sub(coeff, axis.amplitudes(), target.amplitudes(), out);
    return StateVector::adopt(std::move(out));
}

StateVector apply_oracle(const SearchProblem &problem, const StateVector &state) {
    require_same_dim(problem.N(), state.dim(), "apply_oracle");
    std::vector<cplx> out(state.amplitudes().begin(), state.amplitudes().end());
    for (uint64_t x : problem.marked()) {
        out[x] = -out[x];
    }
    return StateVector::adopt(std::move(out));
}

double success_probability(const SearchProblem &problem, const StateVector &state) {
    require_same_dim(problem.N(), state.dim(), "success_probability");
    double p = 0;
    for (uint64_t x : problem.marked()) {
        p += std::norm(state[x]);
    }
    return p;
}

PlaneCoordinates decompose_in_plane(const SearchProblem &problem, const StateVector &state) {
    require_same_dim(problem.N(), state.dim(), "decompose_in_plane");
    const uint64_t N = problem.N();
    const uint64_t M = problem.M();
    if (M == N) {
        throw DegeneratePlaneError("every index is marked; the non-solution axis is undefined");
    }
    const auto &k = kernels::active();
    const auto amps = state.amplitudes();
    const auto marked = problem.marked();

    // Unmarked indices form the runs between consecutive marked indices.
    auto for_each_unmarked_run = [&](auto &&fn) {
        uint64_t start = 0;
        for (uint64_t x : marked) {
            if (x > start) {
                fn(amps.subspan(start, x - start));
            }
            start = x + 1;
        }
        if (start < N) {
            fn(amps.subspan(start, N - start));
        }
    };

    cplx alpha_sum = 0;
    for_each_unmarked_run([&](std::span<const cplx> run) { alpha_sum += k.sum(run); });
    cplx beta_sum = 0;
    for (uint64_t x : marked) {
        beta_sum += amps[x];
    }
    const double inv_sqrt_unmarked = 1.0 / std::sqrt(static_cast<double>(N - M));
    const double inv_sqrt_marked = 1.0 / std::sqrt(static_cast<double>(M));
    const cplx a = alpha_sum * inv_sqrt_unmarked;
    const cplx b = beta_sum * inv_sqrt_marked;

    // Residual accumulated entrywise; subtracting |a|^2 + |b|^2 from the norm
    // would lose half the significant digits.
    const cplx alpha_amp = a * inv_sqrt_unmarked;
    const cplx beta_amp = b * inv_sqrt_marked;
    double residual_sq = 0;
    for_each_unmarked_run([&](std::span<const cplx> run) { residual_sq += k.dev_sq(run, alpha_amp); });
    for (uint64_t x : marked) {
        residual_sq += std::norm(amps[x] - beta_amp);
    }

    const cplx &ref = std::abs(a) >= std::abs(b) ? a : b;
    double phase = ref == cplx{0, 0} ? 0.0 : std::arg(ref);
    if (phase > std::numbers::pi / 2) {
        phase -= std::numbers::pi;
    } else if (phase <= -std::numbers::pi / 2) {
        phase += std::numbers::pi;
    }
    const cplx unphase = std::polar(1.0, -phase);
    const double angle = std::atan2((b * unphase).real(), (a * unphase).real());

    return PlaneCoordinates{angle, std::sqrt(residual_sq), a, b};
}

}  // namespace qreflect
