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

#include "qreflect/search_standard.h"

#include <cmath>
#include <numbers>

namespace qreflect {

double theta(const SearchProblem &problem) {
    return 2.0 * std::asin(std::sqrt(static_cast<double>(problem.M()) / static_cast<double>(problem.N())));
}

StateVector grover_step(const StateVector &state, const SearchProblem &problem, const StateVector &initial) {
    return reflect_about(initial, apply_oracle(problem, state));
}

uint64_t iteration_bound(const SearchProblem &problem) {
    double ratio = static_cast<double>(problem.N()) / static_cast<double>(problem.M());
    return static_cast<uint64_t>(std::ceil(std::numbers::pi / 4.0 * std::sqrt(ratio)));
}

int standard_best_step(const SearchProblem &problem) {
    const double half = theta(problem) / 2.0;
    const auto bound = static_cast<int>(iteration_bound(problem));
    int best = 0;
    double best_p = -1;
    for (int k = 0; k <= bound; k++) {
        double s = std::sin((2 * k + 1) * half);
        if (s * s > best_p) {
            best_p = s * s;
            best = k;
        }
    }
    return best;
}

double measured_angle(const SearchProblem &problem, const StateVector &state) {
    if (problem.M() == problem.N()) {
        return std::numbers::pi / 2;
    }
    return decompose_in_plane(problem, state).angle;
}

RunTrace run_standard(const SearchProblem &problem, std::optional<int> max_steps, const Limits &limits) {
    if (max_steps && *max_steps < 0) {
        throw PreconditionError("max_steps must be nonnegative");
    }
    const int last = max_steps ? *max_steps : standard_best_step(problem);
    const double half = theta(problem) / 2.0;
    const StateVector initial = uniform_superposition(problem.n(), limits);

    RunTrace trace;
    trace.algorithm = Algorithm::Standard;
    trace.n = problem.n();
    trace.N = problem.N();
    trace.M = problem.M();
    trace.marked.assign(problem.marked().begin(), problem.marked().end());
    trace.entries.reserve(last + 1);

    StateVector state = initial;
    for (int k = 0; k <= last; k++) {
        if (k > 0) {
            state = grover_step(state, problem, initial);
        }
        trace.entries.push_back(TraceEntry{
            .step = k,
            .predicted_angle = (2 * k + 1) * half,
            .measured_angle = measured_angle(problem, state),
            .success_prob = success_probability(problem, state),
        });
    }
    return trace;
}

}  // namespace qreflect
