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

#include "qreflect/search_modified.h"

#include <cmath>
#include <numbers>

#include "qreflect/search_standard.h"

namespace qreflect {

StateVector modified_step(const StateVector &state, const SearchProblem &problem) {
    StateVector axis = state;
    return reflect_about(axis, apply_oracle(problem, state));
}

double r_mod(const SearchProblem &problem) {
    if (problem.M() == problem.N()) {
        return 0.0;
    }
    return std::log(std::numbers::pi / theta(problem)) / std::log(3.0);
}

int modified_best_step(const SearchProblem &problem) {
    const double half = theta(problem) / 2.0;
    const int window = static_cast<int>(std::ceil(r_mod(problem))) + 1;
    int best = 0;
    double best_p = -1;
    for (int l = 0; l <= window; l++) {
        double s = std::sin(std::pow(3.0, l) * half);
        if (s * s > best_p) {
            best_p = s * s;
            best = l;
        }
    }
    return best;
}

int modified_diagnostic_horizon(const SearchProblem &problem) {
    return static_cast<int>(std::ceil(r_mod(problem))) + 3;
}

RunTrace run_modified(const SearchProblem &problem, std::optional<int> max_steps, const Limits &limits) {
    if (max_steps && *max_steps < 0) {
        throw PreconditionError("max_steps must be nonnegative");
    }
    const int last = max_steps ? *max_steps : modified_best_step(problem);
    const double half = theta(problem) / 2.0;

    RunTrace trace;
    trace.algorithm = Algorithm::Modified;
    trace.n = problem.n();
    trace.N = problem.N();
    trace.M = problem.M();
    trace.marked.assign(problem.marked().begin(), problem.marked().end());
    trace.axis_copied_from_state = true;
    trace.entries.reserve(last + 1);

    StateVector state = uniform_superposition(problem.n(), limits);
    for (int l = 0; l <= last; l++) {
        if (l > 0) {
            state = modified_step(state, problem);
        }
        trace.entries.push_back(TraceEntry{
            .step = l,
            .predicted_angle = std::pow(3.0, l) * half,
            .measured_angle = measured_angle(problem, state),
            .success_prob = success_probability(problem, state),
        });
    }
    return trace;
}

}  // namespace qreflect
