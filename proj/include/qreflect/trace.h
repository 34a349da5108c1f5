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

#ifndef QREFLECT_TRACE_H
#define QREFLECT_TRACE_H

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace qreflect {

enum class Algorithm { Standard, Modified, Degraded };

std::string_view algorithm_name(Algorithm a);
/// Throws ConfigError for an unknown name.
Algorithm parse_algorithm(std::string_view name);

struct TraceEntry {
    int step = 0;
    double predicted_angle = 0;
    double measured_angle = 0;
    /// Total probability on marked indices. For degraded runs, the mean over trials.
    double success_prob = 0;
    /// Sample standard deviation over trials. Zero for deterministic runs.
    double success_prob_std = 0;

    bool operator==(const TraceEntry &) const = default;
};

/// Per-step record of one search run, starting at step 0 (the initial state).
struct RunTrace {
    Algorithm algorithm = Algorithm::Standard;
    int n = 0;
    uint64_t N = 0;
    uint64_t M = 0;
    std::vector<uint64_t> marked;
    std::vector<TraceEntry> entries;

    /// True when the reflection axis at each step was a copy of the simulated
    /// state. No physical device can do this for an unknown state.
    bool axis_copied_from_state = false;

    /// Degraded runs only.
    std::optional<uint64_t> seed;
    std::optional<int> trials;
    std::optional<double> clone_fidelity;

    /// Step with the highest success probability; ties go to the earliest.
    int best_step() const;
    double best_success_prob() const;

    bool operator==(const RunTrace &) const = default;
};

}  // namespace qreflect

#endif
