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

#include "qreflect/trace.h"

#include <string>

#include "qreflect/errors.h"

namespace qreflect {

std::string_view algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Standard:
            return "standard";
        case Algorithm::Modified:
            return "modified";
        case Algorithm::Degraded:
            return "degraded";
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
    if (name == "standard") {
        return Algorithm::Standard;
    }
    if (name == "modified") {
        return Algorithm::Modified;
    }
    if (name == "degraded") {
        return Algorithm::Degraded;
    }
    throw ConfigError("algorithm", "unknown algorithm tag '" + std::string(name) + "'");
}

int RunTrace::best_step() const {
    int best = 0;
    double best_p = -1;
    for (const auto &e : entries) {
        if (e.success_prob > best_p) {
            best_p = e.success_prob;
            best = e.step;
        }
    }
    return best;
}

double RunTrace::best_success_prob() const {
    double best_p = 0;
    for (const auto &e : entries) {
        best_p = std::max(best_p, e.success_prob);
    }
    return best_p;
}

}  // namespace qreflect
