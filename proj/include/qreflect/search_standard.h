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

#ifndef QREFLECT_SEARCH_STANDARD_H
#define QREFLECT_SEARCH_STANDARD_H

#include <cstdint>
#include <optional>

#include "qreflect/state.h"
#include "qreflect/trace.h"

namespace qreflect {

/// Rotation per Grover step: theta = 2 asin(sqrt(M/N)), in (0, pi].
double theta(const SearchProblem &problem);

/// One Grover iteration (2|initial><initial| - I) O applied to `state`.
StateVector grover_step(const StateVector &state, const SearchProblem &problem, const StateVector &initial);

/// ceil((pi/4) sqrt(N/M)).
///
/// The tighter ceil(pi/(2 theta)) differs only through the small-angle
/// approximation sin(theta/2) ~ theta/2; this is the explicit sqrt(N/M) form.
uint64_t iteration_bound(const SearchProblem &problem);

/// argmax over k <= iteration_bound of sin^2((2k+1) theta/2), earliest on ties.
int standard_best_step(const SearchProblem &problem);

/// Simulates steps 0..K from the uniform superposition, where K is
/// `max_steps` if given and standard_best_step otherwise. Predicted angle at
/// step k is (2k+1) theta/2.
RunTrace run_standard(const SearchProblem &problem, std::optional<int> max_steps = std::nullopt,
                      const Limits &limits = {});

/// Measured in-plane angle used by the trace builders. For M = N every state
/// lies along |beta>, reported as pi/2.
double measured_angle(const SearchProblem &problem, const StateVector &state);

}  // namespace qreflect

#endif
