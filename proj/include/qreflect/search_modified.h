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

#ifndef QREFLECT_SEARCH_MODIFIED_H
#define QREFLECT_SEARCH_MODIFIED_H

#include <optional>

#include "qreflect/state.h"
#include "qreflect/trace.h"

namespace qreflect {

/// K_{l+1} |psi_l> = (2|psi_l><psi_l| - I) O |psi_l>.
///
/// The reflection axis is a plain copy of the simulated amplitudes. That copy
/// stands in for a cloned register holding the unknown state, which quantum
/// mechanics does not provide; the simulation shows what the search would gain
/// if it did.
StateVector modified_step(const StateVector &state, const SearchProblem &problem);

/// log_3(pi / theta). Zero when M = N.
double r_mod(const SearchProblem &problem);

/// argmax over l <= ceil(r_mod) + 1 of sin^2(3^l theta/2), earliest on ties.
///
/// 3^l theta/2 rarely lands on pi/2, so the best step can still have a
/// success probability well below 1.
int modified_best_step(const SearchProblem &problem);

/// ceil(r_mod) + 3: a trace length that shows the oscillation after overshoot.
int modified_diagnostic_horizon(const SearchProblem &problem);

/// Simulates steps 0..L from the uniform superposition, where L is
/// `max_steps` if given and modified_best_step otherwise. Predicted angle at
/// step l is 3^l theta/2.
RunTrace run_modified(const SearchProblem &problem, std::optional<int> max_steps = std::nullopt,
                      const Limits &limits = {});

}  // namespace qreflect

#endif
