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

#ifndef QREFLECT_SCHEMAS_H
#define QREFLECT_SCHEMAS_H

#include <json.hpp>
#include <vector>

#include "qreflect/cloning.h"
#include "qreflect/io.h"
#include "qreflect/no_reflection.h"
#include "qreflect/trace.h"

namespace qreflect {

using Json = nlohmann::ordered_json;

// Run traces.
//   CSV:  step,predicted_angle,measured_angle,success_prob[,success_prob_std]
//         (the last column only for degraded runs)
//   JSON: {"algorithm", "n", "N", "M", "marked", "axis_copied_from_state",
//          ["seed", "trials", "clone_fidelity",] "best_step", "best_success_prob",
//          "entries": [{"step", "predicted_angle", "measured_angle",
//                       "success_prob", ["success_prob_std"]}]}
io::CsvTable trace_to_csv(const RunTrace &trace);
std::vector<TraceEntry> trace_entries_from_csv(const io::CsvTable &table);
Json trace_to_json(const RunTrace &trace);
RunTrace trace_from_json(const Json &doc);

// Determinant curves. CSV: n,phi,det_signed,det_abs
io::CsvTable determinant_to_csv(const std::vector<DeterminantRow> &rows);
std::vector<DeterminantRow> determinant_from_csv(const io::CsvTable &table);

// Consistency scan. CSV: abs_c,t1,t2,discrepancy,singular
// Singular rows leave the undefined values empty.
io::CsvTable scan_to_csv(const std::vector<ScanPoint> &scan);

// Cloner quality. CSV: N,s,F,F_minus_half
io::CsvTable fidelity_to_csv(const std::vector<CloneQuality> &rows);
std::vector<CloneQuality> fidelity_from_csv(const io::CsvTable &table);

// Reflection machine search. JSON: {"d", "control_overlaps", "best_residual",
// "converged", "starts", "seed", "best_start", "total_iterations", "record"}
Json machine_result_to_json(const ReflectionMachineResult &result);

/// Generic JSON rendering of a CSV table: {"columns": [...], "rows": [[...]]},
/// numeric cells as numbers and empty cells as null.
Json table_to_json(const io::CsvTable &table);
io::CsvTable table_from_json(const Json &doc);

}  // namespace qreflect

#endif
