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

#ifndef QREFLECT_HARNESS_H
#define QREFLECT_HARNESS_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qreflect/cloning.h"
#include "qreflect/io.h"

namespace qreflect {

enum class Command {
    Standard,
    Modified,
    Degraded,
    NoReflectScan,
    NoReflectOptimize,
    Determinant,
    Fidelity,
    CompareScaling,
};

std::string_view command_name(Command c);
/// Throws ConfigError naming "command".
Command parse_command(std::string_view name);

enum class OutputFormat { Csv, Json };
enum class ControlSet { Single, Orthogonal, Overlap };

inline constexpr uint64_t kDefaultSeed = 20240917;

/// Environment variable naming the directory used when no output path is given.
inline constexpr const char *kOutputDirEnv = "QREFLECT_OUTPUT_DIR";

struct ExperimentConfig {
    Command command = Command::Standard;

    // Search problems.
    std::optional<int> n;
    uint64_t M = 1;
    /// Explicit marked indices; when empty, M indices spread evenly over [0, N).
    std::vector<uint64_t> marked;
    std::optional<int> max_steps;

    // Degraded runs.
    int trials = 200;
    std::optional<double> fidelity;

    uint64_t seed = kDefaultSeed;

    /// Grid size. Defaults: determinant 200, noreflect-scan 10000, fidelity 25.
    std::optional<int> grid;

    // Reflection-machine search.
    int starts = 20;
    int d = 2;
    ControlSet controls = ControlSet::Overlap;
    double overlap = 0.9;
    int max_iterations = 3000;

    // Determinant curves.
    std::vector<int> n_list{5, 7, 9};
    DeterminantMethod method = DeterminantMethod::Closed;

    // Fidelity table: log-spaced N in [2, fidelity_max_dim].
    uint64_t fidelity_max_dim = 1000000;

    // compare-scaling.
    int n_from = 2;
    int n_to = 16;

    int max_qubits = 24;

    std::optional<std::filesystem::path> output;
    OutputFormat format = OutputFormat::Csv;
};

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitConfig = 2,
    kExitCapacity = 3,
    kExitNotConverged = 4,
};

struct RunResult {
    int exit_code = kExitOk;
    /// One-line key metric, printed on success.
    std::string summary;
    /// Error text when exit_code != 0 (empty for kExitNotConverged).
    std::string error;
    std::optional<std::filesystem::path> output_path;
};

/// Throws ConfigError (naming the field) or CapacityError.
void validate(const ExperimentConfig &config);

/// Marked set used for a config: the explicit list, or M evenly spread
/// indices, the last of which is N - 1.
std::vector<uint64_t> marked_indices(const ExperimentConfig &config, int n);

/// Output path: the configured one, or <$QREFLECT_OUTPUT_DIR or .>/<command>.<ext>.
std::filesystem::path output_path(const ExperimentConfig &config);

/// Validates, dispatches, writes the artifact atomically. Never throws.
RunResult run(const ExperimentConfig &config);

/// Step counts of both algorithms over a range of register sizes, by
/// simulation: each best step is the argmax of the simulated success
/// probability over the algorithm's search window.
struct ScalingRow {
    int n;
    int standard_best_step;
    int modified_best_step;
    double r_mod;
    uint64_t iteration_bound;
};

std::vector<ScalingRow> compare_scaling(int n_from, int n_to, uint64_t M, const Limits &limits = {});

io::CsvTable scaling_to_csv(const std::vector<ScalingRow> &rows);

}  // namespace qreflect

#endif
