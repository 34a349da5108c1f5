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

#include "qreflect/harness.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>

#include "qreflect/no_reflection.h"
#include "qreflect/schemas.h"
#include "qreflect/search_modified.h"
#include "qreflect/search_standard.h"

namespace qreflect {

namespace {

struct CommandInfo {
    Command command;
    std::string_view name;
};

constexpr CommandInfo kCommands[] = {
    {Command::Standard, "standard"},
    {Command::Modified, "modified"},
    {Command::Degraded, "degraded"},
    {Command::NoReflectScan, "noreflect-scan"},
    {Command::NoReflectOptimize, "noreflect-optimize"},
    {Command::Determinant, "determinant"},
    {Command::Fidelity, "fidelity"},
    {Command::CompareScaling, "compare-scaling"},
};

// Caps that are not memory-driven.
constexpr int kMaxTrials = 1000000;
constexpr int kMaxStarts = 100000;
constexpr int kMaxMachineDim = 8;
constexpr int kMaxGrid = 10000000;
constexpr int kMaxSteps = 100000;

std::string fmt(const char *pattern, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), pattern, value);
    return buf;
}

int grid_or(const ExperimentConfig &c, int fallback) {
    return c.grid ? *c.grid : fallback;
}

Limits limits_of(const ExperimentConfig &c) {
    Limits l;
    l.max_qubits = c.max_qubits;
    return l;
}

}  // namespace

std::string_view command_name(Command c) {
    for (const auto &info : kCommands) {
        if (info.command == c) {
            return info.name;
        }
    }
    return "unknown";
}

Command parse_command(std::string_view name) {
    for (const auto &info : kCommands) {
        if (info.name == name) {
            return info.command;
        }
    }
    throw ConfigError("command", "unknown command '" + std::string(name) + "'");
}

void validate(const ExperimentConfig &c) {
    auto require = [](bool ok, const char *field, const std::string &why) {
        if (!ok) {
            throw ConfigError(field, std::string(field) + ": " + why);
        }
    };
    require(c.max_qubits >= 1 && c.max_qubits <= 40, "max_qubits", "must lie in [1, 40]");

    const bool search = c.command == Command::Standard || c.command == Command::Modified ||
                        c.command == Command::Degraded;
    if (search) {
        require(c.n.has_value(), "n", "required for " + std::string(command_name(c.command)));
        require(*c.n >= 1, "n", "must be at least 1");
        if (*c.n > c.max_qubits) {
            throw CapacityError("n: " + std::to_string(*c.n) + " exceeds the cap of " +
                                std::to_string(c.max_qubits) + " qubits");
        }
        const uint64_t N = uint64_t{1} << *c.n;
        if (c.marked.empty()) {
            require(c.M >= 1 && c.M <= N, "M", "must lie in [1, N=" + std::to_string(N) + "]");
        } else {
            std::set<uint64_t> unique(c.marked.begin(), c.marked.end());
            require(unique.size() == c.marked.size(), "marked", "indices must be distinct");
            require(*unique.rbegin() < N, "marked", "index out of range for N=" + std::to_string(N));
        }
        if (c.max_steps) {
            require(*c.max_steps >= 0 && *c.max_steps <= kMaxSteps, "max_steps",
                    "must lie in [0, " + std::to_string(kMaxSteps) + "]");
        }
    }
    if (c.command == Command::Degraded) {
        require(c.trials >= 1 && c.trials <= kMaxTrials, "trials", "must lie in [1, " + std::to_string(kMaxTrials) + "]");
        if (c.fidelity) {
            require(*c.fidelity >= 0.0 && *c.fidelity <= 1.0, "fidelity", "must lie in [0, 1]");
        }
    }
    if (c.command == Command::NoReflectScan) {
        require(grid_or(c, 10) >= 10 && grid_or(c, 10) <= kMaxGrid, "grid", "must lie in [10, 10^7]");
    }
    if (c.command == Command::NoReflectOptimize) {
        require(c.d >= 2 && c.d <= kMaxMachineDim, "d", "must lie in [2, " + std::to_string(kMaxMachineDim) + "]");
        require(c.starts >= 1 && c.starts <= kMaxStarts, "starts", "must lie in [1, " + std::to_string(kMaxStarts) + "]");
        require(c.max_iterations >= 1, "max_iterations", "must be positive");
        require(c.overlap >= 0.0 && c.overlap <= 1.0, "overlap", "must lie in [0, 1]");
        require(c.format == OutputFormat::Json, "format", "noreflect-optimize only writes JSON");
    }
    if (c.command == Command::Determinant) {
        require(!c.n_list.empty(), "n_list", "must name at least one register size");
        require(grid_or(c, 200) >= 50 && grid_or(c, 200) <= kMaxGrid, "grid", "must lie in [50, 10^7]");
        for (int n : c.n_list) {
            require(n >= 2, "n_list", "register sizes must be at least 2");
            if (n > c.max_qubits) {
                throw CapacityError("n_list: " + std::to_string(n) + " exceeds the cap of " +
                                    std::to_string(c.max_qubits) + " qubits");
            }
        }
    }
    if (c.command == Command::Fidelity) {
        require(grid_or(c, 25) >= 2 && grid_or(c, 25) <= kMaxGrid, "grid", "must lie in [2, 10^7]");
        require(c.fidelity_max_dim >= 2, "fidelity_max_dim", "must be at least 2");
    }
    if (c.command == Command::CompareScaling) {
        require(c.n_from >= 1 && c.n_from <= c.n_to, "n_range", "needs 1 <= from <= to");
        if (c.n_to > c.max_qubits) {
            throw CapacityError("n_range: " + std::to_string(c.n_to) + " exceeds the cap of " +
                                std::to_string(c.max_qubits) + " qubits");
        }
        require(c.M >= 1 && c.M <= (uint64_t{1} << c.n_from), "M", "must lie in [1, 2^from]");
    }
}

std::vector<uint64_t> marked_indices(const ExperimentConfig &c, int n) {
    if (!c.marked.empty()) {
        return c.marked;
    }
    const uint64_t N = uint64_t{1} << n;
    std::vector<uint64_t> out;
    out.reserve(c.M);
    for (uint64_t j = 0; j < c.M; j++) {
        out.push_back((j + 1) * N / c.M - 1);
    }
    return out;
}

std::filesystem::path output_path(const ExperimentConfig &c) {
    if (c.output) {
        return *c.output;
    }
    std::filesystem::path dir = ".";
    if (const char *env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') {
        dir = env;
    }
    const char *ext = c.format == OutputFormat::Json ? ".json" : ".csv";
    return dir / (std::string(command_name(c.command)) + ext);
}

std::vector<ScalingRow> compare_scaling(int n_from, int n_to, uint64_t M, const Limits &limits) {
    std::vector<ScalingRow> rows;
    for (int n = n_from; n <= n_to; n++) {
        ExperimentConfig c;
        c.M = M;
        SearchProblem problem(n, marked_indices(c, n), limits);
        const uint64_t bound = iteration_bound(problem);
        const double rm = r_mod(problem);
        const int window = static_cast<int>(std::ceil(rm)) + 1;
        rows.push_back(ScalingRow{
            n,
            run_standard(problem, static_cast<int>(bound), limits).best_step(),
            run_modified(problem, window, limits).best_step(),
            rm,
            bound,
        });
    }
    return rows;
}

io::CsvTable scaling_to_csv(const std::vector<ScalingRow> &rows) {
    io::CsvTable t;
    t.header = {"n", "standard_best_step", "modified_best_step", "r_mod", "iteration_bound"};
    for (const auto &r : rows) {
        t.rows.push_back({std::to_string(r.n), std::to_string(r.standard_best_step),
                          std::to_string(r.modified_best_step), io::format_double(r.r_mod),
                          std::to_string(r.iteration_bound)});
    }
    return t;
}

namespace {

std::string render(const ExperimentConfig &c, const io::CsvTable &table) {
    if (c.format == OutputFormat::Json) {
        Json doc;
        doc["command"] = std::string(command_name(c.command));
        doc["table"] = table_to_json(table);
        return doc.dump(2) + "\n";
    }
    return io::write_csv(table);
}

std::string render_trace(const ExperimentConfig &c, const RunTrace &trace) {
    if (c.format == OutputFormat::Json) {
        return trace_to_json(trace).dump(2) + "\n";
    }
    return io::write_csv(trace_to_csv(trace));
}

struct Produced {
    std::string content;
    std::string summary;
    bool converged = true;
};

Produced produce(const ExperimentConfig &c) {
    const Limits limits = limits_of(c);
    switch (c.command) {
        case Command::Standard: {
            SearchProblem problem(*c.n, marked_indices(c, *c.n), limits);
            RunTrace trace = run_standard(problem, c.max_steps, limits);
            return {render_trace(c, trace), "best k=" + std::to_string(trace.best_step()) +
                                                fmt(" p=%.6f", trace.best_success_prob()) +
                                                " bound=" + std::to_string(iteration_bound(problem))};
        }
        case Command::Modified: {
            SearchProblem problem(*c.n, marked_indices(c, *c.n), limits);
            RunTrace trace = run_modified(problem, c.max_steps, limits);
            return {render_trace(c, trace), "best l=" + std::to_string(trace.best_step()) +
                                                fmt(" p=%.6f", trace.best_success_prob()) +
                                                fmt(" r_mod=%.6f", r_mod(problem))};
        }
        case Command::Degraded: {
            SearchProblem problem(*c.n, marked_indices(c, *c.n), limits);
            DegradedOptions opts{c.fidelity, c.max_steps};
            RunTrace trace = run_degraded_modified(problem, c.trials, c.seed, opts, limits);
            const TraceEntry &last = trace.entries.back();
            return {render_trace(c, trace), "terminal l=" + std::to_string(last.step) +
                                                fmt(" mean p=%.6f", last.success_prob) +
                                                fmt(" std=%.6f", last.success_prob_std) +
                                                fmt(" F=%.6f", *trace.clone_fidelity)};
        }
        case Command::NoReflectScan: {
            auto scan = consistency_scan(grid_or(c, 10000));
            auto zeros = consistency_zero_set(scan);
            std::string z;
            for (double v : zeros) {
                z += (z.empty() ? "" : ", ") + io::format_double(v);
            }
            return {render(c, scan_to_csv(scan)), "zero set {" + z + "}; singular at |c|^2 = 1/2, 3/4"};
        }
        case Command::NoReflectOptimize: {
            const auto d = static_cast<size_t>(c.d);
            std::vector<StateVector> controls;
            switch (c.controls) {
                case ControlSet::Single:
                    controls = {basis_state(d, 0)};
                    break;
                case ControlSet::Orthogonal:
                    controls = {basis_state(d, 0), basis_state(d, 1)};
                    break;
                case ControlSet::Overlap:
                    controls = controls_with_overlap(d, c.overlap);
                    break;
            }
            OptimizerOptions opts;
            opts.starts = c.starts;
            opts.seed = c.seed;
            opts.max_iterations = c.max_iterations;
            auto result = optimize_reflection_machine(d, controls, spanning_targets(d), opts);
            return {machine_result_to_json(result).dump(2) + "\n",
                    fmt("best residual=%.6e", result.best_residual) + " converged=" +
                        (result.converged ? "yes" : "no") + " starts=" + std::to_string(result.starts),
                    result.converged};
        }
        case Command::Determinant: {
            auto rows = determinant_curve(c.n_list, grid_or(c, 200), c.method, limits);
            double end = rows.back().det;
            return {render(c, determinant_to_csv(rows)),
                    "rows=" + std::to_string(rows.size()) + fmt(" det(pi/2)=%.12g", end)};
        }
        case Command::Fidelity: {
            const int points = grid_or(c, 25);
            std::vector<CloneQuality> rows;
            const double top = std::log(static_cast<double>(c.fidelity_max_dim));
            const double bottom = std::log(2.0);
            uint64_t prev = 0;
            for (int i = 0; i < points; i++) {
                double x = points == 1 ? bottom : bottom + (top - bottom) * i / (points - 1);
                auto N = static_cast<uint64_t>(std::llround(std::exp(x)));
                if (i == points - 1) {
                    N = c.fidelity_max_dim;
                }
                if (N > prev) {
                    rows.push_back(clone_quality(N));
                    prev = N;
                }
            }
            return {render(c, fidelity_to_csv(rows)), fmt("F(2)=%.6f", rows.front().F) + " F(" +
                                                          std::to_string(rows.back().N) +
                                                          fmt(")=%.9f", rows.back().F)};
        }
        case Command::CompareScaling: {
            auto rows = compare_scaling(c.n_from, c.n_to, c.M, limits);
            const auto &last = rows.back();
            return {render(c, scaling_to_csv(rows)),
                    "n=" + std::to_string(c.n_from) + ".." + std::to_string(c.n_to) + " at n=" +
                        std::to_string(last.n) + ": standard k=" + std::to_string(last.standard_best_step) +
                        " modified l=" + std::to_string(last.modified_best_step)};
        }
    }
    throw ConfigError("command", "unhandled command");
}

}  // namespace

RunResult run(const ExperimentConfig &config) {
    RunResult result;
    try {
        validate(config);
        Produced p = produce(config);
        auto path = output_path(config);
        io::write_file_atomic(path, p.content);
        result.output_path = path;
        result.summary = std::move(p.summary);
        result.exit_code = p.converged ? kExitOk : kExitNotConverged;
    } catch (const ConfigError &ex) {
        result.exit_code = kExitConfig;
        result.error = ex.what();
    } catch (const CapacityError &ex) {
        result.exit_code = kExitCapacity;
        result.error = ex.what();
    } catch (const std::exception &ex) {
        result.exit_code = kExitFailure;
        result.error = ex.what();
    }
    return result;
}

}  // namespace qreflect
