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

#include <CLI11.hpp>
#include <cstdio>
#include <map>
#include <string>

#include "qreflect/harness.h"

namespace {

using namespace qreflect;

std::vector<int> parse_int_list(const std::string &text) {
    std::vector<int> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!item.empty()) {
            out.push_back(static_cast<int>(io::parse_int(item)));
        }
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Grover search with reflections about the current state: simulations and analyses"};
    app.require_subcommand(1);

    ExperimentConfig config;
    int n = 0;
    int max_steps = 0;
    int grid = 0;
    double fidelity = 1.0;
    std::string output;
    std::string format = "csv";
    std::string n_list;
    std::string n_range;
    std::string controls = "overlap";
    std::string method = "closed";
    std::vector<uint64_t> marked;

    const std::map<std::string, Command> commands{
        {"standard", Command::Standard},
        {"modified", Command::Modified},
        {"degraded", Command::Degraded},
        {"noreflect-scan", Command::NoReflectScan},
        {"noreflect-optimize", Command::NoReflectOptimize},
        {"determinant", Command::Determinant},
        {"fidelity", Command::Fidelity},
        {"compare-scaling", Command::CompareScaling},
    };
    const std::map<std::string, std::string> help{
        {"standard", "standard Grover search trace"},
        {"modified", "search reflecting about the current (copied) state"},
        {"degraded", "modified search with approximate-clone reflection axes (Monte Carlo)"},
        {"noreflect-scan", "overlap consistency scan for a universal reflection machine"},
        {"noreflect-optimize", "multi-start search for a reflection machine over U(d^2)"},
        {"determinant", "state-family determinant curves (probabilistic-cloning feasibility)"},
        {"fidelity", "universal cloner scaling factor and fidelity table"},
        {"compare-scaling", "best-step counts of both searches over a range of register sizes"},
    };

    std::vector<CLI::App *> subs;
    for (const auto &[name, cmd] : commands) {
        CLI::App *sub = app.add_subcommand(name, help.at(name));
        sub->add_option("-o,--output", output, "output file (default: $QREFLECT_OUTPUT_DIR/<command>.<ext>)");
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--seed", config.seed, "RNG seed");
        sub->add_option("--max-qubits", config.max_qubits, "register size cap");
        switch (cmd) {
            case Command::Standard:
            case Command::Modified:
            case Command::Degraded:
                sub->add_option("--n", n, "qubits in the index register")->required();
                sub->add_option("--M", config.M, "number of marked items");
                sub->add_option("--marked", marked, "explicit marked indices")->delimiter(',');
                sub->add_option("--max-steps", max_steps, "trace length (default: best step)");
                if (cmd == Command::Degraded) {
                    sub->add_option("--trials", config.trials, "Monte Carlo trials");
                    sub->add_option("--fidelity", fidelity, "clone fidelity override (default: F(N))");
                }
                break;
            case Command::NoReflectScan:
                sub->add_option("--grid", grid, "grid resolution over |c| in [0,1]");
                break;
            case Command::NoReflectOptimize:
                sub->add_option("--d", config.d, "control/target dimension");
                sub->add_option("--starts", config.starts, "random restarts");
                sub->add_option("--controls", controls, "single, orthogonal or overlap")
                    ->check(CLI::IsMember({"single", "orthogonal", "overlap"}));
                sub->add_option("--overlap", config.overlap, "|<chi'|chi>| for --controls overlap");
                sub->add_option("--max-iterations", config.max_iterations, "iterations per start");
                break;
            case Command::Determinant:
                sub->add_option("--n-list", n_list, "comma-separated register sizes (default 5,7,9)");
                sub->add_option("--grid", grid, "angles over [0, pi/2]");
                sub->add_option("--method", method, "closed or lu")->check(CLI::IsMember({"closed", "lu"}));
                break;
            case Command::Fidelity:
                sub->add_option("--grid", grid, "log-spaced dimensions");
                sub->add_option("--max-dim", config.fidelity_max_dim, "largest dimension N");
                break;
            case Command::CompareScaling:
                sub->add_option("--n-range", n_range, "from:to (default 2:16)");
                sub->add_option("--M", config.M, "number of marked items");
                break;
        }
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        // --help and friends exit 0; every malformed command line is a config error.
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        CLI::App *sub = nullptr;
        for (auto *candidate : subs) {
            if (candidate->parsed()) {
                sub = candidate;
            }
        }
        config.command = commands.at(sub->get_name());
        auto given = [&](const char *flag) {
            return sub->get_option_no_throw(flag) != nullptr && sub->count(flag) > 0;
        };
        // The optimizer result is a JSON document; csv is only the default elsewhere.
        if (config.command == Command::NoReflectOptimize && !given("--format")) {
            format = "json";
        }
        config.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
        if (given("--n")) {
            config.n = n;
        }
        if (given("--max-steps")) {
            config.max_steps = max_steps;
        }
        if (given("--grid")) {
            config.grid = grid;
        }
        if (given("--fidelity")) {
            config.fidelity = fidelity;
        }
        if (given("--output")) {
            config.output = output;
        }
        config.marked = marked;
        if (!n_list.empty()) {
            config.n_list = parse_int_list(n_list);
        }
        if (!n_range.empty()) {
            auto colon = n_range.find(':');
            if (colon == std::string::npos) {
                throw ConfigError("n_range", "n_range: expected from:to");
            }
            config.n_from = static_cast<int>(io::parse_int(n_range.substr(0, colon)));
            config.n_to = static_cast<int>(io::parse_int(n_range.substr(colon + 1)));
        }
        config.controls = controls == "single"       ? ControlSet::Single
                          : controls == "orthogonal" ? ControlSet::Orthogonal
                                                     : ControlSet::Overlap;
        config.method = method == "lu" ? DeterminantMethod::LU : DeterminantMethod::Closed;
    } catch (const Error &ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return kExitConfig;
    }

    RunResult result = run(config);
    if (result.exit_code != kExitOk && !result.error.empty()) {
        std::fprintf(stderr, "error: %s\n", result.error.c_str());
        return result.exit_code;
    }
    std::printf("%s\n", result.summary.c_str());
    return result.exit_code;
}
