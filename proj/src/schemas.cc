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

#include "qreflect/schemas.h"

#include <string>

#include "qreflect/errors.h"

namespace qreflect {

using io::format_double;
using io::parse_double;
using io::parse_int;

io::CsvTable trace_to_csv(const RunTrace &trace) {
    const bool with_std = trace.algorithm == Algorithm::Degraded;
    io::CsvTable t;
    t.header = {"step", "predicted_angle", "measured_angle", "success_prob"};
    if (with_std) {
        t.header.push_back("success_prob_std");
    }
    for (const auto &e : trace.entries) {
        std::vector<std::string> row{std::to_string(e.step), format_double(e.predicted_angle),
                                     format_double(e.measured_angle), format_double(e.success_prob)};
        if (with_std) {
            row.push_back(format_double(e.success_prob_std));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::vector<TraceEntry> trace_entries_from_csv(const io::CsvTable &table) {
    const size_t step = table.column("step");
    const size_t predicted = table.column("predicted_angle");
    const size_t measured = table.column("measured_angle");
    const size_t prob = table.column("success_prob");
    std::optional<size_t> sd;
    for (size_t k = 0; k < table.header.size(); k++) {
        if (table.header[k] == "success_prob_std") {
            sd = k;
        }
    }
    std::vector<TraceEntry> out;
    for (const auto &row : table.rows) {
        out.push_back(TraceEntry{
            .step = static_cast<int>(parse_int(row[step])),
            .predicted_angle = parse_double(row[predicted]),
            .measured_angle = parse_double(row[measured]),
            .success_prob = parse_double(row[prob]),
            .success_prob_std = sd ? parse_double(row[*sd]) : 0.0,
        });
    }
    return out;
}

Json trace_to_json(const RunTrace &trace) {
    const bool with_std = trace.algorithm == Algorithm::Degraded;
    Json doc;
    doc["algorithm"] = std::string(algorithm_name(trace.algorithm));
    doc["n"] = trace.n;
    doc["N"] = trace.N;
    doc["M"] = trace.M;
    doc["marked"] = trace.marked;
    doc["axis_copied_from_state"] = trace.axis_copied_from_state;
    if (trace.seed) {
        doc["seed"] = *trace.seed;
    }
    if (trace.trials) {
        doc["trials"] = *trace.trials;
    }
    if (trace.clone_fidelity) {
        doc["clone_fidelity"] = *trace.clone_fidelity;
    }
    doc["best_step"] = trace.best_step();
    doc["best_success_prob"] = trace.best_success_prob();
    Json entries = Json::array();
    for (const auto &e : trace.entries) {
        Json row;
        row["step"] = e.step;
        row["predicted_angle"] = e.predicted_angle;
        row["measured_angle"] = e.measured_angle;
        row["success_prob"] = e.success_prob;
        if (with_std) {
            row["success_prob_std"] = e.success_prob_std;
        }
        entries.push_back(std::move(row));
    }
    doc["entries"] = std::move(entries);
    return doc;
}

RunTrace trace_from_json(const Json &doc) {
    try {
        RunTrace t;
        t.algorithm = parse_algorithm(doc.at("algorithm").get<std::string>());
        t.n = doc.at("n").get<int>();
        t.N = doc.at("N").get<uint64_t>();
        t.M = doc.at("M").get<uint64_t>();
        t.marked = doc.at("marked").get<std::vector<uint64_t>>();
        t.axis_copied_from_state = doc.at("axis_copied_from_state").get<bool>();
        if (doc.contains("seed")) {
            t.seed = doc["seed"].get<uint64_t>();
        }
        if (doc.contains("trials")) {
            t.trials = doc["trials"].get<int>();
        }
        if (doc.contains("clone_fidelity")) {
            t.clone_fidelity = doc["clone_fidelity"].get<double>();
        }
        for (const auto &row : doc.at("entries")) {
            t.entries.push_back(TraceEntry{
                .step = row.at("step").get<int>(),
                .predicted_angle = row.at("predicted_angle").get<double>(),
                .measured_angle = row.at("measured_angle").get<double>(),
                .success_prob = row.at("success_prob").get<double>(),
                .success_prob_std = row.contains("success_prob_std") ? row["success_prob_std"].get<double>() : 0.0,
            });
        }
        return t;
    } catch (const nlohmann::json::exception &ex) {
        throw FormatError(std::string("malformed trace JSON: ") + ex.what());
    }
}

io::CsvTable determinant_to_csv(const std::vector<DeterminantRow> &rows) {
    io::CsvTable t;
    t.header = {"n", "phi", "det_signed", "det_abs"};
    for (const auto &r : rows) {
        t.rows.push_back({std::to_string(r.n), format_double(r.phi), format_double(r.det),
                          format_double(std::abs(r.det))});
    }
    return t;
}

std::vector<DeterminantRow> determinant_from_csv(const io::CsvTable &table) {
    const size_t n = table.column("n");
    const size_t phi = table.column("phi");
    const size_t det = table.column("det_signed");
    std::vector<DeterminantRow> out;
    for (const auto &row : table.rows) {
        out.push_back(DeterminantRow{static_cast<int>(parse_int(row[n])), parse_double(row[phi]),
                                     parse_double(row[det])});
    }
    return out;
}

io::CsvTable scan_to_csv(const std::vector<ScanPoint> &scan) {
    io::CsvTable t;
    t.header = {"abs_c", "t1", "t2", "discrepancy", "singular"};
    for (const auto &p : scan) {
        const auto &k = p.constraint;
        const bool singular = !k.t1 || !k.t2;
        // The scan runs over real c, so t1 and t2 are real.
        t.rows.push_back({format_double(p.abs_c), k.t1 ? format_double(k.t1->real()) : "",
                          k.t2 ? format_double(k.t2->real()) : "",
                          k.discrepancy ? format_double(*k.discrepancy) : "", singular ? "true" : "false"});
    }
    return t;
}

io::CsvTable fidelity_to_csv(const std::vector<CloneQuality> &rows) {
    io::CsvTable t;
    t.header = {"N", "s", "F", "F_minus_half"};
    for (const auto &q : rows) {
        t.rows.push_back({std::to_string(q.N), format_double(q.s), format_double(q.F), format_double(q.F - 0.5)});
    }
    return t;
}

std::vector<CloneQuality> fidelity_from_csv(const io::CsvTable &table) {
    const size_t n = table.column("N");
    const size_t s = table.column("s");
    const size_t f = table.column("F");
    std::vector<CloneQuality> out;
    for (const auto &row : table.rows) {
        out.push_back(CloneQuality{static_cast<uint64_t>(parse_int(row[n])), parse_double(row[s]), parse_double(row[f])});
    }
    return out;
}

Json machine_result_to_json(const ReflectionMachineResult &r) {
    Json doc;
    doc["d"] = r.d;
    doc["control_overlaps"] = r.control_overlaps;
    doc["best_residual"] = r.best_residual;
    doc["converged"] = r.converged;
    doc["starts"] = r.starts;
    doc["seed"] = r.seed;
    doc["best_start"] = r.best_start;
    doc["total_iterations"] = r.total_iterations;
    doc["record"] = r.record;
    return doc;
}

Json table_to_json(const io::CsvTable &table) {
    Json doc;
    doc["columns"] = table.header;
    Json rows = Json::array();
    for (const auto &row : table.rows) {
        Json cells = Json::array();
        for (const auto &cell : row) {
            if (cell.empty()) {
                cells.push_back(nullptr);
                continue;
            }
            try {
                cells.push_back(parse_double(cell));
            } catch (const FormatError &) {
                cells.push_back(cell);
            }
        }
        rows.push_back(std::move(cells));
    }
    doc["rows"] = std::move(rows);
    return doc;
}

io::CsvTable table_from_json(const Json &doc) {
    try {
        io::CsvTable t;
        t.header = doc.at("columns").get<std::vector<std::string>>();
        for (const auto &cells : doc.at("rows")) {
            std::vector<std::string> row;
            for (const auto &cell : cells) {
                if (cell.is_null()) {
                    row.emplace_back();
                } else if (cell.is_number()) {
                    row.push_back(format_double(cell.get<double>()));
                } else {
                    row.push_back(cell.get<std::string>());
                }
            }
            if (row.size() != t.header.size()) {
                throw FormatError("JSON table row width does not match its columns");
            }
            t.rows.push_back(std::move(row));
        }
        return t;
    } catch (const nlohmann::json::exception &ex) {
        throw FormatError(std::string("malformed table JSON: ") + ex.what());
    }
}

}  // namespace qreflect
