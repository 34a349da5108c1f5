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

#include "qreflect/io.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "qreflect/errors.h"

namespace qreflect::io {

std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    if (ec != std::errc{}) {
        throw FormatError("could not format double");
    }
    return std::string(buf, end);
}

double parse_double(std::string_view field) {
    double out = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
        throw FormatError("not a number: '" + std::string(field) + "'");
    }
    return out;
}

long long parse_int(std::string_view field) {
    long long out = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
        throw FormatError("not an integer: '" + std::string(field) + "'");
    }
    return out;
}

size_t CsvTable::column(std::string_view name) const {
    for (size_t k = 0; k < header.size(); k++) {
        if (header[k] == name) {
            return k;
        }
    }
    throw FormatError("missing column '" + std::string(name) + "'");
}

namespace {

void append_field(std::string &out, const std::string &field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) {
        out += field;
        return;
    }
    out += '"';
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
}

void append_row(std::string &out, const std::vector<std::string> &row) {
    for (size_t k = 0; k < row.size(); k++) {
        if (k > 0) {
            out += ',';
        }
        append_field(out, row[k]);
    }
    out += '\n';
}

}  // namespace

std::string write_csv(const CsvTable &table) {
    std::string out;
    append_row(out, table.header);
    for (const auto &row : table.rows) {
        append_row(out, row);
    }
    return out;
}

CsvTable parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool field_started = false;
    size_t line = 1;

    auto end_field = [&] {
        record.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_record = [&] {
        end_field();
        records.push_back(std::move(record));
        record.clear();
    };

    for (size_t i = 0; i < text.size(); i++) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    i++;
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') {
                    line++;
                }
                field += c;
            }
            continue;
        }
        if (c == '"' && !field_started && field.empty()) {
            quoted = true;
            field_started = true;
        } else if (c == ',') {
            end_field();
        } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
            // handled by the following '\n'
        } else if (c == '\n') {
            end_record();
            line++;
        } else {
            field += c;
            field_started = true;
        }
    }
    if (quoted) {
        throw FormatError("unterminated quoted field at line " + std::to_string(line));
    }
    if (field_started || !field.empty() || !record.empty()) {
        end_record();
    }
    if (records.empty()) {
        throw FormatError("empty CSV document");
    }
    CsvTable table;
    table.header = std::move(records.front());
    for (size_t r = 1; r < records.size(); r++) {
        if (records[r].size() != table.header.size()) {
            throw FormatError("line " + std::to_string(r + 1) + " has " + std::to_string(records[r].size()) +
                              " fields, header has " + std::to_string(table.header.size()));
        }
        table.rows.push_back(std::move(records[r]));
    }
    return table;
}

void write_file_atomic(const std::filesystem::path &path, std::string_view content) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) {
        std::error_code dir_ec;
        fs::create_directories(path.parent_path(), dir_ec);
        if (dir_ec) {
            throw Error("cannot create '" + path.parent_path().string() + "': " + dir_ec.message());
        }
    }
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error("cannot open '" + tmp.string() + "' for writing");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            throw Error("write to '" + tmp.string() + "' failed");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error("cannot move '" + tmp.string() + "' to '" + path.string() + "': " + ec.message());
    }
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace qreflect::io
