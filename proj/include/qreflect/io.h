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

#ifndef QREFLECT_IO_H
#define QREFLECT_IO_H

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace qreflect::io {

/// Locale-independent rendering with 17 significant digits ('.' separator),
/// so a parse gives back the same double.
std::string format_double(double x);

/// Throws FormatError unless the whole field is a number.
double parse_double(std::string_view field);
long long parse_int(std::string_view field);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Column index by name. Throws FormatError if absent.
    size_t column(std::string_view name) const;
};

/// RFC 4180: fields containing a comma, quote, CR or LF are quoted, quotes
/// doubled. Lines end with "\n".
std::string write_csv(const CsvTable &table);

/// Accepts "\n" or "\r\n" line ends. Throws FormatError on ragged rows,
/// unterminated quotes, or an empty document.
CsvTable parse_csv(std::string_view text);

/// Writes to a sibling temporary and renames it over `path`, so readers see
/// either the old file or the complete new one.
void write_file_atomic(const std::filesystem::path &path, std::string_view content);

std::string read_file(const std::filesystem::path &path);

}  // namespace qreflect::io

#endif
