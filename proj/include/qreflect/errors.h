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

#ifndef QREFLECT_ERRORS_H
#define QREFLECT_ERRORS_H

#include <stdexcept>
#include <string>

namespace qreflect {

/// Base of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A requested size exceeds the configured memory cap (or is below 1 qubit).
struct CapacityError : Error {
    using Error::Error;
};

/// Operands have incompatible dimensions.
struct ShapeError : Error {
    using Error::Error;
};

/// An operand violates a documented precondition (e.g. a non-normalized axis).
struct PreconditionError : Error {
    using Error::Error;
};

/// The solution/non-solution plane is undefined because M = 0 or M = N.
struct DegeneratePlaneError : Error {
    using Error::Error;
};

/// Malformed input to one of the file-format parsers.
struct FormatError : Error {
    using Error::Error;
};

/// Bad experiment configuration. `field()` names the offending setting.
struct ConfigError : Error {
    ConfigError(std::string field, const std::string &message) : Error(message), field_(std::move(field)) {
    }
    const std::string &field() const {
        return field_;
    }

   private:
    std::string field_;
};

}  // namespace qreflect

#endif
