// Copyright 2026 The mfqec Authors
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

#ifndef MFQEC_ERRORS_H
#define MFQEC_ERRORS_H

#include <stdexcept>
#include <string>

namespace mfqec {

// Argument problems throw std::invalid_argument and unattainable targets
// throw std::out_of_range. The types below cover the remaining failure kinds
// so the C API can map each to its own status code.

struct UnsupportedGate : std::logic_error {
    using std::logic_error::logic_error;
};

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent configuration. The message names the key.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File could not be read or written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Internal consistency failure, e.g. a schedule producing a fault that
/// flips more detectors than a matching graph can represent.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mfqec

#endif
