// Copyright 2026 The teledepth Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "teledepth/circuit.h"

namespace teledepth {

/// Circuit file format, version 1 (JSON text):
///
///   {"header": {"version": 1, "name": ..., "qubits": [{"index", "kind"}], "cbits": [{"index", "origin"}]},
///    "ops": [{"op", "qubits", "cbit"?, "condition"?: {"terms", "parity"}}]}
///
/// Header first, one op per line, keys in fixed order. Unknown fields are rejected.
std::string serialize(const Circuit &circuit);

class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Throws ParseError naming the offending field path (e.g. `ops[3].op`) or the JSON line/column.
/// The result is marked as loaded but is not validated; call validate() separately.
Circuit deserialize(std::string_view text);

}  // namespace teledepth
