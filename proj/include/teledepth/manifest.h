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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace teledepth {

std::string_view tool_version();

/// Lowercase hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

struct OutputDigest {
    /// Path relative to the run's output directory.
    std::string path;
    std::string sha256;

    bool operator==(const OutputDigest &) const = default;
};

/// Record of one CLI run. `arguments` is the full command line after the program name, minus the
/// output directory, so re-running it reproduces every output. No timestamps or host data.
struct RunManifest {
    std::string command;
    std::vector<std::string> arguments;
    /// Resolved parameter values in a stable order, including defaults.
    std::vector<std::pair<std::string, std::string>> parameters;
    std::optional<uint64_t> master_seed;
    std::string tool_version;
    std::vector<OutputDigest> outputs;

    bool operator==(const RunManifest &) const = default;
};

class ManifestError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string manifest_to_json(const RunManifest &manifest);
/// Throws ManifestError on malformed input or unknown fields.
RunManifest manifest_from_json(std::string_view text);

/// Writes `contents` to `dir / relative` (creating parent directories) and returns its digest.
OutputDigest write_output(const std::filesystem::path &dir, const std::string &relative, std::string_view contents);

/// Recomputes the digests of the listed outputs under `dir`; returns the paths that differ or are
/// missing.
std::vector<std::string> changed_outputs(const RunManifest &manifest, const std::filesystem::path &dir);

}  // namespace teledepth
