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

#include "teledepth/manifest.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

namespace teledepth {

using nlohmann::ordered_json;

namespace {

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error(fmt::format("cannot read {}", path.string()));
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void expect_keys(const ordered_json &obj, std::initializer_list<std::string_view> keys, std::string_view where) {
    if (!obj.is_object()) {
        throw ManifestError(fmt::format("{}: expected an object", where));
    }
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) {
            throw ManifestError(fmt::format("{}: unknown field '{}'", where, it.key()));
        }
    }
    for (auto k : keys) {
        if (!obj.contains(std::string(k))) {
            throw ManifestError(fmt::format("{}: missing field '{}'", where, k));
        }
    }
}

}  // namespace

std::string_view tool_version() {
#ifdef TELEDEPTH_VERSION
    return TELEDEPTH_VERSION;
#else
    return "unknown";
#endif
}

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 failed");
    }
    std::string out;
    for (unsigned int i = 0; i < length; i++) {
        out += fmt::format("{:02x}", digest[i]);
    }
    return out;
}

std::string manifest_to_json(const RunManifest &m) {
    ordered_json j;
    j["command"] = m.command;
    j["arguments"] = m.arguments;
    ordered_json params = ordered_json::object();
    for (const auto &[k, v] : m.parameters) {
        params[k] = v;
    }
    j["parameters"] = std::move(params);
    j["master_seed"] = m.master_seed ? ordered_json(*m.master_seed) : ordered_json(nullptr);
    j["tool_version"] = m.tool_version;
    ordered_json outs = ordered_json::array();
    for (const auto &o : m.outputs) {
        outs.push_back(ordered_json{{"path", o.path}, {"sha256", o.sha256}});
    }
    j["outputs"] = std::move(outs);
    return j.dump(2) + "\n";
}

RunManifest manifest_from_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text.begin(), text.end());
    } catch (const ordered_json::exception &e) {
        throw ManifestError(fmt::format("malformed manifest: {}", e.what()));
    }
    expect_keys(j, {"command", "arguments", "parameters", "master_seed", "tool_version", "outputs"}, "manifest");
    RunManifest m;
    try {
        m.command = j["command"].get<std::string>();
        m.arguments = j["arguments"].get<std::vector<std::string>>();
        if (!j["parameters"].is_object()) {
            throw ManifestError("manifest.parameters: expected an object");
        }
        for (auto it = j["parameters"].begin(); it != j["parameters"].end(); ++it) {
            m.parameters.emplace_back(it.key(), it.value().get<std::string>());
        }
        if (!j["master_seed"].is_null()) {
            m.master_seed = j["master_seed"].get<uint64_t>();
        }
        m.tool_version = j["tool_version"].get<std::string>();
        if (!j["outputs"].is_array()) {
            throw ManifestError("manifest.outputs: expected an array");
        }
        for (const auto &o : j["outputs"]) {
            expect_keys(o, {"path", "sha256"}, "manifest.outputs[]");
            m.outputs.push_back({o["path"].get<std::string>(), o["sha256"].get<std::string>()});
        }
    } catch (const ordered_json::exception &e) {
        throw ManifestError(fmt::format("malformed manifest: {}", e.what()));
    }
    return m;
}

OutputDigest write_output(const std::filesystem::path &dir, const std::string &relative, std::string_view contents) {
    const auto path = dir / relative;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
        throw std::runtime_error(fmt::format("cannot write {}", path.string()));
    }
    return {relative, sha256_hex(contents)};
}

std::vector<std::string> changed_outputs(const RunManifest &manifest, const std::filesystem::path &dir) {
    std::vector<std::string> changed;
    for (const auto &o : manifest.outputs) {
        std::error_code ec;
        if (!std::filesystem::is_regular_file(dir / o.path, ec) || sha256_hex(read_file(dir / o.path)) != o.sha256) {
            changed.push_back(o.path);
        }
    }
    return changed;
}

}  // namespace teledepth
