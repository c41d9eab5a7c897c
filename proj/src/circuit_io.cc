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

#include "teledepth/circuit_io.h"

#include <initializer_list>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace teledepth {

using nlohmann::ordered_json;

namespace {

constexpr int FORMAT_VERSION = 1;

ordered_json op_to_json(const Operation &op) {
    ordered_json j;
    j["op"] = std::string(op_name(op.kind));
    j["qubits"] = op.qubits;
    if (op.cbit) {
        j["cbit"] = *op.cbit;
    }
    if (op.condition) {
        j["condition"] = ordered_json{{"terms", op.condition->terms}, {"parity", op.condition->parity ? 1 : 0}};
    }
    return j;
}

[[noreturn]] void fail(const std::string &path, const std::string &what) {
    throw ParseError(fmt::format("{}: {}", path, what));
}

void check_fields(const ordered_json &obj, const std::string &path, std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional) {
    if (!obj.is_object()) {
        fail(path, "expected an object");
    }
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (auto f : required) {
            known |= it.key() == f;
        }
        for (auto f : optional) {
            known |= it.key() == f;
        }
        if (!known) {
            fail(path, fmt::format("unknown field '{}'", it.key()));
        }
    }
    for (auto f : required) {
        if (!obj.contains(std::string(f))) {
            fail(path, fmt::format("missing field '{}'", f));
        }
    }
}

uint32_t get_index(const ordered_json &v, const std::string &path) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<int64_t>() >= 0)) {
        fail(path, "expected a non-negative integer");
    }
    auto x = v.get<uint64_t>();
    if (x > UINT32_MAX) {
        fail(path, "index too large");
    }
    return static_cast<uint32_t>(x);
}

std::string get_string(const ordered_json &v, const std::string &path) {
    if (!v.is_string()) {
        fail(path, "expected a string");
    }
    return v.get<std::string>();
}

std::vector<uint32_t> get_index_list(const ordered_json &v, const std::string &path) {
    if (!v.is_array()) {
        fail(path, "expected an array");
    }
    std::vector<uint32_t> out;
    for (size_t i = 0; i < v.size(); i++) {
        out.push_back(get_index(v[i], fmt::format("{}[{}]", path, i)));
    }
    return out;
}

}  // namespace

std::string serialize(const Circuit &circuit) {
    ordered_json header;
    header["version"] = FORMAT_VERSION;
    header["name"] = circuit.name();
    auto qs = ordered_json::array();
    for (const auto &q : circuit.qubits()) {
        qs.push_back(ordered_json{{"index", q.index}, {"kind", std::string(qubit_kind_name(q.kind))}});
    }
    header["qubits"] = std::move(qs);
    auto bs = ordered_json::array();
    for (const auto &b : circuit.cbits()) {
        bs.push_back(ordered_json{{"index", b.index}, {"origin", std::string(bit_origin_name(b.origin))}});
    }
    header["cbits"] = std::move(bs);

    std::string out = "{\n  \"header\": " + header.dump() + ",\n  \"ops\": [";
    const auto &ops = circuit.operations();
    for (size_t i = 0; i < ops.size(); i++) {
        out += i == 0 ? "\n    " : ",\n    ";
        out += op_to_json(ops[i]).dump();
    }
    out += ops.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

Circuit deserialize(std::string_view text) {
    ordered_json root;
    try {
        root = ordered_json::parse(text.begin(), text.end());
    } catch (const ordered_json::parse_error &e) {
        throw ParseError(fmt::format("malformed circuit file: {}", e.what()));
    }
    check_fields(root, "$", {"header", "ops"}, {});
    const auto &header = root["header"];
    check_fields(header, "header", {"version", "name", "qubits", "cbits"}, {});
    if (!header["version"].is_number_integer() || header["version"].get<int64_t>() != FORMAT_VERSION) {
        fail("header.version", fmt::format("unsupported version {}", header["version"].dump()));
    }

    Circuit circuit(get_string(header["name"], "header.name"));
    circuit.set_source(CircuitSource::LOADED);

    std::vector<QubitRef> qubits;
    if (!header["qubits"].is_array()) {
        fail("header.qubits", "expected an array");
    }
    for (size_t i = 0; i < header["qubits"].size(); i++) {
        std::string path = fmt::format("header.qubits[{}]", i);
        const auto &q = header["qubits"][i];
        check_fields(q, path, {"index", "kind"}, {});
        std::string kind = get_string(q["kind"], path + ".kind");
        auto parsed = parse_qubit_kind(kind);
        if (!parsed) {
            fail(path + ".kind", fmt::format("unknown qubit kind '{}'", kind));
        }
        qubits.push_back({get_index(q["index"], path + ".index"), *parsed});
    }

    std::vector<ClassicalBit> cbits;
    if (!header["cbits"].is_array()) {
        fail("header.cbits", "expected an array");
    }
    for (size_t i = 0; i < header["cbits"].size(); i++) {
        std::string path = fmt::format("header.cbits[{}]", i);
        const auto &b = header["cbits"][i];
        check_fields(b, path, {"index", "origin"}, {});
        std::string origin = get_string(b["origin"], path + ".origin");
        auto parsed = parse_bit_origin(origin);
        if (!parsed) {
            fail(path + ".origin", fmt::format("unknown cbit origin '{}'", origin));
        }
        cbits.push_back({get_index(b["index"], path + ".index"), *parsed});
    }
    circuit.set_registries(std::move(qubits), std::move(cbits));

    const auto &ops = root["ops"];
    if (!ops.is_array()) {
        fail("ops", "expected an array");
    }
    for (size_t i = 0; i < ops.size(); i++) {
        std::string path = fmt::format("ops[{}]", i);
        const auto &o = ops[i];
        check_fields(o, path, {"op", "qubits"}, {"cbit", "condition"});
        std::string name = get_string(o["op"], path + ".op");
        auto kind = parse_op_name(name);
        if (!kind) {
            fail(path + ".op", fmt::format("unknown operation '{}'", name));
        }
        Operation op{*kind, get_index_list(o["qubits"], path + ".qubits"), std::nullopt, std::nullopt};
        if (o.contains("cbit")) {
            op.cbit = get_index(o["cbit"], path + ".cbit");
        }
        if (o.contains("condition")) {
            const auto &c = o["condition"];
            check_fields(c, path + ".condition", {"terms", "parity"}, {});
            Condition cond;
            cond.terms = get_index_list(c["terms"], path + ".condition.terms");
            auto parity = get_index(c["parity"], path + ".condition.parity");
            if (parity > 1) {
                fail(path + ".condition.parity", "expected 0 or 1");
            }
            cond.parity = parity == 1;
            op.condition = std::move(cond);
        }
        circuit.append(std::move(op));
    }
    return circuit;
}

}  // namespace teledepth
