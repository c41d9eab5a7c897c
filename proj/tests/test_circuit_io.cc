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

#include <gtest/gtest.h>

#include "teledepth/decomposer.h"

namespace teledepth {
namespace {

TEST(CircuitIo, RoundTripDecomposedMct5) {
    for (const Circuit &c : {decompose_mct(4), defer_corrections(decompose_mct(4)), decompose_mct(7)}) {
        std::string text = serialize(c);
        Circuit back = deserialize(text);
        EXPECT_TRUE(back.same_structure(c));
        EXPECT_EQ(back.name(), c.name());
        EXPECT_EQ(back.source(), CircuitSource::LOADED);
        EXPECT_EQ(serialize(back), text);
    }
}

TEST(CircuitIo, EmptyCircuit) {
    Circuit c("empty");
    Circuit back = deserialize(serialize(c));
    EXPECT_TRUE(back.same_structure(c));
}

TEST(CircuitIo, UnknownGateNamesToken) {
    std::string text = serialize(decompose_mct(2));
    auto pos = text.find("\"CCX\"");
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 5, "\"CCQ\"");
    try {
        deserialize(text);
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        std::string what = e.what();
        EXPECT_NE(what.find("CCQ"), std::string::npos) << what;
        EXPECT_NE(what.find("ops["), std::string::npos) << what;
    }
}

TEST(CircuitIo, RejectsUnknownField) {
    std::string text = R"({"header": {"version": 1, "name": "x", "qubits": [], "cbits": [], "extra": 1}, "ops": []})";
    EXPECT_THROW(deserialize(text), ParseError);
}

TEST(CircuitIo, RejectsMalformedJson) {
    EXPECT_THROW(deserialize("{\"header\": "), ParseError);
}

TEST(CircuitIo, RejectsWrongVersion) {
    std::string text = R"({"header": {"version": 2, "name": "x", "qubits": [], "cbits": []}, "ops": []})";
    EXPECT_THROW(deserialize(text), ParseError);
}

TEST(CircuitIo, HeaderComesFirst) {
    std::string text = serialize(decompose_mct(3));
    EXPECT_EQ(text.rfind("{\n  \"header\": ", 0), 0u);
}

}  // namespace
}  // namespace teledepth
