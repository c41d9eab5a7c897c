# Copyright 2026 The teledepth Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pytest

import teledepth


def test_mct8_metrics():
    c = teledepth.synthesize(7)
    assert teledepth.toffoli_depth(c) == 1
    assert teledepth.toffoli_count(c) == 6
    counts = teledepth.resource_counts(c)
    assert counts["ancillas"] == 10
    assert counts["bell_pairs"] == 5


def test_schedule_matches_circuit():
    s = teledepth.schedule(7)
    assert s["toffoli_count"] == 6
    assert s["i_max"] == teledepth.i_max_closed_form(7) == 2


def test_round_trip_and_validation():
    c = teledepth.synthesize(4)
    text = teledepth.serialize(c)
    assert teledepth.serialize(teledepth.deserialize(text)) == text
    assert teledepth.validate(c) == []
    with pytest.raises(ValueError):
        teledepth.deserialize('{"header": {}}')


def test_oracle_and_noiseless_fidelity():
    c = teledepth.synthesize(3)
    assert teledepth.check_against_oracle(c, 3)["ok"]
    est = teledepth.estimate_fidelity(c, 3, teledepth.NoiseModel(), 5, 1)
    assert est["f_z"] == 1.0 and est["f_c"] == 1.0


def test_sweep_is_deterministic():
    a = teledepth.sweep_csv(2, 2, 5, 9)
    assert a == teledepth.sweep_csv(2, 2, 5, 9)
    assert len(a.strip().split("\n")) == 5


def test_applications():
    adder = teledepth.build_adder(3, "teleport")
    ok, why = teledepth.check_permutation(adder, lambda i: (i + 1) % 8)
    assert ok, why
    assert teledepth.qrom_oracle("000", "101", 1) == 1 | (1 << 5) | (1 << 7)
    with pytest.raises(ValueError):
        teledepth.build_adder(3, "bogus")


def test_rules_and_comparison():
    assert all(passed for _, _, passed, _ in teledepth.certify_rule_table())
    csv = teledepth.comparison_csv(2, 20)
    assert "10,khattar_1anc,17," in csv
