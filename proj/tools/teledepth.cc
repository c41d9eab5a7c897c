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

// Command-line front end. Every command writes its outputs under --out together with a
// <command>.manifest.json that records the arguments and output digests; `replay` re-runs a
// manifest and compares the digests.
//
// Exit codes: 0 success, 1 verification failure (or replay mismatch), 2 usage or I/O error,
// 3 resource cap exceeded.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "teledepth/applications.h"
#include "teledepth/circuit_io.h"
#include "teledepth/comparisons.h"
#include "teledepth/decomposer.h"
#include "teledepth/fidelity.h"
#include "teledepth/manifest.h"
#include "teledepth/schedule.h"
#include "teledepth/simulator.h"
#include "teledepth/sweep.h"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace teledepth;

namespace {

constexpr int EXIT_VERIFY = 1;
constexpr int EXIT_USAGE = 2;
constexpr int EXIT_CAP = 3;

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string read_text(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError(fmt::format("cannot read {}", path));
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Circuit load_circuit(const std::string &path) {
    Circuit c;
    try {
        c = deserialize(read_text(path));
    } catch (const ParseError &e) {
        throw UsageError(fmt::format("{}: {}", path, e.what()));
    }
    auto errors = validate(c);
    if (!errors.empty()) {
        throw UsageError(fmt::format("{}: invalid circuit: [{}] {}", path, errors.front().code, errors.front().message));
    }
    return c;
}

ordered_json circuit_metrics(const Circuit &c) {
    auto counts = resource_counts(c);
    ordered_json j;
    j["name"] = c.name();
    j["qubits"] = c.num_qubits();
    j["data_qubits"] = c.data_qubits().size();
    j["ancillas"] = counts.ancillas;
    j["bell_pairs"] = counts.bell_pairs;
    j["measurements_z"] = counts.measurements_z;
    j["measurements_x"] = counts.measurements_x;
    j["conditional_gates"] = counts.conditional_gates;
    j["operations"] = c.operations().size();
    j["toffoli_count"] = toffoli_count(c);
    j["toffoli_depth"] = toffoli_depth(c);
    try {
        j["peak_live_qubits"] = Simulator(c, 64).peak_live_qubits();
    } catch (const std::exception &) {
        j["peak_live_qubits"] = nullptr;
    }
    return j;
}

const char *strategy_name(MctStrategy s) {
    return s == MctStrategy::TELEPORTATION ? "teleport" : "unitary";
}

/// State shared by all commands of one invocation.
struct Run {
    fs::path out;
    RunManifest manifest;

    void param(const std::string &key, const std::string &value) {
        manifest.parameters.emplace_back(key, value);
    }
    template <typename T>
    void param(const std::string &key, const T &value) {
        param(key, fmt::format("{}", value));
    }
    void emit(const std::string &relative, std::string_view contents) {
        manifest.outputs.push_back(write_output(out, relative, contents));
    }
};

struct BranchChoice {
    std::vector<std::string> tokens;

    BranchPolicy resolve(int n, uint64_t seed) const {
        BranchPolicy p;
        p.seed = seed;
        if (tokens.empty()) {
            p.exhaustive = n <= 4;
            return p;
        }
        if (tokens.size() == 1 && tokens[0] == "exhaustive") {
            return p;
        }
        if (tokens.size() == 2 && tokens[0] == "sample") {
            try {
                size_t used = 0;
                long long k = std::stoll(tokens[1], &used);
                if (used == tokens[1].size() && k >= 1) {
                    p.exhaustive = false;
                    p.samples = static_cast<size_t>(k);
                    return p;
                }
            } catch (const std::exception &) {
            }
        }
        throw UsageError("--branches expects 'exhaustive' or 'sample K' with K >= 1");
    }
};

std::string describe_policy(const BranchPolicy &p) {
    return p.exhaustive ? "exhaustive" : fmt::format("sample {}", p.samples);
}

MctStrategy parse_strategy(const std::string &s) {
    if (s == "unitary") {
        return MctStrategy::UNITARY;
    }
    if (s == "teleport") {
        return MctStrategy::TELEPORTATION;
    }
    throw UsageError(fmt::format("unknown strategy '{}' (expected unitary or teleport)", s));
}

/// Writes the circuit, verifies it against `f` on every basis and QFT-basis input, and records
/// the verification in the manifest.
int emit_verified_app(Run &run, const Circuit &c, const std::string &file,
                      const std::function<uint64_t(uint64_t)> &f, std::ostream &out) {
    BranchPolicy policy;
    auto m = resource_counts(c).measurements();
    if (m > 12) {
        policy.exhaustive = false;
        policy.samples = 256;
    }
    auto check = check_permutation(c, f, policy);
    run.param("verification", describe_policy(policy));
    run.emit(file, serialize(c));
    out << fmt::format("{}: toffoli_depth {} toffoli_count {} ancillas {}\n", file, toffoli_depth(c), toffoli_count(c),
                       resource_counts(c).ancillas);
    out << fmt::format("verification ({}, {} trajectories): {}\n", describe_policy(policy), check.trajectories,
                       check.ok ? "pass" : "FAIL " + check.first_failure);
    return check.ok ? 0 : EXIT_VERIFY;
}

std::vector<std::string> strip_out_option(const std::vector<std::string> &args) {
    std::vector<std::string> kept;
    for (size_t i = 0; i < args.size(); i++) {
        if (args[i] == "--out") {
            i++;
            continue;
        }
        if (args[i].rfind("--out=", 0) == 0) {
            continue;
        }
        kept.push_back(args[i]);
    }
    return kept;
}

int dispatch(std::vector<std::string> args, std::ostream &out, std::ostream &err);

int cmd_replay(const std::string &manifest_path, const fs::path &dir, std::ostream &out, std::ostream &err) {
    RunManifest m;
    try {
        m = manifest_from_json(read_text(manifest_path));
    } catch (const ManifestError &e) {
        throw UsageError(e.what());
    }
    if (m.command == "replay") {
        throw UsageError("a replay manifest cannot be replayed");
    }
    if (m.tool_version != tool_version()) {
        err << fmt::format("warning: manifest written by version {}, running {}\n", m.tool_version, tool_version());
    }
    auto args = m.arguments;
    args.push_back("--out");
    args.push_back(dir.string());
    std::ostringstream inner;
    int code = dispatch(args, inner, err);
    if (code == EXIT_USAGE) {
        return code;
    }
    auto changed = changed_outputs(m, dir);
    for (const auto &path : changed) {
        out << fmt::format("changed: {}\n", path);
    }
    out << fmt::format("replay of '{}': {} of {} outputs identical\n", m.command, m.outputs.size() - changed.size(),
                       m.outputs.size());
    return changed.empty() ? 0 : EXIT_VERIFY;
}

int dispatch(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Teleportation-based multi-controlled Toffoli synthesis, verification and noise sweeps", "teledepth"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(tool_version()));
    std::string out_dir = ".";
    app.add_option("--out", out_dir, "Directory for all output files")->capture_default_str();

    // synth
    auto *synth = app.add_subcommand("synth", "Synthesize the teleportation decomposition of MCT_{n+1}");
    int synth_n = 0;
    bool defer = true;
    bool layout = false;
    bool merge = false;
    synth->add_option("-n", synth_n, "Number of controls (>= 2)")->required();
    synth->add_flag("--defer,!--no-defer", defer, "Commute corrections past the Toffolis (default on)");
    synth->add_flag("--layout", layout, "Relabel qubits so each Toffoli acts on neighbors");
    synth->add_flag("--merge-cx", merge, "Merge CX ladders into long-range CX");

    // verify
    auto *verify = app.add_subcommand("verify", "Check a circuit file against the MCT oracle");
    std::string verify_file;
    int verify_n = 0;
    BranchChoice branches;
    uint64_t verify_seed = 0;
    verify->add_option("file", verify_file, "Circuit file")->required();
    verify->add_option("-n", verify_n, "Number of controls")->required();
    verify->add_option("--branches", branches.tokens, "'exhaustive' or 'sample K' (default: exhaustive for n <= 4)")
        ->expected(1, 2);
    verify->add_option("--seed", verify_seed, "Seed for sampled branches");

    // sweep
    auto *sweep = app.add_subcommand("sweep", "Noise sweep of F_z, F_c and the Hofmann bounds");
    int sweep_n = 0;
    GridSpec grid;
    size_t shots = 100;
    uint64_t sweep_seed = 0;
    SweepLimits limits;
    std::string circuit_file;
    std::string baseline_file;
    std::string sweep_csv_name;
    sweep->add_option("-n", sweep_n, "Number of controls")->required();
    sweep->add_option("--grid", grid.points, "Points per rate axis")->capture_default_str();
    sweep->add_option("--shots", shots, "Shots per input state")->capture_default_str();
    sweep->add_option("--seed", sweep_seed, "Master seed")->capture_default_str();
    sweep->add_option("--lo", grid.lo, "Smallest rate")->capture_default_str();
    sweep->add_option("--hi", grid.hi, "Largest rate")->capture_default_str();
    sweep->add_flag("--linear", grid.linear, "Linear instead of geometric spacing");
    sweep->add_option("--max-n", limits.max_n, "Largest n allowed")->capture_default_str();
    sweep->add_option("--max-work", limits.max_work, "Cap on estimated amplitude updates")->capture_default_str();
    sweep->add_option("--circuit", circuit_file, "Sweep this circuit file instead of the decomposition");
    sweep->add_option("--baseline", baseline_file, "Also sweep this circuit and write the cellwise difference");
    sweep->add_option("--csv", sweep_csv_name, "Output CSV name (default sweep_n<N>.csv)");

    // compare
    auto *compare = app.add_subcommand("compare", "Cost table of MCT decompositions");
    int64_t n_min = 2;
    int64_t n_max = 20;
    std::string compare_csv_name = "compare.csv";
    compare->add_option("--n-min", n_min, "Smallest n")->capture_default_str();
    compare->add_option("--n-max", n_max, "Largest n")->capture_default_str();
    compare->add_option("--csv", compare_csv_name, "Output CSV name")->capture_default_str();

    // apps
    auto *apps = app.add_subcommand("apps", "Application circuits built from MCT gates");
    apps->require_subcommand(1);
    apps->fallthrough();
    std::string strategy = "teleport";
    auto *adder = apps->add_subcommand("adder", "Increment modulo 2^q");
    int q = 0;
    adder->add_option("-q", q, "Register width (>= 2)")->required();
    adder->add_option("--strategy", strategy, "unitary or teleport")->capture_default_str();
    auto *qrom = apps->add_subcommand("qrom", "Single-word QROM lookup");
    std::string address;
    std::string word;
    qrom->add_option("--address", address, "Address bits a_0 a_1 ...")->required();
    qrom->add_option("--word", word, "Data bits d_0 d_1 ...")->required();
    qrom->add_option("--strategy", strategy, "unitary or teleport")->capture_default_str();
    auto *neuron = apps->add_subcommand("neuron", "Conjunction of binary features");
    int features = 0;
    neuron->add_option("--features", features, "Feature count (>= 2)")->required();
    neuron->add_option("--strategy", strategy, "unitary or teleport")->capture_default_str();
    auto *rule = apps->add_subcommand("rule", "Decision rule matching a feature pattern");
    std::string pattern;
    rule->add_option("--pattern", pattern, "Feature pattern f_0 f_1 ...")->required();
    rule->add_option("--strategy", strategy, "unitary or teleport")->capture_default_str();
    auto *adder_depth = apps->add_subcommand("adder-depth", "Adder Toffoli depth table");
    int q_min = 3;
    int q_max = 10;
    adder_depth->add_option("--q-min", q_min, "Smallest q")->capture_default_str();
    adder_depth->add_option("--q-max", q_max, "Largest q")->capture_default_str();

    // metrics
    auto *metrics = app.add_subcommand("metrics", "Resource metrics of a circuit file");
    std::string metrics_file;
    metrics->add_option("file", metrics_file, "Circuit file")->required();

    // replay
    auto *replay = app.add_subcommand("replay", "Re-run a manifest and compare output digests");
    std::string manifest_file;
    replay->add_option("manifest", manifest_file, "Manifest file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        std::ostringstream o, r;
        int code = app.exit(e, o, r);
        out << o.str();
        err << r.str();
        return code == 0 ? 0 : EXIT_USAGE;
    }

    Run run;
    run.out = out_dir;
    run.manifest.arguments = strip_out_option(args);
    run.manifest.tool_version = std::string(tool_version());

    int code = 0;
    try {
        if (replay->parsed()) {
            return cmd_replay(manifest_file, run.out, out, err);
        }
        if (synth->parsed()) {
            run.manifest.command = "synth";
            if (synth_n < 2 || synth_n > 65536) {
                throw UsageError(fmt::format("-n must be in [2, 65536], got {}", synth_n));
            }
            run.param("n", synth_n);
            run.param("defer", defer);
            run.param("layout", layout);
            run.param("merge_cx", merge);
            Circuit c = decompose_mct(synth_n);
            if (defer) {
                c = defer_corrections(c);
            }
            if (merge) {
                c = merge_long_range_cx(c);
            }
            if (layout) {
                c = neighbor_layout(c);
            }
            run.emit(fmt::format("mct{}.json", synth_n + 1), serialize(c));
            ordered_json summary = circuit_metrics(c);
            auto schedule = build_schedule(synth_n);
            summary["formula_toffoli_count"] = toffoli_count_formula(schedule);
            summary["recursion_levels"] = schedule.i_max();
            out << summary.dump(2) << "\n";
        } else if (verify->parsed()) {
            run.manifest.command = "verify";
            Circuit c = load_circuit(verify_file);
            if (verify_n < 2 || c.data_qubits().size() != static_cast<size_t>(verify_n) + 1) {
                throw UsageError(fmt::format("-n {} does not match the {} data qubits of {}", verify_n,
                                             c.data_qubits().size(), verify_file));
            }
            BranchPolicy policy = branches.resolve(verify_n, verify_seed);
            run.param("file", verify_file);
            run.param("file_sha256", sha256_hex(read_text(verify_file)));
            run.param("n", verify_n);
            run.param("branches", describe_policy(policy));
            if (!policy.exhaustive) {
                run.manifest.master_seed = verify_seed;
            }
            OracleCheck check = check_against_oracle(c, verify_n, policy);
            std::string report = fmt::format(
                "circuit: {}\nn: {}\nbranches: {}\ninputs: {}\ntrajectories: {}\nworst_success_probability: {}\nresult: {}\n",
                c.name(), verify_n, describe_policy(policy), check.inputs, check.trajectories, check.worst,
                check.ok ? "pass" : "fail");
            if (!check.ok) {
                report += fmt::format("counterexample: {}\n", check.first_failure);
                code = EXIT_VERIFY;
            }
            run.emit("verify_report.txt", report);
            out << report;
        } else if (sweep->parsed()) {
            run.manifest.command = "sweep";
            if (sweep_n < 2) {
                throw UsageError(fmt::format("-n must be >= 2, got {}", sweep_n));
            }
            if (shots < 1 || grid.points < 1) {
                throw UsageError("--shots and --grid must be at least 1");
            }
            try {
                grid.axis();
            } catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
            run.param("n", sweep_n);
            run.param("grid", grid.points);
            run.param("spacing", grid.linear ? "linear" : "log");
            run.param("lo", grid.lo);
            run.param("hi", grid.hi);
            run.param("shots", shots);
            run.param("max_n", limits.max_n);
            run.param("max_work", limits.max_work);
            run.manifest.master_seed = sweep_seed;
            Circuit c = circuit_file.empty() ? defer_corrections(decompose_mct(std::min(sweep_n, 1 << 16)))
                                             : load_circuit(circuit_file);
            if (!circuit_file.empty()) {
                run.param("circuit", circuit_file);
                run.param("circuit_sha256", sha256_hex(read_text(circuit_file)));
            }
            std::optional<Circuit> baseline;
            if (!baseline_file.empty()) {
                baseline = load_circuit(baseline_file);
                run.param("baseline", baseline_file);
                run.param("baseline_sha256", sha256_hex(read_text(baseline_file)));
            }
            for (const Circuit *x : {&c, baseline ? &*baseline : nullptr}) {
                if (x && x->data_qubits().size() != static_cast<size_t>(sweep_n) + 1) {
                    throw UsageError(fmt::format("-n {} does not match the {} data qubits of {}", sweep_n,
                                                 x->data_qubits().size(), x->name()));
                }
            }
            if (sweep_n > limits.max_n) {
                throw ResourceCapError(fmt::format("n = {} exceeds the sweep cap of {}", sweep_n, limits.max_n), 0);
            }
            SweepGrid result = run_sweep(c, sweep_n, grid, shots, sweep_seed, limits);
            std::string name = sweep_csv_name.empty() ? fmt::format("sweep_n{}.csv", sweep_n) : sweep_csv_name;
            run.emit(name, sweep_csv(result));
            if (baseline) {
                SweepGrid other = run_sweep(*baseline, sweep_n, grid, shots, sweep_seed, limits);
                run.emit(fmt::format("delta_n{}.csv", sweep_n), sweep_csv(delta_fidelity(result, other)));
            }
            out << fmt::format("{}: {} cells, {} shots per input\n", name, result.cells.size(), shots);
        } else if (compare->parsed()) {
            run.manifest.command = "compare";
            run.param("n_min", n_min);
            run.param("n_max", n_max);
            std::vector<ComparisonRow> rows;
            try {
                rows = comparison_table(n_min, n_max);
            } catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
            run.emit(compare_csv_name, comparison_csv(rows));
            out << fmt::format("{}: {} rows\n", compare_csv_name, rows.size());
        } else if (apps->parsed()) {
            try {
                if (adder->parsed()) {
                    run.manifest.command = "apps-adder";
                    MctStrategy s = parse_strategy(strategy);
                    run.param("q", q);
                    run.param("strategy", strategy_name(s));
                    if (q < 2 || q > 20) {
                        throw UsageError(fmt::format("-q must be in [2, 20], got {}", q));
                    }
                    const uint64_t mask = (uint64_t{1} << q) - 1;
                    code = emit_verified_app(run, build_adder(q, s), fmt::format("adder_q{}_{}.json", q, strategy_name(s)),
                                             [mask](uint64_t i) { return (i + 1) & mask; }, out);
                } else if (qrom->parsed()) {
                    run.manifest.command = "apps-qrom";
                    MctStrategy s = parse_strategy(strategy);
                    run.param("address", address);
                    run.param("word", word);
                    run.param("strategy", strategy_name(s));
                    Circuit c = build_qrom_word(address, word, s);
                    code = emit_verified_app(run, c, fmt::format("qrom_{}_{}_{}.json", address, word, strategy_name(s)),
                                             [&](uint64_t i) { return qrom_oracle(address, word, i); }, out);
                } else if (neuron->parsed()) {
                    run.manifest.command = "apps-neuron";
                    MctStrategy s = parse_strategy(strategy);
                    run.param("features", features);
                    run.param("strategy", strategy_name(s));
                    Circuit c = build_neuron(features, s);
                    code = emit_verified_app(run, c, fmt::format("neuron_f{}_{}.json", features, strategy_name(s)),
                                             [&](uint64_t i) { return mct_oracle_index(features, i); }, out);
                } else if (rule->parsed()) {
                    run.manifest.command = "apps-rule";
                    MctStrategy s = parse_strategy(strategy);
                    run.param("pattern", pattern);
                    run.param("strategy", strategy_name(s));
                    Circuit c = build_decision_rule(pattern, s);
                    code = emit_verified_app(run, c, fmt::format("rule_{}_{}.json", pattern, strategy_name(s)),
                                             [&](uint64_t i) { return decision_rule_oracle(pattern, i); }, out);
                } else if (adder_depth->parsed()) {
                    run.manifest.command = "apps-adder-depth";
                    run.param("q_min", q_min);
                    run.param("q_max", q_max);
                    auto rows = adder_depth_table(q_min, q_max);
                    run.emit("adder_depth.csv", adder_depth_csv(rows));
                    out << fmt::format("adder_depth.csv: {} rows (dutta_proxy is a sum of per-gate lower bounds)\n",
                                       rows.size());
                }
            } catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
        } else if (metrics->parsed()) {
            run.manifest.command = "metrics";
            Circuit c = load_circuit(metrics_file);
            run.param("file", metrics_file);
            run.param("file_sha256", sha256_hex(read_text(metrics_file)));
            std::string text = circuit_metrics(c).dump(2) + "\n";
            run.emit("metrics.json", text);
            out << text;
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const ResourceCapError &e) {
        err << "error: " << e.what() << "\n";
        if (e.estimate() > 0) {
            err << fmt::format("estimated work: {:.6g}\n", e.estimate());
        }
        code = EXIT_CAP;
    } catch (const CapacityError &e) {
        err << "error: " << e.what() << "\n";
        code = EXIT_CAP;
    } catch (const std::filesystem::filesystem_error &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }

    try {
        write_output(run.out, run.manifest.command + ".manifest.json", manifest_to_json(run.manifest));
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
    return code;
}

}  // namespace

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return dispatch(std::move(args), std::cout, std::cerr);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
}
