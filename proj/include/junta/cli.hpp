// Copyright 2026 The Junta Authors
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

// Command-line front end. `run_cli` is the whole program minus process
// plumbing, so tests can drive it with in-memory streams.
//
// Exit codes: 0 success, 1 input error (bad expression, unreadable or
// malformed file, function too large), 2 usage error.
//
// Reports are built as ordered JSON; `--output text` prints the same tree
// flattened to `path: value` lines, so both forms carry identical numbers.
// Numbers are rounded to 10 significant digits. Reports contain no timing
// unless `--timing` is given, which keeps repeated runs byte-identical.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "junta/boolfn.hpp"
#include "junta/junta_test.hpp"
#include "junta/learner.hpp"
#include "junta/oracle.hpp"

namespace junta::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char *kReportSchemaVersion = "1";

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double round_sig10(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return std::strtod(buf, nullptr);
}

inline Json number(double x) {
    return round_sig10(x);
}

inline Json optional_number(const std::optional<double> &x) {
    return x ? number(*x) : Json(nullptr);
}

inline std::string fnv1a64_digest(const TruthTable &t) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto feed = [&h](const std::string &s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ull;
        }
    };
    feed(std::to_string(t.num_vars()));
    feed(":");
    feed(t.to_bit_string());
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

inline Json to_json(const qsim::SampleCounts &c) {
    return Json{{"zeros", c.zeros}, {"ones", c.ones}};
}

inline Json to_json(const JuntaVerdict &v) {
    Json j;
    j["variable"] = v.variable;
    j["verdict"] = to_string(v.verdict);
    j["constant_term_present"] = v.constant_term_present;
    j["p1"] = optional_number(v.p1);
    j["c_effective"] = optional_number(v.c_effective);
    j["c_wootters"] = optional_number(v.c_wootters);
    j["samples"] = v.samples ? to_json(*v.samples) : Json(nullptr);
    j["oracle_calls_quantum"] = v.oracle_calls_quantum;
    j["oracle_calls_classical"] = v.oracle_calls_classical;
    return j;
}

inline Json to_json(const InfluenceReport &r, unsigned variable) {
    Json j;
    j["variable"] = variable;
    j["nu0"] = r.nu0;
    j["nu1"] = r.nu1;
    j["influence"] = number(r.influence);
    j["c_effective"] = number(r.c_effective);
    return j;
}

inline Json to_json(const CategoryVerdict &v) {
    Json j;
    j["category"] = to_string(v.category);
    j["p1"] = number(v.p1);
    j["c_effective"] = number(v.c_effective);
    j["c_wootters"] = number(v.c_wootters);
    j["m_candidates"] = Json::array({v.m_candidates.low, v.m_candidates.high});
    j["constant_value"] = v.constant_value ? Json(*v.constant_value ? 1 : 0) : Json(nullptr);
    j["samples"] = v.samples ? to_json(*v.samples) : Json(nullptr);
    j["note"] = v.note;
    return j;
}

inline Json to_json(const OracleCounters &c) {
    return Json{{"classical", c.classical}, {"quantum", c.quantum}};
}

/// Flattens a report into `path: value` lines.
inline void write_text(std::ostream &out, const Json &j, const std::string &path = "") {
    auto is_scalar_array = [](const Json &a) {
        for (const auto &e : a) {
            if (e.is_structured()) {
                return false;
            }
        }
        return true;
    };
    if (j.is_object()) {
        for (const auto &[key, value] : j.items()) {
            write_text(out, value, path.empty() ? key : path + "." + key);
        }
    } else if (j.is_array() && !is_scalar_array(j)) {
        for (std::size_t k = 0; k < j.size(); ++k) {
            write_text(out, j[k], path + "[" + std::to_string(k) + "]");
        }
    } else if (j.is_string()) {
        out << path << ": " << j.get<std::string>() << '\n';
    } else {
        out << path << ": " << j.dump() << '\n';
    }
}

struct Options {
    std::string command;
    std::optional<std::string> anf;
    std::optional<unsigned> num_vars;
    std::optional<std::string> truth_table_path;
    std::optional<unsigned> var;
    std::string mode = "exact";
    std::uint64_t shots = 4096;
    std::optional<std::uint64_t> seed;
    std::string output = "text";
    std::optional<std::string> dump_table;
    bool timing = false;
};

struct LoadedFunction {
    TruthTable table;
    std::string source;
    std::optional<std::string> canonical_anf;
};

inline LoadedFunction load_function(const Options &o) {
    if (o.anf.has_value() == o.truth_table_path.has_value()) {
        throw UsageError("give exactly one of --anf or --truth-table");
    }
    if (o.anf) {
        if (!o.num_vars) {
            throw UsageError("--anf needs --n");
        }
        AnfFunction f = parse_anf(*o.anf, *o.num_vars);
        return {to_truth_table(f), "anf", to_string(f)};
    }
    if (o.num_vars) {
        throw UsageError("--n is taken from the truth-table file; do not pass it");
    }
    return {read_truth_table_file(*o.truth_table_path), "truth-table", std::nullopt};
}

inline Mode make_mode(const Options &o) {
    if (o.mode == "exact") {
        return Mode::exact();
    }
    if (!o.seed) {
        throw UsageError("--mode sample requires --seed");
    }
    if (o.shots == 0) {
        throw UsageError("--shots must be at least 1");
    }
    return Mode::sampled(o.shots, *o.seed);
}

inline Json run_command(const Options &o, const TruthTable &table, const Mode &mode, OracleCounters &calls) {
    TableOracle oracle = make_oracle(table);
    const unsigned n = table.num_vars();
    auto var_checked = [&](bool required) -> std::optional<unsigned> {
        if (!o.var) {
            if (required) {
                throw UsageError(o.command + " requires --var");
            }
            return std::nullopt;
        }
        if (*o.var >= n) {
            throw UsageError("--var " + std::to_string(*o.var) + " out of range for n = " + std::to_string(n));
        }
        return o.var;
    };

    Json results;
    if (o.command == "test-junta") {
        if (auto i = var_checked(false)) {
            results = to_json(pa_junta_test(oracle, *i, mode));
        } else {
            Json verdicts = Json::array();
            Json relevant = Json::array();
            for (const auto &v : test_all_variables(oracle, mode)) {
                if (!v.is_junta()) {
                    relevant.push_back(v.variable);
                }
                verdicts.push_back(to_json(v));
            }
            results["verdicts"] = std::move(verdicts);
            results["relevant_variables"] = std::move(relevant);
        }
    } else if (o.command == "same-term") {
        SameTermSet s = same_term_variables(oracle, *var_checked(true), mode);
        results["variable"] = s.i;
        results["members"] = s.members;
        results["initial"] = to_json(s.initial);
        Json per = Json::array();
        for (const auto &v : s.per_variable) {
            per.push_back(to_json(v));
        }
        results["per_variable"] = std::move(per);
    } else if (o.command == "categorize") {
        results = to_json(categorize(oracle, mode));
    } else if (o.command == "count-solutions") {
        CategoryVerdict v = categorize(oracle, mode);
        results["m_candidates"] = Json::array({v.m_candidates.low, v.m_candidates.high});
        results["p1"] = number(v.p1);
        results["c_effective"] = number(v.c_effective);
        results["samples"] = v.samples ? to_json(*v.samples) : Json(nullptr);
    } else if (o.command == "influence") {
        // Brute force over the full table: N classical evaluations.
        if (auto i = var_checked(false)) {
            results = to_json(influence_report(table, *i), *i);
        } else {
            Json reports = Json::array();
            for (unsigned i = 0; i < n; ++i) {
                reports.push_back(to_json(influence_report(table, i), i));
            }
            results["reports"] = std::move(reports);
        }
        calls.classical += table.size();
    } else if (o.command == "learn-term") {
        LearnedTerm t = learn_single_term(oracle, mode);
        results["is_constant"] = t.is_constant;
        results["constant_bit"] = t.constant_bit ? 1 : 0;
        results["variables"] = t.variables;
        results["anf"] = to_string(t.to_anf(n));
        results["note"] = "assumes the single-term promise; the result is not verified";
    } else {
        throw UsageError("unknown command '" + o.command + "'");
    }
    calls.classical += oracle.counters().classical;
    calls.quantum += oracle.counters().quantum;
    return results;
}

inline Json build_report(const Options &o) {
    auto start = std::chrono::steady_clock::now();
    Mode mode = make_mode(o);
    LoadedFunction fn = load_function(o);
    if (o.dump_table) {
        write_truth_table_file(*o.dump_table, fn.table);
    }

    Json report;
    report["schema_version"] = kReportSchemaVersion;
    report["command"] = o.command;
    Json input;
    input["source"] = fn.source;
    input["n"] = fn.table.num_vars();
    input["anf"] = fn.canonical_anf ? Json(*fn.canonical_anf) : Json(nullptr);
    report["input"] = std::move(input);
    report["input_digest"] = fnv1a64_digest(fn.table);
    report["mode"] = mode.is_exact() ? "exact" : "sample";
    report["shots"] = mode.is_exact() ? Json(nullptr) : Json(mode.shots());
    report["seed"] = mode.is_exact() ? Json(nullptr) : Json(mode.seed());
    report["sampler"] = mode.is_exact() ? Json(nullptr) : Json(qsim::kSamplerName);
    OracleCounters calls;
    report["results"] = run_command(o, fn.table, mode, calls);
    report["oracle_calls"] = to_json(calls);
    if (o.timing) {
        std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
        report["wall_time_ms"] = number(dt.count());
    }
    return report;
}

inline int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entanglement-based junta testing and learning of Boolean functions"};
    app.require_subcommand(1);
    Options o;

    struct Command {
        const char *name;
        const char *help;
    };
    const Command commands[] = {
        {"test-junta", "test whether a variable (or every variable) is junta"},
        {"same-term", "find the variables sharing a product term with --var"},
        {"categorize", "classify the function as constant, balanced or other"},
        {"count-solutions", "recover the solution count M (up to M <-> N - M) from concurrence"},
        {"influence", "classical brute-force influence of a variable (or every variable)"},
        {"learn-term", "learn a function promised to be a single product term"},
    };
    for (const auto &c : commands) {
        CLI::App *sub = app.add_subcommand(c.name, c.help);
        sub->add_option("--anf", o.anf, "function as an XOR of AND terms, e.g. \"x0&x1 ^ x2\"");
        sub->add_option("--n", o.num_vars, "variable count for --anf")->check(CLI::Range(1u, TruthTable::kMaxVars));
        sub->add_option("--truth-table", o.truth_table_path, "truth-table file (n on line 1, bits on line 2)");
        sub->add_option("--var", o.var, "tested variable index");
        sub->add_option("--mode", o.mode, "exact or sample")->check(CLI::IsMember({"exact", "sample"}));
        sub->add_option("--shots", o.shots, "measurement shots in sample mode")->capture_default_str();
        sub->add_option("--seed", o.seed, "PRNG seed, required in sample mode");
        sub->add_option("--output", o.output, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--dump-table", o.dump_table, "also write the input's truth table to this file");
        sub->add_flag("--timing", o.timing, "include wall-clock time in the report");
        sub->callback([&o, sub] { o.command = sub->get_name(); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        Json report = build_report(o);
        if (o.output == "json") {
            out << report.dump(2) << '\n';
        } else {
            write_text(out, report);
        }
        return 0;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace junta::cli
