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

// Learning procedures built on the junta test.
//
//  * same_term_variables: the variables sharing a product term with x_i,
//    found by junta-testing every variable of g = f ^ f(x with x_i negated).
//    Terms without x_i cancel in g and terms with x_i lose it, so g depends
//    exactly on the partners of x_i.
//  * learn_single_term: recovers f when f is promised to be one product term.
//  * categorize: constant / balanced / other from the concurrence of the
//    oracle's output qubit, C = 2 sqrt(M (N - M)) / N for M solutions.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "junta/boolfn.hpp"
#include "junta/entangle.hpp"
#include "junta/junta_test.hpp"
#include "junta/oracle.hpp"
#include "junta/qsim.hpp"

namespace junta {

inline AnfFunction build_g(const AnfFunction &f, unsigned i) {
    return xor_functions(f, negate_variable(f, i));
}

struct SameTermSet {
    unsigned i = 0;
    std::vector<unsigned> members;        // ascending, never contains i
    JuntaVerdict initial;                 // the test of x_i on f itself
    std::vector<JuntaVerdict> per_variable;  // tests on U_g, t = 0..n-1; empty on early exit
    OracleCounters oracle_calls;          // uses of f, including those inside U_g
};

namespace detail {

template <BooleanOracle O>
SameTermSet same_term_variables_after(O &oracle, JuntaVerdict initial, const OracleCounters &before, const Mode &mode) {
    SameTermSet out;
    out.i = initial.variable;
    out.initial = std::move(initial);
    if (!out.initial.is_junta()) {
        DerivativeOracle<O> g(oracle, out.i);
        // t = i is included; g never depends on x_i so it always comes back Junta.
        for (unsigned t = 0; t < oracle.num_vars(); ++t) {
            JuntaVerdict v = pa_junta_test(g, t, mode.stream(t + 1));
            if (!v.is_junta()) {
                out.members.push_back(t);
            }
            out.per_variable.push_back(std::move(v));
        }
    }
    out.oracle_calls = oracle.counters() - before;
    return out;
}

}  // namespace detail

/// At most 2n + 1 quantum uses of f: one for the initial test, then two per
/// U_g use over n variables.
template <BooleanOracle O>
SameTermSet same_term_variables(O &oracle, unsigned i, const Mode &mode = Mode::exact()) {
    const OracleCounters before = oracle.counters();
    JuntaVerdict initial = pa_junta_test(oracle, i, mode.stream(0));
    return detail::same_term_variables_after(oracle, std::move(initial), before, mode);
}

struct LearnedTerm {
    bool is_constant = false;
    bool constant_bit = false;       // f(0...0): the value for a constant, the constant term otherwise
    std::vector<unsigned> variables;  // the product term, ascending; empty for constants
    OracleCounters oracle_calls;

    /// The learned function as an ANF over `num_vars` variables.
    AnfFunction to_anf(unsigned num_vars) const {
        AnfFunction f(num_vars);
        if (constant_bit) {
            f.toggle_term(0);
        }
        if (!is_constant) {
            AnfFunction::Term t = 0;
            for (unsigned v : variables) {
                t |= AnfFunction::Term{1} << v;
            }
            f.toggle_term(t);
        }
        return f;
    }
};

/// Promise problem: f is a single product term (or a constant). Inputs that
/// break the promise get a best-effort answer that is not checked.
template <BooleanOracle O>
LearnedTerm learn_single_term(O &oracle, const Mode &mode = Mode::exact()) {
    const OracleCounters before = oracle.counters();
    const unsigned n = oracle.num_vars();
    LearnedTerm out;
    for (unsigned i = 0; i < n; ++i) {
        const OracleCounters at_i = oracle.counters();
        JuntaVerdict v = pa_junta_test(oracle, i, mode.stream(2 * i));
        out.constant_bit = v.constant_term_present;
        if (v.is_junta()) {
            continue;
        }
        bool linear = v.verdict == Verdict::NotJuntaLinear;
        SameTermSet s = detail::same_term_variables_after(oracle, std::move(v), at_i, mode.stream(2 * i + 1));
        out.variables.push_back(i);
        if (!(linear && s.members.empty())) {
            out.variables.insert(out.variables.end(), s.members.begin(), s.members.end());
        }
        std::sort(out.variables.begin(), out.variables.end());
        out.variables.erase(std::unique(out.variables.begin(), out.variables.end()), out.variables.end());
        out.oracle_calls = oracle.counters() - before;
        return out;
    }
    out.is_constant = true;
    out.oracle_calls = oracle.counters() - before;
    return out;
}

/// Both solution counts consistent with a measured concurrence:
/// M = (N / 2)(1 -/+ sqrt(1 - c^2)), rounded to the nearest integer.
struct SolutionCandidates {
    std::uint64_t low = 0;
    std::uint64_t high = 0;
    friend bool operator==(const SolutionCandidates &, const SolutionCandidates &) = default;
};

inline SolutionCandidates solve_for_m(double c, std::uint64_t n_inputs) {
    if (n_inputs == 0 || !std::has_single_bit(n_inputs)) {
        throw std::invalid_argument("solve_for_m: N must be a power of two");
    }
    if (!(c >= 0.0 && c <= 1.0)) {
        throw std::out_of_range("solve_for_m: concurrence must lie in [0, 1]");
    }
    const double half = static_cast<double>(n_inputs) / 2.0;
    const double disc = std::sqrt(std::max(0.0, (1.0 - c) * (1.0 + c)));
    auto low = static_cast<std::uint64_t>(std::llround(half * (1.0 - disc)));
    low = std::min(low, n_inputs / 2);
    return {low, n_inputs - low};
}

enum class Category { Constant, Balanced, Other };

inline const char *to_string(Category c) {
    switch (c) {
        case Category::Constant:
            return "Constant";
        case Category::Balanced:
            return "Balanced";
        case Category::Other:
            return "Other";
    }
    return "?";
}

/// Under C = 2 sqrt(M (N - M)) / N a balanced function has C = 1. The
/// threshold C = 1/2 corresponds to M = N (2 - sqrt 3) / 4, not to M = N / 2.
inline constexpr const char *kBalancedThresholdNote =
    "balanced means C = 1 under C = 2*sqrt(M*(N-M))/N; C = 1/2 does not correspond to M = N/2";

/// Sampled mode: Balanced when the estimated p1 is within this many standard
/// errors (of a fair coin over `shots`) of 1/2.
inline constexpr double kBalancedSampleSigmas = 4.0;

struct CategoryVerdict {
    Category category = Category::Other;
    double p1 = 0;           // population of the oracle's output qubit, M / N
    double c_effective = 0;  // 2 sqrt(p1 (1 - p1))
    double c_wootters = 0;   // exact reduced-state value, reported for comparison
    SolutionCandidates m_candidates;
    std::optional<bool> constant_value;  // f(0), queried only for constants
    std::optional<qsim::SampleCounts> samples;
    OracleCounters oracle_calls;
    Mode mode = Mode::exact();
    const char *note = kBalancedThresholdNote;
};

/// Circuit on n + 2 qubits: |0>^(n+1)|1>, H on the register, bit oracle into
/// qubit n, H on the register, U_lambda on (n, n+1). One quantum oracle use,
/// plus one classical query f(0) when the function is found constant.
template <BooleanOracle O>
CategoryVerdict categorize(O &oracle, const Mode &mode = Mode::exact()) {
    const OracleCounters before = oracle.counters();
    const unsigned n = oracle.num_vars();
    const unsigned out_qubit = n;
    const unsigned aux = n + 1;
    qsim::StateVector s(n + 2, std::uint64_t{1} << aux);
    qsim::apply_hadamard_prefix(s, n);
    oracle.apply(s, out_qubit);
    qsim::apply_hadamard_prefix(s, n);
    ULambdaResult u = u_lambda(s, out_qubit, aux);

    CategoryVerdict v;
    v.mode = mode;
    v.c_wootters = u.c_wootters;
    bool constant = false;
    bool balanced = false;
    if (mode.is_exact()) {
        v.p1 = u.p1;
        v.c_effective = u.c_effective;
        constant = std::min(u.p0, u.p1) <= kZeroTolerance;
        balanced = std::abs(u.p1 - 0.5) <= kZeroTolerance;
    } else {
        qsim::SampleCounts c = qsim::sample_counts(s, out_qubit, mode.shots(), mode.seed());
        const double shots = static_cast<double>(mode.shots());
        v.samples = c;
        v.p1 = static_cast<double>(c.ones) / shots;
        v.c_effective = effective_concurrence(v.p1);
        constant = c.ones == 0 || c.zeros == 0;
        balanced = !constant && std::abs(v.p1 - 0.5) <= kBalancedSampleSigmas * 0.5 / std::sqrt(shots);
    }
    v.category = constant ? Category::Constant : balanced ? Category::Balanced : Category::Other;
    const std::uint64_t n_inputs = std::uint64_t{1} << n;
    v.m_candidates = solve_for_m(v.c_effective, n_inputs);
    if (constant) {
        v.constant_value = oracle.query(0);
    }
    v.oracle_calls = oracle.counters() - before;
    return v;
}

}  // namespace junta
