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

// Black-box access to a Boolean function, with call accounting.
//
// An oracle answers classical queries `query(x)` and can be applied to a
// statevector as the bit oracle |x>|t> -> |x>|t ^ f(x)> on register qubits
// 0..n-1. Every call is tallied so that algorithms can report exactly how
// many times they touched the function.

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "junta/boolfn.hpp"
#include "junta/qsim.hpp"

namespace junta {

struct OracleCounters {
    std::uint64_t classical = 0;
    std::uint64_t quantum = 0;

    friend OracleCounters operator-(const OracleCounters &a, const OracleCounters &b) {
        return {a.classical - b.classical, a.quantum - b.quantum};
    }
    friend bool operator==(const OracleCounters &, const OracleCounters &) = default;
};

template <typename O>
concept BooleanOracle = requires(O &o, const O &co, std::uint64_t x, qsim::StateVector &s, unsigned t) {
    { co.num_vars() } -> std::convertible_to<unsigned>;
    { o.query(x) } -> std::same_as<bool>;
    o.apply(s, t);
    { co.counters() } -> std::convertible_to<OracleCounters>;
};

template <typename Evaluator>
class FunctionOracle {
   public:
    FunctionOracle(unsigned num_vars, Evaluator eval) : num_vars_(num_vars), eval_(std::move(eval)) {
        if (num_vars == 0 || num_vars > TruthTable::kMaxVars) {
            throw std::invalid_argument("oracle variable count must be in [1, " + std::to_string(TruthTable::kMaxVars) + "]");
        }
    }

    unsigned num_vars() const noexcept {
        return num_vars_;
    }

    bool query(std::uint64_t x) {
        if (x >> num_vars_) {
            throw std::out_of_range("oracle query " + std::to_string(x) + " outside the input domain");
        }
        ++counters_.classical;
        return static_cast<bool>(eval_(x));
    }

    void apply(qsim::StateVector &s, unsigned target) {
        ++counters_.quantum;
        qsim::apply_bit_oracle(s, eval_, num_vars_, target);
    }

    const OracleCounters &counters() const noexcept {
        return counters_;
    }
    const Evaluator &evaluator() const noexcept {
        return eval_;
    }

   private:
    unsigned num_vars_;
    Evaluator eval_;
    OracleCounters counters_;
};

using TableOracle = FunctionOracle<TruthTable>;

inline TableOracle make_oracle(TruthTable table) {
    unsigned n = table.num_vars();
    return TableOracle(n, std::move(table));
}

inline TableOracle make_oracle(const AnfFunction &f) {
    return make_oracle(to_truth_table(f));
}

/// U_g for g = f ^ f(x with x_i negated), built from two uses of the wrapped
/// oracle around X gates on qubit i. Its own counters tally U_g uses; each one
/// costs two uses of the wrapped oracle, which that oracle's counters record.
template <BooleanOracle Base>
class DerivativeOracle {
   public:
    DerivativeOracle(Base &base, unsigned i) : base_(base), i_(i) {
        if (i >= base.num_vars()) {
            throw std::out_of_range(
                "variable index " + std::to_string(i) + " >= " + std::to_string(base.num_vars()));
        }
    }

    unsigned num_vars() const noexcept {
        return base_.num_vars();
    }
    unsigned negated_variable() const noexcept {
        return i_;
    }

    bool query(std::uint64_t x) {
        ++counters_.classical;
        bool a = base_.query(x);
        bool b = base_.query(x ^ (std::uint64_t{1} << i_));
        return a != b;
    }

    void apply(qsim::StateVector &s, unsigned target) {
        ++counters_.quantum;
        base_.apply(s, target);
        qsim::apply_x(s, i_);
        base_.apply(s, target);
        qsim::apply_x(s, i_);
    }

    const OracleCounters &counters() const noexcept {
        return counters_;
    }

   private:
    Base &base_;
    unsigned i_;
    OracleCounters counters_;
};

}  // namespace junta
