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

// Tests every variable of f = x0&x1 ^ x3 ^ x2&x3&x4 over six variables,
// finds the partners of x2, and categorizes f.

#include <iostream>

#include "junta/junta.hpp"

int main() {
    using namespace junta;

    AnfFunction f = parse_anf("x0&x1 ^ x3 ^ x2&x3&x4", 6);
    TableOracle oracle = make_oracle(f);
    std::cout << "f = " << f << "\n\n";

    for (const JuntaVerdict &v : test_all_variables(oracle)) {
        std::cout << "x" << v.variable << ": " << to_string(v.verdict);
        if (v.p1) {
            std::cout << "  p1 = " << *v.p1 << "  C_eff = " << *v.c_effective << "  C_wootters = " << *v.c_wootters;
        }
        std::cout << '\n';
    }

    SameTermSet partners = same_term_variables(oracle, 2);
    std::cout << "\nvariables sharing a term with x2:";
    for (unsigned t : partners.members) {
        std::cout << " x" << t;
    }
    std::cout << "  (" << partners.oracle_calls.quantum << " quantum oracle uses)\n";

    CategoryVerdict c = categorize(oracle);
    std::cout << "\ncategory: " << to_string(c.category) << "  C = " << c.c_effective << "  M in {"
              << c.m_candidates.low << ", " << c.m_candidates.high << "}  (true M = "
              << count_ones(to_truth_table(f)) << ")\n";
    std::cout << "total oracle uses: " << oracle.counters().quantum << " quantum, " << oracle.counters().classical
              << " classical\n";
}
