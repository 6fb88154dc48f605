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

#include "junta/boolfn.hpp"

#include <sstream>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace junta;
using junta::testing::random_anf;
using junta::testing::tabulate_directly;
using junta::testing::table_from_index;
using junta::testing::test_rng;

using Sets = std::vector<std::vector<unsigned>>;

TEST(parse_anf, reads_terms) {
    EXPECT_EQ(parse_anf("x0 & x1 ^ x2", 3).term_sets(), (Sets{{0, 1}, {2}}));
    EXPECT_EQ(parse_anf("x0&x1^x2", 3), parse_anf("  x2 ^ x1 &x0 ", 3));
    EXPECT_EQ(parse_anf("1", 1).term_sets(), (Sets{{}}));
    EXPECT_EQ(parse_anf("x10", 11).term_sets(), (Sets{{10}}));
}

TEST(parse_anf, cancels_pairs) {
    EXPECT_TRUE(parse_anf("1 ^ 1", 1).is_zero());
    EXPECT_EQ(parse_anf("x0 ^ x0&x1 ^ x0", 2).term_sets(), (Sets{{0, 1}}));
    // Repeated factors are idempotent.
    EXPECT_EQ(parse_anf("x1&x1", 2).term_sets(), (Sets{{1}}));
    EXPECT_TRUE(parse_anf("0", 3).is_zero());
    EXPECT_TRUE(parse_anf("x0&0 ^ 0", 3).is_zero());
    EXPECT_EQ(parse_anf("x0&1", 3).term_sets(), (Sets{{0}}));
}

TEST(parse_anf, reports_error_position) {
    auto position_of = [](const char *text, unsigned n) -> std::size_t {
        try {
            parse_anf(text, n);
        } catch (const ParseError &e) {
            return e.position();
        }
        return std::string::npos;
    };
    EXPECT_EQ(position_of("x0 ^ ^ x1", 2), 5u);
    EXPECT_EQ(position_of("x0 x1", 2), 3u);
    EXPECT_EQ(position_of("x", 2), 1u);
    EXPECT_EQ(position_of("", 2), 0u);
    EXPECT_EQ(position_of("x0 ^", 2), 4u);
    EXPECT_EQ(position_of("y0", 2), 0u);
    EXPECT_EQ(position_of("x0 & 2", 2), 5u);
    EXPECT_EQ(position_of("x1 ^ x2", 2), 5u);  // index >= n
    EXPECT_THROW(parse_anf("x3", 3), ParseError);
}

TEST(parse_anf, left_inverse_of_printer) {
    auto &rng = test_rng();
    for (int k = 0; k < 300; ++k) {
        unsigned n = 1 + static_cast<unsigned>(k % 12);
        AnfFunction f = random_anf(n, rng, 8);
        ASSERT_EQ(parse_anf(to_string(f), n), f) << to_string(f);
    }
    EXPECT_EQ(to_string(parse_anf("x2 ^ x0 & x1 ^ 1", 3)), "1 ^ x0&x1 ^ x2");
    EXPECT_EQ(to_string(AnfFunction(2)), "0");
}

TEST(evaluate, anf_and_table) {
    AnfFunction f(2, {{0, 1}});
    EXPECT_TRUE(evaluate(f, 3));
    EXPECT_FALSE(evaluate(f, 2));
    AnfFunction one(3, {{}});
    for (std::uint64_t x = 0; x < 8; ++x) {
        EXPECT_TRUE(evaluate(one, x));
    }
    TruthTable t = to_truth_table(f);
    EXPECT_TRUE(evaluate(t, 3));
    EXPECT_FALSE(evaluate(t, 1));
    EXPECT_THROW(evaluate(t, 4), std::out_of_range);
    EXPECT_THROW(evaluate(f, 4), std::out_of_range);
}

TEST(to_truth_table, small_cases) {
    EXPECT_EQ(to_truth_table(parse_anf("x0&x1", 2)).to_bit_string(), "0001");
    EXPECT_EQ(to_truth_table(AnfFunction(1)).to_bit_string(), "00");
    EXPECT_EQ(to_truth_table(parse_anf("x1 ^ x0&x1", 2)).to_bit_string(), "0010");
}

TEST(to_truth_table, matches_direct_evaluation) {
    auto &rng = test_rng();
    for (unsigned n = 1; n <= 10; ++n) {
        for (int k = 0; k < 20; ++k) {
            AnfFunction f = random_anf(n, rng, 10);
            ASSERT_EQ(to_truth_table(f), tabulate_directly(f)) << to_string(f);
            ASSERT_EQ(to_anf(to_truth_table(f)), f);
        }
    }
}

TEST(to_truth_table, refuses_large_n) {
    EXPECT_THROW(to_truth_table(AnfFunction(25)), std::length_error);
    EXPECT_THROW(TruthTable(25), std::length_error);
    EXPECT_NO_THROW(to_truth_table(AnfFunction(20)));
}

TEST(negate_variable, examples) {
    EXPECT_EQ(negate_variable(AnfFunction(2, {{0, 1}}), 0), AnfFunction(2, {{0, 1}, {1}}));
    EXPECT_EQ(negate_variable(AnfFunction(3, {{2}}), 0), AnfFunction(3, {{2}}));
    EXPECT_EQ(negate_variable(AnfFunction(1, {{0}}), 0), AnfFunction(1, {{}, {0}}));
    EXPECT_THROW(negate_variable(AnfFunction(2), 2), std::out_of_range);
}

TEST(negate_variable, is_input_flip) {
    auto &rng = test_rng();
    for (unsigned n = 1; n <= 8; ++n) {
        for (int k = 0; k < 25; ++k) {
            AnfFunction f = random_anf(n, rng);
            TruthTable tf = tabulate_directly(f);
            for (unsigned i = 0; i < n; ++i) {
                TruthTable tg = tabulate_directly(negate_variable(f, i));
                for (std::uint64_t l = 0; l < tf.size(); ++l) {
                    ASSERT_EQ(tg.get(l), tf.get(l ^ (std::uint64_t{1} << i)));
                }
            }
        }
    }
}

TEST(xor_functions, examples) {
    AnfFunction a(2, {{0, 1}});
    AnfFunction b(2, {{0, 1}, {1}});
    EXPECT_EQ(xor_functions(a, b), AnfFunction(2, {{1}}));
    EXPECT_TRUE(xor_functions(a, a).is_zero());
    EXPECT_EQ(xor_functions(AnfFunction(1, {{0}}), AnfFunction(1, {{}, {0}})), AnfFunction::constant(1, true));
    EXPECT_THROW(xor_functions(AnfFunction(2), AnfFunction(3)), std::invalid_argument);
}

TEST(xor_functions, pointwise) {
    auto &rng = test_rng();
    for (int k = 0; k < 100; ++k) {
        unsigned n = 1 + static_cast<unsigned>(k % 7);
        AnfFunction f = random_anf(n, rng);
        AnfFunction g = random_anf(n, rng);
        TruthTable tf = tabulate_directly(f);
        TruthTable tg = tabulate_directly(g);
        TruthTable th = tabulate_directly(xor_functions(f, g));
        for (std::uint64_t l = 0; l < tf.size(); ++l) {
            ASSERT_EQ(th.get(l), tf.get(l) != tg.get(l));
        }
    }
}

TEST(influence_report, examples) {
    auto r = influence_report(to_truth_table(parse_anf("x0&x1", 2)), 0);
    EXPECT_EQ(r.nu1, 2u);
    EXPECT_EQ(r.nu0, 2u);
    EXPECT_DOUBLE_EQ(r.influence, 0.5);
    EXPECT_DOUBLE_EQ(r.c_effective, 1.0);

    r = influence_report(TruthTable(3), 1);
    EXPECT_EQ(r.nu1, 0u);
    EXPECT_EQ(r.influence, 0.0);
    EXPECT_EQ(r.c_effective, 0.0);

    r = influence_report(to_truth_table(parse_anf("x0", 2)), 0);
    EXPECT_EQ(r.nu1, 4u);
    EXPECT_EQ(r.influence, 1.0);
    EXPECT_EQ(r.c_effective, 0.0);

    EXPECT_THROW(influence_report(TruthTable(2), 2), std::out_of_range);
}

TEST(influence_report, nu_sum_is_n) {
    auto &rng = test_rng();
    for (int k = 0; k < 200; ++k) {
        unsigned n = 1 + static_cast<unsigned>(k % 9);
        TruthTable t = to_truth_table(random_anf(n, rng));
        for (unsigned i = 0; i < n; ++i) {
            auto r = influence_report(t, i);
            ASSERT_EQ(r.nu0 + r.nu1, t.size());
            ASSERT_DOUBLE_EQ(r.influence, static_cast<double>(r.nu1) / static_cast<double>(t.size()));
        }
    }
}

TEST(linearity_probe, examples) {
    auto probe = [](const char *text, unsigned n, unsigned i) {
        AnfFunction f = parse_anf(text, n);
        return linearity_probe(f, n, i);
    };
    EXPECT_TRUE(probe("x0 ^ x1&x2", 3, 0).linear_term_present);
    EXPECT_FALSE(probe("x0 ^ x1&x2", 3, 0).constant_term_present);
    EXPECT_FALSE(probe("x0&x1", 2, 0).linear_term_present);
    auto c = probe("1", 1, 0);
    EXPECT_TRUE(c.constant_term_present);
    EXPECT_FALSE(c.linear_term_present);
    EXPECT_THROW(probe("x0", 2, 5), std::out_of_range);
}

TEST(linearity_probe, uses_two_queries) {
    int calls = 0;
    auto f = [&](std::uint64_t x) {
        ++calls;
        return x == 4;
    };
    EXPECT_TRUE(linearity_probe(f, 3, 2).linear_term_present);
    EXPECT_EQ(calls, 2);
}

// Exhaustive over every function of up to 4 variables.
TEST(linearity_probe, exact_for_anf) {
    for (unsigned n = 1; n <= 4; ++n) {
        std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << n);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            TruthTable t = table_from_index(n, idx);
            AnfFunction f = to_anf(t);
            for (unsigned i = 0; i < n; ++i) {
                ASSERT_EQ(linearity_probe(t, n, i).linear_term_present, f.has_term(AnfFunction::Term{1} << i));
            }
        }
    }
}

// nu1 = 0 <=> f ^ f(x with x_i negated) is the zero function.
TEST(influence_report, junta_iff_derivative_vanishes) {
    for (unsigned n = 1; n <= 4; ++n) {
        std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << n);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            TruthTable t = table_from_index(n, idx);
            AnfFunction f = to_anf(t);
            for (unsigned i = 0; i < n; ++i) {
                bool junta = influence_report(t, i).nu1 == 0;
                ASSERT_EQ(junta, xor_functions(f, negate_variable(f, i)).is_zero());
            }
        }
    }
}

TEST(count_ones, examples) {
    EXPECT_EQ(count_ones(TruthTable(3)), 0u);
    EXPECT_EQ(count_ones(to_truth_table(parse_anf("x0", 2))), 2u);
    EXPECT_EQ(count_ones(to_truth_table(parse_anf("x0&x1", 2))), 1u);
    EXPECT_EQ(count_ones(to_truth_table(parse_anf("x7", 10))), 512u);
}

TEST(same_term_variables_oracle, examples) {
    using V = std::vector<unsigned>;
    EXPECT_EQ(same_term_variables_oracle(parse_anf("x0&x1 ^ x2", 3), 0), (V{1}));
    EXPECT_EQ(same_term_variables_oracle(parse_anf("x0 ^ x1", 2), 0), (V{}));
    EXPECT_EQ(same_term_variables_oracle(parse_anf("x0&x1&x2", 3), 0), (V{1, 2}));
    EXPECT_EQ(same_term_variables_oracle(parse_anf("x0&x1 ^ x0&x3 ^ x2", 4), 0), (V{1, 3}));
    EXPECT_THROW(same_term_variables_oracle(AnfFunction(2), 3), std::out_of_range);
}

TEST(same_term_variables_oracle, excludes_probe_variable) {
    auto &rng = test_rng();
    for (int k = 0; k < 200; ++k) {
        unsigned n = 1 + static_cast<unsigned>(k % 6);
        AnfFunction f = random_anf(n, rng);
        for (unsigned i = 0; i < n; ++i) {
            auto s = same_term_variables_oracle(f, i);
            ASSERT_TRUE(std::find(s.begin(), s.end(), i) == s.end());
        }
    }
}

TEST(truth_table_file, round_trip) {
    auto &rng = test_rng();
    for (unsigned n = 1; n <= 9; ++n) {
        TruthTable t = to_truth_table(random_anf(n, rng));
        std::stringstream ss;
        write_truth_table(ss, t);
        std::string written = ss.str();
        TruthTable back = read_truth_table(ss);
        ASSERT_EQ(back, t);
        std::stringstream again;
        write_truth_table(again, back);
        ASSERT_EQ(again.str(), written);
    }
}

TEST(truth_table_file, format) {
    std::stringstream ss;
    write_truth_table(ss, to_truth_table(parse_anf("x0&x1", 2)));
    EXPECT_EQ(ss.str(), "2\n0001\n");

    std::istringstream no_trailing("2\n0110");
    EXPECT_EQ(read_truth_table(no_trailing).to_bit_string(), "0110");
    std::istringstream crlf("1\r\n01\r\n");
    EXPECT_EQ(read_truth_table(crlf).to_bit_string(), "01");
}

TEST(truth_table_file, rejects_malformed) {
    auto bad = [](const char *text) {
        std::istringstream in(text);
        EXPECT_THROW(read_truth_table(in), FormatError) << text;
    };
    bad("");
    bad("2\n");
    bad("2\n010\n");
    bad("2\n01a1\n");
    bad("x\n01\n");
    bad("0\n0\n");
    bad("25\n0\n");
    bad("1\n01\n11\n");
    EXPECT_THROW(read_truth_table_file("/nonexistent/path.tt"), FormatError);
}
