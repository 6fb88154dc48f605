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

// Boolean functions f : {0,1}^n -> {0,1} in two forms.
//
//  * AnfFunction: algebraic normal form, an XOR of AND product terms. Each
//    term is stored as a bitmask of variable indices; the empty mask is the
//    constant-1 term. Terms are kept canonical (sorted, pairs cancel mod 2),
//    so equality of term sets is equality of functions.
//  * TruthTable: dense 2^n bit array, bit l holds f(l).
//
// Input convention everywhere: variable x_i is bit i of the input index
// (x_0 is the least significant bit).
//
// The exhaustive analyses at the bottom of this header (influence, solution
// counts, same-term sets) are the classical ground truth the quantum
// procedures are checked against.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace junta {

/// Syntax error while reading an ANF expression. `position()` is the 0-based
/// character offset of the offending token.
class ParseError : public std::invalid_argument {
   public:
    ParseError(std::size_t position, const std::string &what)
        : std::invalid_argument("column " + std::to_string(position + 1) + ": " + what), position_(position) {
    }
    std::size_t position() const noexcept {
        return position_;
    }

   private:
    std::size_t position_;
};

/// Malformed truth-table file.
class FormatError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class TruthTable {
   public:
    static constexpr unsigned kMaxVars = 24;

    explicit TruthTable(unsigned num_vars) : num_vars_(num_vars) {
        if (num_vars == 0) {
            throw std::invalid_argument("truth table needs at least one variable");
        }
        if (num_vars > kMaxVars) {
            throw std::length_error(
                "truth table with " + std::to_string(num_vars) + " variables exceeds the cap of " +
                std::to_string(kMaxVars));
        }
        words_.assign(std::max<std::uint64_t>(1, size() >> 6), 0);
    }

    /// Builds from a string of '0'/'1' characters, index order l = 0..N-1.
    static TruthTable from_bits(unsigned num_vars, std::string_view bits) {
        TruthTable t(num_vars);
        if (bits.size() != t.size()) {
            throw std::invalid_argument(
                "expected " + std::to_string(t.size()) + " bits, got " + std::to_string(bits.size()));
        }
        for (std::uint64_t l = 0; l < t.size(); ++l) {
            if (bits[l] != '0' && bits[l] != '1') {
                throw std::invalid_argument("truth table bits must be 0 or 1");
            }
            t.set(l, bits[l] == '1');
        }
        return t;
    }

    template <typename F>
    static TruthTable from_function(unsigned num_vars, F &&f) {
        TruthTable t(num_vars);
        for (std::uint64_t l = 0; l < t.size(); ++l) {
            t.set(l, static_cast<bool>(f(l)));
        }
        return t;
    }

    unsigned num_vars() const noexcept {
        return num_vars_;
    }
    std::uint64_t size() const noexcept {
        return std::uint64_t{1} << num_vars_;
    }

    /// Unchecked access.
    bool get(std::uint64_t x) const noexcept {
        return (words_[x >> 6] >> (x & 63)) & 1;
    }
    void set(std::uint64_t x, bool value) noexcept {
        auto bit = std::uint64_t{1} << (x & 63);
        if (value) {
            words_[x >> 6] |= bit;
        } else {
            words_[x >> 6] &= ~bit;
        }
    }

    /// Checked evaluation; this is the black-box interface.
    bool operator()(std::uint64_t x) const {
        if (x >= size()) {
            throw std::out_of_range("input " + std::to_string(x) + " outside [0, " + std::to_string(size()) + ")");
        }
        return get(x);
    }

    std::span<const std::uint64_t> words() const noexcept {
        return words_;
    }
    std::span<std::uint64_t> words() noexcept {
        return words_;
    }

    std::string to_bit_string() const {
        std::string s(size(), '0');
        for (std::uint64_t l = 0; l < size(); ++l) {
            if (get(l)) {
                s[l] = '1';
            }
        }
        return s;
    }

    friend bool operator==(const TruthTable &, const TruthTable &) = default;

   private:
    unsigned num_vars_;
    std::vector<std::uint64_t> words_;
};

class AnfFunction {
   public:
    /// Bitmask of the variables multiplied together in one product term.
    using Term = std::uint64_t;
    static constexpr unsigned kMaxVars = 64;

    explicit AnfFunction(unsigned num_vars) : num_vars_(num_vars) {
        if (num_vars == 0 || num_vars > kMaxVars) {
            throw std::invalid_argument("variable count must be in [1, 64]");
        }
    }

    /// `{{0, 1}, {2}}` is x0&x1 ^ x2; `{{}}` is the constant 1.
    AnfFunction(unsigned num_vars, std::initializer_list<std::initializer_list<unsigned>> terms)
        : AnfFunction(num_vars) {
        for (const auto &vars : terms) {
            Term t = 0;
            for (unsigned v : vars) {
                check_var(v);
                t |= Term{1} << v;
            }
            toggle_term(t);
        }
    }

    static AnfFunction from_terms(unsigned num_vars, std::span<const Term> terms) {
        AnfFunction f(num_vars);
        for (Term t : terms) {
            f.toggle_term(t);
        }
        return f;
    }

    static AnfFunction constant(unsigned num_vars, bool value) {
        AnfFunction f(num_vars);
        if (value) {
            f.toggle_term(0);
        }
        return f;
    }

    unsigned num_vars() const noexcept {
        return num_vars_;
    }

    /// XORs `term` into the function: adds it if absent, cancels it if present.
    void toggle_term(Term term) {
        if (term & ~variable_mask()) {
            throw std::out_of_range("term mentions a variable index >= " + std::to_string(num_vars_));
        }
        auto it = std::lower_bound(terms_.begin(), terms_.end(), term);
        if (it != terms_.end() && *it == term) {
            terms_.erase(it);
        } else {
            terms_.insert(it, term);
        }
    }

    bool has_term(Term term) const noexcept {
        return std::binary_search(terms_.begin(), terms_.end(), term);
    }

    /// Canonical terms, ascending by mask value.
    std::span<const Term> terms() const noexcept {
        return terms_;
    }

    /// The terms as explicit index sets (each ascending).
    std::vector<std::vector<unsigned>> term_sets() const {
        std::vector<std::vector<unsigned>> out;
        out.reserve(terms_.size());
        for (Term t : terms_) {
            out.push_back(term_variables(t));
        }
        return out;
    }

    bool is_zero() const noexcept {
        return terms_.empty();
    }

    /// Unchecked evaluation at input index `x`.
    bool eval(std::uint64_t x) const noexcept {
        bool r = false;
        for (Term t : terms_) {
            r ^= (x & t) == t;
        }
        return r;
    }

    bool operator()(std::uint64_t x) const {
        if (num_vars_ < 64 && (x >> num_vars_) != 0) {
            throw std::out_of_range("input " + std::to_string(x) + " outside the function's domain");
        }
        return eval(x);
    }

    Term variable_mask() const noexcept {
        return num_vars_ == 64 ? ~Term{0} : (Term{1} << num_vars_) - 1;
    }

    static std::vector<unsigned> term_variables(Term t) {
        std::vector<unsigned> vars;
        while (t) {
            vars.push_back(static_cast<unsigned>(std::countr_zero(t)));
            t &= t - 1;
        }
        return vars;
    }

    friend bool operator==(const AnfFunction &, const AnfFunction &) = default;

   private:
    void check_var(unsigned v) const {
        if (v >= num_vars_) {
            throw std::out_of_range("variable index " + std::to_string(v) + " >= " + std::to_string(num_vars_));
        }
    }

    unsigned num_vars_;
    std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// Text form: terms joined by '^', each term `1` or `x<idx>` factors joined by
// '&'. A bare `0` is accepted as the empty function (the printer emits it).

namespace detail {

class AnfParser {
   public:
    AnfParser(std::string_view text, unsigned num_vars) : text_(text), result_(num_vars) {
    }

    AnfFunction parse() {
        skip_space();
        if (pos_ == text_.size()) {
            throw ParseError(pos_, "empty expression");
        }
        parse_term();
        while (true) {
            skip_space();
            if (pos_ == text_.size()) {
                break;
            }
            if (text_[pos_] != '^') {
                throw ParseError(pos_, std::string("expected '^' or end of input, found '") + text_[pos_] + "'");
            }
            ++pos_;
            parse_term();
        }
        return std::move(result_);
    }

   private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    void parse_term() {
        AnfFunction::Term term = 0;
        bool zero = false;
        parse_factor(term, zero);
        while (true) {
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '&') {
                ++pos_;
                parse_factor(term, zero);
            } else {
                break;
            }
        }
        if (!zero) {
            result_.toggle_term(term);
        }
    }

    void parse_factor(AnfFunction::Term &term, bool &zero) {
        skip_space();
        if (pos_ == text_.size()) {
            throw ParseError(pos_, "expected a term, found end of input");
        }
        char c = text_[pos_];
        if (c == '1' || c == '0') {
            std::size_t start = pos_++;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                throw ParseError(start, "constants must be 0 or 1");
            }
            zero |= c == '0';
            return;
        }
        if (c != 'x') {
            throw ParseError(pos_, std::string("expected 'x<index>', '1' or '0', found '") + c + "'");
        }
        std::size_t start = pos_++;
        std::size_t digits_begin = pos_;
        unsigned long long idx = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            idx = idx * 10 + static_cast<unsigned>(text_[pos_] - '0');
            if (idx > 1000000) {
                throw ParseError(start, "variable index too large");
            }
            ++pos_;
        }
        if (pos_ == digits_begin) {
            throw ParseError(pos_, "expected a decimal index after 'x'");
        }
        if (idx >= result_.num_vars()) {
            throw ParseError(
                start,
                "variable x" + std::to_string(idx) + " out of range for n = " + std::to_string(result_.num_vars()));
        }
        term |= AnfFunction::Term{1} << idx;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    AnfFunction result_;
};

}  // namespace detail

inline AnfFunction parse_anf(std::string_view text, unsigned num_vars) {
    return detail::AnfParser(text, num_vars).parse();
}

/// Canonical printer; `parse_anf(to_string(f), n) == f`.
inline std::string to_string(const AnfFunction &f) {
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    for (auto t : f.terms()) {
        if (!out.empty()) {
            out += " ^ ";
        }
        if (t == 0) {
            out += '1';
            continue;
        }
        bool first = true;
        for (unsigned v : AnfFunction::term_variables(t)) {
            if (!first) {
                out += '&';
            }
            first = false;
            out += 'x';
            out += std::to_string(v);
        }
    }
    return out;
}

inline std::ostream &operator<<(std::ostream &os, const AnfFunction &f) {
    return os << to_string(f);
}

// ---------------------------------------------------------------------------
// Evaluation and conversion.

inline bool evaluate(const AnfFunction &f, std::uint64_t x) {
    return f(x);
}

inline bool evaluate(const TruthTable &f, std::uint64_t x) {
    return f(x);
}

namespace detail {

// In-place binary Moebius transform over GF(2). It is an involution and maps
// a truth table to its ANF coefficient vector and back.
inline void moebius_transform(TruthTable &t) {
    static constexpr std::uint64_t kHigh[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
    };
    auto words = t.words();
    unsigned n = t.num_vars();
    for (unsigned i = 0; i < std::min(n, 6u); ++i) {
        for (auto &w : words) {
            w ^= (w << (1u << i)) & kHigh[i];
        }
    }
    for (unsigned i = 6; i < n; ++i) {
        std::size_t stride = std::size_t{1} << (i - 6);
        for (std::size_t base = 0; base < words.size(); base += 2 * stride) {
            for (std::size_t k = 0; k < stride; ++k) {
                words[base + stride + k] ^= words[base + k];
            }
        }
    }
}

}  // namespace detail

inline TruthTable to_truth_table(const AnfFunction &f) {
    if (f.num_vars() > TruthTable::kMaxVars) {
        throw std::length_error(
            "refusing to tabulate " + std::to_string(f.num_vars()) + " variables (cap " +
            std::to_string(TruthTable::kMaxVars) + ")");
    }
    TruthTable t(f.num_vars());
    for (auto term : f.terms()) {
        t.set(term, true);
    }
    detail::moebius_transform(t);
    return t;
}

/// Recovers the (unique) ANF of a tabulated function.
inline AnfFunction to_anf(const TruthTable &t) {
    TruthTable coeffs = t;
    detail::moebius_transform(coeffs);
    AnfFunction f(t.num_vars());
    for (std::uint64_t l = 0; l < coeffs.size(); ++l) {
        if (coeffs.get(l)) {
            f.toggle_term(l);
        }
    }
    return f;
}

// ---------------------------------------------------------------------------
// Algebra.

/// f with x_i replaced by 1 ^ x_i: each term T containing i contributes
/// T ^ (T \ {i}).
inline AnfFunction negate_variable(const AnfFunction &f, unsigned i) {
    if (i >= f.num_vars()) {
        throw std::out_of_range("variable index " + std::to_string(i) + " >= " + std::to_string(f.num_vars()));
    }
    AnfFunction out = f;
    AnfFunction::Term bit = AnfFunction::Term{1} << i;
    for (auto t : f.terms()) {
        if (t & bit) {
            out.toggle_term(t & ~bit);
        }
    }
    return out;
}

inline AnfFunction xor_functions(const AnfFunction &f, const AnfFunction &g) {
    if (f.num_vars() != g.num_vars()) {
        throw std::invalid_argument(
            "cannot combine functions of " + std::to_string(f.num_vars()) + " and " + std::to_string(g.num_vars()) +
            " variables");
    }
    AnfFunction out = f;
    for (auto t : g.terms()) {
        out.toggle_term(t);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exhaustive classical analyses.

struct InfluenceReport {
    std::uint64_t nu0 = 0;  // inputs where flipping x_i leaves f unchanged
    std::uint64_t nu1 = 0;  // inputs where flipping x_i flips f
    double influence = 0;   // nu1 / N
    double c_effective = 0; // 2 sqrt(nu0 nu1) / N
};

inline InfluenceReport influence_report(const TruthTable &f, unsigned i) {
    if (i >= f.num_vars()) {
        throw std::out_of_range("variable index " + std::to_string(i) + " >= " + std::to_string(f.num_vars()));
    }
    const std::uint64_t n_inputs = f.size();
    const std::uint64_t tau = std::uint64_t{1} << i;
    InfluenceReport r;
    for (std::uint64_t x = 0; x < n_inputs; ++x) {
        r.nu1 += f.get(x) != f.get(x ^ tau);
    }
    r.nu0 = n_inputs - r.nu1;
    const double big_n = static_cast<double>(n_inputs);
    r.influence = static_cast<double>(r.nu1) / big_n;
    r.c_effective = 2.0 * std::sqrt(static_cast<double>(r.nu0) * static_cast<double>(r.nu1)) / big_n;
    return r;
}

struct LinearityProbe {
    bool constant_term_present = false;  // f(0...0)
    bool linear_term_present = false;    // f(0...0) != f(e_i)
};

/// Two classical queries: f(0) and f(e_i). Only the constant term and the
/// term {i} survive at those points, so the answer is exact for any ANF.
template <typename Evaluator>
LinearityProbe linearity_probe(Evaluator &&f, unsigned num_vars, unsigned i) {
    if (i >= num_vars) {
        throw std::out_of_range("variable index " + std::to_string(i) + " >= " + std::to_string(num_vars));
    }
    bool at_zero = static_cast<bool>(f(std::uint64_t{0}));
    bool at_unit = static_cast<bool>(f(std::uint64_t{1} << i));
    return {at_zero, at_zero != at_unit};
}

inline std::uint64_t count_ones(const TruthTable &f) {
    std::uint64_t m = 0;
    for (auto w : f.words()) {
        m += static_cast<std::uint64_t>(std::popcount(w));
    }
    return m;
}

/// Classical reference for the same-term learner: the variables on which
/// g = f ^ f(x with x_i negated) depends.
inline std::vector<unsigned> same_term_variables_oracle(const AnfFunction &f, unsigned i) {
    AnfFunction g = xor_functions(f, negate_variable(f, i));
    TruthTable table = to_truth_table(g);
    std::vector<unsigned> out;
    for (unsigned j = 0; j < f.num_vars(); ++j) {
        if (influence_report(table, j).nu1 > 0) {
            out.push_back(j);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Truth-table files: line 1 is decimal n, line 2 is the 2^n bits in index
// order. The trailing newline is optional on read and always written.

inline TruthTable read_truth_table(std::istream &in) {
    std::string header;
    std::string bits;
    if (!std::getline(in, header)) {
        throw FormatError("truth table: missing variable count line");
    }
    auto trim = [](std::string &s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
            s.pop_back();
        }
        std::size_t k = 0;
        while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) {
            ++k;
        }
        s.erase(0, k);
    };
    trim(header);
    if (header.empty() || !std::all_of(header.begin(), header.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        })) {
        throw FormatError("truth table: first line must be a decimal variable count, got '" + header + "'");
    }
    if (header.size() > 3) {
        throw FormatError("truth table: variable count too large");
    }
    unsigned n = static_cast<unsigned>(std::stoul(header));
    if (n == 0 || n > TruthTable::kMaxVars) {
        throw FormatError("truth table: variable count must be in [1, " + std::to_string(TruthTable::kMaxVars) + "]");
    }
    if (!std::getline(in, bits)) {
        throw FormatError("truth table: missing bits line");
    }
    trim(bits);
    std::string rest;
    while (std::getline(in, rest)) {
        trim(rest);
        if (!rest.empty()) {
            throw FormatError("truth table: unexpected content after the bits line");
        }
    }
    try {
        return TruthTable::from_bits(n, bits);
    } catch (const std::invalid_argument &e) {
        throw FormatError(std::string("truth table: ") + e.what());
    }
}

inline TruthTable read_truth_table_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open truth table file '" + path + "'");
    }
    return read_truth_table(in);
}

inline void write_truth_table(std::ostream &out, const TruthTable &t) {
    out << t.num_vars() << '\n' << t.to_bit_string() << '\n';
}

inline void write_truth_table_file(const std::string &path, const TruthTable &t) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw FormatError("cannot write truth table file '" + path + "'");
    }
    write_truth_table(out, t);
}

}  // namespace junta
