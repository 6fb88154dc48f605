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

// Dense statevector simulator with the handful of gates the junta circuits
// use. Basis index b encodes qubit k as bit k. Gates mutate the state in
// place; copy the StateVector first if the previous state is still needed.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace junta::qsim {

using Amplitude = std::complex<double>;

inline constexpr double kAmplitudeTolerance = 1e-9;

class StateVector {
   public:
    static constexpr unsigned kMaxQubits = 26;

    /// Computational basis state |basis>.
    explicit StateVector(unsigned num_qubits, std::uint64_t basis = 0) : num_qubits_(num_qubits) {
        if (num_qubits == 0 || num_qubits > kMaxQubits) {
            throw std::length_error("qubit count must be in [1, " + std::to_string(kMaxQubits) + "]");
        }
        if (basis >= dimension()) {
            throw std::out_of_range(
                "basis index " + std::to_string(basis) + " outside a " + std::to_string(num_qubits) + "-qubit register");
        }
        amplitudes_.assign(dimension(), Amplitude{0, 0});
        amplitudes_[basis] = 1;
    }

    /// Takes ownership of explicit amplitudes; they must be normalized.
    static StateVector from_amplitudes(std::vector<Amplitude> amps) {
        if (amps.empty() || !std::has_single_bit(amps.size())) {
            throw std::invalid_argument("amplitude count must be a power of two");
        }
        StateVector s(static_cast<unsigned>(std::countr_zero(amps.size())));
        s.amplitudes_ = std::move(amps);
        if (std::abs(s.norm_squared() - 1.0) > kAmplitudeTolerance) {
            throw std::invalid_argument("amplitudes are not normalized");
        }
        return s;
    }

    unsigned num_qubits() const noexcept {
        return num_qubits_;
    }
    std::uint64_t dimension() const noexcept {
        return std::uint64_t{1} << num_qubits_;
    }

    std::span<Amplitude> amplitudes() noexcept {
        return amplitudes_;
    }
    std::span<const Amplitude> amplitudes() const noexcept {
        return amplitudes_;
    }
    Amplitude operator[](std::uint64_t b) const {
        return amplitudes_[b];
    }
    Amplitude &operator[](std::uint64_t b) {
        return amplitudes_[b];
    }

    double norm_squared() const noexcept {
        double s = 0;
        for (const auto &a : amplitudes_) {
            s += std::norm(a);
        }
        return s;
    }

    void check_qubit(unsigned q) const {
        if (q >= num_qubits_) {
            throw std::out_of_range(
                "qubit " + std::to_string(q) + " outside a " + std::to_string(num_qubits_) + "-qubit register");
        }
    }

   private:
    unsigned num_qubits_;
    std::vector<Amplitude> amplitudes_;
};

inline StateVector new_state(unsigned num_qubits, std::uint64_t basis) {
    return StateVector(num_qubits, basis);
}

// ---------------------------------------------------------------------------
// Gates.

inline void apply_hadamard(StateVector &s, unsigned q) {
    s.check_qubit(q);
    const double r = 1.0 / std::sqrt(2.0);
    const std::uint64_t bit = std::uint64_t{1} << q;
    auto amps = s.amplitudes();
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
        if (b & bit) {
            continue;
        }
        Amplitude a0 = amps[b];
        Amplitude a1 = amps[b | bit];
        amps[b] = (a0 + a1) * r;
        amps[b | bit] = (a0 - a1) * r;
    }
}

inline void apply_hadamard_layer(StateVector &s, std::span<const unsigned> qubits) {
    std::uint64_t seen = 0;
    for (unsigned q : qubits) {
        s.check_qubit(q);
        if (seen & (std::uint64_t{1} << q)) {
            throw std::invalid_argument("duplicate qubit " + std::to_string(q) + " in Hadamard layer");
        }
        seen |= std::uint64_t{1} << q;
    }
    for (unsigned q : qubits) {
        apply_hadamard(s, q);
    }
}

inline void apply_hadamard_layer(StateVector &s, std::initializer_list<unsigned> qubits) {
    apply_hadamard_layer(s, std::span<const unsigned>(qubits.begin(), qubits.size()));
}

/// H on qubits 0..count-1.
inline void apply_hadamard_prefix(StateVector &s, unsigned count) {
    std::vector<unsigned> qs(count);
    for (unsigned q = 0; q < count; ++q) {
        qs[q] = q;
    }
    apply_hadamard_layer(s, qs);
}

inline void apply_x(StateVector &s, unsigned q) {
    s.check_qubit(q);
    const std::uint64_t bit = std::uint64_t{1} << q;
    auto amps = s.amplitudes();
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
        if (!(b & bit)) {
            std::swap(amps[b], amps[b | bit]);
        }
    }
}

inline void apply_cnot(StateVector &s, unsigned control, unsigned target) {
    s.check_qubit(control);
    s.check_qubit(target);
    if (control == target) {
        throw std::invalid_argument("CNOT control and target must differ");
    }
    const std::uint64_t c = std::uint64_t{1} << control;
    const std::uint64_t t = std::uint64_t{1} << target;
    auto amps = s.amplitudes();
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
        if ((b & c) && !(b & t)) {
            std::swap(amps[b], amps[b | t]);
        }
    }
}

namespace detail {

inline void check_register(const StateVector &s, unsigned register_size) {
    if (register_size == 0 || register_size > s.num_qubits()) {
        throw std::out_of_range(
            "register of " + std::to_string(register_size) + " qubits does not fit a " +
            std::to_string(s.num_qubits()) + "-qubit state");
    }
}

}  // namespace detail

/// |x>|t> -> |x>|t ^ f(x)>, with x read from qubits 0..register_size-1.
template <typename Evaluator>
void apply_bit_oracle(StateVector &s, Evaluator &&f, unsigned register_size, unsigned target) {
    detail::check_register(s, register_size);
    s.check_qubit(target);
    if (target < register_size) {
        throw std::invalid_argument("oracle target qubit overlaps the input register");
    }
    const std::uint64_t reg_mask = (std::uint64_t{1} << register_size) - 1;
    const std::uint64_t t = std::uint64_t{1} << target;
    auto amps = s.amplitudes();
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
        if (!(b & t) && f(b & reg_mask)) {
            std::swap(amps[b], amps[b | t]);
        }
    }
}

/// |x> -> (-1)^f(x) |x>, with x read from qubits 0..register_size-1.
template <typename Evaluator>
void apply_phase_oracle(StateVector &s, Evaluator &&f, unsigned register_size) {
    detail::check_register(s, register_size);
    const std::uint64_t reg_mask = (std::uint64_t{1} << register_size) - 1;
    auto amps = s.amplitudes();
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
        if (f(b & reg_mask)) {
            amps[b] = -amps[b];
        }
    }
}

/// Two copies of the bit oracle around X gates on qubit i:
/// U_f, X_i, U_f, X_i. Net effect |x>|t> -> |x>|t ^ f(x) ^ f(x ^ e_i)>.
template <typename Evaluator>
void apply_ug(StateVector &s, Evaluator &&f, unsigned register_size, unsigned i, unsigned target) {
    if (i >= register_size) {
        throw std::out_of_range("negated variable " + std::to_string(i) + " outside the input register");
    }
    apply_bit_oracle(s, f, register_size, target);
    apply_x(s, i);
    apply_bit_oracle(s, f, register_size, target);
    apply_x(s, i);
}

// ---------------------------------------------------------------------------
// Observables.

/// Reduced state of (a, b) over basis index 2*bit_a + bit_b, i.e. the
/// ordering |00>, |01>, |10>, |11> with qubit a written first.
class TwoQubitDensity {
   public:
    TwoQubitDensity() = default;

    Amplitude &operator()(unsigned row, unsigned col) {
        return m_[row * 4 + col];
    }
    Amplitude operator()(unsigned row, unsigned col) const {
        return m_[row * 4 + col];
    }

    static TwoQubitDensity projector(const std::array<Amplitude, 4> &psi) {
        TwoQubitDensity rho;
        for (unsigned r = 0; r < 4; ++r) {
            for (unsigned c = 0; c < 4; ++c) {
                rho(r, c) = psi[r] * std::conj(psi[c]);
            }
        }
        return rho;
    }

    Amplitude trace() const {
        return m_[0] + m_[5] + m_[10] + m_[15];
    }

    double hermiticity_error() const {
        double e = 0;
        for (unsigned r = 0; r < 4; ++r) {
            for (unsigned c = 0; c < 4; ++c) {
                e = std::max(e, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
            }
        }
        return e;
    }

   private:
    std::array<Amplitude, 16> m_{};
};

inline TwoQubitDensity reduced_density_two_qubits(const StateVector &s, unsigned a, unsigned b) {
    s.check_qubit(a);
    s.check_qubit(b);
    if (a == b) {
        throw std::invalid_argument("reduced density needs two distinct qubits");
    }
    const std::uint64_t ba = std::uint64_t{1} << a;
    const std::uint64_t bb = std::uint64_t{1} << b;
    const std::array<std::uint64_t, 4> offset = {0, bb, ba, ba | bb};
    auto amps = s.amplitudes();
    TwoQubitDensity rho;
    for (std::uint64_t rest = 0; rest < amps.size(); ++rest) {
        if (rest & (ba | bb)) {
            continue;
        }
        std::array<Amplitude, 4> local;
        for (unsigned k = 0; k < 4; ++k) {
            local[k] = amps[rest | offset[k]];
        }
        for (unsigned r = 0; r < 4; ++r) {
            if (local[r] == Amplitude{0, 0}) {
                continue;
            }
            for (unsigned c = 0; c < 4; ++c) {
                rho(r, c) += local[r] * std::conj(local[c]);
            }
        }
    }
    return rho;
}

inline double prob_one(const StateVector &s, unsigned q) {
    s.check_qubit(q);
    const std::uint64_t bit = std::uint64_t{1} << q;
    double p = 0;
    auto amps = s.amplitudes();
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
        if (b & bit) {
            p += std::norm(amps[b]);
        }
    }
    return p;
}

/// Summed directly rather than as 1 - prob_one so that a population which is
/// exactly zero stays exactly zero.
inline double prob_zero(const StateVector &s, unsigned q) {
    s.check_qubit(q);
    const std::uint64_t bit = std::uint64_t{1} << q;
    double p = 0;
    auto amps = s.amplitudes();
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
        if (!(b & bit)) {
            p += std::norm(amps[b]);
        }
    }
    return p;
}

struct SampleCounts {
    std::uint64_t zeros = 0;
    std::uint64_t ones = 0;
    friend bool operator==(const SampleCounts &, const SampleCounts &) = default;
};

/// Name of the generator behind sample_counts, reported in run metadata.
inline constexpr const char *kSamplerName = "mt19937_64";

/// Repeated Z measurements of one qubit on fresh copies of `s`.
inline SampleCounts sample_counts(const StateVector &s, unsigned q, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be at least 1");
    }
    const double p0 = prob_zero(s, q);
    const double p1 = prob_one(s, q);
    const double threshold = p1 / (p0 + p1);
    std::mt19937_64 rng(seed);
    SampleCounts counts;
    for (std::uint64_t k = 0; k < shots; ++k) {
        // 53 uniform bits in [0, 1).
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < threshold) {
            ++counts.ones;
        } else {
            ++counts.zeros;
        }
    }
    return counts;
}

}  // namespace junta::qsim
