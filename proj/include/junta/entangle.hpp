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

// Two-qubit concurrence in three flavours:
//
//  * concurrence_pure: |<phi| sigma_y (x) sigma_y |phi*>| for a pure state,
//    which reduces to 2 |a00 a11 - a01 a10|.
//  * concurrence_wootters: the mixed-state concurrence of a reduced density
//    matrix. This is what a tomographic measurement of the (tested, auxiliary)
//    pair would see.
//  * effective_concurrence: 2 sqrt(p (1 - p)) from the tested qubit's
//    population alone. It equals the pure-state value for states of the form
//    alpha|01> + beta|10>, and is the statistic the junta decision uses.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "junta/qsim.hpp"

namespace junta {

struct PureTwoQubit {
    qsim::Amplitude a00;
    qsim::Amplitude a01;
    qsim::Amplitude a10;
    qsim::Amplitude a11;

    double norm_squared() const {
        return std::norm(a00) + std::norm(a01) + std::norm(a10) + std::norm(a11);
    }
    std::array<qsim::Amplitude, 4> as_array() const {
        return {a00, a01, a10, a11};
    }
};

inline double concurrence_pure(const PureTwoQubit &s) {
    if (std::abs(s.norm_squared() - 1.0) > qsim::kAmplitudeTolerance) {
        throw std::invalid_argument("concurrence_pure: state is not normalized");
    }
    return std::clamp(2.0 * std::abs(s.a00 * s.a11 - s.a01 * s.a10), 0.0, 1.0);
}

/// Eigenvalues of rho with |lambda| <= this are treated as exact zeros.
inline constexpr double kEigenvalueClamp = 1e-10;

inline double concurrence_wootters(const qsim::TwoQubitDensity &rho) {
    using Matrix = Eigen::Matrix4cd;
    Matrix m;
    for (unsigned r = 0; r < 4; ++r) {
        for (unsigned c = 0; c < 4; ++c) {
            m(r, c) = rho(r, c);
        }
    }
    if (rho.hermiticity_error() > qsim::kAmplitudeTolerance) {
        throw std::invalid_argument("concurrence_wootters: density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - qsim::Amplitude{1, 0}) > qsim::kAmplitudeTolerance) {
        throw std::invalid_argument("concurrence_wootters: density matrix trace is not 1");
    }
    // Hermitian part only; the anti-Hermitian residue is below tolerance.
    Matrix herm = (m + m.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<Matrix> eig(herm);
    if (eig.info() != Eigen::Success) {
        throw std::runtime_error("concurrence_wootters: eigendecomposition failed");
    }
    const auto &d = eig.eigenvalues();
    if (d.minCoeff() < -qsim::kAmplitudeTolerance) {
        throw std::invalid_argument("concurrence_wootters: density matrix is not positive semidefinite");
    }

    // rho = W W^dagger with W = V sqrt(D). The square roots of the eigenvalues
    // of rho * rho~ are the singular values of tau = W^T (sigma_y (x) sigma_y) W,
    // which avoids square-rooting a non-Hermitian spectrum.
    Matrix w = Matrix::Zero();
    for (int k = 0; k < 4; ++k) {
        double lambda = d(k);
        if (std::abs(lambda) > kEigenvalueClamp) {
            w.col(k) = eig.eigenvectors().col(k) * std::sqrt(std::max(lambda, 0.0));
        }
    }
    Matrix spin_flip = Matrix::Zero();
    spin_flip(0, 3) = -1;
    spin_flip(1, 2) = 1;
    spin_flip(2, 1) = 1;
    spin_flip(3, 0) = -1;
    Matrix tau = w.transpose() * spin_flip * w;
    Eigen::JacobiSVD<Matrix> svd(tau);
    const auto &s = svd.singularValues();  // descending
    double c = s(0) - s(1) - s(2) - s(3);
    return std::clamp(c, 0.0, 1.0);
}

/// Accepts rounding overshoot of a summed population and clamps it.
inline double checked_population(double p, const char *what) {
    if (!(p >= -qsim::kAmplitudeTolerance && p <= 1.0 + qsim::kAmplitudeTolerance)) {
        throw std::out_of_range(std::string(what) + " must lie in [0, 1]");
    }
    return std::clamp(p, 0.0, 1.0);
}

inline double effective_concurrence(double p1) {
    p1 = checked_population(p1, "effective_concurrence: p1");
    return std::clamp(2.0 * std::sqrt(p1 * (1.0 - p1)), 0.0, 1.0);
}

/// Same quantity from separately accumulated populations. Use this when p0
/// was summed directly: 1 - p1 loses an exactly-zero p0 to rounding.
inline double effective_concurrence(double p0, double p1) {
    p0 = checked_population(p0, "effective_concurrence: p0");
    p1 = checked_population(p1, "effective_concurrence: p1");
    return std::clamp(2.0 * std::sqrt(p0 * p1), 0.0, 1.0);
}

}  // namespace junta
