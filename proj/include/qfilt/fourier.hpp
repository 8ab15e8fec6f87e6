// Copyright 2026 The qfilt Authors
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

// Exact quantum Fourier transform circuits and their dense matrix oracles.
//
// Sign convention (keep this table in mind; it is easy to get backwards):
//
//   direction          basis action                         classical analogue
//   -----------------  -----------------------------------  ------------------
//   forward  (QFT)     |x> -> (1/sqrt(N)) sum_k w^{xk} |k>  inverse DFT matrix
//   inverse  (IQFT)    conjugate transpose of the above     forward DFT matrix
//
// with w = exp(+2*pi*i/N). The inverse direction therefore maps the time
// domain to the frequency domain, and the forward direction maps back.
// Circuits include the terminal qubit-reversal swap layer, so their unitary
// equals the dense oracle with no index reordering by the caller.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "qfilt/complex_matrix.hpp"
#include "qfilt/errors.hpp"
#include "qfilt/state_vector.hpp"

namespace qfilt {

enum class FourierDirection { forward, inverse };

struct FourierCircuit {
    int n_qubits = 0;
    FourierDirection direction = FourierDirection::forward;
    Circuit ops;
};

/// Builds the exact QFT circuit: for each target from the top bit down, one
/// Hadamard followed by controlled phase rotations from every lower qubit,
/// then the qubit-reversal swaps. Rotation angles are +pi/2^d for control
/// distance d, computed exactly from integers.
inline FourierCircuit build_qft(int n) {
    if (n < 1 || n > kMaxQubits) throw CapacityError("qft size out of range");
    FourierCircuit fc;
    fc.n_qubits = n;
    fc.direction = FourierDirection::forward;
    for (int t = n - 1; t >= 0; --t) {
        fc.ops.push_back(GateOp::hadamard(t));
        for (int c = t - 1; c >= 0; --c) {
            const double angle = std::ldexp(std::numbers::pi, -(t - c));
            fc.ops.push_back(GateOp::phase_shift(t, angle).controlled_by({{c, 1}}));
        }
    }
    for (int q = 0; q < n / 2; ++q) fc.ops.push_back(GateOp::swap(q, n - 1 - q));
    return fc;
}

/// The IQFT circuit is the adjoint of the QFT circuit: same gates in reverse
/// order with negated phase angles.
inline FourierCircuit build_iqft(int n) {
    FourierCircuit fc = build_qft(n);
    fc.direction = FourierDirection::inverse;
    std::reverse(fc.ops.begin(), fc.ops.end());
    for (GateOp& op : fc.ops)
        if (op.kind == GateKind::PhaseShift) op.theta = -op.theta;
    return fc;
}

/// Dense N x N reference matrix: forward is (1/sqrt(N)) [w^{jk}] with
/// w = exp(2*pi*i/N); inverse is its conjugate transpose. Capped at n <= 12.
inline CMatrix dft_matrix_oracle(int n, FourierDirection direction) {
    if (n < 1) throw CapacityError("matrix oracle size out of range");
    if (n > 12) throw CapacityError("dense matrix oracle capped at 12 qubits");
    const std::uint64_t dim = std::uint64_t(1) << n;
    const double scale = 1.0 / std::sqrt(double(dim));
    const double sign = direction == FourierDirection::forward ? 1.0 : -1.0;
    CMatrix m(dim, dim);
    for (std::uint64_t j = 0; j < dim; ++j) {
        for (std::uint64_t k = 0; k < dim; ++k) {
            // Reduce j*k mod N before forming the angle to keep precision.
            const std::uint64_t e = (j * k) & (dim - 1);
            m(j, k) = std::polar(scale, sign * 2.0 * std::numbers::pi * double(e) / double(dim));
        }
    }
    return m;
}

/// Applies the circuit form (not the dense matrix) of the transform.
inline StateVector apply_fourier(const StateVector& state, FourierDirection direction) {
    const FourierCircuit fc = direction == FourierDirection::forward
                                  ? build_qft(state.n_qubits)
                                  : build_iqft(state.n_qubits);
    return apply_circuit(state, fc.ops);
}

}  // namespace qfilt
