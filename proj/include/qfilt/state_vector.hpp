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

// Dense state-vector simulation core.
//
// Conventions used throughout the library:
//   * qubit q0 is the least significant bit of a basis index,
//   * states are immutable values; operations return fresh states,
//   * every public operation leaves the state with unit norm (1e-10).

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qfilt/complex_matrix.hpp"
#include "qfilt/errors.hpp"

namespace qfilt {

inline constexpr int kMaxQubits = 24;
inline constexpr double kInputNormTol = 1e-9;
inline constexpr double kInternalNormTol = 1e-10;
// Branch probabilities below this are treated as numerically zero.
inline constexpr double kZeroProbability = 1e-24;

struct StateVector {
    int n_qubits = 0;
    cvector amplitudes;

    std::uint64_t dim() const { return std::uint64_t(1) << n_qubits; }
};

inline double norm_squared(const cvector& v) {
    double acc = 0.0;
    for (const cdouble& a : v) acc += std::norm(a);
    return acc;
}

namespace detail {

inline void check_normalized(const StateVector& s) {
    if (std::abs(norm_squared(s.amplitudes) - 1.0) > kInternalNormTol)
        throw Error("internal error: state norm drifted beyond tolerance");
}

inline bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

inline int log2_exact(std::uint64_t x) {
    int n = 0;
    while ((std::uint64_t(1) << n) < x) ++n;
    return n;
}

// Portable uniform double in [0, 1) from a 64-bit draw; avoids
// std::uniform_real_distribution so seeded sequences are implementation
// independent.
inline double uniform01(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Gates

enum class GateKind { Hadamard, PauliX, PhaseShift, U3, Swap };

struct Control {
    int qubit = 0;
    int polarity = 1;  // 1: condition on |1>, 0: condition on |0>
};

/// One gate application: a single-qubit gate (or a two-qubit Swap) plus an
/// optional list of control qubits with polarities.
struct GateOp {
    GateKind kind = GateKind::Hadamard;
    int target = 0;
    int target2 = -1;  // second qubit for Swap only
    double theta = 0.0, phi = 0.0, lambda = 0.0;
    std::vector<Control> controls;

    static GateOp hadamard(int q) { return GateOp{GateKind::Hadamard, q}; }
    static GateOp pauli_x(int q) { return GateOp{GateKind::PauliX, q}; }
    static GateOp phase_shift(int q, double theta) {
        GateOp op{GateKind::PhaseShift, q};
        op.theta = theta;
        return op;
    }
    static GateOp u3(int q, double theta, double phi, double lambda) {
        GateOp op{GateKind::U3, q};
        op.theta = theta;
        op.phi = phi;
        op.lambda = lambda;
        return op;
    }
    static GateOp swap(int a, int b) {
        GateOp op{GateKind::Swap, a};
        op.target2 = b;
        return op;
    }

    GateOp controlled_by(std::vector<Control> ctrls) const {
        GateOp op = *this;
        op.controls = std::move(ctrls);
        return op;
    }
};

using Circuit = std::vector<GateOp>;

inline GateOp cnot(int control, int target) {
    return GateOp::pauli_x(target).controlled_by({{control, 1}});
}

namespace detail {

inline void check_gate(const GateOp& op, int n_qubits) {
    auto check_index = [&](int q, const char* what) {
        if (q < 0 || q >= n_qubits)
            throw ValidationError(std::string(what) + " qubit index " + std::to_string(q) +
                                  " out of range for " + std::to_string(n_qubits) + " qubits");
    };
    check_index(op.target, "target");
    std::uint64_t seen = std::uint64_t(1) << op.target;
    if (op.kind == GateKind::Swap) {
        check_index(op.target2, "target");
        const std::uint64_t bit = std::uint64_t(1) << op.target2;
        if (seen & bit) throw ValidationError("swap qubits must be distinct");
        seen |= bit;
    } else if (op.target2 != -1) {
        throw ValidationError("second target only valid for Swap");
    }
    for (const Control& c : op.controls) {
        check_index(c.qubit, "control");
        if (c.polarity != 0 && c.polarity != 1)
            throw ValidationError("control polarity must be 0 or 1");
        const std::uint64_t bit = std::uint64_t(1) << c.qubit;
        if (seen & bit) throw ValidationError("gate qubit indices collide");
        seen |= bit;
    }
}

inline std::array<cdouble, 4> single_qubit_matrix(const GateOp& op) {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    switch (op.kind) {
        case GateKind::Hadamard:
            return {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
        case GateKind::PauliX:
            return {0.0, 1.0, 1.0, 0.0};
        case GateKind::PhaseShift:
            return {1.0, 0.0, 0.0, std::polar(1.0, op.theta)};
        case GateKind::U3: {
            const double c = std::cos(op.theta / 2.0);
            const double s = std::sin(op.theta / 2.0);
            return {cdouble{c, 0.0}, -std::polar(s, op.lambda),
                    std::polar(s, op.phi), std::polar(c, op.phi + op.lambda)};
        }
        case GateKind::Swap:
            break;
    }
    throw ValidationError("swap has no single-qubit matrix");
}

inline void apply_gate_inplace(cvector& amps, int n_qubits, const GateOp& op) {
    check_gate(op, n_qubits);
    std::uint64_t cmask = 0, cval = 0;
    for (const Control& c : op.controls) {
        cmask |= std::uint64_t(1) << c.qubit;
        if (c.polarity) cval |= std::uint64_t(1) << c.qubit;
    }
    const std::uint64_t dim = amps.size();

    if (op.kind == GateKind::Swap) {
        const std::uint64_t bit_a = std::uint64_t(1) << op.target;
        const std::uint64_t bit_b = std::uint64_t(1) << op.target2;
        for (std::uint64_t i = 0; i < dim; ++i) {
            if ((i & bit_a) && !(i & bit_b) && (i & cmask) == cval)
                std::swap(amps[i], amps[i ^ bit_a ^ bit_b]);
        }
        return;
    }

    const auto u = single_qubit_matrix(op);
    const std::uint64_t bit = std::uint64_t(1) << op.target;
    for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & bit) || (i & cmask) != cval) continue;
        const cdouble a0 = amps[i];
        const cdouble a1 = amps[i | bit];
        amps[i] = u[0] * a0 + u[1] * a1;
        amps[i | bit] = u[2] * a0 + u[3] * a1;
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Construction

/// |0...0> on n_qubits qubits.
inline StateVector new_state(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw CapacityError("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                            "], got " + std::to_string(n_qubits));
    StateVector s;
    s.n_qubits = n_qubits;
    s.amplitudes.assign(std::uint64_t(1) << n_qubits, cdouble{0.0, 0.0});
    s.amplitudes[0] = 1.0;
    return s;
}

/// Direct amplitude injection (the simulator shortcut for a state-preparation
/// unitary). The input must have power-of-two length and unit norm within
/// 1e-9; amplitudes are rescaled to unit norm exactly.
inline StateVector set_amplitudes(cvector values) {
    if (!detail::is_power_of_two(values.size()))
        throw ValidationError("amplitude count must be a power of two, got " +
                              std::to_string(values.size()));
    const int n = detail::log2_exact(values.size());
    if (n < 1 || n > kMaxQubits)
        throw CapacityError("amplitude vector implies unsupported register size");
    const double n2 = norm_squared(values);
    if (std::abs(n2 - 1.0) > kInputNormTol)
        throw ValidationError("amplitudes must have unit norm (got |v|^2 = " +
                              std::to_string(n2) + ")");
    const double inv = 1.0 / std::sqrt(n2);
    for (cdouble& a : values) a *= inv;
    StateVector s;
    s.n_qubits = n;
    s.amplitudes = std::move(values);
    return s;
}

// ---------------------------------------------------------------------------
// Evolution

inline StateVector apply_gate(StateVector state, const GateOp& op) {
    detail::apply_gate_inplace(state.amplitudes, state.n_qubits, op);
    detail::check_normalized(state);
    return state;
}

inline StateVector apply_circuit(StateVector state, const Circuit& circuit) {
    for (const GateOp& op : circuit)
        detail::apply_gate_inplace(state.amplitudes, state.n_qubits, op);
    detail::check_normalized(state);
    return state;
}

// ---------------------------------------------------------------------------
// Measurement

/// Probability that measuring `qubit` yields `outcome`.
inline double branch_probability(const StateVector& state, int qubit, int outcome) {
    if (qubit < 0 || qubit >= state.n_qubits)
        throw ValidationError("qubit index out of range");
    if (outcome != 0 && outcome != 1) throw ValidationError("outcome must be 0 or 1");
    const std::uint64_t bit = std::uint64_t(1) << qubit;
    double p = 0.0;
    for (std::uint64_t i = 0; i < state.dim(); ++i)
        if (((i & bit) != 0) == (outcome == 1)) p += std::norm(state.amplitudes[i]);
    return p;
}

/// Project onto `qubit == outcome` and renormalize. Amplitudes inconsistent
/// with the outcome are zeroed; survivors are divided by sqrt(probability),
/// so relative phases are untouched.
inline std::pair<StateVector, double> postselect(StateVector state, int qubit, int outcome) {
    const double p = branch_probability(state, qubit, outcome);
    if (p < kZeroProbability)
        throw AnnihilationError("postselection branch (qubit " + std::to_string(qubit) +
                                " = " + std::to_string(outcome) + ") has zero probability");
    const std::uint64_t bit = std::uint64_t(1) << qubit;
    const double inv = 1.0 / std::sqrt(p);
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if (((i & bit) != 0) == (outcome == 1))
            state.amplitudes[i] *= inv;
        else
            state.amplitudes[i] = cdouble{0.0, 0.0};
    }
    detail::check_normalized(state);
    return {std::move(state), p};
}

struct MeasurementResult {
    int outcome = 0;
    StateVector state;
};

/// Projective measurement of one qubit, Bernoulli-sampled from the seeded
/// stream. The returned state is collapsed per `postselect`.
inline MeasurementResult sample_measurement(const StateVector& state, int qubit,
                                            std::mt19937_64& rng) {
    const double p1 = branch_probability(state, qubit, 1);
    const int outcome = detail::uniform01(rng) < p1 ? 1 : 0;
    auto [collapsed, p] = postselect(state, qubit, outcome);
    (void)p;
    return {outcome, std::move(collapsed)};
}

// ---------------------------------------------------------------------------
// Register plumbing shared by the filter and transpose modules.

/// Append one ancilla qubit in |0> as the new most significant qubit.
inline StateVector attach_ancilla(const StateVector& state) {
    if (state.n_qubits + 1 > kMaxQubits) throw CapacityError("ancilla exceeds qubit cap");
    StateVector out;
    out.n_qubits = state.n_qubits + 1;
    out.amplitudes.assign(state.dim() * 2, cdouble{0.0, 0.0});
    std::copy(state.amplitudes.begin(), state.amplitudes.end(), out.amplitudes.begin());
    return out;
}

/// Drop the most significant qubit, which must be in the definite state
/// `outcome` (as after postselecting it).
inline StateVector drop_top_qubit(const StateVector& state, int outcome) {
    if (state.n_qubits < 2) throw ValidationError("cannot drop the only qubit");
    const std::uint64_t half = state.dim() / 2;
    StateVector out;
    out.n_qubits = state.n_qubits - 1;
    const std::uint64_t base = outcome == 1 ? half : 0;
    out.amplitudes.assign(state.amplitudes.begin() + base,
                          state.amplitudes.begin() + base + half);
    detail::check_normalized(out);
    return out;
}

}  // namespace qfilt
