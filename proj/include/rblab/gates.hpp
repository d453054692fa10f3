#pragma once

#include "rblab/pauli.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rblab {

inline constexpr double kPi = 3.14159265358979323846;

// Native gate set. X and Y rotations are physical microwave pulses sharing
// one Rabi frequency, so a pi pulse lasts twice as long as a pi/2 pulse.
// Z rotations are software reference-frame changes: zero duration, error
// free. The Y kinds serve the X-Y compilation table; the X-Z table never
// emits them. Idle is an explicit wait used for alignment and for
// free-evolution experiments.
enum class GateKind : std::uint8_t {
    XHalfPlus,   // X(+pi/2), 1 time unit
    XHalfMinus,  // X(-pi/2), 1 time unit
    XPi,         // X(pi), 2 time units
    YHalfPlus,   // Y(+pi/2), 1 time unit
    YHalfMinus,  // Y(-pi/2), 1 time unit
    YPi,         // Y(pi), 2 time units
    VirtualZ,    // Z(param), 0 duration
    CPhase,      // diag(1,1,1,-1) on both qubits
    Idle,        // wait param time units
};

struct Timing {
    double cphase_duration = 2.0;
};

struct NativeGate {
    GateKind kind;
    std::int8_t qubit = 0;  // 0 or 1; ignored for CPhase
    double param = 0.0;     // VirtualZ angle (rad) or Idle duration

    static NativeGate x_half(int q, int sign) {
        return {sign >= 0 ? GateKind::XHalfPlus : GateKind::XHalfMinus,
                static_cast<std::int8_t>(q)};
    }
    static NativeGate x_pi(int q) { return {GateKind::XPi, static_cast<std::int8_t>(q)}; }
    static NativeGate y_half(int q, int sign) {
        return {sign >= 0 ? GateKind::YHalfPlus : GateKind::YHalfMinus,
                static_cast<std::int8_t>(q)};
    }
    static NativeGate y_pi(int q) { return {GateKind::YPi, static_cast<std::int8_t>(q)}; }
    static NativeGate virtual_z(int q, double angle) {
        return {GateKind::VirtualZ, static_cast<std::int8_t>(q), angle};
    }
    static NativeGate cphase() { return {GateKind::CPhase, -1}; }
    static NativeGate idle(int q, double duration) {
        return {GateKind::Idle, static_cast<std::int8_t>(q), duration};
    }
};

inline bool is_drive_pulse(GateKind k) {
    switch (k) {
        case GateKind::XHalfPlus:
        case GateKind::XHalfMinus:
        case GateKind::XPi:
        case GateKind::YHalfPlus:
        case GateKind::YHalfMinus:
        case GateKind::YPi:
            return true;
        default:
            return false;
    }
}

inline double gate_duration(const NativeGate& g, const Timing& t) {
    switch (g.kind) {
        case GateKind::XHalfPlus:
        case GateKind::XHalfMinus:
        case GateKind::YHalfPlus:
        case GateKind::YHalfMinus:
            return 1.0;
        case GateKind::XPi:
        case GateKind::YPi:
            return 2.0;
        case GateKind::VirtualZ:
            return 0.0;
        case GateKind::CPhase:
            return t.cphase_duration;
        case GateKind::Idle:
            return g.param;
    }
    return 0.0;
}

// Ideal single-qubit unitary; amplitude_scale != 1 models a fractional
// over-rotation of the drive pulses (virtual Z is exempt).
inline Mat2c gate_unitary1(const NativeGate& g, double amplitude_scale = 1.0) {
    auto rot = [&](PauliAxis ax, double theta) -> Mat2c {
        const double h = 0.5 * theta;
        return std::cos(h) * Mat2c::Identity() -
               std::complex<double>(0, 1) * std::sin(h) * pauli_matrix1(ax);
    };
    switch (g.kind) {
        case GateKind::XHalfPlus: return rot(PauliAxis::X, 0.5 * kPi * amplitude_scale);
        case GateKind::XHalfMinus: return rot(PauliAxis::X, -0.5 * kPi * amplitude_scale);
        case GateKind::XPi: return rot(PauliAxis::X, kPi * amplitude_scale);
        case GateKind::YHalfPlus: return rot(PauliAxis::Y, 0.5 * kPi * amplitude_scale);
        case GateKind::YHalfMinus: return rot(PauliAxis::Y, -0.5 * kPi * amplitude_scale);
        case GateKind::YPi: return rot(PauliAxis::Y, kPi * amplitude_scale);
        case GateKind::VirtualZ: return rot(PauliAxis::Z, g.param);
        case GateKind::Idle: return Mat2c::Identity();
        default: throw std::invalid_argument("gate_unitary1: not a single-qubit gate");
    }
}

struct NativeCircuit {
    std::vector<NativeGate> gates;

    void append(const NativeCircuit& other) {
        gates.insert(gates.end(), other.gates.begin(), other.gates.end());
    }

    int count(GateKind k) const {
        int n = 0;
        for (const auto& g : gates) n += (g.kind == k);
        return n;
    }

    int drive_pulse_count() const {
        int n = 0;
        for (const auto& g : gates) n += is_drive_pulse(g.kind);
        return n;
    }

    // Per-qubit clock walk: a single-qubit gate starts at its own qubit's
    // clock, a CPhase synchronises both. Gates on different qubits may
    // overlap in time; they commute, so list order within an overlap is
    // immaterial to the state.
    double total_duration(const Timing& t) const {
        double clock[2] = {0, 0};
        for (const auto& g : gates) {
            const double d = gate_duration(g, t);
            if (g.kind == GateKind::CPhase) {
                const double t0 = std::max(clock[0], clock[1]);
                clock[0] = clock[1] = t0 + d;
            } else {
                clock[g.qubit] += d;
            }
        }
        return std::max(clock[0], clock[1]);
    }

    // Ideal two-qubit unitary of the circuit (basis |q1 q2>, qubit index 0
    // is the leading factor), gates applied in list order per qubit.
    Mat4c unitary(double amplitude_scale = 1.0) const {
        Mat4c u = Mat4c::Identity();
        for (const auto& g : gates) {
            if (g.kind == GateKind::CPhase) {
                Mat4c cz = Mat4c::Identity();
                cz(3, 3) = -1;
                u = cz * u;
            } else {
                const Mat2c v =
                    gate_unitary1(g, g.kind == GateKind::VirtualZ ? 1.0 : amplitude_scale);
                const Mat4c big = g.qubit == 0 ? kron2(v, Mat2c::Identity())
                                               : kron2(Mat2c::Identity(), v);
                u = big * u;
            }
        }
        return u;
    }
};

}  // namespace rblab
