#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rblab {

// Exact two-qubit Pauli algebra, character functions of the Pauli group and
// Pauli-transfer-matrix (PTM) conversion.
//
// Canonical ordering used everywhere (including file formats):
//   index = 4 * (first-qubit axis) + (second-qubit axis),  I=0, X=1, Y=2, Z=3
// so II = 0, IX = 1, ..., ZZ = 15.

inline constexpr int kNumPaulis1 = 4;
inline constexpr int kNumPaulis2 = 16;

using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using Ptm1 = Eigen::Matrix4d;
using Ptm2 = Eigen::Matrix<double, 16, 16>;
using PauliVec = Eigen::Matrix<double, 16, 1>;

enum class PauliAxis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char axis_char(PauliAxis a) { return "IXYZ"[static_cast<int>(a)]; }

// Phase as an exact power of i (mod 4); group arithmetic never touches floats.
struct Phase {
    std::uint8_t ipow = 0;

    std::complex<double> value() const {
        static constexpr std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return table[ipow & 3];
    }
    Phase operator*(Phase o) const { return Phase{static_cast<std::uint8_t>((ipow + o.ipow) & 3)}; }
    bool operator==(const Phase&) const = default;
};

struct PauliString {
    PauliAxis first = PauliAxis::I;
    PauliAxis second = PauliAxis::I;

    constexpr int index() const {
        return 4 * static_cast<int>(first) + static_cast<int>(second);
    }
    static constexpr PauliString from_index(int idx) {
        return PauliString{static_cast<PauliAxis>((idx >> 2) & 3), static_cast<PauliAxis>(idx & 3)};
    }
    std::string label() const { return {axis_char(first), axis_char(second)}; }

    static PauliString parse(std::string_view s) {
        if (s.size() != 2) throw std::invalid_argument("Pauli label must have two characters");
        auto ax = [](char c) {
            switch (c) {
                case 'I': return PauliAxis::I;
                case 'X': return PauliAxis::X;
                case 'Y': return PauliAxis::Y;
                case 'Z': return PauliAxis::Z;
                default: throw std::invalid_argument("invalid Pauli character");
            }
        };
        return PauliString{ax(s[0]), ax(s[1])};
    }

    bool operator==(const PauliString&) const = default;
};

namespace detail {

// Single-qubit products a*b = i^phase * r, phase exponent in {0,1,3}.
// Rows/cols ordered I, X, Y, Z.
inline constexpr std::uint8_t kMulAxis[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};
inline constexpr std::uint8_t kMulPhase[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0},
};

}  // namespace detail

inline std::pair<Phase, PauliString> pauli_mul(PauliString p, PauliString q) {
    const int a1 = static_cast<int>(p.first), b1 = static_cast<int>(q.first);
    const int a2 = static_cast<int>(p.second), b2 = static_cast<int>(q.second);
    Phase phase{static_cast<std::uint8_t>(
        (detail::kMulPhase[a1][b1] + detail::kMulPhase[a2][b2]) & 3)};
    PauliString r{static_cast<PauliAxis>(detail::kMulAxis[a1][b1]),
                  static_cast<PauliAxis>(detail::kMulAxis[a2][b2])};
    return {phase, r};
}

inline bool commutes(PauliString p, PauliString q) {
    auto anti = [](PauliAxis a, PauliAxis b) {
        return a != PauliAxis::I && b != PauliAxis::I && a != b;
    };
    return !(anti(p.first, q.first) ^ anti(p.second, q.second));
}

// Character of the two-qubit Pauli group: chi_P(sigma) = +1 iff P and sigma
// commute. Reproduces the full tabulated character function for the three
// rows used by character RB and extends to all 16 rows.
inline int character_value(PauliString p, PauliString sigma) {
    return commutes(p, sigma) ? 1 : -1;
}

inline const Mat2c& pauli_matrix1(PauliAxis a) {
    static const std::array<Mat2c, 4> mats = [] {
        std::array<Mat2c, 4> m;
        const std::complex<double> i(0, 1);
        m[0] << 1, 0, 0, 1;
        m[1] << 0, 1, 1, 0;
        m[2] << 0, -i, i, 0;
        m[3] << 1, 0, 0, -1;
        return m;
    }();
    return mats[static_cast<int>(a)];
}

// Kronecker product with qubit 1 as the leading tensor factor (basis |q1 q2>).
inline Mat4c kron2(const Mat2c& a, const Mat2c& b) {
    Mat4c k;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) k.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return k;
}

inline const Mat4c& pauli_matrix(PauliString p) {
    static const std::array<Mat4c, 16> mats = [] {
        std::array<Mat4c, 16> m;
        for (int idx = 0; idx < 16; ++idx) {
            const auto ps = PauliString::from_index(idx);
            m[idx] = kron2(pauli_matrix1(ps.first), pauli_matrix1(ps.second));
        }
        return m;
    }();
    return mats[p.index()];
}

inline bool is_unitary(const Mat4c& u, double tol = 1e-10) {
    return (u * u.adjoint() - Mat4c::Identity()).cwiseAbs().maxCoeff() < tol;
}
inline bool is_unitary(const Mat2c& u, double tol = 1e-10) {
    return (u * u.adjoint() - Mat2c::Identity()).cwiseAbs().maxCoeff() < tol;
}

// PTM entries M_ij = Tr(sigma_i U sigma_j U^dag) / d. The identity channel
// maps to the identity matrix; Clifford unitaries map to signed permutations.
inline Ptm2 ptm_of_unitary(const Mat4c& u, double tol = 1e-10) {
    if (!is_unitary(u, tol)) throw std::invalid_argument("ptm_of_unitary: input is not unitary");
    Ptm2 m;
    for (int j = 0; j < 16; ++j) {
        const Mat4c conj = u * pauli_matrix(PauliString::from_index(j)) * u.adjoint();
        for (int i = 0; i < 16; ++i) {
            m(i, j) = 0.25 * (pauli_matrix(PauliString::from_index(i)) * conj).trace().real();
        }
    }
    return m;
}

inline Ptm1 ptm_of_unitary1(const Mat2c& u, double tol = 1e-10) {
    if (!is_unitary(u, tol)) throw std::invalid_argument("ptm_of_unitary1: input is not unitary");
    Ptm1 m;
    for (int j = 0; j < 4; ++j) {
        const Mat2c conj = u * pauli_matrix1(static_cast<PauliAxis>(j)) * u.adjoint();
        for (int i = 0; i < 4; ++i) {
            m(i, j) = 0.5 * (pauli_matrix1(static_cast<PauliAxis>(i)) * conj).trace().real();
        }
    }
    return m;
}

// Rank-1 diagonal projector onto the Bloch axis labelled by P, i.e. the
// character-weighted average (1/16) sum_sigma chi_P(sigma) PTM(sigma).
inline Ptm2 character_projector(PauliString p) {
    Ptm2 m = Ptm2::Zero();
    m(p.index(), p.index()) = 1.0;
    return m;
}

}  // namespace rblab
