#pragma once

#include "rblab/pauli.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace rblab {

// Clifford operations in canonical signed-Pauli-permutation form: the PTM of
// a Clifford unitary is a signed permutation of the Pauli basis fixing the
// identity. Equality of canonical forms is equality of unitaries up to
// global phase, and all group arithmetic is exact integer arithmetic.
template <int N>
struct SignedPerm {
    std::array<std::uint8_t, N> perm{};  // image index of basis Pauli i
    std::array<std::int8_t, N> sign{};   // +1 / -1

    static SignedPerm identity() {
        SignedPerm e;
        for (int i = 0; i < N; ++i) {
            e.perm[i] = static_cast<std::uint8_t>(i);
            e.sign[i] = 1;
        }
        return e;
    }

    bool is_identity() const { return *this == identity(); }

    // Group product matching unitary composition: (a * b) applies b first.
    friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
        SignedPerm r;
        for (int i = 0; i < N; ++i) {
            r.perm[i] = a.perm[b.perm[i]];
            r.sign[i] = static_cast<std::int8_t>(b.sign[i] * a.sign[b.perm[i]]);
        }
        return r;
    }

    SignedPerm inverse() const {
        SignedPerm r;
        for (int i = 0; i < N; ++i) {
            r.perm[perm[i]] = static_cast<std::uint8_t>(i);
            r.sign[perm[i]] = sign[i];
        }
        return r;
    }

    bool operator==(const SignedPerm&) const = default;

    // Packed canonical key: low bits index, bit 5 the sign.
    using Key = std::array<std::uint8_t, N>;
    Key key() const {
        Key k;
        for (int i = 0; i < N; ++i)
            k[i] = static_cast<std::uint8_t>(perm[i] | (sign[i] < 0 ? 0x20 : 0));
        return k;
    }

    Eigen::Matrix<double, N, N> to_ptm() const {
        Eigen::Matrix<double, N, N> m = Eigen::Matrix<double, N, N>::Zero();
        for (int i = 0; i < N; ++i) m(perm[i], i) = sign[i];
        return m;
    }

    template <typename Vec>
    Vec apply(const Vec& in) const {
        Vec out;
        for (int i = 0; i < N; ++i) out[perm[i]] = sign[i] * in[i];
        return out;
    }

    static SignedPerm from_ptm(const Eigen::Matrix<double, N, N>& m, double tol = 1e-8) {
        SignedPerm r;
        std::array<bool, N> hit{};
        for (int j = 0; j < N; ++j) {
            int found = -1;
            for (int i = 0; i < N; ++i) {
                const double v = m(i, j);
                if (std::abs(v) > tol) {
                    if (found >= 0 || std::abs(std::abs(v) - 1.0) > tol)
                        throw std::invalid_argument("from_ptm: not a signed permutation");
                    found = i;
                    r.sign[j] = v > 0 ? 1 : -1;
                }
            }
            if (found < 0 || hit[found])
                throw std::invalid_argument("from_ptm: not a signed permutation");
            hit[found] = true;
            r.perm[j] = static_cast<std::uint8_t>(found);
        }
        if (r.perm[0] != 0 || r.sign[0] != 1)
            throw std::invalid_argument("from_ptm: channel does not fix the identity");
        return r;
    }
};

using Clifford1 = SignedPerm<4>;
using Clifford2 = SignedPerm<16>;

template <int N>
struct SignedPermHash {
    std::size_t operator()(const typename SignedPerm<N>::Key& k) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto b : k) {
            h ^= b;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

inline Clifford1 clifford1_from_unitary(const Mat2c& u) {
    return Clifford1::from_ptm(ptm_of_unitary1(u));
}
inline Clifford2 clifford2_from_unitary(const Mat4c& u) {
    return Clifford2::from_ptm(ptm_of_unitary(u));
}

// Embed a pair of single-qubit operations as a parallel two-qubit operation
// (qubit 0 is the leading tensor factor, index = 4*a + b).
inline Clifford2 tensor(const Clifford1& a, const Clifford1& b) {
    Clifford2 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            r.perm[4 * i + j] = static_cast<std::uint8_t>(4 * a.perm[i] + b.perm[j]);
            r.sign[4 * i + j] = static_cast<std::int8_t>(a.sign[i] * b.sign[j]);
        }
    return r;
}

// Lift a single-qubit operation onto one wire of the two-qubit Pauli space.
inline Clifford2 embed1(const Clifford1& a, int qubit) {
    return qubit == 0 ? tensor(a, Clifford1::identity()) : tensor(Clifford1::identity(), a);
}

template <typename Elem>
Elem product(std::span<const Elem> seq) {
    Elem p = Elem::identity();
    for (const auto& e : seq) p = e * p;  // temporal order: seq[0] first
    return p;
}

// Final operation that undoes a sequence: inversion(seq) * (C_m ... C_1) = 1.
template <typename Elem>
Elem inversion_gate(std::span<const Elem> seq) {
    return product(seq).inverse();
}

}  // namespace rblab
