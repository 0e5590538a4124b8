#pragma once

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include "cleandirty/density_matrix.hpp"
#include "cleandirty/pauli_string.hpp"

namespace cleandirty {

// Gate conventions: RX/RY/RZ(theta) = exp(-i (theta/2) P),
// XX(theta) = exp(-i theta X(x)X). H and CNOT are the standard matrices.
struct Gate {
    enum class Kind { RX, RY, RZ, XX, H, CNOT };

    Kind kind = Kind::H;
    int q0 = 0;
    int q1 = -1;
    double angle = 0.0;

    static Gate rx(int q, double theta) { return {Kind::RX, q, -1, theta}; }
    static Gate ry(int q, double theta) { return {Kind::RY, q, -1, theta}; }
    static Gate rz(int q, double theta) { return {Kind::RZ, q, -1, theta}; }
    static Gate xx(int qa, int qb, double theta) { return {Kind::XX, qa, qb, theta}; }
    static Gate h(int q) { return {Kind::H, q, -1, 0.0}; }
    static Gate cnot(int qc, int qt) { return {Kind::CNOT, qc, qt, 0.0}; }

    bool two_qubit() const { return kind == Kind::XX || kind == Kind::CNOT; }
};

namespace detail {

inline void check_target(const DensityMatrix& rho, int q, const char* what) {
    if (q < 0 || q >= rho.num_qubits()) throw std::invalid_argument(std::string(what) + ": target out of range");
}

inline void check_targets2(const DensityMatrix& rho, int qa, int qb, const char* what) {
    check_target(rho, qa, what);
    check_target(rho, qb, what);
    if (qa == qb) throw std::invalid_argument(std::string(what) + ": targets must be distinct");
}

}  // namespace detail

// rho <- U rho U^dag for a single-qubit unitary.
inline void apply_unitary1(DensityMatrix& rho, int q, const Eigen::Matrix2cd& u) {
    detail::check_target(rho, q, "apply_unitary1");
    const std::uint64_t d = static_cast<std::uint64_t>(rho.dim());
    const std::uint64_t m = 1ull << q;
    for (std::uint64_t c = 0; c < d; ++c) {
        for (std::uint64_t r = 0; r < d; ++r) {
            if (r & m) continue;
            const complexd a = rho.at(r, c), b = rho.at(r | m, c);
            rho.at(r, c) = u(0, 0) * a + u(0, 1) * b;
            rho.at(r | m, c) = u(1, 0) * a + u(1, 1) * b;
        }
    }
    for (std::uint64_t c = 0; c < d; ++c) {
        if (c & m) continue;
        for (std::uint64_t r = 0; r < d; ++r) {
            const complexd a = rho.at(r, c), b = rho.at(r, c | m);
            rho.at(r, c) = a * std::conj(u(0, 0)) + b * std::conj(u(0, 1));
            rho.at(r, c | m) = a * std::conj(u(1, 0)) + b * std::conj(u(1, 1));
        }
    }
}

// rho <- U rho U^dag for a two-qubit unitary. U is given in the basis
// |qa qb> in {00, 01, 10, 11} with qa the most significant local bit, i.e.
// kroneckerProduct(A, B) acts with A on qa and B on qb.
inline void apply_unitary2(DensityMatrix& rho, int qa, int qb, const Eigen::Matrix4cd& u) {
    detail::check_targets2(rho, qa, qb, "apply_unitary2");
    const std::uint64_t d = static_cast<std::uint64_t>(rho.dim());
    const std::uint64_t ma = 1ull << qa, mb = 1ull << qb;
    const std::uint64_t both = ma | mb;
    auto local = [&](std::uint64_t base, int l) {
        return base | ((l & 2) ? ma : 0) | ((l & 1) ? mb : 0);
    };
    complexd v[4], w[4];
    for (std::uint64_t c = 0; c < d; ++c) {
        for (std::uint64_t r = 0; r < d; ++r) {
            if (r & both) continue;
            for (int l = 0; l < 4; ++l) v[l] = rho.at(local(r, l), c);
            for (int l = 0; l < 4; ++l) {
                w[l] = u(l, 0) * v[0] + u(l, 1) * v[1] + u(l, 2) * v[2] + u(l, 3) * v[3];
                rho.at(local(r, l), c) = w[l];
            }
        }
    }
    for (std::uint64_t c = 0; c < d; ++c) {
        if (c & both) continue;
        for (std::uint64_t r = 0; r < d; ++r) {
            for (int l = 0; l < 4; ++l) v[l] = rho.at(r, local(c, l));
            for (int l = 0; l < 4; ++l) {
                w[l] = v[0] * std::conj(u(l, 0)) + v[1] * std::conj(u(l, 1)) +
                       v[2] * std::conj(u(l, 2)) + v[3] * std::conj(u(l, 3));
                rho.at(r, local(c, l)) = w[l];
            }
        }
    }
}

// rho <- G rho G^dag with G = exp(-i alpha P) = cos(alpha) I - i sin(alpha) P
// for a Hermitian Pauli word P. Covers rotations, XX gates and arbitrary
// Pauli-string exponentials with one fused in-place pass.
inline void apply_pauli_exponential(DensityMatrix& rho, const PauliString& p, double alpha) {
    if (p.n != rho.num_qubits())
        throw std::invalid_argument("apply_pauli_exponential: size mismatch");
    if (!p.is_hermitian())
        throw std::invalid_argument("apply_pauli_exponential: generator must be Hermitian");
    if (p.is_identity()) return;  // global phase only
    const std::uint64_t d = static_cast<std::uint64_t>(rho.dim());
    const double co = std::cos(alpha), si = std::sin(alpha);

    if (p.x == 0) {
        // Diagonal generator: cells whose row/col parities differ pick up
        // exp(-+ 2 i alpha).
        const complexd minus(std::cos(2 * alpha), -std::sin(2 * alpha));
        const complexd plus = std::conj(minus);
        for (std::uint64_t c = 0; c < d; ++c) {
            const int pc = std::popcount(p.z & c) & 1;
            for (std::uint64_t r = 0; r < d; ++r) {
                const int pr = std::popcount(p.z & r) & 1;
                if (pr != pc) rho.at(r, c) *= (pr == 0) ? minus : plus;
            }
        }
        return;
    }

    // P's only nonzero entries are P(b ^ x, b) = amp(b).
    const complexd base = p.phase();
    auto amp = [&](std::uint64_t b) {
        return (std::popcount(p.z & b) & 1) ? -base : base;
    };
    const std::uint64_t t = p.x & (~p.x + 1);  // lowest set bit groups quadruples
    const double cc = co * co, ss = si * si;
    const complexd ics(0.0, co * si);
    for (std::uint64_t c0 = 0; c0 < d; ++c0) {
        if (c0 & t) continue;
        const std::uint64_t c1 = c0 ^ p.x;
        const complexd gc0 = amp(c0), gc1 = amp(c1);
        for (std::uint64_t r0 = 0; r0 < d; ++r0) {
            if (r0 & t) continue;
            const std::uint64_t r1 = r0 ^ p.x;
            // (P rho)(r, c) = amp(r^x) rho(r^x, c); (rho P)(r, c) = rho(r, c^x) amp(c)
            const complexd fr0 = amp(r1), fr1 = amp(r0);
            const complexd a00 = rho.at(r0, c0), a10 = rho.at(r1, c0);
            const complexd a01 = rho.at(r0, c1), a11 = rho.at(r1, c1);
            rho.at(r0, c0) = cc * a00 + ss * fr0 * a11 * gc0 + ics * (a01 * gc0 - fr0 * a10);
            rho.at(r1, c0) = cc * a10 + ss * fr1 * a01 * gc0 + ics * (a11 * gc0 - fr1 * a00);
            rho.at(r0, c1) = cc * a01 + ss * fr0 * a10 * gc1 + ics * (a00 * gc1 - fr0 * a11);
            rho.at(r1, c1) = cc * a11 + ss * fr1 * a00 * gc1 + ics * (a10 * gc1 - fr1 * a01);
        }
    }
}

// In-place basis relabeling rho(r, c) <- rho(pi(r), pi(c)) for the CNOT
// permutation pi(b) = b xor (control bit << target), an involution.
inline void apply_cnot(DensityMatrix& rho, int qc, int qt) {
    detail::check_targets2(rho, qc, qt, "apply_cnot");
    const std::uint64_t d = static_cast<std::uint64_t>(rho.dim());
    auto pi = [&](std::uint64_t b) { return b ^ (((b >> qc) & 1) << qt); };
    for (std::uint64_t c = 0; c < d; ++c) {
        const std::uint64_t pc = pi(c);
        for (std::uint64_t r = 0; r < d; ++r) {
            const std::uint64_t pr = pi(r);
            if (pr > r || (pr == r && pc > c)) std::swap(rho.at(r, c), rho.at(pr, pc));
        }
    }
}

inline void apply_hadamard(DensityMatrix& rho, int q) {
    static const double s = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2cd h;
    h << s, s, s, -s;
    apply_unitary1(rho, q, h);
}

inline void apply_gate(DensityMatrix& rho, const Gate& g) {
    switch (g.kind) {
        case Gate::Kind::RX:
            apply_pauli_exponential(rho, PauliString::hermitian(1ull << g.q0, 0, rho.num_qubits()),
                                    0.5 * g.angle);
            break;
        case Gate::Kind::RY:
            apply_pauli_exponential(
                rho, PauliString::hermitian(1ull << g.q0, 1ull << g.q0, rho.num_qubits()),
                0.5 * g.angle);
            break;
        case Gate::Kind::RZ:
            apply_pauli_exponential(rho, PauliString::hermitian(0, 1ull << g.q0, rho.num_qubits()),
                                    0.5 * g.angle);
            break;
        case Gate::Kind::XX:
            detail::check_targets2(rho, g.q0, g.q1, "apply_gate(XX)");
            apply_pauli_exponential(
                rho, PauliString::hermitian((1ull << g.q0) | (1ull << g.q1), 0, rho.num_qubits()),
                g.angle);
            break;
        case Gate::Kind::H:
            apply_hadamard(rho, g.q0);
            break;
        case Gate::Kind::CNOT:
            apply_cnot(rho, g.q0, g.q1);
            break;
    }
}

// Ascending CNOT ladder: CNOT(0,1), CNOT(1,2), ..., CNOT(n-2, n-1), controls
// on the lower index.
inline void apply_cnot_ladder(DensityMatrix& rho) {
    const int n = rho.num_qubits();
    if (n < 2) throw std::invalid_argument("apply_cnot_ladder: need n >= 2");
    for (int i = 0; i + 1 < n; ++i) apply_cnot(rho, i, i + 1);
}

}  // namespace cleandirty
