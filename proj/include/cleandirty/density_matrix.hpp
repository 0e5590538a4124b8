#pragma once

#include <Eigen/Dense>
#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include "cleandirty/pauli_string.hpp"
#include "cleandirty/rng.hpp"

namespace cleandirty {

inline constexpr int kDefaultMaxQubits = 10;

// Dense 2^n x 2^n state. Qubit q is bit q of a basis index. Operations mutate
// in place behind an exclusive handle; distinct states are safe to use from
// distinct threads.
class DensityMatrix {
public:
    explicit DensityMatrix(int n) : n_(check_size(n, 62)), m_(dim(), dim()) { m_.setZero(); }

    static DensityMatrix basis_state(int n, std::uint64_t bits,
                                     int max_qubits = kDefaultMaxQubits) {
        check_size(n, max_qubits);
        if (n < 64 && (bits >> n) != 0)
            throw std::invalid_argument("basis_state: bits outside the register");
        DensityMatrix rho(n);
        rho.m_(static_cast<Eigen::Index>(bits), static_cast<Eigen::Index>(bits)) = 1.0;
        return rho;
    }

    static DensityMatrix maximally_mixed(int n, int max_qubits = kDefaultMaxQubits) {
        check_size(n, max_qubits);
        DensityMatrix rho(n);
        rho.m_.diagonal().setConstant(1.0 / static_cast<double>(rho.dim()));
        return rho;
    }

    static DensityMatrix from_matrix(Eigen::MatrixXcd m) {
        const auto d = m.rows();
        if (d < 2 || m.cols() != d || (d & (d - 1)) != 0)
            throw std::invalid_argument("from_matrix: dimension is not a power of two");
        DensityMatrix rho(std::countr_zero(static_cast<std::uint64_t>(d)));
        rho.m_ = std::move(m);
        return rho;
    }

    int num_qubits() const { return n_; }
    Eigen::Index dim() const { return Eigen::Index(1) << n_; }

    Eigen::MatrixXcd& matrix() { return m_; }
    const Eigen::MatrixXcd& matrix() const { return m_; }
    complexd* data() { return m_.data(); }
    const complexd* data() const { return m_.data(); }

    // Column-major cell access: (row, col) lives at data()[row + (col << n)].
    complexd& at(std::uint64_t r, std::uint64_t c) { return m_.data()[r + (c << n_)]; }
    complexd at(std::uint64_t r, std::uint64_t c) const { return m_.data()[r + (c << n_)]; }

    // Tr[rho^2]; assumes Hermiticity, under which it equals the squared
    // Frobenius norm.
    double purity() const { return m_.squaredNorm(); }

    double trace_real() const { return m_.trace().real(); }

    double hermiticity_error() const {
        return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
    }

    double min_eigenvalue() const {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m_, Eigen::EigenvaluesOnly);
        return solver.eigenvalues().minCoeff();
    }

    double basis_probability(std::uint64_t z) const { return at(z, z).real(); }

    // Tr[rho P]
    complexd pauli_expectation(const PauliString& p) const {
        if (p.n != n_) throw std::invalid_argument("pauli_expectation: size mismatch");
        const std::uint64_t d = 1ull << n_;
        complexd sum = 0.0;
        for (std::uint64_t r = 0; r < d; ++r) {
            complexd v = at(r, r ^ p.x);
            if (std::popcount(p.z & r) & 1) v = -v;
            sum += v;
        }
        return sum * p.phase();
    }

private:
    static int check_size(int n, int max_qubits) {
        if (n < 1) throw std::invalid_argument("DensityMatrix: need n >= 1");
        if (n > max_qubits)
            throw std::length_error("DensityMatrix: n exceeds the configured qubit limit");
        return n;
    }

    int n_;
    Eigen::MatrixXcd m_;
};

// Rate conversion between the two common single-qubit depolarizing forms:
// the Pauli-error form (1-p) rho + (p/3) (X rho X + Y rho Y + Z rho Z) and the
// replacement form (1-q) rho + q I/2 are the same channel for q = 4p/3.
inline double depol_replacement_rate(double pauli_rate) { return 4.0 * pauli_rate / 3.0; }
inline double depol_pauli_rate(double replacement_rate) { return 0.75 * replacement_rate; }

// Single-qubit depolarizing channel in the Pauli-error form with rate p.
inline void apply_depolarizing(DensityMatrix& rho, int qubit, double p) {
    const int n = rho.num_qubits();
    if (qubit < 0 || qubit >= n) throw std::invalid_argument("apply_depolarizing: bad qubit");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("apply_depolarizing: probability outside [0, 1]");
    if (p == 0.0) return;
    const double q = depol_replacement_rate(p);
    const double keep = 1.0 - q;
    const std::uint64_t d = 1ull << n;
    const std::uint64_t m = 1ull << qubit;
    for (std::uint64_t c0 = 0; c0 < d; ++c0) {
        if (c0 & m) continue;
        const std::uint64_t c1 = c0 | m;
        for (std::uint64_t r0 = 0; r0 < d; ++r0) {
            if (r0 & m) continue;
            const std::uint64_t r1 = r0 | m;
            const complexd a = rho.at(r0, c0), b = rho.at(r1, c1);
            const complexd avg = 0.5 * q * (a + b);
            rho.at(r0, c0) = keep * a + avg;
            rho.at(r1, c1) = keep * b + avg;
            rho.at(r1, c0) *= keep;
            rho.at(r0, c1) *= keep;
        }
    }
}

// rho = A A^dag / Tr, A with i.i.d. complex Gaussian entries (full rank).
inline DensityMatrix random_mixed_state(int n, Rng& rng, int max_qubits = kDefaultMaxQubits) {
    DensityMatrix rho(n > max_qubits ? throw std::length_error("random_mixed_state: n over limit")
                                     : n);
    const auto d = rho.dim();
    Eigen::MatrixXcd a(d, d);
    for (Eigen::Index c = 0; c < d; ++c)
        for (Eigen::Index r = 0; r < d; ++r) a(r, c) = complexd(rng.gaussian(), rng.gaussian());
    rho.matrix() = a * a.adjoint();
    rho.matrix() /= rho.matrix().trace().real();
    return rho;
}

inline DensityMatrix random_pure_state(int n, Rng& rng, int max_qubits = kDefaultMaxQubits) {
    if (n > max_qubits) throw std::length_error("random_pure_state: n over limit");
    DensityMatrix rho(n);
    const auto d = rho.dim();
    Eigen::VectorXcd v(d);
    for (Eigen::Index r = 0; r < d; ++r) v(r) = complexd(rng.gaussian(), rng.gaussian());
    v.normalize();
    rho.matrix() = v * v.adjoint();
    return rho;
}

}  // namespace cleandirty
