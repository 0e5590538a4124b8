#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cleandirty/density_matrix.hpp"
#include "cleandirty/pauli_string.hpp"

namespace cleandirty {

// Real linear combination of Hermitian Pauli words.
struct Observable {
    int n = 1;
    std::vector<std::pair<double, PauliString>> terms;

    explicit Observable(int n_) : n(n_) {
        if (n < 1) throw std::invalid_argument("Observable: need n >= 1");
    }

    Observable& add(double coefficient, const PauliString& p) {
        if (p.n != n) throw std::invalid_argument("Observable: term size mismatch");
        if (!p.is_hermitian())
            throw std::invalid_argument("Observable: terms must be Hermitian");
        terms.emplace_back(coefficient, p);
        return *this;
    }
};

inline constexpr double kExpectationImagTolerance = 1e-10;

// sum_k c_k Tr[rho sigma_k]; the imaginary residual must stay below tolerance.
inline double expectation(const DensityMatrix& rho, const Observable& obs) {
    if (obs.n != rho.num_qubits()) throw std::invalid_argument("expectation: size mismatch");
    complexd sum = 0.0;
    for (const auto& [coeff, p] : obs.terms) sum += coeff * rho.pauli_expectation(p);
    if (std::abs(sum.imag()) >= kExpectationImagTolerance)
        throw std::runtime_error("expectation: imaginary residual exceeds tolerance");
    return sum.real();
}

}  // namespace cleandirty
