#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cleandirty/gates.hpp"
#include "cleandirty/noise.hpp"
#include "cleandirty/observable.hpp"

namespace cleandirty {

inline constexpr double kPi = 3.14159265358979323846;

// Alternating-operator ansatz for the transverse-field Ising chain: per layer
// one XX stage (split into two parallel halves under periodic boundaries)
// followed by one RZ stage. theta holds 2L parameters, even indices drive the
// XX stage and odd indices the RZ stage of their layer.
struct HvaCircuit {
    int n = 4;
    int L = 0;
    std::vector<double> theta;
};

inline HvaCircuit build_hva(int n, int L, std::vector<double> theta) {
    if (n < 4 || (n % 2) != 0)
        throw std::invalid_argument(
            "build_hva: periodic XX layering requires even n >= 4");
    if (L < 0) throw std::invalid_argument("build_hva: L must be >= 0");
    if (static_cast<int>(theta.size()) != 2 * L)
        throw std::invalid_argument("build_hva: theta must have length 2L");
    return HvaCircuit{n, L, std::move(theta)};
}

// H = -sum_<ij> X_i X_j - g sum_i Z_i with periodic boundaries.
struct TfimHamiltonian {
    int n = 4;
    double g = 1.0;
};

inline Observable tfim_observable(const TfimHamiltonian& h) {
    if (h.n < 3) throw std::invalid_argument("tfim_observable: need n >= 3 for distinct PBC bonds");
    Observable obs(h.n);
    for (int i = 0; i < h.n; ++i) {
        const int j = (i + 1) % h.n;
        obs.add(-1.0, PauliString::hermitian((1ull << i) | (1ull << j), 0, h.n));
    }
    for (int i = 0; i < h.n; ++i) obs.add(-h.g, PauliString::hermitian(0, 1ull << i, h.n));
    return obs;
}

// Gate schedule with parameter bindings. Per ansatz layer: stage A = XX on
// pairs (0,1),(2,3),..., stage B = XX on (1,2),...,(n-1,0) including the
// boundary pair, stage C = RZ on every qubit. Each stage is one
// non-parallelizable gate layer, so there are 3L layers in total. Each gate
// is addressable as (parameter, dummy index) for shifted evaluations.
struct CompiledHva {
    struct BoundGate {
        Gate::Kind kind;
        int q0 = 0, q1 = -1;
        int param = 0;  // ansatz parameter index in [0, 2L)
        int dummy = 0;  // dummy-variable index in [0, n)
    };

    int n = 0;
    int L = 0;
    std::vector<std::vector<BoundGate>> layers;

    int dummies_per_param() const { return n; }

    LayeredCircuit plain_layers() const {
        LayeredCircuit out(layers.size());
        for (size_t l = 0; l < layers.size(); ++l)
            for (const BoundGate& b : layers[l])
                out[l].gates.push_back(Gate{b.kind, b.q0, b.q1, 0.0});
        return out;
    }
};

inline CompiledHva compile_hva(int n, int L) {
    if (n < 4 || (n % 2) != 0)
        throw std::invalid_argument("compile_hva: periodic XX layering requires even n >= 4");
    if (L < 0) throw std::invalid_argument("compile_hva: L must be >= 0");
    CompiledHva c;
    c.n = n;
    c.L = L;
    c.layers.reserve(static_cast<size_t>(3 * L));
    for (int l = 0; l < L; ++l) {
        const int xx_param = 2 * l, z_param = 2 * l + 1;
        std::vector<CompiledHva::BoundGate> a, b, z;
        int dummy = 0;
        for (int i = 0; i + 1 < n; i += 2)
            a.push_back({Gate::Kind::XX, i, i + 1, xx_param, dummy++});
        for (int i = 1; i < n; i += 2)
            b.push_back({Gate::Kind::XX, i, (i + 1) % n, xx_param, dummy++});
        for (int q = 0; q < n; ++q) z.push_back({Gate::Kind::RZ, q, -1, z_param, q});
        c.layers.push_back(std::move(a));
        c.layers.push_back(std::move(b));
        c.layers.push_back(std::move(z));
    }
    return c;
}

inline CompiledHva compile_hva(const HvaCircuit& circuit) {
    return compile_hva(circuit.n, circuit.L);
}

// Offset applied to a single dummy variable of a single ansatz parameter.
struct DummyShift {
    int param = -1;
    int dummy = -1;
    double delta = 0.0;
};

namespace detail {

// An ansatz parameter value t realizes exp(-i t XX) directly and exp(-i t Z)
// through an RZ gate of angle 2t.
inline double gate_angle(Gate::Kind kind, double t) {
    return kind == Gate::Kind::RZ ? 2.0 * t : t;
}

}  // namespace detail

// Simulates |0...0> through the bound schedule interleaved with the noise
// events and returns the energy of the observable. The schedule is reusable
// across theta vectors and shifted evaluations.
inline double hva_cost(const CompiledHva& c, const std::vector<double>& theta,
                       const std::vector<std::vector<NoiseEvent>>& events_by_layer,
                       const Observable& h, const DummyShift* shift = nullptr) {
    if (static_cast<int>(theta.size()) != 2 * c.L)
        throw std::invalid_argument("hva_cost: theta must have length 2L");
    if (!events_by_layer.empty() && events_by_layer.size() != c.layers.size())
        throw std::invalid_argument("hva_cost: event grouping does not match the schedule");
    DensityMatrix rho = DensityMatrix::basis_state(c.n, 0);
    for (size_t l = 0; l < c.layers.size(); ++l) {
        for (const CompiledHva::BoundGate& b : c.layers[l]) {
            double t = theta[static_cast<size_t>(b.param)];
            if (shift && shift->param == b.param && shift->dummy == b.dummy) t += shift->delta;
            apply_gate(rho, Gate{b.kind, b.q0, b.q1, detail::gate_angle(b.kind, t)});
        }
        if (!events_by_layer.empty())
            for (const NoiseEvent& e : events_by_layer[l]) apply_channel(rho, e);
    }
    return expectation(rho, h);
}

struct GradientResult {
    std::vector<double> partials;
    double one_norm = 0.0;
    long long cost_evals = 0;
};

// Shift-rule gradient with one dummy variable per Pauli factor: each factor
// exp(-i t P) contributes C(t + pi/4) - C(t - pi/4) and the dummies of one
// parameter sum to its partial. The noise schedule is shared by all shifted
// evaluations.
inline GradientResult hva_gradient(const CompiledHva& c, const std::vector<double>& theta,
                                   const std::vector<std::vector<NoiseEvent>>& events_by_layer,
                                   const Observable& h) {
    GradientResult result;
    result.partials.assign(theta.size(), 0.0);
    const int dummies = c.dummies_per_param();
    for (int k = 0; k < static_cast<int>(theta.size()); ++k) {
        double partial = 0.0;
        for (int dummy = 0; dummy < dummies; ++dummy) {
            DummyShift plus{k, dummy, kPi / 4};
            DummyShift minus{k, dummy, -kPi / 4};
            partial += hva_cost(c, theta, events_by_layer, h, &plus) -
                       hva_cost(c, theta, events_by_layer, h, &minus);
            result.cost_evals += 2;
        }
        result.partials[static_cast<size_t>(k)] = partial;
        result.one_norm += std::abs(partial);
    }
    return result;
}

// Convenience entry points on an HvaCircuit.

inline double cost(const HvaCircuit& circuit, const QubitLayout& layout,
                   const NoiseModel& model) {
    if (layout.n != circuit.n) throw std::invalid_argument("cost: layout size mismatch");
    const CompiledHva c = compile_hva(circuit);
    const auto events = build_noise_schedule(c.plain_layers(), layout, model);
    const auto grouped = group_events_by_layer(events, static_cast<int>(c.layers.size()));
    return hva_cost(c, circuit.theta, grouped, tfim_observable({circuit.n, 1.0}));
}

inline GradientResult gradient(const HvaCircuit& circuit, const QubitLayout& layout,
                               const NoiseModel& model) {
    if (layout.n != circuit.n) throw std::invalid_argument("gradient: layout size mismatch");
    const CompiledHva c = compile_hva(circuit);
    const auto events = build_noise_schedule(c.plain_layers(), layout, model);
    const auto grouped = group_events_by_layer(events, static_cast<int>(c.layers.size()));
    return hva_gradient(c, circuit.theta, grouped, tfim_observable({circuit.n, 1.0}));
}

}  // namespace cleandirty
