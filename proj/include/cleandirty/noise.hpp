#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cleandirty/density_matrix.hpp"
#include "cleandirty/gates.hpp"

namespace cleandirty {

// One non-parallelizable stage of a circuit.
struct GateLayer {
    std::vector<Gate> gates;
};

using LayeredCircuit = std::vector<GateLayer>;

// Dirty qubits are the contiguous block 0..n_dirty-1; f multiplies every
// error rate drawn for this layout.
struct QubitLayout {
    int n = 1;
    int n_dirty = 0;
    double f = 1.0;

    QubitLayout() = default;

    QubitLayout(int n_, int n_dirty_, double f_ = 1.0) : n(n_), n_dirty(n_dirty_), f(f_) {
        if (n < 1) throw std::invalid_argument("QubitLayout: need n >= 1");
        if (n_dirty < 0 || n_dirty > n)
            throw std::invalid_argument("QubitLayout: n_dirty must be in [0, n]");
        if (!(f > 0.0 && f <= 1.0))
            throw std::invalid_argument("QubitLayout: f must be in (0, 1]");
    }

    bool is_dirty(int q) const { return q < n_dirty; }
};

// Per-gate error rates of the trapped-ion model (values at f = 1).
struct TrappedIonRates {
    double p_d = 1.5e-4;     // dephasing after a single-qubit rotation
    double p_dep = 8.0e-4;   // depolarizing after a single-qubit rotation
    double p_d1 = 7.5e-4;    // dephasing on the first XX qubit
    double p_d2 = 7.5e-4;    // dephasing on the second XX qubit
    double p_alpha = 1.0e-4; // rotation-angle imprecision
    double p_xx = 1.0e-3;    // XX rotation imprecision
    double p_h = 1.25e-3;    // ion heating
    double p_idle = 0.0;     // idle dirty qubits; no published value, off by default

    void validate() const {
        for (double v : {p_d, p_dep, p_d1, p_d2, p_alpha, p_xx, p_h, p_idle})
            if (!(v >= 0.0 && v <= 1.0))
                throw std::invalid_argument("TrappedIonRates: rates must be in [0, 1]");
    }

    TrappedIonRates scaled(double f) const {
        TrappedIonRates r = *this;
        r.p_d *= f; r.p_dep *= f; r.p_d1 *= f; r.p_d2 *= f;
        r.p_alpha *= f; r.p_xx *= f; r.p_h *= f; r.p_idle *= f;
        return r;
    }
};

enum class PauliAxis { X, Y, Z };

// A single noise channel instance placed after gate layer `after_layer`.
struct NoiseEvent {
    enum class Channel { Depolarize, Dephase, PauliFlip, TwoQubitXX };

    Channel channel = Channel::Depolarize;
    int q0 = 0;
    int q1 = -1;
    PauliAxis axis = PauliAxis::Z;
    double p = 0.0;
    int after_layer = 0;

    static NoiseEvent depolarize(int q, double p, int layer) {
        return {Channel::Depolarize, q, -1, PauliAxis::Z, p, layer};
    }
    static NoiseEvent dephase(int q, double p, int layer) {
        return {Channel::Dephase, q, -1, PauliAxis::Z, p, layer};
    }
    static NoiseEvent pauli_flip(int q, PauliAxis axis, double p, int layer) {
        return {Channel::PauliFlip, q, -1, axis, p, layer};
    }
    static NoiseEvent two_qubit_xx(int qa, int qb, double p, int layer) {
        return {Channel::TwoQubitXX, qa, qb, PauliAxis::X, p, layer};
    }
};

namespace detail {

inline void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument(std::string(what) + ": probability outside [0, 1]");
}

// rho <- (1-p) rho + p S rho S for a self-inverse Pauli word S given by its
// flip mask and a sign on each (row, col) cell.
inline void mix_flip(DensityMatrix& rho, std::uint64_t flip, double p, bool y_sign, int q) {
    const std::uint64_t d = static_cast<std::uint64_t>(rho.dim());
    const std::uint64_t t = flip & (~flip + 1);
    const double keep = 1.0 - p;
    for (std::uint64_t c = 0; c < d; ++c) {
        if (c & t) continue;
        const std::uint64_t cf = c ^ flip;
        for (std::uint64_t r = 0; r < d; ++r) {
            if (r & t) continue;
            const std::uint64_t rf = r ^ flip;
            double s = 1.0, s_cross = 1.0;
            if (y_sign) {
                // sign is +1 when the row and column bits at q agree; the
                // cross cells flip the row bit only
                s = (((r >> q) ^ (c >> q)) & 1) ? -1.0 : 1.0;
                s_cross = -s;
            }
            const complexd a = rho.at(r, c), b = rho.at(rf, cf);
            rho.at(r, c) = keep * a + p * s * b;
            rho.at(rf, cf) = keep * b + p * s * a;
            // the two cross cells pair with each other
            const complexd u = rho.at(rf, c), v = rho.at(r, cf);
            rho.at(rf, c) = keep * u + p * s_cross * v;
            rho.at(r, cf) = keep * v + p * s_cross * u;
        }
    }
}

inline void scale_z_off_cells(DensityMatrix& rho, int q, double factor) {
    const std::uint64_t d = static_cast<std::uint64_t>(rho.dim());
    const std::uint64_t m = 1ull << q;
    for (std::uint64_t c = 0; c < d; ++c)
        for (std::uint64_t r = 0; r < d; ++r)
            if (((r ^ c) & m) != 0) rho.at(r, c) *= factor;
}

}  // namespace detail

inline void apply_channel(DensityMatrix& rho, const NoiseEvent& e) {
    detail::check_probability(e.p, "apply_channel");
    switch (e.channel) {
        case NoiseEvent::Channel::Depolarize:
            apply_depolarizing(rho, e.q0, e.p);
            return;
        case NoiseEvent::Channel::Dephase:
            detail::check_target(rho, e.q0, "apply_channel");
            detail::scale_z_off_cells(rho, e.q0, 1.0 - 2.0 * e.p);
            return;
        case NoiseEvent::Channel::PauliFlip:
            detail::check_target(rho, e.q0, "apply_channel");
            if (e.p == 0.0) return;
            if (e.axis == PauliAxis::Z) {
                detail::scale_z_off_cells(rho, e.q0, 1.0 - 2.0 * e.p);
            } else {
                detail::mix_flip(rho, 1ull << e.q0, e.p, e.axis == PauliAxis::Y, e.q0);
            }
            return;
        case NoiseEvent::Channel::TwoQubitXX:
            detail::check_targets2(rho, e.q0, e.q1, "apply_channel");
            if (e.p == 0.0) return;
            detail::mix_flip(rho, (1ull << e.q0) | (1ull << e.q1), e.p, false, 0);
            return;
    }
}

// One depolarizing instance on every dirty qubit after every gate layer.
inline std::vector<NoiseEvent> depolarizing_schedule(const LayeredCircuit& circuit,
                                                     const QubitLayout& layout, double p) {
    detail::check_probability(p, "depolarizing_schedule");
    const double rate = p * layout.f;
    std::vector<NoiseEvent> events;
    events.reserve(circuit.size() * static_cast<size_t>(layout.n_dirty));
    for (int layer = 0; layer < static_cast<int>(circuit.size()); ++layer)
        for (int q = 0; q < layout.n_dirty; ++q)
            events.push_back(NoiseEvent::depolarize(q, rate, layer));
    return events;
}

// Trapped-ion placement: every rotation on a dirty qubit is followed by its
// composite channel, every XX between two dirty qubits by the two-qubit
// composite, and an XX straddling the clean/dirty cut stays noiseless.
// Composites are emitted right-to-left as applied.
inline std::vector<NoiseEvent> trapped_ion_schedule(const LayeredCircuit& circuit,
                                                    const QubitLayout& layout,
                                                    const TrappedIonRates& base_rates) {
    base_rates.validate();
    const TrappedIonRates r = base_rates.scaled(layout.f);
    std::vector<NoiseEvent> events;
    for (int layer = 0; layer < static_cast<int>(circuit.size()); ++layer) {
        std::vector<bool> touched(static_cast<size_t>(layout.n), false);
        for (const Gate& g : circuit[static_cast<size_t>(layer)].gates) {
            switch (g.kind) {
                case Gate::Kind::RX:
                case Gate::Kind::RY:
                case Gate::Kind::RZ: {
                    touched[static_cast<size_t>(g.q0)] = true;
                    if (!layout.is_dirty(g.q0)) break;
                    const PauliAxis axis = g.kind == Gate::Kind::RX   ? PauliAxis::X
                                           : g.kind == Gate::Kind::RY ? PauliAxis::Y
                                                                      : PauliAxis::Z;
                    events.push_back(NoiseEvent::pauli_flip(g.q0, axis, r.p_alpha, layer));
                    events.push_back(NoiseEvent::depolarize(g.q0, r.p_dep, layer));
                    events.push_back(NoiseEvent::dephase(g.q0, r.p_d, layer));
                    break;
                }
                case Gate::Kind::XX: {
                    touched[static_cast<size_t>(g.q0)] = true;
                    touched[static_cast<size_t>(g.q1)] = true;
                    if (!(layout.is_dirty(g.q0) && layout.is_dirty(g.q1))) break;
                    events.push_back(NoiseEvent::two_qubit_xx(g.q0, g.q1, r.p_h, layer));
                    events.push_back(NoiseEvent::two_qubit_xx(g.q0, g.q1, r.p_xx, layer));
                    events.push_back(NoiseEvent::depolarize(g.q0, r.p_dep, layer));
                    events.push_back(NoiseEvent::depolarize(g.q1, r.p_dep, layer));
                    events.push_back(NoiseEvent::dephase(g.q0, r.p_d1, layer));
                    events.push_back(NoiseEvent::dephase(g.q1, r.p_d2, layer));
                    break;
                }
                default:
                    throw std::invalid_argument(
                        "trapped_ion_schedule: circuit must use native gates RX/RY/RZ/XX");
            }
        }
        if (r.p_idle > 0.0)
            for (int q = 0; q < layout.n_dirty; ++q)
                if (!touched[static_cast<size_t>(q)])
                    events.push_back(NoiseEvent::depolarize(q, r.p_idle, layer));
    }
    return events;
}

// Sum of the probability parameters of all scheduled events.
inline double total_error_rate(const std::vector<NoiseEvent>& events) {
    double sum = 0.0;
    for (const NoiseEvent& e : events) sum += e.p;
    return sum;
}

struct NoiseModel {
    enum class Kind { Noiseless, Depolarizing, TrappedIon };

    Kind kind = Kind::Noiseless;
    double p = 0.0;
    TrappedIonRates rates{};

    static NoiseModel noiseless() { return {}; }
    static NoiseModel depolarizing(double p) {
        detail::check_probability(p, "NoiseModel::depolarizing");
        return {Kind::Depolarizing, p, {}};
    }
    static NoiseModel trapped_ion(TrappedIonRates r = {}) {
        r.validate();
        return {Kind::TrappedIon, 0.0, r};
    }

    const char* name() const {
        switch (kind) {
            case Kind::Noiseless: return "noiseless";
            case Kind::Depolarizing: return "depolarizing";
            case Kind::TrappedIon: return "trapped_ion";
        }
        return "?";
    }
};

inline std::vector<NoiseEvent> build_noise_schedule(const LayeredCircuit& circuit,
                                                    const QubitLayout& layout,
                                                    const NoiseModel& model) {
    switch (model.kind) {
        case NoiseModel::Kind::Noiseless: return {};
        case NoiseModel::Kind::Depolarizing: return depolarizing_schedule(circuit, layout, model.p);
        case NoiseModel::Kind::TrappedIon: return trapped_ion_schedule(circuit, layout, model.rates);
    }
    return {};
}

inline std::vector<std::vector<NoiseEvent>> group_events_by_layer(
    const std::vector<NoiseEvent>& events, int num_layers) {
    std::vector<std::vector<NoiseEvent>> grouped(static_cast<size_t>(num_layers));
    for (const NoiseEvent& e : events) {
        if (e.after_layer < 0 || e.after_layer >= num_layers)
            throw std::invalid_argument("group_events_by_layer: event placed outside the circuit");
        grouped[static_cast<size_t>(e.after_layer)].push_back(e);
    }
    return grouped;
}

}  // namespace cleandirty
