#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "etlp/errors.hpp"

namespace etlp {

// Discrete-time leaky integrate-and-fire layer with an adaptive threshold
// and a soft reset. With adapt_scale == 0 the layer degenerates to plain LIF.
//
// Per-step update order:
//   a(t) = adapt_decay * a(t-1) + s(t-1)
//   v(t) = membrane_decay * v(t-1) + input(t) - s(t-1) * v_th      (soft reset)
//   A(t) = v_th + adapt_scale * a(t)
//   s(t) = 1  iff  v(t) >= A(t) and the neuron is not refractory
//
// The membrane keeps decaying and integrating during the refractory window;
// only the spike is suppressed.
struct NeuronParams {
    double membrane_decay = 0.0; // in (0,1)
    double adapt_decay = 0.0;    // in (0,1)
    double v_th = 1.0;
    double adapt_scale = 0.0;    // >= 0; 0 means LIF
    int refractory_steps = 0;
    double dt_ms = 1.0;
};

struct LayerState {
    std::vector<double> v;
    std::vector<double> a;
    std::vector<std::uint8_t> spikes;
    std::vector<int> refractory;

    explicit LayerState(std::size_t n = 0)
        : v(n, 0.0), a(n, 0.0), spikes(n, 0), refractory(n, 0) {}

    std::size_t size() const { return v.size(); }
    void reset();
};

// Maps a time constant to the per-step decay factor exp(-dt/tau).
double decay_from_tau(double tau_ms, double dt_ms);

// Instantaneous threshold A(t) = v_th + adapt_scale * a(t) for the current state.
std::vector<double> instantaneous_threshold(const LayerState& state, const NeuronParams& p);

// Advances the layer one step. input_current must already be the summed
// synaptic drive for each neuron. Returns the spike vector s(t) (also stored
// in the state).
std::vector<std::uint8_t> step_layer(LayerState& state,
                                     std::span<const double> input_current,
                                     const NeuronParams& p);

void validate(const NeuronParams& p);

} // namespace etlp
