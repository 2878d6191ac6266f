#include "etlp/neuron.hpp"

#include <cmath>

namespace etlp {

void LayerState::reset() {
    std::fill(v.begin(), v.end(), 0.0);
    std::fill(a.begin(), a.end(), 0.0);
    std::fill(spikes.begin(), spikes.end(), 0);
    std::fill(refractory.begin(), refractory.end(), 0);
}

double decay_from_tau(double tau_ms, double dt_ms) {
    if (!(tau_ms > 0.0)) throw ParameterError("decay_from_tau: tau_ms must be positive");
    if (!(dt_ms > 0.0)) throw ParameterError("decay_from_tau: dt_ms must be positive");
    return std::exp(-dt_ms / tau_ms);
}

void validate(const NeuronParams& p) {
    if (!(p.membrane_decay > 0.0 && p.membrane_decay < 1.0))
        throw ParameterError("NeuronParams: membrane_decay must lie in (0,1)");
    if (!(p.adapt_decay > 0.0 && p.adapt_decay < 1.0))
        throw ParameterError("NeuronParams: adapt_decay must lie in (0,1)");
    if (p.adapt_scale < 0.0)
        throw ParameterError("NeuronParams: adapt_scale must be >= 0");
    if (p.refractory_steps < 0)
        throw ParameterError("NeuronParams: refractory_steps must be >= 0");
}

std::vector<double> instantaneous_threshold(const LayerState& state, const NeuronParams& p) {
    std::vector<double> out(state.size());
    for (std::size_t j = 0; j < state.size(); ++j)
        out[j] = p.v_th + p.adapt_scale * state.a[j];
    return out;
}

std::vector<std::uint8_t> step_layer(LayerState& state,
                                     std::span<const double> input_current,
                                     const NeuronParams& p) {
    const std::size_t n = state.size();
    if (input_current.size() != n)
        throw ShapeError("step_layer: input length != layer size");

    for (std::size_t j = 0; j < n; ++j) {
        if (std::isnan(input_current[j]))
            throw NumericError("step_layer: NaN input current");

        const double prev_spike = state.spikes[j] ? 1.0 : 0.0;
        state.a[j] = p.adapt_decay * state.a[j] + prev_spike;
        state.v[j] = p.membrane_decay * state.v[j] + input_current[j] - prev_spike * p.v_th;

        const double threshold = p.v_th + p.adapt_scale * state.a[j];
        if (state.refractory[j] == 0 && state.v[j] >= threshold) {
            state.spikes[j] = 1;
            state.refractory[j] = p.refractory_steps;
        } else {
            state.spikes[j] = 0;
            if (state.refractory[j] > 0) --state.refractory[j];
        }
    }
    return state.spikes;
}

} // namespace etlp
