#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "etlp/matrix.hpp"

namespace etlp {

// Dampening of the triangular surrogate. Values lie in [0, dampening].
struct SurrogateParams {
    double dampening = 0.3;
};

// Local learning quantities for one weight block (pre channels x post
// neurons): the pre-synaptic spike trace, the per-synapse threshold
// adaptation trace (only materialized when adapt_scale > 0), and the most
// recently computed combined eligibility.
struct TraceState {
    std::vector<double> pre_trace;
    Matrix adapt_trace; // empty (0x0) when adapt_scale == 0
    Matrix last_e;

    TraceState() = default;
    TraceState(std::size_t pre, std::size_t post, double adapt_scale)
        : pre_trace(pre, 0.0),
          adapt_trace(adapt_scale > 0.0 ? Matrix(pre, post) : Matrix()) {}
};

// eps'(i) = decay * eps(i) + spikes(i); the running low-pass filter of the
// input spike train.
void update_pre_trace(std::vector<double>& pre_trace,
                      std::span<const std::uint8_t> input_spikes,
                      double decay);

// Explicit sum  sum_{i=0..t} decay^(t-i) * spikes(i); the closed form the
// recursive trace must reproduce. Kept as an independent route for checks.
double closed_form_pre_trace(std::span<const std::uint8_t> spike_history,
                             double decay, std::size_t t);

// Triangular surrogate of the spike nonlinearity:
// dampening * max(0, 1 - |v - threshold|).
double surrogate(double v, double threshold, double dampening);

std::vector<double> surrogate(std::span<const double> v,
                              std::span<const double> threshold,
                              double dampening);

// Per synapse (i,j):
//   adapt'(i,j) = pre_trace(i)*phi(j) + (adapt_decay - phi(j)*adapt_scale) * adapt(i,j)
void update_adapt_trace(Matrix& adapt_trace,
                        std::span<const double> pre_trace,
                        std::span<const double> phi,
                        double adapt_decay, double adapt_scale);

// Combined eligibility e(i,j) = phi(j) * (pre_trace(i) - adapt_scale*adapt(i,j)).
// With adapt_scale == 0 (empty adapt matrix) this is the plain outer product.
Matrix eligibility(std::span<const double> pre_trace,
                   std::span<const double> phi,
                   const Matrix& adapt_trace,
                   double adapt_scale);

} // namespace etlp
