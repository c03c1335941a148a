#pragma once

#include "mrispeech/analysis/envelope.hpp"
#include "mrispeech/core/signal.hpp"

namespace mrispeech::analysis {

/// AR(order) fit by Burg's lattice method on the mean-removed signal.
/// The reflection coefficients minimize the summed forward and backward
/// prediction error power, which keeps every |k_m| < 1 and the model
/// stable. `gain` is the final prediction error power.
/// Throws InsufficientDataError if size() <= 2*order and
/// DegenerateInputError for constant input.
SpectralEnvelope burg_ar(const SampledSignal& signal, int order);

}  // namespace mrispeech::analysis
