#pragma once

#include "mrispeech/core/signal.hpp"

namespace mrispeech::denoise {

/// Least-squares k minimizing ||noise - k*speech||^2.
double crosstalk_coefficient(const SampledSignal& noise, const SampledSignal& speech);

/// noise - k*speech.
SampledSignal remove_crosstalk(const SampledSignal& noise, const SampledSignal& speech, double k);

}  // namespace mrispeech::denoise
