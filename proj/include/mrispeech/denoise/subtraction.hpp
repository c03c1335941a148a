#pragma once

#include <cstddef>

#include "mrispeech/core/signal.hpp"

namespace mrispeech::denoise {

struct SubtractionOptions {
  std::size_t frame_len = 4096;
  double overlap = 0.5;
  double floor = 0.01;  // spectral floor beta
};

/// Magnitude spectral subtraction with overlap-add resynthesis.
///
/// The noise estimate mu is the mean magnitude spectrum of Hann-windowed
/// frames of `silent`. Each frame X of `signal` becomes
/// max(|X| - mu, floor*|X|) with the phase of X. Analysis uses a periodic
/// Hann window, which sums to one at 50 % overlap, so a zero estimate
/// returns the input unchanged up to rounding.
SampledSignal spectral_subtract(const SampledSignal& signal, const SampledSignal& silent,
                                const SubtractionOptions& opts = {});

}  // namespace mrispeech::denoise
