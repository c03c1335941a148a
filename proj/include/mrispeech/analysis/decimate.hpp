#pragma once

#include <array>
#include <span>
#include <vector>

#include "mrispeech/core/signal.hpp"

namespace mrispeech::analysis {

/// Second-order section, a0 normalized to 1.
struct Biquad {
  std::array<double, 3> b{};
  std::array<double, 2> a{};  // a1, a2
};

/// Digital Butterworth low-pass of even `order` via the bilinear transform
/// with pre-warping, as cascaded biquads.
std::vector<Biquad> butterworth_lowpass(int order, double cutoff_hz, double fs);

/// Forward-backward application (zero phase, squared magnitude) with odd
/// reflection at both ends to suppress edge transients.
std::vector<double> filtfilt(const std::vector<Biquad>& sections, std::span<const double> x);

/// Zero-phase order-8 Butterworth low-pass at 0.8 of the new Nyquist
/// frequency, then every factor-th sample. factor 1 returns the input.
SampledSignal decimate(const SampledSignal& signal, int factor);

}  // namespace mrispeech::analysis
