#pragma once

#include <cstddef>
#include <vector>

#include "mrispeech/core/signal.hpp"

namespace mrispeech {

/// One-sided power spectrum on a uniform bin grid from 0 Hz upward.
struct PowerSpectrum {
  std::vector<double> bin_freqs;  // Hz, ascending, uniform spacing
  std::vector<double> power_db;   // 10*log10(power per bin)

  std::size_t size() const noexcept { return bin_freqs.size(); }
  double bin_spacing() const noexcept {
    return bin_freqs.size() > 1 ? bin_freqs[1] - bin_freqs[0] : 0.0;
  }
};

struct SpectralPeak {
  double loc = 0.0;  // Hz
  double mag = 0.0;  // dB
};

enum class Window { hann };

struct WelchOptions {
  std::size_t frame_len = 4096;
  double overlap = 0.5;
  Window window = Window::hann;
};

/// Periodic Hann window of length n (sums to a constant at 50 % overlap).
std::vector<double> hann_window(std::size_t n);

/// Averaged periodogram. Bin power is normalized so that summing the
/// linear bin powers returns the (window-weighted) mean-square value of
/// the signal; bins with zero power read kDbFloor.
PowerSpectrum welch_psd(const SampledSignal& signal, const WelchOptions& opts = {});

}  // namespace mrispeech
