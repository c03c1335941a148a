#pragma once

#include <vector>

#include "mrispeech/core/spectrum.hpp"
#include "mrispeech/denoise/config.hpp"

namespace mrispeech::denoise {

/// Local maxima (over +-cfg.peak_neighborhood_bins) rising more than
/// cfg.peak_threshold_db above the median of the spectrum, refined by a
/// parabola through the three bins around each maximum. DC and Nyquist
/// bins are never reported. Sorted by descending magnitude.
std::vector<SpectralPeak> detect_noise_peaks(const PowerSpectrum& psd, const PipelineConfig& cfg);

}  // namespace mrispeech::denoise
