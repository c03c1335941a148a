#pragma once

#include <filesystem>
#include <vector>

#include "mrispeech/core/signal.hpp"

namespace mrispeech::denoise {

/// Measured magnitude response of the recording chain.
struct ResponseCurve {
  std::vector<double> freqs;    // Hz, strictly ascending
  std::vector<double> gain_db;

  /// Linear interpolation with flat extrapolation beyond the end points.
  double gain_at(double freq_hz) const;

  /// Empty curve, mismatched sizes, non-ascending or non-finite entries
  /// throw ConfigurationError. `require_band` additionally demands
  /// coverage of [50 Hz, 10 kHz].
  void validate(bool require_band = true) const;

  static ResponseCurve flat();
  /// CSV with header `freq_hz,gain_db`.
  static ResponseCurve from_csv(const std::filesystem::path& path);
};

/// Divides out the measured response with one full-length FFT. The boost
/// applied at any frequency is limited to -floor_db dB; phase is kept.
SampledSignal compensate_response(const SampledSignal& signal, const ResponseCurve& curve,
                                  double floor_db = -40.0);

}  // namespace mrispeech::denoise
