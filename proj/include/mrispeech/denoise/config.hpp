#pragma once

#include <cstddef>
#include <optional>

namespace mrispeech::denoise {

/// Tuning of the noise-removal pipeline. Defaults reproduce the published
/// setup (c = 1.5, bw = 6e-3) plus our choices where the method is silent.
struct PipelineConfig {
  double f0_ref = 104.0;          // cue pitch, Hz
  double c = 1.5;                 // harmonic guard: spacings below c*f0_ref are skipped
  double bw = 6e-3;               // notch -3 dB bandwidth, normalized to Nyquist
  double peak_threshold_db = 10.0;
  /// Hz; unset means two PSD bins.
  std::optional<double> peak_match_tol_hz;
  std::size_t max_combs = 8;
  double silent_head_s = 0.5;

  std::size_t psd_frame_len = 4096;
  double psd_overlap = 0.5;
  /// A peak must be the maximum over +-this many bins; suppresses Hann
  /// sidelobes of strong tones.
  std::size_t peak_neighborhood_bins = 6;
  /// The harmonic whose detuning decides whether a rounded comb is usable.
  int detune_check_harmonic = 10;
  /// Largest r tried in n = round(r*fs/d) when fs/d is far from an integer.
  int max_comb_multiplier = 4;
  double response_floor_db = -40.0;
  double spectral_floor = 0.01;
  /// The silent head must sit this far below the whole-file RMS.
  double silent_gate_db = 15.0;

  /// Throws ConfigurationError on out-of-range values.
  void validate() const;

  double match_tolerance(double bin_spacing_hz) const;
};

}  // namespace mrispeech::denoise
