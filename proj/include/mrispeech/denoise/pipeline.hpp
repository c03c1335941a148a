#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mrispeech/core/signal.hpp"
#include "mrispeech/core/spectrum.hpp"
#include "mrispeech/denoise/comb.hpp"
#include "mrispeech/denoise/config.hpp"
#include "mrispeech/denoise/harmonics.hpp"
#include "mrispeech/denoise/response.hpp"

namespace mrispeech::denoise {

/// The linear part of the pipeline as applied to the speech channel:
/// response compensation followed by the combs in order. Re-applying it to
/// a clean reference gives the speech the pipeline would have produced
/// without any noise.
struct FilterChain {
  std::optional<ResponseCurve> response;
  double response_floor_db = -40.0;
  std::vector<CombNotchFilter> combs;

  SampledSignal apply(const SampledSignal& signal) const;
  static FilterChain identity() { return {}; }
};

struct StageLevel {
  std::string stage;
  std::string channel;  // "speech" or "noise"
  double rms_db = 0.0;
};

struct CombReport {
  double fundamental = 0.0;
  bool accepted = false;
  int n = 0;
  int multiplier = 0;
  double alpha = 0.0;
  double gain = 0.0;
  double detune_hz = 0.0;
};

struct DenoiseReport {
  double crosstalk_k = 0.0;
  double match_tolerance_hz = 0.0;
  std::vector<SpectralPeak> peaks;
  std::vector<CombReport> combs;
  bool spectral_subtraction_applied = false;
  double silent_head_rms_db = 0.0;
  double whole_rms_db = 0.0;
  std::vector<StageLevel> levels;
  std::vector<std::string> warnings;
};

struct DenoiseResult {
  SampledSignal y;
  NoiseModel model;
  FilterChain chain;
  DenoiseReport report;
};

/// Runs crosstalk removal, response compensation, noise-peak detection,
/// harmonic grouping, comb-notch filtering and spectral subtraction in
/// that order. Stage failures are rethrown as StageError carrying the
/// stage name.
DenoiseResult denoise(const SampledSignal& speech, const SampledSignal& noise, const ResponseCurve& curve,
                      const PipelineConfig& cfg);

}  // namespace mrispeech::denoise
