#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mrispeech/analysis/analyze.hpp"
#include "mrispeech/analysis/snr.hpp"
#include "mrispeech/denoise/config.hpp"
#include "mrispeech/denoise/pipeline.hpp"
#include "mrispeech/validation/synth.hpp"

namespace mrispeech::validation {

struct Thresholds {
  double max_abs_st = 1.2;    // every formant error
  double tight_st = 0.6;      // most formant errors
  std::size_t min_tight = 22; // out of 3 per vowel
  double min_gain_db = 8.0;
  double min_median_gain_db = 10.0;
};

struct ValidationOptions {
  std::size_t jobs = 1;
  double crosstalk = 0.05;  // fraction of the speech channel leaking into the noise channel
  double snr_db = 0.0;
  analysis::AnalysisConfig analysis;
  Thresholds thresholds;
  bool check_noise_spacing = true;
  bool keep_signals = false;
};

struct FormantError {
  double expected_hz = 0.0;   // planted formant
  std::optional<double> clean_hz;
  std::optional<double> processed_hz;
  /// processed vs clean, semitones; unset if either is missing
  std::optional<double> error_st;
};

struct VowelSignals {
  SampledSignal clean;
  SampledSignal noise;   // the reference channel fed to the pipeline
  SampledSignal mixed;
  SampledSignal processed;
};

struct VowelResult {
  std::string label;
  std::vector<FormantError> formants;
  analysis::SnrImprovement snr;
  double crosstalk_k = 0.0;
  std::vector<double> fundamentals;
  std::vector<denoise::CombReport> combs;
  std::vector<std::string> warnings;
  /// Set when the vowel could not be processed; the other fields are then
  /// partial.
  std::optional<std::string> error;
  std::optional<VowelSignals> signals;

  std::size_t accepted_combs() const;
};

struct ValidationReport {
  std::vector<VowelResult> vowels;  // sorted by label
  std::size_t formant_count = 0;
  std::size_t within_tight = 0;
  std::size_t within_max = 0;
  double max_abs_error_st = 0.0;
  double min_gain_db = 0.0;
  double median_gain_db = 0.0;
  std::vector<std::string> failures;
  bool pass = false;
};

/// Synthesizes each vowel, mixes it with one shared noise sample at the
/// requested SNR, denoises with a flat response curve and compares
/// formants of the processed and clean signals. The noise channel carries
/// the quadrature noise plus `crosstalk` times the speech channel.
ValidationReport run_validation(const std::vector<VowelSpec>& vowels, const NoiseSpec& noise,
                                const denoise::PipelineConfig& cfg, std::uint64_t seed,
                                const ValidationOptions& options = {});

/// One row per vowel and formant.
std::string validation_csv(const ValidationReport& report);

}  // namespace mrispeech::validation
