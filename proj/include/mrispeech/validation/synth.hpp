#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mrispeech/analysis/formants.hpp"
#include "mrispeech/core/signal.hpp"

namespace mrispeech::validation {

struct VowelSpec {
  std::string label;
  double f0 = 104.0;
  std::vector<analysis::Formant> formants;  // ascending
  double rolloff_db_per_octave = 12.0;
  double duration_s = 4.0;
  double fs = 44100.0;
  /// Relative period jitter drawn per glottal cycle; 0 disables it.
  double jitter = 0.0;
  /// Height of each formant peak above the source slope; <= 0 selects
  /// plain two-pole resonators, which add 12 dB/octave each above F.
  double formant_prominence_db = 17.0;

  void validate() const;
};

/// The eight reference vowels with the formant frequencies of the
/// contamination experiment; bandwidths are 70, 90 and 130 Hz.
std::vector<VowelSpec> reference_vowels(double f0 = 104.0, double duration_s = 4.0, double fs = 44100.0);

struct NoiseSpec {
  std::vector<double> fundamentals;  // Hz
  int harmonics_per_comb = 20;
  /// Level of each comb in dB; empty means 0 dB for all.
  std::vector<double> comb_level_db;
  double broadband_floor_db = -30.0;  // white noise re total comb power
  double duration_s = 4.0;
  double fs = 44100.0;

  void validate() const;
  /// Throws ParameterError if a fundamental lies within `margin_hz` of an
  /// integer multiple of f0.
  void check_spacing(double f0, double margin_hz = 5.0) const;
};

/// Band-limited pulse train at f0, shaped by cascaded one-pole low-passes
/// whose pole is calibrated so the source falls by rolloff_db_per_octave
/// over 465..5000 Hz, then driven through one pole-zero resonator per
/// formant. RMS is normalized to 0.1.
SampledSignal synth_vowel(const VowelSpec& spec, std::uint64_t seed = 0);

/// Harmonic combs with 1/m amplitude taper and seeded random phases plus
/// seeded white noise, RMS-normalized to 0.1.
SampledSignal synth_mri_noise(const NoiseSpec& spec, std::uint64_t seed);

struct NoisePair {
  SampledSignal direct;
  /// Same partials shifted by 90 degrees plus its own white noise: the
  /// scanner heard through a second path, uncorrelated with `direct` at
  /// zero lag.
  SampledSignal quadrature;
};

/// `direct` is identical to synth_mri_noise(spec, seed).
NoisePair synth_mri_noise_pair(const NoiseSpec& spec, std::uint64_t seed);

struct Mixture {
  SampledSignal mixed;
  SampledSignal scaled_noise;
};

/// Scales `noise` so that speech energy over noise energy is exactly
/// snr_db and adds it to `speech`.
Mixture mix_at_snr(const SampledSignal& speech, const SampledSignal& noise, double snr_db = 0.0);

/// Magnitude response (dB) of the calibrated source roll-off filter, for
/// tests of the calibration.
double source_rolloff_db(double freq_hz, double fs, double pole, int sections);

struct SourceShape {
  double pole = 0.0;
  int sections = 0;
};

SourceShape calibrate_source(double rolloff_db_per_octave, double fs);

}  // namespace mrispeech::validation
