#pragma once

#include "mrispeech/analysis/envelope.hpp"
#include "mrispeech/analysis/formants.hpp"
#include "mrispeech/analysis/tilt.hpp"
#include "mrispeech/core/signal.hpp"

namespace mrispeech::analysis {

struct AnalysisConfig {
  int order = 18;
  int decimate = 4;
  /// Tilt gets its own model rate: at factor 4 the anti-alias low-pass
  /// starts at 4.4 kHz, inside the regression band.
  int tilt_decimate = 3;
  FormantOptions formants;
  TiltOptions tilt;
};

struct VowelAnalysis {
  SpectralEnvelope envelope;  // at the formant model rate
  SpectralEnvelope tilt_envelope;
  FormantSet formants;
  TiltEstimate tilt;
};

/// Decimate, fit the Burg envelopes, read formants and tilt.
VowelAnalysis analyze(const SampledSignal& signal, const AnalysisConfig& cfg = {});

}  // namespace mrispeech::analysis
