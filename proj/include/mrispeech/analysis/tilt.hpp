#pragma once

#include <functional>

#include "mrispeech/analysis/envelope.hpp"

namespace mrispeech::analysis {

struct TiltEstimate {
  double rolloff_db_per_octave = 0.0;  // positive: spectrum falls with frequency
  double f_lo = 0.0;
  double f_hi = 0.0;
  double r_squared = 0.0;
};

struct TiltOptions {
  double f_lo = 465.0;
  double f_hi = 5000.0;
  int points = 200;
};

/// Least-squares line through an envelope sampled in dB at `points`
/// log-uniform frequencies of [f_lo, f_hi], against log2 f. Throws
/// ParameterError unless 0 < f_lo < f_hi < nyquist_hz.
TiltEstimate spectral_tilt(const std::function<double(double)>& envelope_db, double nyquist_hz,
                           const TiltOptions& opts = {});

TiltEstimate spectral_tilt(const SpectralEnvelope& env, const TiltOptions& opts = {});

}  // namespace mrispeech::analysis
