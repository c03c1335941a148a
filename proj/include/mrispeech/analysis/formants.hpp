#pragma once

#include <vector>

#include "mrispeech/analysis/envelope.hpp"

namespace mrispeech::analysis {

struct Formant {
  double freq = 0.0;       // Hz
  double bandwidth = 0.0;  // Hz
};

struct FormantSet {
  std::vector<Formant> formants;  // ascending in frequency
  /// Fewer qualifying poles than requested.
  bool partial = false;
};

struct FormantOptions {
  int count = 3;
  double min_freq = 200.0;
  /// A Burg fit to a harmonic spectrum spends spare poles on broad
  /// humps of 450 Hz and more; resonances of the vocal tract stay well
  /// below 200 Hz.
  double max_bw = 400.0;
};

/// Reads resonances off the model poles: a pole r e^{j theta} with
/// theta > 0 maps to frequency theta*fs/(2 pi) and bandwidth
/// -(fs/pi) ln r. Poles below min_freq or wider than max_bw are skipped;
/// the lowest `count` survivors are returned.
FormantSet extract_formants(const SpectralEnvelope& env, const FormantOptions& opts = {});

}  // namespace mrispeech::analysis
