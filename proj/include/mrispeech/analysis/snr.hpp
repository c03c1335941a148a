#pragma once

#include "mrispeech/core/signal.hpp"
#include "mrispeech/denoise/pipeline.hpp"

namespace mrispeech::analysis {

/// Gain reported when the processed signal matches the reference exactly.
inline constexpr double kSnrCapDb = 120.0;

struct SnrImprovement {
  double snr_in_db = 0.0;
  double snr_out_db = 0.0;
  double gain_db = 0.0;
};

/// SNR before and after processing. The output reference is the clean
/// signal pushed through the same linear chain, so the pipeline is charged
/// only for noise it leaves behind, not for the shaping it applies to
/// speech. Both SNRs are capped at kSnrCapDb.
SnrImprovement snr_improvement(const SampledSignal& clean, const SampledSignal& contaminated,
                               const SampledSignal& processed, const denoise::FilterChain& chain);

}  // namespace mrispeech::analysis
