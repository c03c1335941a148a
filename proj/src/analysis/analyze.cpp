#include "mrispeech/analysis/analyze.hpp"

#include "mrispeech/analysis/burg.hpp"
#include "mrispeech/analysis/decimate.hpp"

namespace mrispeech::analysis {

VowelAnalysis analyze(const SampledSignal& signal, const AnalysisConfig& cfg) {
  const SampledSignal model_rate = decimate(signal, cfg.decimate);
  VowelAnalysis out;
  out.envelope = burg_ar(model_rate, cfg.order);
  out.formants = extract_formants(out.envelope, cfg.formants);
  out.tilt_envelope =
      cfg.tilt_decimate == cfg.decimate ? out.envelope : burg_ar(decimate(signal, cfg.tilt_decimate), cfg.order);
  out.tilt = spectral_tilt(out.tilt_envelope, cfg.tilt);
  return out;
}

}  // namespace mrispeech::analysis
