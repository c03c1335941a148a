#include "mrispeech/denoise/crosstalk.hpp"

#include "mrispeech/core/error.hpp"

namespace mrispeech::denoise {

double crosstalk_coefficient(const SampledSignal& noise, const SampledSignal& speech) {
  require_compatible(noise, speech, "crosstalk_coefficient");
  const double ss = speech.energy();
  if (!(ss > 0.0)) throw DegenerateInputError("crosstalk_coefficient: speech channel has zero energy");
  return dot(noise.samples(), speech.samples()) / ss;
}

SampledSignal remove_crosstalk(const SampledSignal& noise, const SampledSignal& speech, double k) {
  require_compatible(noise, speech, "remove_crosstalk");
  std::vector<double> out(noise.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = noise[i] - k * speech[i];
  return SampledSignal(std::move(out), noise.fs());
}

}  // namespace mrispeech::denoise
