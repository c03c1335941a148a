#include "mrispeech/analysis/snr.hpp"

#include <algorithm>
#include <cmath>

#include "mrispeech/core/error.hpp"

namespace mrispeech::analysis {
namespace {

double snr_db(std::span<const double> reference, std::span<const double> observed) {
  double sig = 0.0, err = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    sig += reference[i] * reference[i];
    const double e = observed[i] - reference[i];
    err += e * e;
  }
  if (!(err > 0.0)) return kSnrCapDb;
  if (!(sig > 0.0)) return -kSnrCapDb;
  return std::clamp(10.0 * std::log10(sig / err), -kSnrCapDb, kSnrCapDb);
}

}  // namespace

SnrImprovement snr_improvement(const SampledSignal& clean, const SampledSignal& contaminated,
                               const SampledSignal& processed, const denoise::FilterChain& chain) {
  require_compatible(clean, contaminated, "snr_improvement");
  require_compatible(clean, processed, "snr_improvement");
  const SampledSignal reference = chain.apply(clean);
  SnrImprovement out;
  out.snr_in_db = snr_db(clean.samples(), contaminated.samples());
  out.snr_out_db = snr_db(reference.samples(), processed.samples());
  out.gain_db = std::min(out.snr_out_db - out.snr_in_db, kSnrCapDb);
  return out;
}

}  // namespace mrispeech::analysis
