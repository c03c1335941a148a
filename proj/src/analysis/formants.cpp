#include "mrispeech/analysis/formants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mrispeech/core/error.hpp"

namespace mrispeech::analysis {

FormantSet extract_formants(const SpectralEnvelope& env, const FormantOptions& opts) {
  if (opts.count < 0) throw ParameterError("formant count must be non-negative");
  std::vector<Formant> found;
  for (const auto& z : env.poles()) {
    if (!(z.imag() > 0.0)) continue;
    const double r = std::abs(z);
    if (!(r < 1.0)) throw DomainError("extract_formants: envelope has a pole on or outside the unit circle");
    const double freq = std::arg(z) * env.fs_model / (2.0 * std::numbers::pi);
    const double bw = -env.fs_model / std::numbers::pi * std::log(r);
    if (freq > opts.min_freq && bw < opts.max_bw) found.push_back({freq, bw});
  }
  std::sort(found.begin(), found.end(), [](const Formant& a, const Formant& b) { return a.freq < b.freq; });
  FormantSet out;
  out.partial = found.size() < static_cast<std::size_t>(opts.count);
  found.resize(std::min(found.size(), static_cast<std::size_t>(opts.count)));
  out.formants = std::move(found);
  return out;
}

}  // namespace mrispeech::analysis
