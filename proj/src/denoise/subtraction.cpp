#include "mrispeech/denoise/subtraction.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "mrispeech/core/error.hpp"
#include "mrispeech/core/fft.hpp"
#include "mrispeech/core/spectrum.hpp"

namespace mrispeech::denoise {

SampledSignal spectral_subtract(const SampledSignal& signal, const SampledSignal& silent,
                                const SubtractionOptions& opts) {
  const std::size_t n = opts.frame_len;
  if (n < 2 || n % 2 != 0) throw ParameterError("spectral subtraction frame length must be even");
  if (opts.overlap != 0.5) {
    // Only the 50 % Hann pair is constant-overlap-add without a synthesis window.
    throw ParameterError("spectral subtraction supports overlap 0.5 only");
  }
  if (signal.fs() != silent.fs()) throw ParameterError("spectral subtraction: sampling rates differ");
  if (silent.size() < n) {
    throw InsufficientDataError("silent sample of " + std::to_string(silent.size()) +
                                " samples is shorter than one frame of " + std::to_string(n));
  }
  const std::size_t hop = n / 2;
  const std::vector<double> w = hann_window(n);
  RealFft fft(n);
  std::vector<double> frame(n);
  std::vector<std::complex<double>> spec(fft.bins());

  std::vector<double> mu(fft.bins(), 0.0);
  const auto s = silent.samples();
  const std::size_t silent_frames = 1 + (s.size() - n) / hop;
  for (std::size_t f = 0; f < silent_frames; ++f) {
    for (std::size_t i = 0; i < n; ++i) frame[i] = s[f * hop + i] * w[i];
    fft.forward(frame, spec);
    for (std::size_t k = 0; k < spec.size(); ++k) mu[k] += std::abs(spec[k]);
  }
  for (double& m : mu) m /= static_cast<double>(silent_frames);

  // Pad one hop in front and enough behind that every output sample is
  // covered by exactly two frames.
  const auto x = signal.samples();
  const std::size_t frames = (x.size() + hop + hop - 1) / hop + 1;
  std::vector<double> padded((frames + 1) * hop, 0.0);
  std::copy(x.begin(), x.end(), padded.begin() + static_cast<std::ptrdiff_t>(hop));
  std::vector<double> out(padded.size(), 0.0);
  std::vector<double> resynth(n);

  for (std::size_t f = 0; f < frames; ++f) {
    const std::size_t start = f * hop;
    for (std::size_t i = 0; i < n; ++i) frame[i] = padded[start + i] * w[i];
    fft.forward(frame, spec);
    for (std::size_t k = 0; k < spec.size(); ++k) {
      const double mag = std::abs(spec[k]);
      if (mag == 0.0) continue;
      const double target = std::max(mag - mu[k], opts.floor * mag);
      spec[k] *= target / mag;
    }
    fft.inverse(spec, resynth);
    for (std::size_t i = 0; i < n; ++i) out[start + i] += resynth[i];
  }

  return SampledSignal(std::vector<double>(out.begin() + static_cast<std::ptrdiff_t>(hop),
                                           out.begin() + static_cast<std::ptrdiff_t>(hop + x.size())),
                       signal.fs());
}

}  // namespace mrispeech::denoise
