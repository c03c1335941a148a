#include "mrispeech/core/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "mrispeech/core/error.hpp"
#include "mrispeech/core/fft.hpp"
#include "mrispeech/core/units.hpp"

namespace mrispeech {

std::vector<double> hann_window(std::size_t n) {
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n));
  }
  return w;
}

PowerSpectrum welch_psd(const SampledSignal& signal, const WelchOptions& opts) {
  const std::size_t n = opts.frame_len;
  if (n < 2 || (n & (n - 1)) != 0) {
    throw ParameterError("Welch frame length must be a power of two >= 2, got " + std::to_string(n));
  }
  if (!(opts.overlap >= 0.0 && opts.overlap < 1.0)) {
    throw ParameterError("Welch overlap must lie in [0, 1)");
  }
  if (signal.size() < n) {
    throw InsufficientDataError("signal of " + std::to_string(signal.size()) +
                                " samples is shorter than one Welch frame of " + std::to_string(n));
  }
  const auto hop = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(static_cast<double>(n) * (1.0 - opts.overlap))));
  const std::size_t frames = 1 + (signal.size() - n) / hop;

  const std::vector<double> w = hann_window(n);
  double w2 = 0.0;
  for (double v : w) w2 += v * v;

  RealFft fft(n);
  std::vector<double> frame(n);
  std::vector<std::complex<double>> spec(fft.bins());
  std::vector<double> acc(fft.bins(), 0.0);
  const auto x = signal.samples();
  for (std::size_t f = 0; f < frames; ++f) {
    const std::size_t start = f * hop;
    for (std::size_t i = 0; i < n; ++i) frame[i] = x[start + i] * w[i];
    fft.forward(frame, spec);
    for (std::size_t k = 0; k < spec.size(); ++k) acc[k] += std::norm(spec[k]);
  }

  PowerSpectrum out;
  out.bin_freqs.resize(acc.size());
  out.power_db.resize(acc.size());
  const double norm = 1.0 / (static_cast<double>(frames) * static_cast<double>(n) * w2);
  for (std::size_t k = 0; k < acc.size(); ++k) {
    const bool edge = k == 0 || k == n / 2;
    out.bin_freqs[k] = static_cast<double>(k) * signal.fs() / static_cast<double>(n);
    out.power_db[k] = power_to_db(acc[k] * norm * (edge ? 1.0 : 2.0));
  }
  return out;
}

}  // namespace mrispeech
