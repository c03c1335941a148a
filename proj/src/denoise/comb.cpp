#include "mrispeech/denoise/comb.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "mrispeech/core/error.hpp"

namespace mrispeech::denoise {

std::complex<double> CombNotchFilter::response(double freq_hz, double fs) const {
  const std::complex<double> zn = std::polar(1.0, -2.0 * std::numbers::pi * freq_hz * n / fs);
  return gain * (1.0 - zn) / (1.0 - alpha * zn);
}

double CombNotchFilter::pole_radius() const { return std::pow(std::abs(alpha), 1.0 / n); }

CombNotchFilter design_comb_notch(double fs, double d, double bw) {
  const double ratio = fs / d;
  const long n = std::isfinite(ratio) ? std::lround(ratio) : 0;
  if (!(d > 0.0) || n < 2 || static_cast<double>(n) > fs / 2.0 || !(bw > 0.0) ||
      !(bw < 2.0 / static_cast<double>(n))) {
    std::ostringstream msg;
    msg << "comb notch out of range: fs=" << fs << " d=" << d << " n=" << n << " bw=" << bw;
    throw ParameterError(msg.str());
  }
  const double t = std::tan(static_cast<double>(n) * std::numbers::pi * bw / 4.0);
  const double alpha = (1.0 - t) / (1.0 + t);
  return {static_cast<int>(n), alpha, (1.0 + alpha) / 2.0};
}

SampledSignal apply_filter(const SampledSignal& signal, const CombNotchFilter& filt) {
  const auto x = signal.samples();
  const auto n = static_cast<std::size_t>(filt.n);
  std::vector<double> y(x.size());
  for (std::size_t t = 0; t < x.size(); ++t) {
    const double xd = t >= n ? x[t - n] : 0.0;
    const double yd = t >= n ? y[t - n] : 0.0;
    y[t] = filt.gain * (x[t] - xd) + filt.alpha * yd;
  }
  return SampledSignal(std::move(y), signal.fs());
}

std::optional<CombFit> fit_comb(double fs, double d, double bw, int check_harmonic, int max_multiplier) {
  const double budget = bw * fs / 4.0;
  for (int r = 1; r <= max_multiplier; ++r) {
    const double n = std::round(r * fs / d);
    if (n < 2 || n > fs / 2.0 || !(bw < 2.0 / n)) continue;
    const double detune = check_harmonic * std::abs(r * fs / n - d);
    if (detune <= budget) {
      return CombFit{design_comb_notch(fs, fs / n, bw), r, detune};
    }
  }
  return std::nullopt;
}

}  // namespace mrispeech::denoise
