#include "mrispeech/analysis/decimate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "mrispeech/core/error.hpp"

namespace mrispeech::analysis {
namespace {

void run_sections(const std::vector<Biquad>& sections, std::vector<double>& x) {
  for (const auto& s : sections) {
    double z1 = 0.0, z2 = 0.0;  // transposed direct form II
    for (double& v : x) {
      const double y = s.b[0] * v + z1;
      z1 = s.b[1] * v - s.a[0] * y + z2;
      z2 = s.b[2] * v - s.a[1] * y;
      v = y;
    }
  }
}

}  // namespace

std::vector<Biquad> butterworth_lowpass(int order, double cutoff_hz, double fs) {
  if (order < 2 || order % 2 != 0) throw ParameterError("Butterworth order must be even and >= 2");
  if (!(cutoff_hz > 0.0 && cutoff_hz < fs / 2.0)) throw ParameterError("Butterworth cutoff must lie in (0, fs/2)");
  const double w = std::tan(std::numbers::pi * cutoff_hz / fs);
  const double w2 = w * w;
  std::vector<Biquad> out;
  for (int k = 0; k < order / 2; ++k) {
    const double theta = std::numbers::pi * (2.0 * k + order + 1.0) / (2.0 * order);
    const double c = std::cos(theta);  // negative: left half-plane pole pair
    const double a0 = 1.0 - 2.0 * w * c + w2;
    Biquad s;
    s.b = {w2 / a0, 2.0 * w2 / a0, w2 / a0};
    s.a = {(2.0 * w2 - 2.0) / a0, (1.0 + 2.0 * w * c + w2) / a0};
    out.push_back(s);
  }
  return out;
}

std::vector<double> filtfilt(const std::vector<Biquad>& sections, std::span<const double> x) {
  const std::size_t n = x.size();
  if (n < 2) return {x.begin(), x.end()};
  const std::size_t pad = std::min<std::size_t>(n - 1, 64 * sections.size() + 64);
  std::vector<double> ext;
  ext.reserve(n + 2 * pad);
  for (std::size_t i = pad; i >= 1; --i) ext.push_back(2.0 * x[0] - x[i]);
  ext.insert(ext.end(), x.begin(), x.end());
  for (std::size_t i = 1; i <= pad; ++i) ext.push_back(2.0 * x[n - 1] - x[n - 1 - i]);

  run_sections(sections, ext);
  std::reverse(ext.begin(), ext.end());
  run_sections(sections, ext);
  std::reverse(ext.begin(), ext.end());
  return {ext.begin() + static_cast<std::ptrdiff_t>(pad), ext.begin() + static_cast<std::ptrdiff_t>(pad + n)};
}

SampledSignal decimate(const SampledSignal& signal, int factor) {
  if (factor < 1) throw ParameterError("decimation factor must be >= 1, got " + std::to_string(factor));
  if (factor == 1) return signal;
  const double cutoff = 0.8 * signal.fs() / (2.0 * factor);
  const auto filtered = filtfilt(butterworth_lowpass(8, cutoff, signal.fs()), signal.samples());
  std::vector<double> out;
  out.reserve(filtered.size() / static_cast<std::size_t>(factor) + 1);
  for (std::size_t i = 0; i < filtered.size(); i += static_cast<std::size_t>(factor)) out.push_back(filtered[i]);
  return SampledSignal(std::move(out), signal.fs() / factor);
}

}  // namespace mrispeech::analysis
