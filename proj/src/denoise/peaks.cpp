#include "mrispeech/denoise/peaks.hpp"

#include <algorithm>
#include <cmath>

#include "mrispeech/core/error.hpp"

namespace mrispeech::denoise {
namespace {

double median(std::vector<double> v) {
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  double m = v[mid];
  if (v.size() % 2 == 0) {
    m = 0.5 * (m + *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid)));
  }
  return m;
}

}  // namespace

std::vector<SpectralPeak> detect_noise_peaks(const PowerSpectrum& psd, const PipelineConfig& cfg) {
  if (psd.size() == 0 || psd.size() != psd.power_db.size()) {
    throw InsufficientDataError("detect_noise_peaks: empty or inconsistent spectrum");
  }
  std::vector<SpectralPeak> peaks;
  const auto& p = psd.power_db;
  const std::size_t n = p.size();
  if (n < 3) return peaks;

  const double threshold = median(p) + cfg.peak_threshold_db;
  const std::size_t w = std::max<std::size_t>(1, cfg.peak_neighborhood_bins);
  const double df = psd.bin_spacing();

  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(p[i] > threshold)) continue;
    const std::size_t lo = i > w ? i - w : 0;
    const std::size_t hi = std::min(n - 1, i + w);
    bool is_max = true;
    // Strict on the left, non-strict on the right: a flat-topped maximum
    // is reported once, at its first bin.
    for (std::size_t j = lo; j < i && is_max; ++j) is_max = p[j] < p[i];
    for (std::size_t j = i + 1; j <= hi && is_max; ++j) is_max = p[j] <= p[i];
    if (!is_max) continue;

    const double a = p[i - 1], b = p[i], c = p[i + 1];
    const double denom = a - 2.0 * b + c;
    double delta = 0.0;
    if (denom < 0.0) delta = std::clamp(0.5 * (a - c) / denom, -0.5, 0.5);
    peaks.push_back({psd.bin_freqs[i] + delta * df, b - 0.25 * (a - c) * delta});
  }
  std::stable_sort(peaks.begin(), peaks.end(),
                   [](const SpectralPeak& x, const SpectralPeak& y) { return x.mag > y.mag; });
  return peaks;
}

}  // namespace mrispeech::denoise
