#include "mrispeech/analysis/tilt.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "mrispeech/core/error.hpp"

namespace mrispeech::analysis {

TiltEstimate spectral_tilt(const std::function<double(double)>& envelope_db, double nyquist_hz,
                           const TiltOptions& opts) {
  if (!(opts.f_lo > 0.0 && opts.f_lo < opts.f_hi && opts.f_hi < nyquist_hz)) {
    throw ParameterError("tilt band [" + std::to_string(opts.f_lo) + ", " + std::to_string(opts.f_hi) +
                         "] Hz must lie below the model Nyquist frequency " + std::to_string(nyquist_hz));
  }
  if (opts.points < 2) throw ParameterError("tilt needs at least two evaluation points");

  const auto m = static_cast<std::size_t>(opts.points);
  std::vector<double> xs(m), ys(m);
  const double l0 = std::log2(opts.f_lo), l1 = std::log2(opts.f_hi);
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    xs[i] = l0 + (l1 - l0) * static_cast<double>(i) / static_cast<double>(m - 1);
    ys[i] = envelope_db(std::exp2(xs[i]));
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(m);
  my /= static_cast<double>(m);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  const double r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return {-slope, opts.f_lo, opts.f_hi, r2};
}

TiltEstimate spectral_tilt(const SpectralEnvelope& env, const TiltOptions& opts) {
  return spectral_tilt([&env](double f) { return env.power_db(f); }, env.fs_model / 2.0, opts);
}

}  // namespace mrispeech::analysis
