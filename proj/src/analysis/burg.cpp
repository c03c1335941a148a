#include "mrispeech/analysis/burg.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "mrispeech/core/error.hpp"

namespace mrispeech::analysis {

SpectralEnvelope burg_ar(const SampledSignal& signal, int order) {
  if (order < 0) throw ParameterError("AR order must be non-negative");
  const std::size_t n = signal.size();
  if (n <= 2 * static_cast<std::size_t>(order)) {
    throw InsufficientDataError("Burg AR(" + std::to_string(order) + ") needs more than " +
                                std::to_string(2 * order) + " samples, got " + std::to_string(n));
  }
  const auto x = signal.samples();
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = x[i] - mean;
  std::vector<double> b = f;

  double power = 0.0;
  for (double v : f) power += v * v;
  power /= static_cast<double>(n);
  if (!(power > 0.0)) throw DegenerateInputError("Burg AR: constant signal");

  std::vector<double> a{1.0};
  for (int m = 1; m <= order; ++m) {
    const auto mu = static_cast<std::size_t>(m);
    double num = 0.0, den = 0.0;
    for (std::size_t t = mu; t < n; ++t) {
      num += f[t] * b[t - 1];
      den += f[t] * f[t] + b[t - 1] * b[t - 1];
    }
    const double k = den > 0.0 ? -2.0 * num / den : 0.0;

    std::vector<double> next(mu + 1);
    next[0] = 1.0;
    for (std::size_t i = 1; i < mu; ++i) next[i] = a[i] + k * a[mu - i];
    next[mu] = k;
    a = std::move(next);

    // Descending t: b[t-1] is read before it is overwritten.
    for (std::size_t t = n - 1; t >= mu; --t) {
      const double ft = f[t];
      f[t] = ft + k * b[t - 1];
      b[t] = b[t - 1] + k * ft;
    }
    power *= 1.0 - k * k;
  }
  return SpectralEnvelope{std::move(a), power, signal.fs()};
}

}  // namespace mrispeech::analysis
