#include "mrispeech/denoise/response.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "mrispeech/core/csv.hpp"
#include "mrispeech/core/error.hpp"
#include "mrispeech/core/fft.hpp"

namespace mrispeech::denoise {

double ResponseCurve::gain_at(double f) const {
  if (f <= freqs.front()) return gain_db.front();
  if (f >= freqs.back()) return gain_db.back();
  const auto it = std::upper_bound(freqs.begin(), freqs.end(), f);
  const auto hi = static_cast<std::size_t>(it - freqs.begin());
  const std::size_t lo = hi - 1;
  const double t = (f - freqs[lo]) / (freqs[hi] - freqs[lo]);
  return gain_db[lo] + t * (gain_db[hi] - gain_db[lo]);
}

void ResponseCurve::validate(bool require_band) const {
  if (freqs.empty()) throw ConfigurationError("response curve is empty");
  if (freqs.size() != gain_db.size()) throw ConfigurationError("response curve columns differ in length");
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    if (!std::isfinite(freqs[i]) || !std::isfinite(gain_db[i])) {
      throw ConfigurationError("response curve has non-finite entry at row " + std::to_string(i));
    }
    if (i > 0 && !(freqs[i] > freqs[i - 1])) {
      throw ConfigurationError("response curve frequencies must be strictly ascending");
    }
  }
  if (require_band && (freqs.front() > 50.0 || freqs.back() < 10000.0)) {
    throw ConfigurationError("response curve must cover 50 Hz .. 10 kHz");
  }
}

ResponseCurve ResponseCurve::flat() { return {{0.0, 1.0e6}, {0.0, 0.0}}; }

ResponseCurve ResponseCurve::from_csv(const std::filesystem::path& path) {
  const CsvTable t = read_csv(path);
  ResponseCurve curve{t.column("freq_hz"), t.column("gain_db")};
  curve.validate();
  return curve;
}

SampledSignal compensate_response(const SampledSignal& signal, const ResponseCurve& curve, double floor_db) {
  curve.validate(false);
  if (signal.size() < 2) throw InsufficientDataError("response compensation needs at least 2 samples");
  const std::size_t n = signal.size();
  RealFft fft(n);
  std::vector<std::complex<double>> spec(fft.bins());
  fft.forward(signal.samples(), spec);
  for (std::size_t k = 0; k < spec.size(); ++k) {
    const double f = static_cast<double>(k) * signal.fs() / static_cast<double>(n);
    const double g = std::max(curve.gain_at(f), floor_db);
    spec[k] *= std::pow(10.0, -g / 20.0);
  }
  std::vector<double> out(n);
  fft.inverse(spec, out);
  return SampledSignal(std::move(out), signal.fs());
}

}  // namespace mrispeech::denoise
