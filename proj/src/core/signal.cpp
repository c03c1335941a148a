#include "mrispeech/core/signal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mrispeech/core/error.hpp"
#include "mrispeech/core/units.hpp"

namespace mrispeech {

SampledSignal::SampledSignal(std::vector<double> samples, double fs)
    : samples_(std::move(samples)), fs_(fs) {
  if (!(fs_ > 0.0) || !std::isfinite(fs_)) {
    throw ParameterError("sampling rate must be positive, got " + std::to_string(fs_));
  }
  if (samples_.empty()) {
    throw InsufficientDataError("signal has no samples");
  }
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i])) {
      throw DomainError("non-finite sample at index " + std::to_string(i));
    }
  }
}

SampledSignal SampledSignal::slice(std::size_t begin, std::size_t count) const {
  if (begin >= samples_.size()) {
    throw ParameterError("slice start beyond signal end");
  }
  const std::size_t end = std::min(samples_.size(), begin + count);
  return SampledSignal({samples_.begin() + static_cast<std::ptrdiff_t>(begin),
                        samples_.begin() + static_cast<std::ptrdiff_t>(end)},
                       fs_);
}

double SampledSignal::energy() const noexcept { return dot(samples_, samples_); }

double SampledSignal::rms() const noexcept {
  return std::sqrt(energy() / static_cast<double>(samples_.size()));
}

void require_compatible(const SampledSignal& a, const SampledSignal& b, const char* what) {
  if (a.fs() != b.fs()) {
    throw ParameterError(std::string(what) + ": sampling rates differ");
  }
  if (a.size() != b.size()) {
    throw ParameterError(std::string(what) + ": lengths differ (" + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()) + ")");
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  // long double accumulator; projections over 1e6 samples need it.
  long double acc = 0.0L;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) acc += static_cast<long double>(a[i]) * b[i];
  return static_cast<double>(acc);
}

double rms_db(const SampledSignal& s) { return power_to_db(s.energy() / static_cast<double>(s.size())); }

}  // namespace mrispeech
