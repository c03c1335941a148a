#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mrispeech {

/// Uniformly sampled real-valued audio. Immutable once built: the
/// constructor rejects non-positive rates, empty buffers and non-finite
/// samples, so every SampledSignal in the program satisfies those
/// invariants.
class SampledSignal {
 public:
  SampledSignal(std::vector<double> samples, double fs);

  std::span<const double> samples() const noexcept { return samples_; }
  double operator[](std::size_t i) const noexcept { return samples_[i]; }
  std::size_t size() const noexcept { return samples_.size(); }
  double fs() const noexcept { return fs_; }
  double duration() const noexcept { return static_cast<double>(samples_.size()) / fs_; }

  /// Samples [begin, begin + count), clipped to the signal end.
  SampledSignal slice(std::size_t begin, std::size_t count) const;

  double energy() const noexcept;
  double rms() const noexcept;

  /// Releases the buffer; the signal is left unusable.
  std::vector<double> take() && { return std::move(samples_); }

  friend bool operator==(const SampledSignal&, const SampledSignal&) = default;

 private:
  std::vector<double> samples_;
  double fs_;
};

/// Throws ParameterError unless both signals share rate and length.
void require_compatible(const SampledSignal& a, const SampledSignal& b, const char* what);

double dot(std::span<const double> a, std::span<const double> b);

/// RMS level in dB re full scale; silent input maps to the dB floor.
double rms_db(const SampledSignal& s);

}  // namespace mrispeech
