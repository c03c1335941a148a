#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace mrispeech {

/// Real-to-complex transform pair of fixed length backed by FFTW. One
/// instance owns its plans and scratch buffers, so it is not shareable
/// between threads; create one per task. Plan creation is serialized
/// internally because the FFTW planner is not reentrant.
class RealFft {
 public:
  explicit RealFft(std::size_t n);
  ~RealFft();
  RealFft(RealFft&&) noexcept;
  RealFft& operator=(RealFft&&) noexcept;
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  std::size_t size() const noexcept { return n_; }
  std::size_t bins() const noexcept { return n_ / 2 + 1; }

  /// Unnormalized forward transform; `out` receives n/2+1 bins.
  void forward(std::span<const double> in, std::span<std::complex<double>> out);
  /// Inverse of forward(), including the 1/n scaling.
  void inverse(std::span<const std::complex<double>> in, std::span<double> out);

 private:
  struct Impl;
  std::size_t n_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace mrispeech
