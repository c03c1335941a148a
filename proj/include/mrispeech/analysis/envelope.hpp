#pragma once

#include <complex>
#include <vector>

namespace mrispeech::analysis {

/// All-pole spectral model gain / |A(e^{jw})|^2 with
/// A(z) = 1 + a1 z^-1 + ... + ap z^-p.
struct SpectralEnvelope {
  std::vector<double> ar_coeffs{1.0};  // leading 1
  double gain = 0.0;
  double fs_model = 0.0;

  int order() const noexcept { return static_cast<int>(ar_coeffs.size()) - 1; }
  double power_db(double freq_hz) const;
  /// Roots of A(z), i.e. the model poles.
  std::vector<std::complex<double>> poles() const;
  bool is_stable() const;
};

}  // namespace mrispeech::analysis
