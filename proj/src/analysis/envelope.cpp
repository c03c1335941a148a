#include "mrispeech/analysis/envelope.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "mrispeech/core/units.hpp"

namespace mrispeech::analysis {

double SpectralEnvelope::power_db(double freq_hz) const {
  const double w = 2.0 * std::numbers::pi * freq_hz / fs_model;
  std::complex<double> a = 0.0;
  for (std::size_t i = 0; i < ar_coeffs.size(); ++i) {
    a += ar_coeffs[i] * std::polar(1.0, -w * static_cast<double>(i));
  }
  return power_to_db(gain / std::norm(a));
}

std::vector<std::complex<double>> SpectralEnvelope::poles() const {
  const int p = order();
  if (p <= 0) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(p, p);
  for (int i = 0; i < p; ++i) companion(0, i) = -ar_coeffs[static_cast<std::size_t>(i) + 1] / ar_coeffs[0];
  for (int i = 1; i < p; ++i) companion(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < p; ++i) out.push_back(solver.eigenvalues()[i]);
  return out;
}

bool SpectralEnvelope::is_stable() const {
  for (const auto& z : poles()) {
    if (!(std::abs(z) < 1.0)) return false;
  }
  return true;
}

}  // namespace mrispeech::analysis
