#pragma once

#include <complex>
#include <filesystem>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "mrispeech/core/signal.hpp"

namespace testsupport {

inline constexpr double kPi = std::numbers::pi;

inline mrispeech::SampledSignal sine(double freq, double amp, double fs, std::size_t n, double phase = 0.0) {
  std::vector<double> x(n);
  for (std::size_t t = 0; t < n; ++t) x[t] = amp * std::sin(2.0 * kPi * freq * t / fs + phase);
  return {std::move(x), fs};
}

inline mrispeech::SampledSignal white(std::size_t n, double fs, std::uint64_t seed, double sigma = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, sigma);
  std::vector<double> x(n);
  for (auto& v : x) v = g(rng);
  return {std::move(x), fs};
}

/// Direct evaluation of sum x[t] e^{-j 2 pi f t / fs}.
inline std::complex<double> dtft(const std::vector<double>& x, double freq, double fs) {
  std::complex<double> acc;
  for (std::size_t t = 0; t < x.size(); ++t) acc += x[t] * std::polar(1.0, -2.0 * kPi * freq * t / fs);
  return acc;
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("mrispeech_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace testsupport
