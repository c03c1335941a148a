#pragma once

#include <complex>
#include <optional>

#include "mrispeech/core/signal.hpp"

namespace mrispeech::denoise {

/// Recursive notching comb
///
///   H(z) = gain * (1 - z^-n) / (1 - alpha * z^-n)
///
/// Zeros sit on the unit circle at angles 2*pi*k/n, poles at radius
/// |alpha|^(1/n) on the same angles, and gain = (1 + alpha)/2 makes the
/// response peak at exactly 1 midway between notches.
struct CombNotchFilter {
  int n = 0;
  double alpha = 0.0;
  double gain = 0.0;

  std::complex<double> response(double freq_hz, double fs) const;
  double magnitude(double freq_hz, double fs) const { return std::abs(response(freq_hz, fs)); }
  double pole_radius() const;
  double notch_spacing(double fs) const { return fs / n; }
};

/// Comb with n = round(fs/d) whose notches have -3 dB bandwidth `bw`
/// (normalized to Nyquist). Throws ParameterError unless
/// 2 <= n <= fs/2 and 0 < bw < 2/n.
CombNotchFilter design_comb_notch(double fs, double d, double bw);

/// y[t] = gain*(x[t] - x[t-n]) + alpha*y[t-n], zero initial state.
SampledSignal apply_filter(const SampledSignal& signal, const CombNotchFilter& filt);

/// A comb chosen for a measured fundamental that need not divide fs.
struct CombFit {
  CombNotchFilter filter;
  int multiplier = 1;     // notch spacing fs/n is about d/multiplier
  double detune_hz = 0.0; // offset of the checked harmonic from its notch
};

/// Rounding fs/d to an integer detunes the high harmonics. Tries
/// n = round(r*fs/d) for r = 1..max_multiplier (so every r-th notch
/// follows a harmonic of d) and returns the smallest r for which
/// harmonic `check_harmonic` stays within bw*fs/4 of its notch. Returns
/// nullopt when none qualifies.
std::optional<CombFit> fit_comb(double fs, double d, double bw, int check_harmonic, int max_multiplier);

}  // namespace mrispeech::denoise
