#include "mrispeech/validation/synth.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "mrispeech/analysis/tilt.hpp"
#include "mrispeech/core/error.hpp"

namespace mrispeech::validation {
namespace {

constexpr double kTargetRms = 0.1;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void normalize_rms(std::vector<double>& x, double target) {
  double e = 0.0;
  for (double v : x) e += v * v;
  const double rms = std::sqrt(e / static_cast<double>(x.size()));
  if (rms > 0.0) {
    for (double& v : x) v *= target / rms;
  }
}

double source_slope(double pole, int sections, double fs) {
  return analysis::spectral_tilt([&](double f) { return source_rolloff_db(f, fs, pole, sections); }, fs / 2.0)
      .rolloff_db_per_octave;
}

}  // namespace

void VowelSpec::validate() const {
  if (!(fs > 0.0) || !(f0 > 0.0) || !(duration_s > 0.0)) throw ParameterError("vowel spec: fs, f0, duration must be positive");
  if (!(rolloff_db_per_octave >= 0.0)) throw ParameterError("vowel spec: roll-off must be non-negative");
  if (!(jitter >= 0.0 && jitter <= 0.005)) throw ParameterError("vowel spec: jitter must lie in [0, 0.005]");
  for (std::size_t i = 0; i < formants.size(); ++i) {
    const auto& f = formants[i];
    if (!(f.freq > 0.0) || !(f.bandwidth > 0.0)) throw ParameterError("vowel spec: formants need positive frequency and bandwidth");
    if (f.freq >= fs / 2.0) {
      throw ParameterError("vowel spec '" + label + "': formant " + std::to_string(f.freq) + " Hz at or above Nyquist");
    }
    if (i > 0 && !(f.freq > formants[i - 1].freq)) throw ParameterError("vowel spec: formants must ascend");
  }
  if (!formants.empty() && !(f0 < formants.front().freq)) throw ParameterError("vowel spec: f0 must lie below F1");
}

std::vector<VowelSpec> reference_vowels(double f0, double duration_s, double fs) {
  struct Row {
    const char* label;
    double f1, f2, f3;
  };
  // Formants measured from the anechoic reference vowels.
  static constexpr Row rows[] = {
      {"a", 598, 1094, 1918}, {"e", 453, 1691, 2255}, {"i", 318, 1900, 2097}, {"o", 465, 815, 2233},
      {"u", 410, 898, 1934},  {"y", 379, 1535, 2034}, {"ae", 562, 1452, 2375}, {"oe", 436, 1400, 2076},
  };
  std::vector<VowelSpec> out;
  for (const auto& r : rows) {
    VowelSpec v;
    v.label = r.label;
    v.f0 = f0;
    v.formants = {{r.f1, 70.0}, {r.f2, 90.0}, {r.f3, 130.0}};
    v.duration_s = duration_s;
    v.fs = fs;
    out.push_back(std::move(v));
  }
  return out;
}

void NoiseSpec::validate() const {
  if (!(fs > 0.0) || !(duration_s > 0.0)) throw ParameterError("noise spec: fs and duration must be positive");
  if (harmonics_per_comb < 1) throw ParameterError("noise spec: need at least one harmonic per comb");
  if (!comb_level_db.empty() && comb_level_db.size() != fundamentals.size()) {
    throw ParameterError("noise spec: comb_level_db must match fundamentals");
  }
  for (double d : fundamentals) {
    if (!(d > 0.0)) throw ParameterError("noise spec: fundamentals must be positive");
  }
}

void NoiseSpec::check_spacing(double f0, double margin_hz) const {
  for (double d : fundamentals) {
    const double nearest = std::max(1.0, std::round(d / f0)) * f0;
    if (std::abs(d - nearest) < margin_hz) {
      std::ostringstream msg;
      msg << "noise fundamental " << d << " Hz lies within " << margin_hz << " Hz of " << nearest
          << " Hz, a multiple of f0 = " << f0 << " Hz";
      throw ParameterError(msg.str());
    }
  }
}

double source_rolloff_db(double freq_hz, double fs, double pole, int sections) {
  const double w = kTwoPi * freq_hz / fs;
  const double one = (1.0 - pole) * (1.0 - pole) / (1.0 - 2.0 * pole * std::cos(w) + pole * pole);
  return sections * 10.0 * std::log10(one);
}

SourceShape calibrate_source(double rolloff, double fs) {
  if (rolloff <= 0.0) return {0.0, 0};
  // Each one-pole section contributes a little under 6 dB/octave in band.
  int sections = static_cast<int>(std::ceil(rolloff / 6.0)) + 1;
  while (source_slope(0.9999, sections, fs) < rolloff) ++sections;
  double lo = 0.0, hi = 0.9999;
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    (source_slope(mid, sections, fs) < rolloff ? lo : hi) = mid;
  }
  return {0.5 * (lo + hi), sections};
}

SampledSignal synth_vowel(const VowelSpec& spec, std::uint64_t seed) {
  spec.validate();
  const auto n = static_cast<std::size_t>(std::llround(spec.duration_s * spec.fs));
  const double nyquist = spec.fs / 2.0;
  const int harmonics = std::max(1, static_cast<int>(std::floor((nyquist - 1.0) / (spec.f0 * (1.0 + spec.jitter)))));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-spec.jitter, spec.jitter);

  // Band-limited pulse train: sum_{m=1..M} cos(m*phi) in closed form.
  std::vector<double> x(n);
  double phase = 0.0;
  double step = kTwoPi * spec.f0 / spec.fs;
  const double half = harmonics + 0.5;
  for (std::size_t i = 0; i < n; ++i) {
    const double s = std::sin(0.5 * phase);
    x[i] = std::abs(s) < 1e-12 ? harmonics : std::sin(half * phase) / (2.0 * s) - 0.5;
    phase += step;
    if (phase >= kTwoPi) {
      phase -= kTwoPi;
      if (spec.jitter > 0.0) step = kTwoPi * spec.f0 * (1.0 + jitter(rng)) / spec.fs;
    }
  }

  const SourceShape shape = calibrate_source(spec.rolloff_db_per_octave, spec.fs);
  for (int s = 0; s < shape.sections; ++s) {
    double y = 0.0;
    for (double& v : x) {
      y = (1.0 - shape.pole) * v + shape.pole * y;
      v = y;
    }
  }

  // Pole-zero resonators: zeros at the formant angle but with a bandwidth
  // widened by the prominence ratio, so each section is a bump of
  // formant_prominence_db on an otherwise flat response and the source
  // slope survives outside the formants. Prominence <= 0 drops the zeros.
  const double widen = spec.formant_prominence_db > 0 ? std::pow(10.0, spec.formant_prominence_db / 20.0) : 0.0;
  for (const auto& f : spec.formants) {
    const double w = kTwoPi * f.freq / spec.fs;
    const double rp = std::exp(-std::numbers::pi * f.bandwidth / spec.fs);
    const double rz = std::exp(-std::numbers::pi * std::min(f.bandwidth * widen, spec.fs / 4.0) / spec.fs);
    const double a1 = -2.0 * rp * std::cos(w), a2 = rp * rp;
    const double b1 = widen > 0 ? -2.0 * rz * std::cos(w) : 0.0, b2 = widen > 0 ? rz * rz : 0.0;
    const double g = (1.0 + a1 + a2) / (1.0 + b1 + b2);  // unit gain at DC
    double x1 = 0.0, x2 = 0.0, y1 = 0.0, y2 = 0.0;
    for (double& v : x) {
      const double y = g * (v + b1 * x1 + b2 * x2) - a1 * y1 - a2 * y2;
      x2 = x1;
      x1 = v;
      y2 = y1;
      y1 = y;
      v = y;
    }
  }
  normalize_rms(x, kTargetRms);
  return SampledSignal(std::move(x), spec.fs);
}

NoisePair synth_mri_noise_pair(const NoiseSpec& spec, std::uint64_t seed) {
  spec.validate();
  const auto n = static_cast<std::size_t>(std::llround(spec.duration_s * spec.fs));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase_dist(0.0, kTwoPi);

  std::vector<double> direct(n, 0.0), quadrature(n, 0.0);
  double comb_power = 0.0;
  for (std::size_t c = 0; c < spec.fundamentals.size(); ++c) {
    const double d = spec.fundamentals[c];
    const double level = spec.comb_level_db.empty() ? 0.0 : spec.comb_level_db[c];
    // Amplitudes 1/m, scaled so the comb's power is 10^(level/10).
    std::vector<std::pair<double, double>> partials;  // (freq, amplitude)
    double unscaled = 0.0;
    for (int m = 1; m <= spec.harmonics_per_comb; ++m) {
      if (m * d >= spec.fs / 2.0) break;
      partials.emplace_back(m * d, 1.0 / m);
      unscaled += 0.5 / (static_cast<double>(m) * m);
    }
    if (partials.empty()) continue;
    const double scale = std::sqrt(std::pow(10.0, level / 10.0) / unscaled);
    comb_power += std::pow(10.0, level / 10.0);
    for (const auto& [freq, amp] : partials) {
      const double phi = phase_dist(rng);
      const double w = kTwoPi * freq / spec.fs;
      for (std::size_t i = 0; i < n; ++i) {
        const double arg = w * static_cast<double>(i) + phi;
        direct[i] += scale * amp * std::cos(arg);
        quadrature[i] -= scale * amp * std::sin(arg);
      }
    }
  }

  const double white_power = (comb_power > 0.0 ? comb_power : 1.0) * std::pow(10.0, spec.broadband_floor_db / 10.0);
  std::normal_distribution<double> gauss(0.0, std::sqrt(white_power));
  for (double& v : direct) v += gauss(rng);
  for (double& v : quadrature) v += gauss(rng);
  normalize_rms(direct, kTargetRms);
  normalize_rms(quadrature, kTargetRms);
  return {SampledSignal(std::move(direct), spec.fs), SampledSignal(std::move(quadrature), spec.fs)};
}

SampledSignal synth_mri_noise(const NoiseSpec& spec, std::uint64_t seed) {
  return synth_mri_noise_pair(spec, seed).direct;
}

Mixture mix_at_snr(const SampledSignal& speech, const SampledSignal& noise, double snr_db) {
  require_compatible(speech, noise, "mix_at_snr");
  if (!std::isfinite(snr_db)) throw ParameterError("mix_at_snr: SNR must be finite");
  const double es = speech.energy();
  const double en = noise.energy();
  if (!(en > 0.0)) throw DegenerateInputError("mix_at_snr: noise has zero energy");
  const double scale = std::sqrt(es / (en * std::pow(10.0, snr_db / 10.0)));
  std::vector<double> scaled(noise.size()), mixed(noise.size());
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    scaled[i] = scale * noise[i];
    mixed[i] = speech[i] + scaled[i];
  }
  return {SampledSignal(std::move(mixed), speech.fs()), SampledSignal(std::move(scaled), speech.fs())};
}

}  // namespace mrispeech::validation
