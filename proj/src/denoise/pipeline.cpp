#include "mrispeech/denoise/pipeline.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "mrispeech/core/error.hpp"
#include "mrispeech/denoise/crosstalk.hpp"
#include "mrispeech/denoise/peaks.hpp"
#include "mrispeech/denoise/subtraction.hpp"

namespace mrispeech::denoise {
namespace {

template <typename F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

}  // namespace

SampledSignal FilterChain::apply(const SampledSignal& signal) const {
  SampledSignal out = response ? compensate_response(signal, *response, response_floor_db) : signal;
  for (const auto& comb : combs) out = apply_filter(out, comb);
  return out;
}

DenoiseResult denoise(const SampledSignal& speech, const SampledSignal& noise, const ResponseCurve& curve,
                      const PipelineConfig& cfg) {
  stage("input", [&] {
    cfg.validate();
    require_compatible(speech, noise, "denoise");
    const double needed = speech.fs() * (cfg.silent_head_s + 1.0);
    if (static_cast<double>(speech.size()) < needed) {
      throw InsufficientDataError("recording of " + std::to_string(speech.size()) + " samples is shorter than " +
                                  std::to_string(static_cast<long>(needed)) + " needed");
    }
    return 0;
  });

  DenoiseReport report;
  auto level = [&](const char* name, const char* channel, const SampledSignal& s) {
    report.levels.push_back({name, channel, rms_db(s)});
  };
  level("input", "speech", speech);
  level("input", "noise", noise);

  // Step 1: project the speech out of the noise channel.
  const double k = stage("crosstalk", [&] { return crosstalk_coefficient(noise, speech); });
  report.crosstalk_k = k;
  const SampledSignal noise_clean = stage("crosstalk", [&] { return remove_crosstalk(noise, speech, k); });
  level("crosstalk", "noise", noise_clean);

  // Step 2: equalize both channels.
  FilterChain chain;
  chain.response = curve;
  chain.response_floor_db = cfg.response_floor_db;
  SampledSignal speech_eq =
      stage("compensation", [&] { return compensate_response(speech, curve, cfg.response_floor_db); });
  SampledSignal noise_eq =
      stage("compensation", [&] { return compensate_response(noise_clean, curve, cfg.response_floor_db); });
  level("compensation", "speech", speech_eq);
  level("compensation", "noise", noise_eq);

  // Steps 3-4: noise spectrum, peaks, harmonic structure.
  const PowerSpectrum psd = stage("peak_detection", [&] {
    return welch_psd(noise_eq, WelchOptions{cfg.psd_frame_len, cfg.psd_overlap, Window::hann});
  });
  report.peaks = stage("peak_detection", [&] { return detect_noise_peaks(psd, cfg); });
  report.match_tolerance_hz = cfg.match_tolerance(psd.bin_spacing());
  NoiseModel model =
      stage("harmonics", [&] { return find_harmonics(report.peaks, cfg, report.match_tolerance_hz); });

  // Step 5: one comb per detected structure.
  SampledSignal speech_f = std::move(speech_eq);
  SampledSignal noise_f = std::move(noise_eq);
  stage("notch_filtering", [&] {
    for (double d : model.fundamentals) {
      CombReport cr;
      cr.fundamental = d;
      const auto fit = fit_comb(speech.fs(), d, cfg.bw, cfg.detune_check_harmonic, cfg.max_comb_multiplier);
      if (!fit) {
        std::ostringstream msg;
        msg << "comb at " << d << " Hz rejected: no n = round(r*fs/d), r <= " << cfg.max_comb_multiplier
            << ", keeps harmonic " << cfg.detune_check_harmonic << " within " << cfg.bw * speech.fs() / 4.0
            << " Hz of a notch";
        report.warnings.push_back(msg.str());
        report.combs.push_back(cr);
        continue;
      }
      cr.accepted = true;
      cr.n = fit->filter.n;
      cr.multiplier = fit->multiplier;
      cr.alpha = fit->filter.alpha;
      cr.gain = fit->filter.gain;
      cr.detune_hz = fit->detune_hz;
      report.combs.push_back(cr);
      chain.combs.push_back(fit->filter);
      speech_f = apply_filter(speech_f, fit->filter);
      noise_f = apply_filter(noise_f, fit->filter);
    }
    return 0;
  });
  level("notch_filtering", "speech", speech_f);
  level("notch_filtering", "noise", noise_f);

  // Step 6: subtract the background measured in the leading silence.
  SampledSignal y = stage("spectral_subtraction", [&] {
    const auto head_len = static_cast<std::size_t>(std::llround(cfg.silent_head_s * speech.fs()));
    const SampledSignal head = speech_f.slice(0, head_len);
    report.silent_head_rms_db = rms_db(head);
    report.whole_rms_db = rms_db(speech_f);
    if (report.silent_head_rms_db > report.whole_rms_db - cfg.silent_gate_db) {
      std::ostringstream msg;
      msg << "spectral subtraction skipped: leading " << cfg.silent_head_s << " s is at "
          << report.silent_head_rms_db - report.whole_rms_db << " dB re whole-file RMS, gate is -"
          << cfg.silent_gate_db << " dB";
      report.warnings.push_back(msg.str());
      return speech_f;
    }
    report.spectral_subtraction_applied = true;
    return spectral_subtract(speech_f, head, SubtractionOptions{cfg.psd_frame_len, 0.5, cfg.spectral_floor});
  });
  level("spectral_subtraction", "speech", y);

  return DenoiseResult{std::move(y), std::move(model), std::move(chain), std::move(report)};
}

}  // namespace mrispeech::denoise
