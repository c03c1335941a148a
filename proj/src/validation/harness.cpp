#include "mrispeech/validation/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "mrispeech/core/error.hpp"
#include "mrispeech/core/units.hpp"
#include "mrispeech/denoise/response.hpp"

namespace mrispeech::validation {
namespace {

std::optional<double> formant_at(const analysis::FormantSet& set, std::size_t i) {
  if (i < set.formants.size()) return set.formants[i].freq;
  return std::nullopt;
}

VowelResult run_one(const VowelSpec& spec, const NoisePair& noise, const denoise::PipelineConfig& cfg,
                    std::uint64_t seed, const ValidationOptions& opts) {
  VowelResult out;
  out.label = spec.label;
  for (const auto& f : spec.formants) out.formants.push_back({f.freq, {}, {}, {}});
  try {
    const SampledSignal clean = synth_vowel(spec, seed);
    if (clean.size() != noise.direct.size() || clean.fs() != noise.direct.fs()) {
      throw ParameterError("vowel '" + spec.label + "' and noise differ in length or rate");
    }
    const Mixture mix = mix_at_snr(clean, noise.direct, opts.snr_db);
    // Reference channel: the scanner through the second path at the same
    // scale, plus a fraction of the speech channel leaking in.
    const double scale = std::sqrt(mix.scaled_noise.energy() / noise.direct.energy());
    std::vector<double> ref(clean.size());
    for (std::size_t i = 0; i < ref.size(); ++i) ref[i] = scale * noise.quadrature[i] + opts.crosstalk * mix.mixed[i];
    SampledSignal reference(std::move(ref), clean.fs());

    const auto result = denoise::denoise(mix.mixed, reference, denoise::ResponseCurve::flat(), cfg);
    out.crosstalk_k = result.report.crosstalk_k;
    out.fundamentals = result.model.fundamentals;
    out.combs = result.report.combs;
    out.warnings = result.report.warnings;
    out.snr = analysis::snr_improvement(clean, mix.mixed, result.y, result.chain);

    const auto a_clean = analysis::analyze(clean, opts.analysis);
    const auto a_proc = analysis::analyze(result.y, opts.analysis);
    for (std::size_t i = 0; i < out.formants.size(); ++i) {
      auto& fe = out.formants[i];
      fe.clean_hz = formant_at(a_clean.formants, i);
      fe.processed_hz = formant_at(a_proc.formants, i);
      if (fe.clean_hz && fe.processed_hz) fe.error_st = semitone_distance(*fe.processed_hz, *fe.clean_hz);
    }
    if (opts.keep_signals) {
      out.signals = VowelSignals{clean, std::move(reference), mix.mixed, result.y};
    }
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

void score(ValidationReport& r, const Thresholds& t) {
  std::vector<double> gains;
  r.min_gain_db = std::numeric_limits<double>::infinity();
  for (const auto& v : r.vowels) {
    if (v.error) {
      r.failures.push_back(v.label + ": " + *v.error);
      r.formant_count += v.formants.size();
      continue;
    }
    gains.push_back(v.snr.gain_db);
    r.min_gain_db = std::min(r.min_gain_db, v.snr.gain_db);
    if (v.snr.gain_db < t.min_gain_db) {
      std::ostringstream msg;
      msg << v.label << ": SNR gain " << v.snr.gain_db << " dB below " << t.min_gain_db << " dB";
      r.failures.push_back(msg.str());
    }
    for (std::size_t i = 0; i < v.formants.size(); ++i) {
      const auto& fe = v.formants[i];
      ++r.formant_count;
      if (!fe.error_st) {
        r.failures.push_back(v.label + ": F" + std::to_string(i + 1) + " not found");
        r.max_abs_error_st = std::numeric_limits<double>::infinity();
        continue;
      }
      const double e = std::abs(*fe.error_st);
      r.max_abs_error_st = std::max(r.max_abs_error_st, e);
      if (e <= t.tight_st) ++r.within_tight;
      if (e <= t.max_abs_st) {
        ++r.within_max;
      } else {
        std::ostringstream msg;
        msg << v.label << ": F" << i + 1 << " error " << *fe.error_st << " st exceeds " << t.max_abs_st;
        r.failures.push_back(msg.str());
      }
    }
  }
  if (gains.empty()) {
    r.min_gain_db = 0.0;
  } else {
    std::sort(gains.begin(), gains.end());
    const std::size_t m = gains.size() / 2;
    r.median_gain_db = gains.size() % 2 ? gains[m] : 0.5 * (gains[m - 1] + gains[m]);
  }
  if (r.within_tight < t.min_tight) {
    r.failures.push_back(std::to_string(r.within_tight) + " formants within " + std::to_string(t.tight_st) +
                         " st, need " + std::to_string(t.min_tight));
  }
  if (r.median_gain_db < t.min_median_gain_db) {
    std::ostringstream msg;
    msg << "median SNR gain " << r.median_gain_db << " dB below " << t.min_median_gain_db << " dB";
    r.failures.push_back(msg.str());
  }
  r.pass = r.failures.empty() && !r.vowels.empty();
}

}  // namespace

std::size_t VowelResult::accepted_combs() const {
  return static_cast<std::size_t>(std::count_if(combs.begin(), combs.end(), [](const auto& c) { return c.accepted; }));
}

ValidationReport run_validation(const std::vector<VowelSpec>& vowels, const NoiseSpec& noise,
                                const denoise::PipelineConfig& cfg, std::uint64_t seed,
                                const ValidationOptions& options) {
  cfg.validate();
  if (vowels.empty()) throw ParameterError("run_validation: no vowels given");
  if (options.jobs == 0) throw ParameterError("run_validation: jobs must be at least 1");
  for (const auto& v : vowels) {
    v.validate();
    if (options.check_noise_spacing) noise.check_spacing(v.f0);
  }
  const NoisePair noise_signal = synth_mri_noise_pair(noise, seed);

  std::vector<VowelResult> results(vowels.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < vowels.size(); i = next++) {
      results[i] = run_one(vowels[i], noise_signal, cfg, seed + 1 + i, options);
    }
  };
  const std::size_t jobs = std::min(options.jobs, vowels.size());
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  ValidationReport report;
  report.vowels = std::move(results);
  std::stable_sort(report.vowels.begin(), report.vowels.end(),
                   [](const auto& a, const auto& b) { return a.label < b.label; });
  score(report, options.thresholds);
  return report;
}

std::string validation_csv(const ValidationReport& report) {
  std::ostringstream out;
  out.precision(17);
  auto opt = [&](const std::optional<double>& v) {
    if (v) out << *v;
  };
  out << "vowel,formant,expected_hz,clean_hz,processed_hz,error_st,snr_gain_db\n";
  for (const auto& v : report.vowels) {
    for (std::size_t i = 0; i < v.formants.size(); ++i) {
      const auto& f = v.formants[i];
      out << v.label << ',' << i + 1 << ',' << f.expected_hz << ',';
      opt(f.clean_hz);
      out << ',';
      opt(f.processed_hz);
      out << ',';
      opt(f.error_st);
      out << ',' << v.snr.gain_db << '\n';
    }
  }
  return out.str();
}

}  // namespace mrispeech::validation
