#include "mrispeech/cli/reports.hpp"

#include <cmath>

#include "mrispeech/core/error.hpp"

namespace mrispeech::cli {
namespace {

using nlohmann::json;

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json optional_number(const std::optional<double>& v) { return v ? number_or_null(*v) : json(nullptr); }

template <typename T>
void take(const json& j, const char* key, T& field) {
  if (!j.contains(key)) return;
  try {
    field = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigurationError(std::string("config key '") + key + "': " + e.what());
  }
}

}  // namespace

json to_json(const denoise::PipelineConfig& cfg) {
  return {
      {"f0_ref", cfg.f0_ref},
      {"c", cfg.c},
      {"bw", cfg.bw},
      {"peak_threshold_db", cfg.peak_threshold_db},
      {"peak_match_tol_hz", optional_number(cfg.peak_match_tol_hz)},
      {"max_combs", cfg.max_combs},
      {"silent_head_s", cfg.silent_head_s},
      {"psd_frame_len", cfg.psd_frame_len},
      {"psd_overlap", cfg.psd_overlap},
      {"peak_neighborhood_bins", cfg.peak_neighborhood_bins},
      {"detune_check_harmonic", cfg.detune_check_harmonic},
      {"max_comb_multiplier", cfg.max_comb_multiplier},
      {"response_floor_db", cfg.response_floor_db},
      {"spectral_floor", cfg.spectral_floor},
      {"silent_gate_db", cfg.silent_gate_db},
  };
}

denoise::PipelineConfig pipeline_config_from_json(const json& j, denoise::PipelineConfig cfg) {
  if (!j.is_object()) throw ConfigurationError("config must be a JSON object");
  static const char* known[] = {"f0_ref",         "c",
                                "bw",             "peak_threshold_db",
                                "peak_match_tol_hz", "max_combs",
                                "silent_head_s",  "psd_frame_len",
                                "psd_overlap",    "peak_neighborhood_bins",
                                "detune_check_harmonic", "max_comb_multiplier",
                                "response_floor_db", "spectral_floor",
                                "silent_gate_db"};
  for (const auto& [key, _] : j.items()) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw ConfigurationError("unknown config key '" + key + "'");
    }
  }
  take(j, "f0_ref", cfg.f0_ref);
  take(j, "c", cfg.c);
  take(j, "bw", cfg.bw);
  take(j, "peak_threshold_db", cfg.peak_threshold_db);
  if (j.contains("peak_match_tol_hz")) {
    if (j["peak_match_tol_hz"].is_null()) {
      cfg.peak_match_tol_hz.reset();
    } else {
      double tol = 0.0;
      take(j, "peak_match_tol_hz", tol);
      cfg.peak_match_tol_hz = tol;
    }
  }
  take(j, "max_combs", cfg.max_combs);
  take(j, "silent_head_s", cfg.silent_head_s);
  take(j, "psd_frame_len", cfg.psd_frame_len);
  take(j, "psd_overlap", cfg.psd_overlap);
  take(j, "peak_neighborhood_bins", cfg.peak_neighborhood_bins);
  take(j, "detune_check_harmonic", cfg.detune_check_harmonic);
  take(j, "max_comb_multiplier", cfg.max_comb_multiplier);
  take(j, "response_floor_db", cfg.response_floor_db);
  take(j, "spectral_floor", cfg.spectral_floor);
  take(j, "silent_gate_db", cfg.silent_gate_db);
  cfg.validate();
  return cfg;
}

json to_json(const denoise::DenoiseReport& report, const denoise::NoiseModel& model) {
  json peaks = json::array();
  for (const auto& p : report.peaks) peaks.push_back({{"freq_hz", p.loc}, {"mag_db", p.mag}});
  json combs = json::array();
  for (const auto& c : report.combs) {
    combs.push_back({{"fundamental_hz", c.fundamental},
                     {"accepted", c.accepted},
                     {"n", c.n},
                     {"multiplier", c.multiplier},
                     {"alpha", c.alpha},
                     {"gain", c.gain},
                     {"detune_hz", c.detune_hz}});
  }
  json levels = json::array();
  for (const auto& l : report.levels) {
    levels.push_back({{"stage", l.stage}, {"channel", l.channel}, {"rms_db", number_or_null(l.rms_db)}});
  }
  return {
      {"crosstalk_k", report.crosstalk_k},
      {"match_tolerance_hz", report.match_tolerance_hz},
      {"fundamentals_hz", model.fundamentals},
      {"peaks", peaks},
      {"combs", combs},
      {"spectral_subtraction_applied", report.spectral_subtraction_applied},
      {"silent_head_rms_db", number_or_null(report.silent_head_rms_db)},
      {"whole_rms_db", number_or_null(report.whole_rms_db)},
      {"stages", levels},
      {"warnings", report.warnings},
  };
}

json to_json(const analysis::AnalysisConfig& cfg) {
  return {{"order", cfg.order},
          {"decimate", cfg.decimate},
          {"tilt_decimate", cfg.tilt_decimate},
          {"formant_count", cfg.formants.count},
          {"min_freq_hz", cfg.formants.min_freq},
          {"max_bandwidth_hz", cfg.formants.max_bw},
          {"tilt_f_lo_hz", cfg.tilt.f_lo},
          {"tilt_f_hi_hz", cfg.tilt.f_hi},
          {"tilt_points", cfg.tilt.points}};
}

json to_json(const analysis::VowelAnalysis& a) {
  json formants = json::array();
  for (const auto& f : a.formants.formants) formants.push_back({{"freq_hz", f.freq}, {"bandwidth_hz", f.bandwidth}});
  return {
      {"formants", formants},
      {"partial", a.formants.partial},
      {"tilt",
       {{"rolloff_db_per_octave", a.tilt.rolloff_db_per_octave},
        {"f_lo_hz", a.tilt.f_lo},
        {"f_hi_hz", a.tilt.f_hi},
        {"r_squared", a.tilt.r_squared}}},
      {"envelope", {{"order", a.envelope.order()}, {"fs_model", a.envelope.fs_model}, {"gain", a.envelope.gain},
                    {"ar_coeffs", a.envelope.ar_coeffs}}},
  };
}

json to_json(const validation::ValidationReport& report) {
  json vowels = json::array();
  for (const auto& v : report.vowels) {
    json formants = json::array();
    for (const auto& f : v.formants) {
      formants.push_back({{"expected_hz", f.expected_hz},
                          {"clean_hz", optional_number(f.clean_hz)},
                          {"processed_hz", optional_number(f.processed_hz)},
                          {"error_st", optional_number(f.error_st)}});
    }
    json combs = json::array();
    for (const auto& c : v.combs) {
      combs.push_back({{"fundamental_hz", c.fundamental}, {"accepted", c.accepted}, {"n", c.n},
                       {"multiplier", c.multiplier}});
    }
    vowels.push_back({
        {"label", v.label},
        {"formants", formants},
        {"snr_in_db", v.snr.snr_in_db},
        {"snr_out_db", v.snr.snr_out_db},
        {"snr_gain_db", v.snr.gain_db},
        {"crosstalk_k", v.crosstalk_k},
        {"fundamentals_hz", v.fundamentals},
        {"combs", combs},
        {"warnings", v.warnings},
        {"error", v.error ? json(*v.error) : json(nullptr)},
    });
  }
  return {
      {"pass", report.pass},
      {"formant_count", report.formant_count},
      {"within_tight", report.within_tight},
      {"within_max", report.within_max},
      {"max_abs_error_st", number_or_null(report.max_abs_error_st)},
      {"min_gain_db", report.min_gain_db},
      {"median_gain_db", report.median_gain_db},
      {"failures", report.failures},
      {"vowels", vowels},
  };
}

json to_json(const stats::WelchTestResult& r, double p_threshold) {
  return {
      {"t_stat", r.t_stat},
      {"df", r.df},
      {"p_two_sided", r.p_two_sided},
      {"p_one_sided", r.p_one_sided},
      {"confidence", r.confidence()},
      {"p_threshold", p_threshold},
      {"reject_h0", stats::reject_h0(r, p_threshold)},
      {"mean_a", r.mean_a},
      {"mean_b", r.mean_b},
      {"n_a", r.n_a},
      {"n_b", r.n_b},
      {"degenerate", r.degenerate},
  };
}

json to_json(const stats::KMeansResult& r) {
  return {
      {"centroids_hz", r.centroids},
      {"assignments", r.assignments},
      {"inertia", r.inertia},
      {"iterations", r.iterations},
      {"inertia_history", r.inertia_history},
  };
}

}  // namespace mrispeech::cli
