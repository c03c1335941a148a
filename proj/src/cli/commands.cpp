#include "mrispeech/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mrispeech/analysis/analyze.hpp"
#include "mrispeech/cli/manifest.hpp"
#include "mrispeech/cli/reports.hpp"
#include "mrispeech/core/csv.hpp"
#include "mrispeech/core/error.hpp"
#include "mrispeech/core/wav.hpp"
#include "mrispeech/denoise/pipeline.hpp"
#include "mrispeech/stats/kmeans.hpp"
#include "mrispeech/stats/welch_test.hpp"
#include "mrispeech/validation/harness.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace mrispeech::cli {
namespace {

struct Common {
  std::vector<std::string> argv;
  std::optional<std::string> config_path;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
};

struct DenoiseArgs {
  std::string speech, noise, response, out, report, encoding = "float32";
  std::optional<double> f0;
};

struct AnalyzeArgs {
  std::string in, out, envelope;
  analysis::AnalysisConfig cfg;
  int envelope_points = 512;
};

struct ValidateArgs {
  std::string out, csv, fixtures_dir;
  std::vector<double> fundamentals{530.0, 710.0, 1310.0};
  double duration_s = 4.0;
  double f0 = 104.0;
  validation::ValidationOptions opts;
};

struct TtestArgs {
  std::string a, b, column = "value", out;
  double threshold = 0.95;
  bool one_sided = false;
};

struct ClusterArgs {
  std::string in, column, out;
  std::size_t k = 8;
  stats::KMeansOptions opts;
};

json load_json(const fs::path& path) {
  if (path.extension() == ".toml") throw ConfigurationError(path.string() + ": TOML configs are not supported, use JSON");
  std::ifstream in(path);
  if (!in) throw ConfigurationError("cannot open config " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigurationError(path.string() + ": " + e.what());
  }
}

denoise::PipelineConfig load_pipeline_config(const Common& c, RunManifest* manifest) {
  if (!c.config_path) return {};
  const json j = load_json(*c.config_path);
  if (manifest) manifest->add_input(*c.config_path);
  return pipeline_config_from_json(j);
}

RunManifest make_manifest(const std::string& command, const Common& c) {
  RunManifest m;
  m.command = command;
  m.argv = c.argv;
  m.version = tool_version();
  m.timestamp = source_date_timestamp();
  return m;
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw IoError("write failed for " + path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<double> load_column(const std::string& path, const std::string& column) {
  const CsvTable t = read_csv(path);
  if (column.empty() && t.header.size() == 1) return t.column(t.header.front());
  return t.column(column.empty() ? "value" : column);
}

int cmd_denoise(const DenoiseArgs& a, const Common& c, std::ostream& out) {
  RunManifest m = make_manifest("denoise", c);
  denoise::PipelineConfig cfg = load_pipeline_config(c, &m);
  if (a.f0) cfg.f0_ref = *a.f0;
  cfg.validate();
  const WavEncoding encoding = parse_wav_encoding(a.encoding);

  m.add_input(a.speech);
  m.add_input(a.noise);
  denoise::ResponseCurve curve = denoise::ResponseCurve::flat();
  if (!a.response.empty()) {
    m.add_input(a.response);
    curve = denoise::ResponseCurve::from_csv(a.response);
  }
  m.config = {{"pipeline", to_json(cfg)}, {"encoding", a.encoding}, {"flat_response", a.response.empty()}};

  const SampledSignal speech = read_wav(a.speech);
  const SampledSignal noise = read_wav(a.noise);
  const denoise::DenoiseResult r = denoise::denoise(speech, noise, curve, cfg);

  write_wav(r.y, a.out, encoding);
  json report = to_json(r.report, r.model);
  report["manifest"] = m.to_json();
  write_text(dump(report), a.report, out);
  return kSuccess;
}

int cmd_analyze(const AnalyzeArgs& a, const Common& c, std::ostream& out) {
  RunManifest m = make_manifest("analyze", c);
  m.add_input(a.in);
  m.config = to_json(a.cfg);

  const SampledSignal signal = read_wav(a.in);
  const analysis::VowelAnalysis va = analysis::analyze(signal, a.cfg);

  if (!a.envelope.empty()) {
    CsvTable t{{"freq_hz", "db"}, {}};
    const double nyquist = va.envelope.fs_model / 2.0;
    const int n = std::max(a.envelope_points, 2);
    for (int i = 0; i < n; ++i) {
      const double f = nyquist * i / (n - 1);
      t.rows.push_back({f, va.envelope.power_db(f)});
    }
    write_csv(t, a.envelope);
  }
  json report = to_json(va);
  report["manifest"] = m.to_json();
  write_text(dump(report), a.out, out);
  return kSuccess;
}

int cmd_validate(ValidateArgs a, const Common& c, std::ostream& out) {
  RunManifest m = make_manifest("validate", c);
  const denoise::PipelineConfig cfg = load_pipeline_config(c, &m);
  m.seed = c.seed;
  a.opts.jobs = c.jobs;
  a.opts.keep_signals = !a.fixtures_dir.empty();

  validation::NoiseSpec noise;
  noise.fundamentals = a.fundamentals;
  noise.duration_s = a.duration_s;
  const auto vowels = validation::reference_vowels(a.f0, a.duration_s);

  const auto& t = a.opts.thresholds;
  m.config = {
      {"pipeline", to_json(cfg)},
      {"analysis", to_json(a.opts.analysis)},
      {"noise_fundamentals_hz", a.fundamentals},
      {"duration_s", a.duration_s},
      {"f0_hz", a.f0},
      {"snr_db", a.opts.snr_db},
      {"crosstalk", a.opts.crosstalk},
      {"thresholds",
       {{"max_abs_st", t.max_abs_st},
        {"tight_st", t.tight_st},
        {"min_tight", t.min_tight},
        {"min_gain_db", t.min_gain_db},
        {"min_median_gain_db", t.min_median_gain_db}}},
  };

  const validation::ValidationReport report = validation::run_validation(vowels, noise, cfg, c.seed, a.opts);

  if (!a.fixtures_dir.empty()) {
    fs::create_directories(a.fixtures_dir);
    for (const auto& v : report.vowels) {
      if (!v.signals) continue;
      const fs::path dir(a.fixtures_dir);
      write_wav(v.signals->clean, dir / (v.label + "_clean.wav"));
      write_wav(v.signals->noise, dir / (v.label + "_noise.wav"));
      write_wav(v.signals->mixed, dir / (v.label + "_mixed.wav"));
      write_wav(v.signals->processed, dir / (v.label + "_processed.wav"));
    }
  }
  if (!a.csv.empty()) write_text(validation_csv(report), a.csv, out);

  json j = to_json(report);
  j["manifest"] = m.to_json();
  write_text(dump(j), a.out, out);
  return report.pass ? kSuccess : kFailure;
}

int cmd_ttest(const TtestArgs& a, const Common& c, std::ostream& out) {
  RunManifest m = make_manifest("ttest", c);
  m.add_input(a.a);
  m.add_input(a.b);
  m.config = {{"column", a.column}, {"p_threshold", a.threshold}, {"one_sided", a.one_sided}};

  const auto xa = load_column(a.a, a.column);
  const auto xb = load_column(a.b, a.column);
  const stats::WelchTestResult r = stats::welch_t_test(xa, xb);
  json j = to_json(r, a.threshold);
  if (a.one_sided) {
    j["confidence"] = 1.0 - r.p_one_sided;
    j["reject_h0"] = 1.0 - r.p_one_sided > a.threshold;
  }
  j["sided"] = a.one_sided ? "one" : "two";
  j["manifest"] = m.to_json();
  write_text(dump(j), a.out, out);
  return kSuccess;
}

int cmd_cluster(const ClusterArgs& a, const Common& c, std::ostream& out) {
  RunManifest m = make_manifest("cluster", c);
  m.add_input(a.in);
  m.seed = c.seed;
  m.config = {{"k", a.k}, {"restarts", a.opts.restarts}, {"iters", a.opts.iters}, {"column", a.column}};

  const auto points = load_column(a.in, a.column);
  const stats::KMeansResult r = stats::kmeans_1d(points, a.k, c.seed, a.opts);
  json j = to_json(r);
  j["manifest"] = m.to_json();
  write_text(dump(j), a.out, out);
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Common common;
  common.argv.assign(argv, argv + argc);

  CLI::App app{"Harmonic MRI noise removal and vowel analysis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));

  DenoiseArgs da;
  auto* den = app.add_subcommand("denoise", "Remove scanner noise from a speech recording");
  den->add_option("--speech", da.speech, "Speech channel WAV")->required()->check(CLI::ExistingFile);
  den->add_option("--noise", da.noise, "Noise reference WAV")->required()->check(CLI::ExistingFile);
  den->add_option("--response", da.response, "Response curve CSV (freq_hz,gain_db); flat if omitted")
      ->check(CLI::ExistingFile);
  den->add_option("--f0", da.f0, "Cue pitch in Hz");
  den->add_option("--out", da.out, "Denoised WAV")->required();
  den->add_option("--report", da.report, "Report JSON; stdout if omitted");
  den->add_option("--encoding", da.encoding, "Output encoding: float32 or pcm16")->capture_default_str();
  den->add_option("--config", common.config_path, "JSON file overriding pipeline settings");

  AnalyzeArgs aa;
  auto* ana = app.add_subcommand("analyze", "Formants and spectral tilt of a vowel");
  ana->add_option("--in", aa.in, "Input WAV")->required()->check(CLI::ExistingFile);
  ana->add_option("--order", aa.cfg.order, "AR model order")->capture_default_str();
  ana->add_option("--decimate", aa.cfg.decimate, "Decimation factor for formants")->capture_default_str();
  ana->add_option("--tilt-decimate", aa.cfg.tilt_decimate, "Decimation factor for tilt")->capture_default_str();
  ana->add_option("--max-bw", aa.cfg.formants.max_bw, "Widest pole accepted as a formant, Hz")->capture_default_str();
  ana->add_option("--min-freq", aa.cfg.formants.min_freq, "Lowest formant frequency, Hz")->capture_default_str();
  ana->add_option("--out", aa.out, "Report JSON; stdout if omitted");
  ana->add_option("--envelope", aa.envelope, "Envelope CSV (freq_hz,db)");
  ana->add_option("--envelope-points", aa.envelope_points, "Envelope grid size")->capture_default_str();

  ValidateArgs va;
  auto& th = va.opts.thresholds;
  auto* val = app.add_subcommand("validate", "Synthetic contamination experiment");
  val->add_option("--seed", common.seed, "Master seed")->default_val(7);
  val->add_option("--jobs", common.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  val->add_option("--config", common.config_path, "JSON file overriding pipeline settings");
  val->add_option("--out", va.out, "Report JSON; stdout if omitted");
  val->add_option("--csv", va.csv, "Per-formant CSV");
  val->add_option("--fixtures-dir", va.fixtures_dir, "Directory for per-vowel WAVs");
  val->add_option("--noise-fundamentals", va.fundamentals, "Noise comb fundamentals in Hz")
      ->delimiter(',')
      ->capture_default_str();
  val->add_option("--duration", va.duration_s, "Signal length in seconds")->capture_default_str();
  val->add_option("--f0", va.f0, "Vowel pitch in Hz")->capture_default_str();
  val->add_option("--snr", va.opts.snr_db, "Mixing SNR in dB")->capture_default_str();
  val->add_option("--crosstalk", va.opts.crosstalk, "Speech leakage into the noise channel")->capture_default_str();
  val->add_option("--tight-st", th.tight_st, "Tight formant tolerance, semitones")->capture_default_str();
  val->add_option("--max-st", th.max_abs_st, "Formant tolerance for all formants, semitones")->capture_default_str();
  val->add_option("--min-tight", th.min_tight, "Formants required within the tight tolerance")->capture_default_str();
  val->add_option("--min-gain", th.min_gain_db, "Minimum SNR gain per vowel, dB")->capture_default_str();
  val->add_option("--min-median-gain", th.min_median_gain_db, "Minimum median SNR gain, dB")->capture_default_str();
  val->add_option("--order", va.opts.analysis.order, "AR model order")->capture_default_str();
  val->add_option("--decimate", va.opts.analysis.decimate, "Decimation factor for formants")->capture_default_str();
  val->add_option("--max-bw", va.opts.analysis.formants.max_bw, "Widest pole accepted as a formant, Hz")
      ->capture_default_str();

  TtestArgs ta;
  auto* tt = app.add_subcommand("ttest", "Welch unequal-variance t-test");
  tt->add_option("--a", ta.a, "First sample CSV")->required()->check(CLI::ExistingFile);
  tt->add_option("--b", ta.b, "Second sample CSV")->required()->check(CLI::ExistingFile);
  tt->add_option("--column", ta.column, "Column name")->capture_default_str();
  tt->add_option("--threshold", ta.threshold, "Confidence needed to reject")->capture_default_str();
  tt->add_flag("--one-sided", ta.one_sided, "Decide on the one-sided p-value (mean a > mean b)");
  tt->add_option("--out", ta.out, "Report JSON; stdout if omitted");

  ClusterArgs ca;
  auto* cl = app.add_subcommand("cluster", "One-dimensional k-means");
  cl->add_option("--in", ca.in, "Frequencies CSV")->required()->check(CLI::ExistingFile);
  cl->add_option("--column", ca.column, "Column name; the only column or `value` if omitted");
  cl->add_option("--k", ca.k, "Number of clusters")->capture_default_str();
  cl->add_option("--seed", common.seed, "Seed")->default_val(1);
  cl->add_option("--restarts", ca.opts.restarts, "Restarts")->capture_default_str();
  cl->add_option("--iters", ca.opts.iters, "Lloyd iterations per restart")->capture_default_str();
  cl->add_option("--out", ca.out, "Report JSON; stdout if omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*den) return cmd_denoise(da, common, out);
    if (*ana) return cmd_analyze(aa, common, out);
    if (*val) return cmd_validate(va, common, out);
    if (*tt) return cmd_ttest(ta, common, out);
    if (*cl) return cmd_cluster(ca, common, out);
  } catch (const ConfigurationError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kUsage;
  } catch (const StageError& e) {
    err << "stage '" << e.stage() << "' failed: " << e.what() << "\n";
    return kFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mrispeech::cli
