#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "mrispeech/analysis/analyze.hpp"
#include "mrispeech/core/error.hpp"
#include "mrispeech/core/spectrum.hpp"
#include "mrispeech/core/units.hpp"
#include "mrispeech/denoise/harmonics.hpp"
#include "mrispeech/denoise/peaks.hpp"
#include "mrispeech/validation/harness.hpp"
#include "mrispeech/validation/synth.hpp"
#include "support.hpp"

using namespace mrispeech;
using namespace mrispeech::validation;
using namespace testsupport;

namespace {

VowelSpec find_vowel(const std::string& label) {
  for (auto v : reference_vowels()) {
    if (v.label == label) return v;
  }
  FAIL("no vowel " << label);
  return {};
}

}  // namespace

TEST_CASE("reference vowel table") {
  const auto v = reference_vowels();
  REQUIRE(v.size() == 8);
  const auto u = find_vowel("u");
  REQUIRE(u.formants.size() == 3);
  CHECK(u.formants[0].freq == 410.0);
  CHECK(u.formants[1].freq == 898.0);
  CHECK(u.formants[2].freq == 1934.0);
  for (const auto& s : v) CHECK_NOTHROW(s.validate());
}

TEST_CASE("VowelSpec validation") {
  auto s = find_vowel("a");
  s.formants.push_back({30000.0, 100.0});
  CHECK_THROWS_AS(s.validate(), ParameterError);
  s = find_vowel("a");
  std::swap(s.formants[0], s.formants[1]);
  CHECK_THROWS_AS(s.validate(), ParameterError);
  s = find_vowel("i");
  s.f0 = 320.0;
  CHECK_THROWS_AS(s.validate(), ParameterError);
  s = find_vowel("i");
  s.jitter = 0.01;
  CHECK_THROWS_AS(s.validate(), ParameterError);
}

TEST_CASE("synth_vowel") {
  auto spec = find_vowel("a");
  spec.duration_s = 1.0;
  const auto x = synth_vowel(spec, 3);
  CHECK(x.size() == 44100);
  CHECK(x.rms() == doctest::Approx(0.1).epsilon(1e-9));
  CHECK(synth_vowel(spec, 3) == x);

  spec.duration_s = 2.0;
  CHECK(synth_vowel(spec, 3).size() == 2 * x.size());

  spec.jitter = 0.005;
  CHECK_FALSE(synth_vowel(spec, 3) == synth_vowel(spec, 4));

  SUBCASE("the strongest low partial sits on f0 or a harmonic") {
    spec.jitter = 0.0;
    const auto psd = welch_psd(synth_vowel(spec, 1), {16384, 0.5});
    std::size_t best = 1;
    for (std::size_t k = 1; k < psd.size(); ++k) {
      if (psd.bin_freqs[k] < 1000.0 && psd.power_db[k] > psd.power_db[best]) best = k;
    }
    const double h = psd.bin_freqs[best] / spec.f0;
    CHECK(std::abs(h - std::round(h)) * spec.f0 < psd.bin_spacing());
  }
}

TEST_CASE("source roll-off calibration") {
  for (double r : {6.0, 12.0, 18.0}) {
    const auto shape = calibrate_source(r, 44100.0);
    const auto t = analysis::spectral_tilt(
        [&](double f) { return source_rolloff_db(f, 44100.0, shape.pole, shape.sections); }, 22050.0);
    CHECK(t.rolloff_db_per_octave == doctest::Approx(r).epsilon(1e-3));
  }
}

TEST_CASE("clean synthetic vowels analyze close to their spec") {
  // Burg at f0 = 104 Hz is pulled toward the nearest harmonics, so the
  // bound here is looser than a pure resonator test.
  for (const auto& spec : reference_vowels()) {
    CAPTURE(spec.label);
    const auto a = analysis::analyze(synth_vowel(spec, 1));
    REQUIRE(a.formants.formants.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(std::abs(semitone_distance(a.formants.formants[i].freq, spec.formants[i].freq)) < 0.8);
    }
    CHECK(a.tilt.rolloff_db_per_octave > 9.0);
    CHECK(a.tilt.rolloff_db_per_octave < 17.9);
  }
}

TEST_CASE("synth_mri_noise") {
  SUBCASE("single fundamental puts peaks on its multiples") {
    NoiseSpec ns;
    ns.fundamentals = {600.0};
    ns.harmonics_per_comb = 10;
    ns.duration_s = 2.0;
    const auto x = synth_mri_noise(ns, 5);
    CHECK(x.rms() == doctest::Approx(0.1).epsilon(1e-9));
    const auto peaks = denoise::detect_noise_peaks(welch_psd(x), {});
    REQUIRE(peaks.size() == 10);
    for (const auto& p : peaks) {
      const double m = p.loc / 600.0;
      CHECK(std::abs(m - std::round(m)) * 600.0 < 1.0);
    }
  }
  SUBCASE("no fundamentals leaves white noise") {
    NoiseSpec ns;
    ns.duration_s = 1.0;
    CHECK(denoise::detect_noise_peaks(welch_psd(synth_mri_noise(ns, 5)), {}).empty());
  }
  SUBCASE("round trip through peak detection and grouping") {
    NoiseSpec ns;
    ns.fundamentals = {530.0, 710.0, 1310.0};
    const auto pair = synth_mri_noise_pair(ns, 7);
    CHECK(pair.direct == synth_mri_noise(ns, 7));
    CHECK(std::abs(dot(pair.direct.samples(), pair.quadrature.samples())) < 0.01 * pair.direct.energy());
    denoise::PipelineConfig cfg;
    const auto psd = welch_psd(pair.direct);
    auto model = denoise::find_harmonics(denoise::detect_noise_peaks(psd, cfg), cfg,
                                         cfg.match_tolerance(psd.bin_spacing()));
    std::sort(model.fundamentals.begin(), model.fundamentals.end());
    REQUIRE(model.fundamentals.size() == 3);
    CHECK(model.fundamentals[0] == doctest::Approx(530.0).epsilon(0.005));
    CHECK(model.fundamentals[1] == doctest::Approx(710.0).epsilon(0.005));
    CHECK(model.fundamentals[2] == doctest::Approx(1310.0).epsilon(0.005));
  }
  SUBCASE("spacing check") {
    NoiseSpec ns;
    ns.fundamentals = {520.0};
    CHECK_THROWS_AS(ns.check_spacing(104.0), ParameterError);
    ns.fundamentals = {530.0, 710.0, 1310.0};
    CHECK_NOTHROW(ns.check_spacing(104.0));
  }
}

TEST_CASE("mix_at_snr") {
  const auto s = white(10000, 8000.0, 1, 0.3);
  const auto n = white(10000, 8000.0, 2, 2.0);
  const auto m0 = mix_at_snr(s, n, 0.0);
  CHECK(m0.scaled_noise.energy() == doctest::Approx(s.energy()).epsilon(1e-10));
  // (s + n) - n is s up to the rounding of the sum
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double ulp = std::numeric_limits<double>::epsilon() * std::max(std::abs(m0.mixed[i]), std::abs(s[i]));
    REQUIRE(std::abs(m0.mixed[i] - m0.scaled_noise[i] - s[i]) <= ulp);
  }

  const auto m60 = mix_at_snr(s, n, 60.0);
  CHECK(10.0 * std::log10(s.energy() / m60.scaled_noise.energy()) == doctest::Approx(60.0).epsilon(1e-11));

  CHECK_THROWS_AS(mix_at_snr(s, SampledSignal(std::vector<double>(10000, 0.0), 8000.0)), DegenerateInputError);
  CHECK_THROWS_AS(mix_at_snr(s, white(100, 8000.0, 3)), ParameterError);
}

TEST_CASE("run_validation bookkeeping") {
  NoiseSpec ns;
  ns.fundamentals = {530.0, 710.0, 1310.0};
  ns.duration_s = 1.5;
  auto vowels = reference_vowels(104.0, 1.5);
  vowels.resize(3);
  ValidationOptions opts;
  opts.jobs = 3;
  const auto r = run_validation(vowels, ns, {}, 7, opts);
  REQUIRE(r.vowels.size() == 3);
  CHECK(std::is_sorted(r.vowels.begin(), r.vowels.end(),
                       [](const auto& a, const auto& b) { return a.label < b.label; }));
  CHECK(r.formant_count == 9);
  for (const auto& v : r.vowels) {
    CHECK_FALSE(v.error);
    CHECK(v.crosstalk_k == doctest::Approx(opts.crosstalk).epsilon(0.02));
    CHECK(v.accepted_combs() == 3);
    CHECK(v.snr.snr_in_db == doctest::Approx(0.0).epsilon(1e-9));
  }

  opts.jobs = 1;
  const auto serial = run_validation(vowels, ns, {}, 7, opts);
  CHECK(validation_csv(serial) == validation_csv(r));

  SUBCASE("impossible thresholds fail") {
    opts.thresholds.max_abs_st = 0.01;
    CHECK_FALSE(run_validation(vowels, ns, {}, 7, opts).pass);
  }
}

TEST_CASE("noise on the speech pitch is never notched") {
  NoiseSpec ns;
  ns.fundamentals = {104.0};
  ns.duration_s = 1.5;
  auto vowels = reference_vowels(104.0, 1.5);
  vowels.resize(2);
  CHECK_THROWS_AS(run_validation(vowels, ns, {}, 7), ParameterError);

  ValidationOptions opts;
  opts.check_noise_spacing = false;
  const auto r = run_validation(vowels, ns, {}, 7, opts);
  for (const auto& v : r.vowels) CHECK(v.accepted_combs() == 0);
}

TEST_CASE("formant errors are stable across seeds") {
  NoiseSpec ns;
  ns.fundamentals = {530.0, 710.0, 1310.0};
  ValidationOptions opts;
  opts.jobs = 8;
  const auto vowels = reference_vowels();
  std::vector<ValidationReport> runs;
  for (std::uint64_t seed : {1, 2, 3}) runs.push_back(run_validation(vowels, ns, {}, seed, opts));
  for (std::size_t v = 0; v < vowels.size(); ++v) {
    for (std::size_t f = 0; f < 3; ++f) {
      double lo = 1e9, hi = -1e9;
      for (const auto& r : runs) {
        REQUIRE(r.vowels[v].formants[f].error_st);
        lo = std::min(lo, *r.vowels[v].formants[f].error_st);
        hi = std::max(hi, *r.vowels[v].formants[f].error_st);
      }
      CHECK(hi - lo < 0.3);
    }
  }
}
