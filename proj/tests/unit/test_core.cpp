#include <doctest.h>

#include <cmath>
#include <fstream>
#include <limits>

#include "mrispeech/core/csv.hpp"
#include "mrispeech/core/error.hpp"
#include "mrispeech/core/fft.hpp"
#include "mrispeech/core/signal.hpp"
#include "mrispeech/core/spectrum.hpp"
#include "mrispeech/core/units.hpp"
#include "mrispeech/core/wav.hpp"
#include "support.hpp"

using namespace mrispeech;
using namespace testsupport;

TEST_CASE("SampledSignal rejects invalid construction") {
  CHECK_THROWS_AS(SampledSignal({1.0}, 0.0), ParameterError);
  CHECK_THROWS_AS(SampledSignal({}, 44100.0), InsufficientDataError);
  CHECK_THROWS_AS(SampledSignal({0.0, std::nan("")}, 44100.0), DomainError);
  const SampledSignal s({3.0, 4.0}, 2.0);
  CHECK(s.energy() == doctest::Approx(25.0));
  CHECK(s.rms() == doctest::Approx(std::sqrt(12.5)));
  CHECK(s.duration() == doctest::Approx(1.0));
}

TEST_CASE("units") {
  CHECK(semitone_distance(880.0, 440.0) == doctest::Approx(12.0));
  CHECK(semitone_distance(440.0, 880.0) == doctest::Approx(-12.0));
  CHECK(semitone_distance(440.0 * std::pow(2.0, 1.0 / 12.0), 440.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(semitone_distance(0.0, 440.0), DomainError);
  CHECK(power_to_db(0.0) == kDbFloor);
  CHECK(power_to_db(100.0) == doctest::Approx(20.0));
  CHECK(db_to_power(-30.0) == doctest::Approx(1e-3));
}

TEST_CASE("RealFft matches a direct DFT") {
  const std::size_t n = 64;
  const auto x = white(n, 1.0, 3);
  RealFft fft(n);
  std::vector<std::complex<double>> spec(fft.bins());
  fft.forward(x.samples(), spec);
  std::vector<double> xv(x.samples().begin(), x.samples().end());
  for (std::size_t k = 0; k < fft.bins(); ++k) {
    const auto ref = dtft(xv, static_cast<double>(k), static_cast<double>(n));
    CHECK(std::abs(spec[k] - ref) < 1e-10);
  }
  std::vector<double> back(n);
  fft.inverse(spec, back);
  for (std::size_t t = 0; t < n; ++t) CHECK(back[t] == doctest::Approx(xv[t]).epsilon(1e-12));
}

TEST_CASE("periodic Hann window") {
  const auto w = hann_window(8);
  CHECK(w[0] == doctest::Approx(0.0));
  CHECK(w[4] == doctest::Approx(1.0));
  for (std::size_t i = 0; i < 4; ++i) CHECK(w[i] + w[i + 4] == doctest::Approx(1.0));
}

TEST_CASE("welch_psd puts a sine's power in its bin") {
  const double fs = 44100.0;
  const double f = 100.0 * fs / 4096.0;  // bin centre
  const auto x = sine(f, 0.5, fs, 4096 * 8);
  const auto psd = welch_psd(x);
  REQUIRE(psd.size() == 2049);
  CHECK(psd.bin_spacing() == doctest::Approx(fs / 4096.0));
  std::size_t best = 0;
  double total = 0.0;
  for (std::size_t k = 0; k < psd.size(); ++k) {
    if (psd.power_db[k] > psd.power_db[best]) best = k;
    total += db_to_power(psd.power_db[k]);
  }
  CHECK(best == 100);
  // mean square of a sine with amplitude A is A^2/2
  CHECK(total == doctest::Approx(0.125).epsilon(1e-3));
}

TEST_CASE("WAV round trip") {
  const auto dir = scratch_dir("wav");
  const SampledSignal s({0.0, 0.5, -0.25, 1.0, -1.0, 2.0, -2.0, 0.123456}, 8000.0);

  SUBCASE("float32 keeps float precision") {
    write_wav(s, dir / "f.wav", WavEncoding::float32);
    const auto r = read_wav(dir / "f.wav");
    REQUIRE(r.size() == s.size());
    CHECK(r.fs() == 8000.0);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(r[i] == static_cast<float>(s[i]));
    CHECK(wav_channel_count(dir / "f.wav") == 1);
  }
  SUBCASE("pcm16 rounds and clamps") {
    write_wav(s, dir / "p.wav", WavEncoding::pcm16);
    const auto r = read_wav(dir / "p.wav");
    CHECK(r[1] == 0.5);
    CHECK(r[2] == -0.25);
    CHECK(r[3] == 32767.0 / 32768.0);
    CHECK(r[4] == -1.0);
    CHECK(r[5] == 32767.0 / 32768.0);
    CHECK(r[6] == -1.0);
    CHECK(r[7] == std::round(0.123456 * 32768.0) / 32768.0);
  }
  SUBCASE("bad files") {
    CHECK_THROWS_AS(read_wav(dir / "missing.wav"), IoError);
    std::ofstream(dir / "junk.wav") << "not a wave file at all, just text";
    CHECK_THROWS_AS(read_wav(dir / "junk.wav"), FormatError);
    CHECK_THROWS_AS(parse_wav_encoding("mp3"), ParameterError);
    CHECK_THROWS_AS(write_wav(SampledSignal({0.0}, 44100.5), dir / "x.wav"), ParameterError);
  }
}

TEST_CASE("CSV parsing") {
  const auto t = parse_csv("freq_hz,gain_db\n100,1.5\n\n200,-2\n");
  REQUIRE(t.header.size() == 2);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.column("gain_db") == std::vector<double>{1.5, -2.0});
  CHECK_THROWS_AS(t.column("phase"), ParameterError);

  try {
    parse_csv("value\n1\nabc\n", "x.csv");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("x.csv") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_csv("a,b\n1\n"), ParseError);

  const auto again = parse_csv(format_csv(t));
  CHECK(again.rows == t.rows);
}
