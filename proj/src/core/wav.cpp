#include "mrispeech/core/wav.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "mrispeech/core/error.hpp"

namespace mrispeech {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

struct FmtChunk {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t rate = 0;
  std::uint16_t bits = 0;
};

struct WavContents {
  FmtChunk fmt;
  std::vector<unsigned char> data;
};

std::uint16_t le16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t le32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void put16(std::vector<unsigned char>& out, std::uint16_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xFF));
  out.push_back(static_cast<unsigned char>(v >> 8));
}

void put32(std::vector<unsigned char>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xFF));
}

std::string encoding_name(const FmtChunk& f) {
  std::string kind = f.format == kFormatPcm     ? "pcm"
                     : f.format == kFormatFloat ? "float"
                                                : "format-" + std::to_string(f.format);
  return kind + std::to_string(f.bits);
}

WavContents parse(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const std::string where = path.string() + ": ";

  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw FormatError(where + "not a RIFF/WAVE file");
  }

  WavContents out;
  bool have_fmt = false;
  bool have_data = false;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* hdr = bytes.data() + pos;
    const std::uint32_t size = le32(hdr + 4);
    const std::size_t body = pos + 8;
    // Tolerate a truncated final data chunk (common with crashed recorders).
    const std::size_t avail = std::min<std::size_t>(size, bytes.size() - body);
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (avail < 16) throw FormatError(where + "fmt chunk too short");
      const unsigned char* f = bytes.data() + body;
      out.fmt.format = le16(f);
      out.fmt.channels = le16(f + 2);
      out.fmt.rate = le32(f + 4);
      out.fmt.bits = le16(f + 14);
      if (out.fmt.format == kFormatExtensible) {
        if (avail < 26) throw FormatError(where + "extensible fmt chunk too short");
        out.fmt.format = le16(f + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      out.data.assign(bytes.begin() + static_cast<std::ptrdiff_t>(body),
                      bytes.begin() + static_cast<std::ptrdiff_t>(body + avail));
      have_data = true;
    }
    pos = body + size + (size & 1U);
  }
  if (!have_fmt) throw FormatError(where + "missing fmt chunk");
  if (!have_data) throw FormatError(where + "missing data chunk");
  if (out.fmt.channels == 0 || out.fmt.rate == 0) throw FormatError(where + "zero channels or rate");

  const bool pcm16 = out.fmt.format == kFormatPcm && out.fmt.bits == 16;
  const bool float32 = out.fmt.format == kFormatFloat && out.fmt.bits == 32;
  if (!pcm16 && !float32) {
    throw UnsupportedFormatError(where + "unsupported encoding " + encoding_name(out.fmt));
  }
  return out;
}

}  // namespace

const char* to_string(WavEncoding e) { return e == WavEncoding::pcm16 ? "pcm16" : "float32"; }

WavEncoding parse_wav_encoding(const std::string& name) {
  if (name == "pcm16") return WavEncoding::pcm16;
  if (name == "float32") return WavEncoding::float32;
  throw ParameterError("unknown WAV encoding '" + name + "' (expected pcm16 or float32)");
}

std::size_t wav_channel_count(const std::filesystem::path& path) { return parse(path).fmt.channels; }

SampledSignal read_wav(const std::filesystem::path& path, std::size_t channel) {
  const WavContents wav = parse(path);
  const std::size_t channels = wav.fmt.channels;
  if (channel >= channels) {
    throw ParameterError(path.string() + ": channel " + std::to_string(channel) + " requested, file has " +
                         std::to_string(channels));
  }
  const std::size_t width = wav.fmt.bits / 8;
  const std::size_t frames = wav.data.size() / (width * channels);
  if (frames == 0) throw InsufficientDataError(path.string() + ": no audio frames");

  std::vector<double> samples(frames);
  for (std::size_t i = 0; i < frames; ++i) {
    const unsigned char* p = wav.data.data() + (i * channels + channel) * width;
    if (width == 2) {
      samples[i] = static_cast<std::int16_t>(le16(p)) / 32768.0;
    } else {
      samples[i] = std::bit_cast<float>(le32(p));
    }
  }
  return SampledSignal(std::move(samples), static_cast<double>(wav.fmt.rate));
}

void write_wav(const SampledSignal& signal, const std::filesystem::path& path, WavEncoding encoding) {
  const bool pcm = encoding == WavEncoding::pcm16;
  const std::uint16_t bits = pcm ? 16 : 32;
  const std::uint16_t block = bits / 8;
  const double rate = std::round(signal.fs());
  if (rate != signal.fs() || rate > 4294967295.0) {
    throw ParameterError("WAV needs an integer sampling rate, got " + std::to_string(signal.fs()));
  }
  const auto data_bytes = static_cast<std::uint32_t>(signal.size() * block);

  std::vector<unsigned char> out;
  out.reserve(44 + data_bytes);
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  put32(out, 36 + data_bytes);
  out.insert(out.end(), {'W', 'A', 'V', 'E', 'f', 'm', 't', ' '});
  put32(out, 16);
  put16(out, pcm ? kFormatPcm : kFormatFloat);
  put16(out, 1);
  put32(out, static_cast<std::uint32_t>(rate));
  put32(out, static_cast<std::uint32_t>(rate) * block);
  put16(out, block);
  put16(out, bits);
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  put32(out, data_bytes);

  for (double x : signal.samples()) {
    if (pcm) {
      const double q = std::round(std::clamp(x, -1.0, 1.0) * 32768.0);
      const auto v = static_cast<std::int16_t>(std::clamp(q, -32768.0, 32767.0));
      put16(out, static_cast<std::uint16_t>(v));
    } else {
      put32(out, std::bit_cast<std::uint32_t>(static_cast<float>(x)));
    }
  }

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  file.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
  if (!file) throw IoError("write failed for " + path.string());
}

}  // namespace mrispeech
